#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "entcolor/graph.hpp"
#include "entcolor/plane_graph.hpp"

namespace entcolor {

// Colours are positive; 0 marks an uncoloured vertex (or edge), which is ignored.
struct Verdict {
  bool accepted = true;
  std::vector<int> witness;  // vertices, or edge indices for edge scopes
  std::string reason;
};

Verdict check_proper(const Graph& g, const std::vector<int>& phi);
// Proper, and every two colour classes induce a forest. Witness: a bicoloured cycle.
Verdict check_acyclic(const Graph& g, const std::vector<int>& phi);

enum class NonrepScope { AllPaths, Edges, FacialVertices, FacialEdges };

// AllPaths / Edges enumerate every simple path (n <= 14); the facial scopes read
// paths off the face walks of `pg` and work at any size. For the edge scopes phi is
// indexed by edge index. Witness: the repetitive path in its smaller orientation.
Verdict check_nonrepetitive(const Graph& g, const std::vector<int>& phi, NonrepScope scope,
                            const PlaneGraph* pg = nullptr);

// Proper, and every cycle C sees at least min(|C|, r) colours. n <= 14.
Verdict check_r_acyclic(const Graph& g, const std::vector<int>& phi, int r);

// No two colour classes together contain a (not necessarily induced) copy of h.
// |V(h)| <= 8 and n <= 14.
Verdict check_pair_forbidden(const Graph& g, const std::vector<int>& phi, const Graph& h);

// Proper with no bicoloured path on four vertices.
Verdict check_star(const Graph& g, const std::vector<int>& phi);

// Lines "object colour" (1-based object) or "u v colour" for an edge of g.
// `edges` selects edge-indexed output.
std::vector<int> parse_coloring(std::string_view text, const Graph& g, bool edges);
std::string format_coloring(const std::vector<int>& phi);

}  // namespace entcolor
