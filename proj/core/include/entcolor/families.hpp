// Copyright 2026 The entcolor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "entcolor/engine.hpp"
#include "entcolor/graph.hpp"
#include "entcolor/plane_graph.hpp"

namespace entcolor {

// Class lists are computed on first use and then shared; the cache is the only
// mutable state and is guarded by a mutex.
class WitnessCache {
 public:
  using List = std::vector<std::vector<int>>;
  template <class Make>
  const List& get(int object, int type, Make make) const {
    auto key = std::make_pair(object, type);
    {
      std::lock_guard lock(mu_);
      if (auto it = lists_.find(key); it != lists_.end()) return *it->second;
    }
    // Built without the lock: builders may consult the cache themselves.
    auto built = std::make_shared<List>(make());
    std::lock_guard lock(mu_);
    return *lists_.try_emplace(key, std::move(built)).first->second;
  }

 private:
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, std::shared_ptr<List>> lists_;
};

// Families whose objects are the vertices of a graph, colored in the graph's order.
class VertexFamily : public BadEventFamily {
 public:
  explicit VertexFamily(Graph g);
  int object_count() const override { return g_.n(); }
  const std::vector<EventTypeMeta>& metas() const override { return metas_; }
  const Graph& graph() const { return g_; }
  // Number of classes of the given type at object v (the size of its witness list).
  virtual long long class_count(int v, int type) const = 0;

 protected:
  Graph g_;
  std::vector<EventTypeMeta> metas_;
};

// Proper coloring plus bicolored 2k-cycles, for graphs without K_{2,gamma+1}.
// Type 1: monochromatic edge, class = rank of the neighbour in N(v).
// Type k (k >= 2): bicolored cycle (v=u1,...,u2k) with u2 < u2k, uncoloring u1..u_{2k-2}.
class AcyclicGammaFamily : public VertexFamily {
 public:
  AcyclicGammaFamily(Graph g, int gamma);
  std::string name() const override { return "acyclic-gamma"; }
  int gamma() const { return gamma_; }
  std::optional<EventId> detect(const std::vector<Color>& phi, int v) const override;
  std::vector<int> uncolor_set(const EventId& ev, int v, const ColoredSet& X) const override;
  void reconstruct(const EventId& ev, int v, const ColoredSet& X,
                   std::vector<Color>& phi) const override;
  long long class_count(int v, int type) const override;
  // All 2k-cycles through v as (v, u2, ..., u2k) with u2 < u2k, sorted.
  const std::vector<std::vector<int>>& cycles(int v, int k) const;

 private:
  int gamma_;
  WitnessCache cache_;
};

// Events N, S, C (induced 4-cycle avoiding S(v)), P (6-vertex path u1,v,u3..u6 with u1 < u3).
class AcyclicV1Family : public VertexFamily {
 public:
  AcyclicV1Family(Graph g, double alpha);
  std::string name() const override { return "acyclic-v1"; }
  const SpecialStructure& special() const { return ss_; }
  std::optional<EventId> detect(const std::vector<Color>& phi, int v) const override;
  std::vector<int> uncolor_set(const EventId& ev, int v, const ColoredSet& X) const override;
  void reconstruct(const EventId& ev, int v, const ColoredSet& X,
                   std::vector<Color>& phi) const override;
  long long class_count(int v, int type) const override;
  // C witnesses (u3, x, y): u3 in N^2(v) \ S(v), x < y common neighbours, x and y non-adjacent.
  const std::vector<std::vector<int>>& four_cycles(int v) const;
  // P witnesses (u1, u3, u4, u5, u6) with u1 preceding u3.
  const std::vector<std::vector<int>>& six_paths(int v) const;

 private:
  SpecialStructure ss_;
  WitnessCache cache_;
};

// Events N, S, then bicolored 2k-cycles (u1, v=u2, u3, ..., u2k) with u1 preceding u3.
class AcyclicV2Family : public VertexFamily {
 public:
  AcyclicV2Family(Graph g, double alpha);
  std::string name() const override { return "acyclic-v2"; }
  const SpecialStructure& special() const { return ss_; }
  std::optional<EventId> detect(const std::vector<Color>& phi, int v) const override;
  std::vector<int> uncolor_set(const EventId& ev, int v, const ColoredSet& X) const override;
  void reconstruct(const EventId& ev, int v, const ColoredSet& X,
                   std::vector<Color>& phi) const override;
  long long class_count(int v, int type) const override;
  // Witnesses (u1, u3, u4, ..., u2k), sorted.
  const std::vector<std::vector<int>>& cycles(int v, int k) const;

 private:
  bool admissible(const std::vector<int>& cyc, int k) const;
  SpecialStructure ss_;
  WitnessCache cache_;
};

// Type j: a 2j-vertex path through v whose two halves carry the same colors.
class NonrepetitiveVertexFamily : public VertexFamily {
 public:
  explicit NonrepetitiveVertexFamily(Graph g);
  std::string name() const override { return "nonrep-vertex"; }
  std::optional<EventId> detect(const std::vector<Color>& phi, int v) const override;
  std::vector<int> uncolor_set(const EventId& ev, int v, const ColoredSet& X) const override;
  void reconstruct(const EventId& ev, int v, const ColoredSet& X,
                   std::vector<Color>& phi) const override;
  long long class_count(int v, int type) const override;
  // 2j-vertex paths through v, each in its lexicographically smaller orientation, sorted.
  const std::vector<std::vector<int>>& paths(int v, int j) const;

 private:
  WitnessCache cache_;
};

// Edge version: objects are edge indices, paths have 2j edges on 2j+1 distinct vertices.
class NonrepetitiveEdgeFamily : public BadEventFamily {
 public:
  explicit NonrepetitiveEdgeFamily(Graph g);
  std::string name() const override { return "nonrep-edge"; }
  int object_count() const override { return g_.m(); }
  const std::vector<EventTypeMeta>& metas() const override { return metas_; }
  const Graph& graph() const { return g_; }
  std::optional<EventId> detect(const std::vector<Color>& phi, int e) const override;
  std::vector<int> uncolor_set(const EventId& ev, int e, const ColoredSet& X) const override;
  void reconstruct(const EventId& ev, int e, const ColoredSet& X,
                   std::vector<Color>& phi) const override;
  long long class_count(int e, int type) const;
  // Edge sequences of 2j-edge paths through e, canonical orientation, sorted.
  const std::vector<std::vector<int>>& paths(int e, int j) const;

 private:
  Graph g_;
  std::vector<EventTypeMeta> metas_;
  WitnessCache cache_;
};

// Type j: a repetition on a facial 2j-vertex path through v.
class FacialThueVertexFamily : public BadEventFamily {
 public:
  explicit FacialThueVertexFamily(PlaneGraph pg);
  std::string name() const override { return "facial-thue-vertex"; }
  int object_count() const override { return pg_.graph().n(); }
  const std::vector<EventTypeMeta>& metas() const override { return metas_; }
  const PlaneGraph& plane() const { return pg_; }
  std::optional<EventId> detect(const std::vector<Color>& phi, int v) const override;
  std::vector<int> uncolor_set(const EventId& ev, int v, const ColoredSet& X) const override;
  void reconstruct(const EventId& ev, int v, const ColoredSet& X,
                   std::vector<Color>& phi) const override;
  long long class_count(int v, int type) const;
  // Distinct facial 2j-vertex paths through v in order of first occurrence.
  const std::vector<std::vector<int>>& paths(int v, int j) const;

 private:
  PlaneGraph pg_;
  std::vector<EventTypeMeta> metas_;
  WitnessCache cache_;
};

// Facial Thue edge coloring of every edge except e*. Edges are chosen as leaves of a
// BFS spanning tree of the uncolored part of the medial graph rooted at e*, so the
// uncolored edges always induce a connected subgraph there.
class FacialThueEdgeFamily : public BadEventFamily {
 public:
  FacialThueEdgeFamily(PlaneGraph pg, int e_star);
  std::string name() const override { return "facial-thue-edge"; }
  int object_count() const override { return pg_.graph().m(); }
  const std::vector<EventTypeMeta>& metas() const override { return metas_; }
  const PlaneGraph& plane() const { return pg_; }
  const MedialGraph& medial() const { return medial_; }
  int e_star() const { return e_star_; }

  std::optional<int> next_uncolored(const ColoredSet& colored) const override;
  std::optional<EventId> detect(const std::vector<Color>& phi, int e) const override;
  std::vector<int> uncolor_set(const EventId& ev, int e, const ColoredSet& X) const override;
  void reconstruct(const EventId& ev, int e, const ColoredSet& X,
                   std::vector<Color>& phi) const override;
  bool in_forbidden(const std::vector<Color>& phi, int e) const override;

  // Smallest-index uncolored facial neighbour of e, if any.
  std::optional<int> blocker(int e, const ColoredSet& X) const;
  // Facial 2j-edge paths through e that avoid `avoid`, distinct, in order of first occurrence.
  const std::vector<std::vector<int>>& paths(int e, int j, int avoid) const;
  // All distinct facial 2j-edge paths through e.
  const std::vector<std::vector<int>>& all_paths(int e, int j) const;
  // Whether the uncolored edges induce a connected subgraph of the medial graph.
  bool uncolored_connected(const ColoredSet& colored) const;

 private:
  PlaneGraph pg_;
  MedialGraph medial_;
  int e_star_;
  std::vector<EventTypeMeta> metas_;
  WitnessCache cache_;
};

struct FamilyParams {
  double alpha = 0.5;
  int gamma = 0;  // 0: use the largest common-neighbour count of the graph (at least 1)
  int e_star = 0;  // 0-based edge index
};

// Largest |N(u) ∩ N(v)| over pairs u != v, at least 1.
int max_common_neighbors(const Graph& g);

const std::vector<std::string>& family_names();
bool family_needs_embedding(const std::string& name);
bool family_colors_edges(const std::string& name);
// Throws InputError for unknown names or missing embedding.
std::unique_ptr<BadEventFamily> make_family(const std::string& name, const Graph& g,
                                            const PlaneGraph* pg, const FamilyParams& params);

// Reserve trick for a full facial Thue edge coloring: take c = lists[e*][0], remove c
// from every other list. Returns c.
Color reserve_color(std::vector<std::vector<Color>>& lists, int e_star);

}  // namespace entcolor
