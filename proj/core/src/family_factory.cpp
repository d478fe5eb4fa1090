#include <algorithm>

#include "entcolor/errors.hpp"
#include "entcolor/families.hpp"

namespace entcolor {

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"acyclic-gamma",      "acyclic-v1",
                                              "acyclic-v2",         "nonrep-vertex",
                                              "nonrep-edge",        "facial-thue-vertex",
                                              "facial-thue-edge"};
  return names;
}

bool family_needs_embedding(const std::string& name) { return name.rfind("facial-", 0) == 0; }

bool family_colors_edges(const std::string& name) {
  return name == "nonrep-edge" || name == "facial-thue-edge";
}

std::unique_ptr<BadEventFamily> make_family(const std::string& name, const Graph& g,
                                            const PlaneGraph* pg, const FamilyParams& params) {
  if (family_needs_embedding(name) && !pg)
    throw InputError("family " + name + " needs an embedding");
  if (name == "acyclic-gamma")
    return std::make_unique<AcyclicGammaFamily>(g, params.gamma > 0 ? params.gamma : max_common_neighbors(g));
  if (name == "acyclic-v1") return std::make_unique<AcyclicV1Family>(g, params.alpha);
  if (name == "acyclic-v2") return std::make_unique<AcyclicV2Family>(g, params.alpha);
  if (name == "nonrep-vertex") return std::make_unique<NonrepetitiveVertexFamily>(g);
  if (name == "nonrep-edge") return std::make_unique<NonrepetitiveEdgeFamily>(g);
  if (name == "facial-thue-vertex") return std::make_unique<FacialThueVertexFamily>(*pg);
  if (name == "facial-thue-edge") return std::make_unique<FacialThueEdgeFamily>(*pg, params.e_star);
  throw InputError("unknown family \"" + name + "\"");
}

Color reserve_color(std::vector<std::vector<Color>>& lists, int e_star) {
  if (e_star < 0 || e_star >= static_cast<int>(lists.size()) || lists[e_star].empty())
    throw InputError("e* has no list to reserve from");
  const Color c = lists[e_star][0];
  for (int e = 0; e < static_cast<int>(lists.size()); ++e) {
    if (e == e_star) continue;
    auto& L = lists[e];
    L.erase(std::remove(L.begin(), L.end(), c), L.end());
  }
  return c;
}

}  // namespace entcolor
