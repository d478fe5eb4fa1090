#include <algorithm>
#include <cmath>
#include <functional>

#include "entcolor/errors.hpp"
#include "entcolor/families.hpp"

namespace entcolor {

namespace {

std::vector<int> canonical(const std::vector<int>& p) {
  std::vector<int> r(p.rbegin(), p.rend());
  return std::min(p, r);
}

// Object sequences of length 2j through an anchor are enumerated with the anchor at
// position q < j of one orientation, which meets every path exactly once. When `phi`
// is given, only repetitions are produced: slot i and slot i+j must match in color,
// and that constraint is applied as soon as both slots are filled.
//
// Vertex paths: slots are vertices. Edge paths: slots are edges and `verts` carries
// the underlying vertex path w_0..w_{2j}.
struct PathSearch {
  const Graph& g;
  const std::vector<Color>* phi;  // null: enumerate all paths
  int j;
  std::function<void(const std::vector<int>&)> emit;

  std::vector<int> slot = {};
  std::vector<int> verts = {};
  std::vector<char> used = {};

  bool color_ok(int i, int obj) const {
    if (!phi) return true;
    if ((*phi)[obj] == 0) return false;
    int partner = i < j ? i + j : i - j;
    if (slot[partner] < 0) return true;
    return (*phi)[slot[partner]] == (*phi)[obj];
  }

  // ---- vertex paths
  void vertex_paths(int v) {
    slot.assign(2 * j, -1);
    used.assign(g.n(), 0);
    for (int q = 0; q < j; ++q) {
      if (phi && (*phi)[v] == 0) return;
      slot[q] = v;
      used[v] = 1;
      vertex_right(q, q + 1);
      used[v] = 0;
      slot[q] = -1;
    }
  }
  void vertex_right(int q, int i) {
    if (i == 2 * j) {
      vertex_left(q - 1);
      return;
    }
    for (int w : g.neighbors(slot[i - 1])) {
      if (used[w] || !color_ok(i, w)) continue;
      used[w] = 1;
      slot[i] = w;
      vertex_right(q, i + 1);
      slot[i] = -1;
      used[w] = 0;
    }
  }
  void vertex_left(int i) {
    if (i < 0) {
      emit(slot);
      return;
    }
    for (int w : g.neighbors(slot[i + 1])) {
      if (used[w] || !color_ok(i, w)) continue;
      used[w] = 1;
      slot[i] = w;
      vertex_left(i - 1);
      slot[i] = -1;
      used[w] = 0;
    }
  }

  // ---- edge paths
  void edge_paths(int e) {
    slot.assign(2 * j, -1);
    verts.assign(2 * j + 1, -1);
    used.assign(g.n(), 0);
    if (phi && (*phi)[e] == 0) return;
    const auto [a, b] = g.edges()[e];
    for (int q = 0; q < j; ++q)
      for (int flip = 0; flip < 2; ++flip) {
        int x = flip ? b : a, y = flip ? a : b;
        verts[q] = x;
        verts[q + 1] = y;
        used[x] = used[y] = 1;
        slot[q] = e;
        edge_right(q, q + 1);
        slot[q] = -1;
        used[x] = used[y] = 0;
      }
  }
  void edge_right(int q, int i) {
    if (i == 2 * j) {
      edge_left(q - 1);
      return;
    }
    const int from = verts[i];
    const auto& nb = g.neighbors(from);
    const auto& inc = g.incident_edges(from);
    for (std::size_t t = 0; t < nb.size(); ++t) {
      int w = nb[t], f = inc[t];
      if (used[w] || !color_ok(i, f)) continue;
      used[w] = 1;
      verts[i + 1] = w;
      slot[i] = f;
      edge_right(q, i + 1);
      slot[i] = -1;
      used[w] = 0;
    }
  }
  void edge_left(int i) {
    if (i < 0) {
      emit(slot);
      return;
    }
    const int from = verts[i + 1];
    const auto& nb = g.neighbors(from);
    const auto& inc = g.incident_edges(from);
    for (std::size_t t = 0; t < nb.size(); ++t) {
      int w = nb[t], f = inc[t];
      if (used[w] || !color_ok(i, f)) continue;
      used[w] = 1;
      verts[i] = w;
      slot[i] = f;
      edge_left(i - 1);
      slot[i] = -1;
      used[w] = 0;
    }
  }
};

std::vector<std::vector<int>> sorted_canonical(std::vector<std::vector<int>> xs) {
  for (auto& x : xs) x = canonical(x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

const std::vector<int>& pick(const std::vector<std::vector<int>>& list, const EventId& ev,
                             const std::string& fam) {
  if (ev.cls < 1 || ev.cls > static_cast<long long>(list.size()))
    throw ContractViolation(fam + ": class " + std::to_string(ev.cls) + " of type " +
                            std::to_string(ev.type) + " does not exist");
  return list[ev.cls - 1];
}

long long rank_of(const std::vector<std::vector<int>>& list, const std::vector<int>& w) {
  auto it = std::lower_bound(list.begin(), list.end(), w);
  if (it == list.end() || *it != w) throw InvariantViolation("repetition missing from its class list");
  return static_cast<long long>(it - list.begin()) + 1;
}

std::vector<int> half_with(const std::vector<int>& p, int obj) {
  const std::size_t j = p.size() / 2;
  auto first = std::find(p.begin(), p.begin() + j, obj) != p.begin() + j;
  return first ? std::vector<int>(p.begin(), p.begin() + j) : std::vector<int>(p.begin() + j, p.end());
}

// Copies the colored half of a repetition onto the uncolored half.
void mirror(const std::vector<int>& p, std::vector<Color>& phi) {
  const std::size_t j = p.size() / 2;
  for (std::size_t i = 0; i < j; ++i) {
    if (phi[p[i]] == 0) phi[p[i]] = phi[p[i + j]];
    else if (phi[p[i + j]] == 0) phi[p[i + j]] = phi[p[i]];
  }
}

int count_colored(const std::vector<Color>& phi) {
  return static_cast<int>(std::count_if(phi.begin(), phi.end(), [](Color c) { return c != 0; }));
}

}  // namespace

// ---------------------------------------------------------------- nonrep-vertex

NonrepetitiveVertexFamily::NonrepetitiveVertexFamily(Graph g) : VertexFamily(std::move(g)) {
  const double D = g_.max_degree();
  for (int j = 1; j <= std::max(1, g_.n() / 2); ++j)
    metas_.push_back({std::to_string(2 * j) + "-repetition", j * std::pow(D, 2 * j - 1), j});
}

const std::vector<std::vector<int>>& NonrepetitiveVertexFamily::paths(int v, int j) const {
  return cache_.get(v, j, [&] {
    std::vector<std::vector<int>> all;
    PathSearch s{g_, nullptr, j, [&](const std::vector<int>& p) { all.push_back(p); }};
    s.vertex_paths(v);
    return sorted_canonical(std::move(all));
  });
}

long long NonrepetitiveVertexFamily::class_count(int v, int type) const {
  return static_cast<long long>(paths(v, type).size());
}

std::optional<EventId> NonrepetitiveVertexFamily::detect(const std::vector<Color>& phi, int v) const {
  const int colored = count_colored(phi);
  for (int j = 1; j <= static_cast<int>(metas_.size()) && 2 * j <= colored; ++j) {
    std::optional<std::vector<int>> best;
    PathSearch s{g_, &phi, j, [&](const std::vector<int>& p) {
                   auto c = canonical(p);
                   if (!best || c < *best) best = std::move(c);
                 }};
    s.vertex_paths(v);
    if (best) return EventId{j, rank_of(paths(v, j), *best)};
  }
  return std::nullopt;
}

std::vector<int> NonrepetitiveVertexFamily::uncolor_set(const EventId& ev, int v,
                                                        const ColoredSet&) const {
  return half_with(pick(paths(v, ev.type), ev, name()), v);
}

void NonrepetitiveVertexFamily::reconstruct(const EventId& ev, int v, const ColoredSet&,
                                            std::vector<Color>& phi) const {
  mirror(pick(paths(v, ev.type), ev, name()), phi);
}

// ---------------------------------------------------------------- nonrep-edge

NonrepetitiveEdgeFamily::NonrepetitiveEdgeFamily(Graph g) : g_(std::move(g)) {
  order_.resize(g_.m());
  for (int e = 0; e < g_.m(); ++e) order_[e] = e;
  const double D = g_.max_degree();
  for (int j = 1; j <= std::max(1, (g_.n() - 1) / 2); ++j)
    metas_.push_back({std::to_string(2 * j) + "-repetition", 2 * j * std::pow(D, 2 * j - 1), j});
}

const std::vector<std::vector<int>>& NonrepetitiveEdgeFamily::paths(int e, int j) const {
  return cache_.get(e, j, [&] {
    std::vector<std::vector<int>> all;
    PathSearch s{g_, nullptr, j, [&](const std::vector<int>& p) { all.push_back(p); }};
    s.edge_paths(e);
    return sorted_canonical(std::move(all));
  });
}

long long NonrepetitiveEdgeFamily::class_count(int e, int type) const {
  return static_cast<long long>(paths(e, type).size());
}

std::optional<EventId> NonrepetitiveEdgeFamily::detect(const std::vector<Color>& phi, int e) const {
  const int colored = count_colored(phi);
  for (int j = 1; j <= static_cast<int>(metas_.size()) && 2 * j <= colored; ++j) {
    std::optional<std::vector<int>> best;
    PathSearch s{g_, &phi, j, [&](const std::vector<int>& p) {
                   auto c = canonical(p);
                   if (!best || c < *best) best = std::move(c);
                 }};
    s.edge_paths(e);
    if (best) return EventId{j, rank_of(paths(e, j), *best)};
  }
  return std::nullopt;
}

std::vector<int> NonrepetitiveEdgeFamily::uncolor_set(const EventId& ev, int e,
                                                      const ColoredSet&) const {
  return half_with(pick(paths(e, ev.type), ev, name()), e);
}

void NonrepetitiveEdgeFamily::reconstruct(const EventId& ev, int e, const ColoredSet&,
                                          std::vector<Color>& phi) const {
  mirror(pick(paths(e, ev.type), ev, name()), phi);
}

}  // namespace entcolor
