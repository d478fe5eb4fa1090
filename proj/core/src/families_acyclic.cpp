// Copyright 2026 The entcolor Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "entcolor/errors.hpp"
#include "entcolor/families.hpp"

namespace entcolor {

namespace {

const std::vector<int>& pick(const std::vector<std::vector<int>>& list, const EventId& ev,
                             const std::string& fam) {
  if (ev.cls < 1 || ev.cls > static_cast<long long>(list.size()))
    throw ContractViolation(fam + ": class " + std::to_string(ev.cls) + " of type " +
                            std::to_string(ev.type) + " does not exist");
  return list[ev.cls - 1];
}

long long rank_of(const std::vector<std::vector<int>>& list, const std::vector<int>& w) {
  auto it = std::lower_bound(list.begin(), list.end(), w);
  if (it == list.end() || *it != w) throw InvariantViolation("witness missing from its class list");
  return static_cast<long long>(it - list.begin()) + 1;
}

// Extends `path` with vertices whose colors alternate like path[0], path[1] and
// returns the first cycle of exactly `len` vertices closing back to path[0] that
// `accept` approves. Neighbours are scanned in increasing order, so the result is the
// lexicographically smallest such cycle.
std::optional<std::vector<int>> alternating_cycle(const Graph& g, const std::vector<Color>& phi,
                                                  std::vector<int>& path, std::vector<char>& used,
                                                  int len,
                                                  const std::function<bool(const std::vector<int>&)>& accept) {
  const int L = static_cast<int>(path.size());
  if (L == len) {
    if (g.adjacent(path.back(), path.front()) && accept(path)) return path;
    return std::nullopt;
  }
  const Color want = phi[path[L % 2]];
  for (int w : g.neighbors(path.back())) {
    if (used[w] || phi[w] != want) continue;
    used[w] = 1;
    path.push_back(w);
    auto found = alternating_cycle(g, phi, path, used, len, accept);
    path.pop_back();
    used[w] = 0;
    if (found) return found;
  }
  return std::nullopt;
}

// All simple paths extending `path` to `len` vertices; `emit` sees each in DFS order.
void extend_paths(const Graph& g, std::vector<int>& path, std::vector<char>& used, int len,
                  const std::function<void(const std::vector<int>&)>& emit) {
  if (static_cast<int>(path.size()) == len) {
    emit(path);
    return;
  }
  for (int w : g.neighbors(path.back())) {
    if (used[w]) continue;
    used[w] = 1;
    path.push_back(w);
    extend_paths(g, path, used, len, emit);
    path.pop_back();
    used[w] = 0;
  }
}

std::optional<EventId> neighbor_event(const Graph& g, const std::vector<Color>& phi, int v) {
  const auto& nb = g.neighbors(v);
  for (std::size_t r = 0; r < nb.size(); ++r)
    if (phi[nb[r]] == phi[v]) return EventId{1, static_cast<long long>(r) + 1};
  return std::nullopt;
}

std::optional<EventId> special_event(const SpecialStructure& ss, const std::vector<Color>& phi,
                                     int v) {
  const auto& s = ss.special(v);
  for (std::size_t r = 0; r < s.size(); ++r)
    if (phi[s[r]] == phi[v]) return EventId{2, static_cast<long long>(r) + 1};
  return std::nullopt;
}

double dpow(double b, double e) { return std::pow(b, e); }

// Induced 4-cycles (u3, x, y) through v with antipode u3 outside S(v).
std::vector<std::vector<int>> induced_four_cycles(const Graph& g, const SpecialStructure& ss, int v) {
  std::vector<std::vector<int>> out;
  for (int u3 : ss.n2(v)) {
    if (ss.is_special(v, u3)) continue;
    std::vector<int> common;
    std::set_intersection(g.neighbors(v).begin(), g.neighbors(v).end(), g.neighbors(u3).begin(),
                          g.neighbors(u3).end(), std::back_inserter(common));
    for (std::size_t a = 0; a < common.size(); ++a)
      for (std::size_t b = a + 1; b < common.size(); ++b)
        if (!g.adjacent(common[a], common[b])) out.push_back({u3, common[a], common[b]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

VertexFamily::VertexFamily(Graph g) : g_(std::move(g)) { order_ = g_.order(); }

int max_common_neighbors(const Graph& g) {
  int best = 1;
  for (int u = 0; u < g.n(); ++u)
    for (int w : neighbors2(g, u)) best = std::max(best, g.common_neighbors(u, w));
  // adjacent pairs can share neighbours too (triangles)
  for (auto [a, b] : g.edges()) best = std::max(best, g.common_neighbors(a, b));
  return best;
}

// ---------------------------------------------------------------- acyclic-gamma

AcyclicGammaFamily::AcyclicGammaFamily(Graph g, int gamma) : VertexFamily(std::move(g)), gamma_(gamma) {
  if (gamma < 1) throw InputError("gamma must be at least 1");
  const double D = g_.max_degree();
  metas_.push_back({"neighbor", D, 1});
  for (int k = 2; k <= g_.n() / 2; ++k)
    metas_.push_back({std::to_string(2 * k) + "-cycle", 0.5 * gamma_ * dpow(D, 2 * k - 2), 2 * k - 2});
}

const std::vector<std::vector<int>>& AcyclicGammaFamily::cycles(int v, int k) const {
  return cache_.get(v, k, [&] {
    std::vector<std::vector<int>> out;
    std::vector<int> path{v};
    std::vector<char> used(g_.n(), 0);
    used[v] = 1;
    extend_paths(g_, path, used, 2 * k, [&](const std::vector<int>& p) {
      if (p[1] < p.back() && g_.adjacent(p.back(), v)) out.push_back(p);
    });
    return out;
  });
}

long long AcyclicGammaFamily::class_count(int v, int type) const {
  if (type == 1) return g_.degree(v);
  return static_cast<long long>(cycles(v, type).size());
}

std::optional<EventId> AcyclicGammaFamily::detect(const std::vector<Color>& phi, int v) const {
  if (auto ev = neighbor_event(g_, phi, v)) return ev;
  std::vector<char> used(g_.n(), 0);
  for (int k = 2; k <= g_.n() / 2; ++k) {
    std::vector<int> path{v};
    used.assign(g_.n(), 0);
    used[v] = 1;
    for (int u2 : g_.neighbors(v)) {
      if (phi[u2] == 0) continue;
      path.push_back(u2);
      used[u2] = 1;
      auto cyc = alternating_cycle(g_, phi, path, used, 2 * k,
                                   [](const std::vector<int>& c) { return c[1] < c.back(); });
      used[u2] = 0;
      path.pop_back();
      if (cyc) return EventId{k, rank_of(cycles(v, k), *cyc)};
    }
  }
  return std::nullopt;
}

std::vector<int> AcyclicGammaFamily::uncolor_set(const EventId& ev, int v, const ColoredSet&) const {
  if (ev.type == 1) return {v};
  const auto& c = pick(cycles(v, ev.type), ev, name());
  return std::vector<int>(c.begin(), c.end() - 2);
}

void AcyclicGammaFamily::reconstruct(const EventId& ev, int v, const ColoredSet&,
                                     std::vector<Color>& phi) const {
  if (ev.type == 1) {
    const auto& nb = g_.neighbors(v);
    if (ev.cls < 1 || ev.cls > static_cast<long long>(nb.size()))
      throw ContractViolation(name() + ": neighbour class out of range");
    phi[v] = phi[nb[ev.cls - 1]];
    return;
  }
  const auto& c = pick(cycles(v, ev.type), ev, name());
  const int L = static_cast<int>(c.size());
  for (int j = 0; j < L - 2; ++j) phi[c[j]] = (j % 2 == 0) ? phi[c[L - 2]] : phi[c[L - 1]];
}

// ---------------------------------------------------------------- acyclic-v1

AcyclicV1Family::AcyclicV1Family(Graph g, double alpha)
    : VertexFamily(std::move(g)), ss_(g_, alpha) {
  const double D = g_.max_degree();
  metas_.push_back({"N", D, 1});
  metas_.push_back({"S", alpha * dpow(D, 4.0 / 3.0), 1});
  metas_.push_back({"C", dpow(D, 8.0 / 3.0) / (8 * alpha), 2});
  metas_.push_back({"P", 0.5 * D * dpow(D - 1, 4), 4});
}

const std::vector<std::vector<int>>& AcyclicV1Family::four_cycles(int v) const {
  return cache_.get(v, 3, [&] { return induced_four_cycles(g_, ss_, v); });
}

const std::vector<std::vector<int>>& AcyclicV1Family::six_paths(int v) const {
  return cache_.get(v, 4, [&] {
    std::vector<std::vector<int>> out;
    std::vector<char> used(g_.n(), 0);
    used[v] = 1;
    for (int u1 : g_.neighbors(v))
      for (int u3 : g_.neighbors(v)) {
        if (u1 == u3 || !g_.precedes(u1, u3)) continue;
        used[u1] = used[u3] = 1;
        std::vector<int> path{u3};
        extend_paths(g_, path, used, 4, [&](const std::vector<int>& p) {
          out.push_back({u1, p[0], p[1], p[2], p[3]});
        });
        used[u1] = used[u3] = 0;
      }
    std::sort(out.begin(), out.end());
    return out;
  });
}

long long AcyclicV1Family::class_count(int v, int type) const {
  switch (type) {
    case 1: return g_.degree(v);
    case 2: return static_cast<long long>(ss_.special(v).size());
    case 3: return static_cast<long long>(four_cycles(v).size());
    default: return static_cast<long long>(six_paths(v).size());
  }
}

std::optional<EventId> AcyclicV1Family::detect(const std::vector<Color>& phi, int v) const {
  if (auto ev = neighbor_event(g_, phi, v)) return ev;
  if (auto ev = special_event(ss_, phi, v)) return ev;
  const Color a = phi[v];
  const auto& fc = four_cycles(v);
  for (std::size_t r = 0; r < fc.size(); ++r) {
    const auto& w = fc[r];
    if (phi[w[0]] == a && phi[w[1]] != 0 && phi[w[1]] == phi[w[2]])
      return EventId{3, static_cast<long long>(r) + 1};
  }
  // P: u1, u3 in N(v) share a color c; then u4, u6 colored a and u5 colored c.
  for (int u1 : g_.neighbors(v)) {
    if (phi[u1] == 0) continue;
    for (int u3 : g_.neighbors(v)) {
      if (u3 == u1 || phi[u3] != phi[u1] || !g_.precedes(u1, u3)) continue;
      std::vector<char> used(g_.n(), 0);
      used[v] = used[u1] = used[u3] = 1;
      const Color c = phi[u1];
      for (int u4 : g_.neighbors(u3)) {
        if (used[u4] || phi[u4] != a) continue;
        used[u4] = 1;
        for (int u5 : g_.neighbors(u4)) {
          if (used[u5] || phi[u5] != c) continue;
          used[u5] = 1;
          for (int u6 : g_.neighbors(u5)) {
            if (used[u6] || phi[u6] != a) continue;
            return EventId{4, rank_of(six_paths(v), {u1, u3, u4, u5, u6})};
          }
          used[u5] = 0;
        }
        used[u4] = 0;
      }
    }
  }
  return std::nullopt;
}

std::vector<int> AcyclicV1Family::uncolor_set(const EventId& ev, int v, const ColoredSet&) const {
  switch (ev.type) {
    case 1:
    case 2: return {v};
    case 3: {
      const auto& w = pick(four_cycles(v), ev, name());
      return {v, g_.precedes(w[1], w[2]) ? w[1] : w[2]};
    }
    case 4: {
      const auto& w = pick(six_paths(v), ev, name());
      return {w[0], v, w[1], w[2]};
    }
  }
  throw ContractViolation(name() + ": unknown event type");
}

void AcyclicV1Family::reconstruct(const EventId& ev, int v, const ColoredSet&,
                                  std::vector<Color>& phi) const {
  switch (ev.type) {
    case 1: {
      const auto& nb = g_.neighbors(v);
      if (ev.cls > static_cast<long long>(nb.size())) throw ContractViolation(name() + ": bad N class");
      phi[v] = phi[nb[ev.cls - 1]];
      return;
    }
    case 2: {
      const auto& s = ss_.special(v);
      if (ev.cls > static_cast<long long>(s.size())) throw ContractViolation(name() + ": bad S class");
      phi[v] = phi[s[ev.cls - 1]];
      return;
    }
    case 3: {
      const auto& w = pick(four_cycles(v), ev, name());
      int lo = g_.precedes(w[1], w[2]) ? w[1] : w[2];
      int hi = lo == w[1] ? w[2] : w[1];
      phi[v] = phi[w[0]];
      phi[lo] = phi[hi];
      return;
    }
    case 4: {
      const auto& w = pick(six_paths(v), ev, name());
      phi[w[0]] = phi[w[1]] = phi[w[3]];
      phi[v] = phi[w[2]] = phi[w[4]];
      return;
    }
  }
  throw ContractViolation(name() + ": unknown event type");
}

// ---------------------------------------------------------------- acyclic-v2

AcyclicV2Family::AcyclicV2Family(Graph g, double alpha)
    : VertexFamily(std::move(g)), ss_(g_, alpha) {
  const double D = g_.max_degree();
  metas_.push_back({"N", D, 1});
  metas_.push_back({"S", alpha * dpow(D, 4.0 / 3.0), 1});
  for (int k = 2; k <= g_.n() / 2; ++k) {
    double cost = k == 2 ? dpow(D, 8.0 / 3.0) / (8 * alpha) : dpow(D, 2 * k - 4.0 / 3.0) / (2 * alpha);
    metas_.push_back({std::to_string(2 * k) + "-cycle", cost, 2 * k - 2});
  }
}

bool AcyclicV2Family::admissible(const std::vector<int>& w, int k) const {
  // w = (u1, u3, u4, ..., u2k)
  const int u1 = w[0];
  if (k == 2) return !g_.adjacent(u1, w[1]);
  const int u_odd = w[w.size() - 2];  // u_{2k-1}
  if (g_.adjacent(u1, u_odd)) return false;
  return !(ss_.is_special(u1, u_odd) && ss_.is_special(u_odd, u1));
}

const std::vector<std::vector<int>>& AcyclicV2Family::cycles(int v, int k) const {
  return cache_.get(v, k, [&] {
    std::vector<std::vector<int>> out;
    if (k == 2) {
      for (const auto& w : induced_four_cycles(g_, ss_, v)) {
        int u4 = w[0], x = w[1], y = w[2];
        if (g_.precedes(x, y)) out.push_back({x, y, u4});
        else out.push_back({y, x, u4});
      }
      std::sort(out.begin(), out.end());
      return out;
    }
    std::vector<char> used(g_.n(), 0);
    used[v] = 1;
    for (int u1 : g_.neighbors(v))
      for (int u3 : g_.neighbors(v)) {
        if (u1 == u3 || !g_.precedes(u1, u3)) continue;
        used[u1] = used[u3] = 1;
        std::vector<int> path{u3};
        extend_paths(g_, path, used, 2 * k - 2, [&](const std::vector<int>& p) {
          if (!g_.adjacent(p.back(), u1)) return;
          std::vector<int> w{u1};
          w.insert(w.end(), p.begin(), p.end());
          if (admissible(w, k)) out.push_back(std::move(w));
        });
        used[u1] = used[u3] = 0;
      }
    std::sort(out.begin(), out.end());
    return out;
  });
}

long long AcyclicV2Family::class_count(int v, int type) const {
  if (type == 1) return g_.degree(v);
  if (type == 2) return static_cast<long long>(ss_.special(v).size());
  return static_cast<long long>(cycles(v, type).size());
}

std::optional<EventId> AcyclicV2Family::detect(const std::vector<Color>& phi, int v) const {
  if (auto ev = neighbor_event(g_, phi, v)) return ev;
  if (auto ev = special_event(ss_, phi, v)) return ev;
  std::vector<char> used(g_.n(), 0);
  for (int k = 2; k <= g_.n() / 2; ++k) {
    for (int u1 : g_.neighbors(v)) {
      if (phi[u1] == 0) continue;
      for (int u3 : g_.neighbors(v)) {
        if (u3 == u1 || phi[u3] != phi[u1] || !g_.precedes(u1, u3)) continue;
        std::vector<int> path{u1, v, u3};
        used.assign(g_.n(), 0);
        used[u1] = used[v] = used[u3] = 1;
        auto cyc = alternating_cycle(g_, phi, path, used, 2 * k, [&](const std::vector<int>& c) {
          if (k == 2) return !ss_.is_special(v, c[3]);
          std::vector<int> w{c[0]};
          w.insert(w.end(), c.begin() + 2, c.end());
          return admissible(w, k);
        });
        if (cyc) {
          std::vector<int> w{(*cyc)[0]};
          w.insert(w.end(), cyc->begin() + 2, cyc->end());
          return EventId{k + 1, rank_of(cycles(v, k), w)};
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<int> AcyclicV2Family::uncolor_set(const EventId& ev, int v, const ColoredSet&) const {
  if (ev.type <= 2) return {v};
  const int k = ev.type - 1;
  const auto& w = pick(cycles(v, k), ev, name());
  // cycle order u1, v, u3, ..., u2k; uncolor u1..u_{2k-2}
  std::vector<int> out{w[0], v};
  for (int i = 1; i < 2 * k - 3; ++i) out.push_back(w[i]);
  return out;
}

void AcyclicV2Family::reconstruct(const EventId& ev, int v, const ColoredSet&,
                                  std::vector<Color>& phi) const {
  if (ev.type == 1) {
    const auto& nb = g_.neighbors(v);
    if (ev.cls > static_cast<long long>(nb.size())) throw ContractViolation(name() + ": bad N class");
    phi[v] = phi[nb[ev.cls - 1]];
    return;
  }
  if (ev.type == 2) {
    const auto& s = ss_.special(v);
    if (ev.cls > static_cast<long long>(s.size())) throw ContractViolation(name() + ": bad S class");
    phi[v] = phi[s[ev.cls - 1]];
    return;
  }
  const int k = ev.type - 1;
  const auto& w = pick(cycles(v, k), ev, name());
  std::vector<int> cyc{w[0], v};
  cyc.insert(cyc.end(), w.begin() + 1, w.end());
  const int L = 2 * k;
  for (int j = 0; j < L - 2; ++j) phi[cyc[j]] = (j % 2 == 0) ? phi[cyc[L - 2]] : phi[cyc[L - 1]];
}

}  // namespace entcolor
