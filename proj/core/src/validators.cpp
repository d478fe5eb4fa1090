// Copyright 2026 The entcolor Authors
// SPDX-License-Identifier: Apache-2.0

// Brute-force checkers. Nothing here reuses the event detectors or the facial
// path helpers of the families.

#include "entcolor/validators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "entcolor/errors.hpp"
#include "entcolor/text.hpp"

namespace entcolor {
namespace {

void require_size(const std::vector<int>& phi, int expected) {
  if (static_cast<int>(phi.size()) != expected)
    throw InputError("colouring has " + std::to_string(phi.size()) + " entries, expected " +
                     std::to_string(expected));
}

std::vector<int> smaller_orientation(std::vector<int> p) {
  std::vector<int> r(p.rbegin(), p.rend());
  return std::min(p, r);
}

bool repetitive(const std::vector<int>& colors) {
  std::size_t L = colors.size();
  if (L == 0 || L % 2) return false;
  std::size_t h = L / 2;
  for (std::size_t i = 0; i < h; ++i)
    if (colors[i] == 0 || colors[i] != colors[i + h]) return false;
  return true;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
};

// Tree path between a and b in the forest given by adjacency lists.
std::vector<int> forest_path(const std::vector<std::vector<int>>& adj, int a, int b) {
  std::vector<int> prev(adj.size(), -2);
  std::vector<int> queue{a};
  prev[a] = -1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int w : adj[queue[i]])
      if (prev[w] == -2) {
        prev[w] = queue[i];
        queue.push_back(w);
      }
  std::vector<int> path;
  for (int x = b; x != -1; x = prev[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

// Calls f(path) for every simple path (as a vertex list, both orientations) with at
// most max_len vertices. f returns false to stop.
void each_simple_path(const Graph& g, int max_len, const std::function<bool(const std::vector<int>&)>& f) {
  std::vector<int> path;
  std::vector<char> on(g.n(), 0);
  bool stop = false;
  std::function<void(int)> grow = [&](int v) {
    path.push_back(v);
    on[v] = 1;
    if (!f(path)) stop = true;
    if (!stop && static_cast<int>(path.size()) < max_len)
      for (int w : g.neighbors(v)) {
        if (on[w]) continue;
        grow(w);
        if (stop) break;
      }
    on[v] = 0;
    path.pop_back();
  };
  for (int v = 0; v < g.n() && !stop; ++v) grow(v);
}

}  // namespace

Verdict check_proper(const Graph& g, const std::vector<int>& phi) {
  require_size(phi, g.n());
  for (auto [u, v] : g.edges())
    if (phi[u] != 0 && phi[u] == phi[v]) return {false, {u, v}, "monochromatic edge"};
  return {};
}

Verdict check_acyclic(const Graph& g, const std::vector<int>& phi) {
  auto proper = check_proper(g, phi);
  if (!proper.accepted) return proper;
  std::map<std::pair<int, int>, std::vector<Edge>> by_pair;
  for (auto [u, v] : g.edges()) {
    if (phi[u] == 0 || phi[v] == 0) continue;
    by_pair[{std::min(phi[u], phi[v]), std::max(phi[u], phi[v])}].push_back({u, v});
  }
  for (const auto& [pair, edges] : by_pair) {
    Dsu dsu(g.n());
    std::vector<std::vector<int>> forest(g.n());
    for (auto [u, v] : edges) {
      int a = dsu.find(u), b = dsu.find(v);
      if (a == b) {
        auto cycle = forest_path(forest, u, v);
        return {false, cycle,
                "bicoloured cycle in colours " + std::to_string(pair.first) + "," + std::to_string(pair.second)};
      }
      dsu.parent[a] = b;
      forest[u].push_back(v);
      forest[v].push_back(u);
    }
  }
  return {};
}

Verdict check_nonrepetitive(const Graph& g, const std::vector<int>& phi, NonrepScope scope,
                            const PlaneGraph* pg) {
  Verdict out;
  switch (scope) {
    case NonrepScope::AllPaths: {
      require_size(phi, g.n());
      if (g.n() > 14) throw SizeGuardError("all-paths check is limited to n <= 14");
      std::vector<int> colors;
      each_simple_path(g, g.n(), [&](const std::vector<int>& p) {
        colors.resize(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) colors[i] = phi[p[i]];
        if (repetitive(colors)) {
          out = {false, smaller_orientation(p), "repetitive path"};
          return false;
        }
        return true;
      });
      return out;
    }
    case NonrepScope::Edges: {
      require_size(phi, g.m());
      if (g.n() > 14) throw SizeGuardError("edge-path check is limited to n <= 14");
      std::vector<int> colors, ids;
      each_simple_path(g, g.n(), [&](const std::vector<int>& p) {
        if (p.size() < 3) return true;
        ids.resize(p.size() - 1);
        colors.resize(p.size() - 1);
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
          ids[i] = g.edge_index(p[i], p[i + 1]);
          colors[i] = phi[ids[i]];
        }
        if (repetitive(colors)) {
          out = {false, smaller_orientation(ids), "repetitive edge path"};
          return false;
        }
        return true;
      });
      return out;
    }
    case NonrepScope::FacialVertices:
    case NonrepScope::FacialEdges: {
      if (!pg) throw InputError("facial scope needs an embedding");
      bool edges = scope == NonrepScope::FacialEdges;
      require_size(phi, edges ? g.m() : g.n());
      // Walk every face from every starting corner, extending while vertices stay distinct.
      for (const auto& walk : pg->faces()) {
        int L = static_cast<int>(walk.size());
        for (int start = 0; start < L; ++start) {
          std::vector<int> verts{walk[start]};
          std::vector<int> ids, colors;
          for (int step = 1; step < L + 1; ++step) {
            int w = walk[(start + step) % L];
            if (std::find(verts.begin(), verts.end(), w) != verts.end()) break;
            int prev = verts.back();
            verts.push_back(w);
            if (edges) {
              int e = g.edge_index(prev, w);
              ids.push_back(e);
              colors.push_back(phi[e]);
              if (repetitive(colors)) return {false, smaller_orientation(ids), "repetitive facial edge path"};
            } else {
              colors.assign(verts.size(), 0);
              for (std::size_t i = 0; i < verts.size(); ++i) colors[i] = phi[verts[i]];
              if (repetitive(colors)) return {false, smaller_orientation(verts), "repetitive facial path"};
            }
          }
        }
      }
      return out;
    }
  }
  return out;
}

Verdict check_r_acyclic(const Graph& g, const std::vector<int>& phi, int r) {
  if (r < 2) throw DomainError("r must be at least 2");
  if (g.n() > 14) throw SizeGuardError("cycle enumeration is limited to n <= 14");
  auto proper = check_proper(g, phi);
  if (!proper.accepted) return proper;
  Verdict out;
  // Each cycle once: smallest vertex first, second vertex below the last.
  std::vector<int> path;
  std::vector<char> on(g.n(), 0);
  std::function<bool(int)> grow = [&](int v) {
    path.push_back(v);
    on[v] = 1;
    int start = path.front();
    if (path.size() >= 3 && path[1] < v && g.adjacent(v, start)) {
      bool all = true;
      std::vector<int> seen;
      for (int x : path) {
        if (phi[x] == 0) all = false;
        seen.push_back(phi[x]);
      }
      std::sort(seen.begin(), seen.end());
      int distinct = static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
      if (all && distinct < std::min(static_cast<int>(path.size()), r)) {
        out = {false, path, "cycle with " + std::to_string(distinct) + " colours"};
        return false;
      }
    }
    for (int w : g.neighbors(v)) {
      if (on[w] || w < start) continue;
      if (!grow(w)) return false;
    }
    on[v] = 0;
    path.pop_back();
    return true;
  };
  for (int v = 0; v < g.n(); ++v) {
    path.clear();
    std::fill(on.begin(), on.end(), 0);
    if (!grow(v)) break;
  }
  return out;
}

Verdict check_pair_forbidden(const Graph& g, const std::vector<int>& phi, const Graph& h) {
  require_size(phi, g.n());
  if (h.n() > 8) throw SizeGuardError("pattern graphs are limited to 8 vertices");
  if (g.n() > 14) throw SizeGuardError("subgraph matching is limited to n <= 14");
  if (h.n() > g.n() || h.n() == 0) return {};
  std::vector<int> colors;
  for (int c : phi)
    if (c) colors.push_back(c);
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());

  // Pattern vertices in BFS order so each new vertex has an earlier neighbour when possible.
  std::vector<int> order;
  std::vector<char> placed(h.n(), 0);
  for (int s = 0; s < h.n(); ++s) {
    if (placed[s]) continue;
    placed[s] = 1;
    order.push_back(s);
    for (std::size_t i = order.size() - 1; i < order.size(); ++i)
      for (int w : h.neighbors(order[i]))
        if (!placed[w]) {
          placed[w] = 1;
          order.push_back(w);
        }
  }

  for (std::size_t a = 0; a < colors.size(); ++a)
    for (std::size_t b = a + 1; b < colors.size(); ++b) {
      std::vector<char> in(g.n(), 0);
      for (int v = 0; v < g.n(); ++v) in[v] = phi[v] == colors[a] || phi[v] == colors[b];
      std::vector<int> image(h.n(), -1);
      std::vector<char> used(g.n(), 0);
      std::function<bool(std::size_t)> match = [&](std::size_t i) {
        if (i == order.size()) return true;
        int x = order[i];
        for (int v = 0; v < g.n(); ++v) {
          if (!in[v] || used[v]) continue;
          bool ok = true;
          for (int y : h.neighbors(x))
            if (image[y] >= 0 && !g.adjacent(v, image[y])) {
              ok = false;
              break;
            }
          if (!ok) continue;
          image[x] = v;
          used[v] = 1;
          if (match(i + 1)) return true;
          image[x] = -1;
          used[v] = 0;
        }
        return false;
      };
      if (match(0))
        return {false, image,
                "copy of the pattern in colours " + std::to_string(colors[a]) + "," + std::to_string(colors[b])};
    }
  return {};
}

Verdict check_star(const Graph& g, const std::vector<int>& phi) {
  auto proper = check_proper(g, phi);
  if (!proper.accepted) return proper;
  static const Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  return check_pair_forbidden(g, phi, p4);
}

std::vector<int> parse_coloring(std::string_view text, const Graph& g, bool edges) {
  std::vector<int> phi(edges ? g.m() : g.n(), 0);
  LineReader lines(text);
  while (auto line = lines.next()) {
    auto v = parse_ints(*line, lines.line_no());
    long long object = -1, color = 0;
    if (v.size() == 2) {
      object = v[0] - 1;
      color = v[1];
    } else if (v.size() == 3 && edges) {
      if (v[0] < 1 || v[1] < 1 || v[0] > g.n() || v[1] > g.n())
        throw ParseError(lines.line_no(), "vertex out of range");
      object = g.edge_index(static_cast<int>(v[0] - 1), static_cast<int>(v[1] - 1));
      if (object < 0) throw ParseError(lines.line_no(), "no such edge");
      color = v[2];
    } else {
      throw ParseError(lines.line_no(), edges ? "expected 'edge colour' or 'u v colour'" : "expected 'v colour'");
    }
    if (object < 0 || object >= static_cast<long long>(phi.size()))
      throw ParseError(lines.line_no(), "object out of range");
    if (color < 0 || color > 1'000'000'000) throw ParseError(lines.line_no(), "colour out of range");
    phi[object] = static_cast<int>(color);
  }
  return phi;
}

std::string format_coloring(const std::vector<int>& phi) {
  std::ostringstream out;
  for (std::size_t i = 0; i < phi.size(); ++i) out << (i + 1) << ' ' << phi[i] << '\n';
  return out.str();
}

}  // namespace entcolor
