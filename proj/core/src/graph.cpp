// Copyright 2026 The entcolor Authors
// SPDX-License-Identifier: Apache-2.0

#include "entcolor/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "entcolor/errors.hpp"
#include "entcolor/text.hpp"

namespace entcolor {

Graph::Graph(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw InputError("negative vertex count");
  adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("edge endpoint out of range");
    if (u == v) throw InputError("loop at vertex " + std::to_string(u + 1));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  inc_.assign(n, {});
  for (int v = 0; v < n; ++v) {
    std::sort(adj_[v].begin(), adj_[v].end());
    max_degree_ = std::max(max_degree_, degree(v));
    for (int w : adj_[v]) inc_[v].push_back(edge_index(v, w));
  }
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), 0);
  rank_ = order_;
}

bool Graph::adjacent(int u, int v) const {
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

int Graph::edge_index(int u, int v) const {
  Edge e{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

void Graph::set_order(const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != n()) throw InputError("order has wrong length");
  std::vector<int> rank(n(), -1);
  for (int i = 0; i < n(); ++i) {
    int v = perm[i];
    if (v < 0 || v >= n() || rank[v] != -1) throw InputError("order is not a permutation");
    rank[v] = i;
  }
  order_ = perm;
  rank_ = std::move(rank);
}

int Graph::common_neighbors(int u, int v) const {
  const auto& a = adj_[u];
  const auto& b = adj_[v];
  int c = 0;
  for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++c, ++i, ++j;
    }
  }
  return c;
}

std::uint64_t Graph::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(n()));
  for (auto [u, v] : edges_) {
    mix(static_cast<std::uint64_t>(u));
    mix(static_cast<std::uint64_t>(v));
  }
  for (int v : order_) mix(static_cast<std::uint64_t>(v));
  return h;
}

Graph parse_graph(std::string_view text) {
  LineReader in(text);
  auto header = in.next();
  if (!header) throw ParseError(in.line_no(), "missing \"n m\" header");
  auto head = parse_ints(*header, in.line_no());
  if (head.size() != 2 || head[0] < 0 || head[1] < 0)
    throw ParseError(in.line_no(), "header must be \"n m\"");
  int n = static_cast<int>(head[0]);
  long long m = head[1];

  std::vector<int> order;
  std::vector<Edge> edges;
  while (auto line = in.next()) {
    std::string_view body = *line;
    if (body.rfind("order:", 0) == 0) {
      if (!order.empty() || !edges.empty())
        throw ParseError(in.line_no(), "\"order:\" must directly follow the header");
      for (long long p : parse_ints(body.substr(6), in.line_no())) {
        if (p < 1 || p > n) throw ParseError(in.line_no(), "order entry out of range");
        order.push_back(static_cast<int>(p - 1));
      }
      if (static_cast<int>(order.size()) != n)
        throw ParseError(in.line_no(), "order must list all " + std::to_string(n) + " vertices");
      continue;
    }
    auto uv = parse_ints(body, in.line_no());
    if (uv.size() != 2) throw ParseError(in.line_no(), "edge line must be \"u v\"");
    if (uv[0] < 1 || uv[0] > n || uv[1] < 1 || uv[1] > n)
      throw ParseError(in.line_no(), "vertex out of range 1.." + std::to_string(n));
    if (uv[0] == uv[1]) throw ParseError(in.line_no(), "loop edge");
    edges.emplace_back(static_cast<int>(uv[0] - 1), static_cast<int>(uv[1] - 1));
  }
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(in.line_no(), "expected " + std::to_string(m) + " edges, found " +
                                       std::to_string(edges.size()));
  Graph g(n, edges);
  if (!order.empty()) {
    try {
      g.set_order(order);
    } catch (const InputError& e) {
      throw ParseError(1, e.what());
    }
  }
  return g;
}

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  bool identity = true;
  for (int i = 0; i < g.n(); ++i) identity = identity && g.order()[i] == i;
  if (!identity) {
    out << "order:";
    for (int v : g.order()) out << ' ' << v + 1;
    out << '\n';
  }
  for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

std::vector<int> neighbors2(const Graph& g, int v) {
  std::vector<char> seen(g.n(), 0);
  seen[v] = 1;
  for (int w : g.neighbors(v)) seen[w] = 1;
  std::vector<int> out;
  for (int w : g.neighbors(v))
    for (int u : g.neighbors(w))
      if (!seen[u]) {
        seen[u] = 1;
        out.push_back(u);
      }
  std::sort(out.begin(), out.end(), [&g](int a, int b) { return g.precedes(a, b); });
  return out;
}

int special_cap(double alpha, int max_degree) {
  double raw = alpha * std::pow(static_cast<double>(max_degree), 4.0 / 3.0);
  return static_cast<int>(std::floor(raw + 1e-9));
}

SpecialStructure::SpecialStructure(const Graph& g, double alpha)
    : g_(&g), alpha_(alpha), cap_(special_cap(alpha, g.max_degree())) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in (0, 1]");
  const int n = g.n();
  n2_.resize(n);
  deg_.resize(n);
  special_.resize(n);
  special_sorted_.resize(n);
  for (int v = 0; v < n; ++v) {
    n2_[v] = neighbors2(g, v);
    for (int u : n2_[v]) deg_[v].emplace_back(u, g.common_neighbors(v, u));
    std::sort(deg_[v].begin(), deg_[v].end());

    std::vector<int> by_v = n2_[v];
    std::sort(by_v.begin(), by_v.end(), [&](int a, int b) { return v_precedes(v, b, a); });
    int take = std::min<int>(cap_, static_cast<int>(by_v.size()));
    special_[v].assign(by_v.begin(), by_v.begin() + take);
    special_sorted_[v] = special_[v];
    std::sort(special_sorted_[v].begin(), special_sorted_[v].end());
  }
}

int SpecialStructure::deg2(int v, int u) const {
  const auto& d = deg_[v];
  auto it = std::lower_bound(d.begin(), d.end(), std::make_pair(u, -1));
  return (it != d.end() && it->first == u) ? it->second : 0;
}

bool SpecialStructure::v_precedes(int v, int a, int b) const {
  int da = deg2(v, a), db = deg2(v, b);
  if (da != db) return da < db;
  return g_->precedes(a, b);
}

bool SpecialStructure::is_special(int v, int u) const {
  const auto& s = special_sorted_[v];
  return std::binary_search(s.begin(), s.end(), u);
}

}  // namespace entcolor
