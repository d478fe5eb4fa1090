// Copyright 2026 The entcolor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace entcolor {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1 with a fixed total order.
// Vertices are 0-based in memory and 1-based in every text format.
class Graph {
 public:
  Graph() = default;
  // Duplicate edges are collapsed; loops and out-of-range endpoints throw InputError.
  Graph(int n, const std::vector<Edge>& edges);

  int n() const { return static_cast<int>(adj_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }
  int max_degree() const { return max_degree_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  // Sorted ascending by vertex index.
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const;

  // Edges as (u, v) with u < v, sorted lexicographically; the position is the edge index.
  const std::vector<Edge>& edges() const { return edges_; }
  // -1 when u and v are not adjacent.
  int edge_index(int u, int v) const;
  // Edge indices incident to v, parallel to neighbors(v).
  const std::vector<int>& incident_edges(int v) const { return inc_[v]; }

  // The order: order()[i] is the i-th smallest vertex, rank(v) its position.
  const std::vector<int>& order() const { return order_; }
  int rank(int v) const { return rank_[v]; }
  bool precedes(int u, int v) const { return rank_[u] < rank_[v]; }
  // perm lists the vertices from smallest to largest.
  void set_order(const std::vector<int>& perm);

  int common_neighbors(int u, int v) const;
  std::uint64_t hash() const;  // FNV-1a over n, edges and order

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> inc_;
  std::vector<Edge> edges_;
  std::vector<int> order_;
  std::vector<int> rank_;
  int max_degree_ = 0;
};

// Edge-list document: first non-comment line "n m", an optional "order: p1 ... pn"
// line, then m lines "u v". '#' starts a comment.
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);
std::string format_graph(const Graph& g);

// Vertices at distance exactly 2, sorted by the graph order.
std::vector<int> neighbors2(const Graph& g, int v);

// Distance-2 structure and special sets for a fixed alpha.
class SpecialStructure {
 public:
  SpecialStructure(const Graph& g, double alpha);

  double alpha() const { return alpha_; }
  // floor(alpha * Delta^{4/3}), the nominal special-set size.
  int cap() const { return cap_; }

  const std::vector<int>& n2(int v) const { return n2_[v]; }
  // deg(v,u) = |N(v) ∩ N(u)|; 0 when u is not in N^2(v).
  int deg2(int v, int u) const;
  // a ≺_v b
  bool v_precedes(int v, int a, int b) const;
  // S(v), largest element of ≺_v first.
  const std::vector<int>& special(int v) const { return special_[v]; }
  bool is_special(int v, int u) const;  // u ∈ S(v)

 private:
  const Graph* g_;
  double alpha_;
  int cap_;
  std::vector<std::vector<int>> n2_;
  std::vector<std::vector<std::pair<int, int>>> deg_;  // (u, deg) sorted by u
  std::vector<std::vector<int>> special_;
  std::vector<std::vector<int>> special_sorted_;
};

int special_cap(double alpha, int max_degree);

}  // namespace entcolor
