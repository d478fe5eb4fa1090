// Copyright 2026 The entcolor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "entcolor/graph.hpp"

namespace entcolor {

// Combinatorial embedding given by a rotation system (counterclockwise neighbour
// order at each vertex). Faces are traced with the rule: the successor of the dart
// (u,v) is (v,w) where w follows u in the rotation at v.
class PlaneGraph {
 public:
  PlaneGraph(Graph g, std::vector<std::vector<int>> rotation);

  const Graph& graph() const { return g_; }
  const std::vector<int>& rotation(int v) const { return rot_[v]; }

  // Dart ids: for edge e = (a,b) with a < b, 2e is a->b and 2e+1 is b->a.
  int dart(int u, int v) const;
  int dart_tail(int d) const;
  int dart_head(int d) const;
  int next_dart(int d) const { return next_[d]; }

  // Each face is its vertex walk w_0..w_{L-1}; the darts are (w_i, w_{i+1 mod L}).
  const std::vector<std::vector<int>>& faces() const { return faces_; }
  // Darts of face f in walk order.
  const std::vector<std::vector<int>>& face_darts() const { return face_darts_; }
  int face_of_dart(int d) const { return face_of_[d]; }

  bool connected() const;
  // n - m + f; equals 2 for a connected plane embedding.
  int euler_characteristic() const;

 private:
  Graph g_;
  std::vector<std::vector<int>> rot_;
  std::vector<std::vector<int>> rot_pos_;  // parallel to g_.neighbors(v): index in rot_[v]
  std::vector<int> next_;
  std::vector<int> face_of_;
  std::vector<std::vector<int>> faces_;
  std::vector<std::vector<int>> face_darts_;
};

// "n m" then one line "v: w1 ... wk" per vertex (1-based, counterclockwise).
// Throws ParseError on syntax problems and EmbeddingError when the rotation lists
// are not consistent with a simple undirected graph.
PlaneGraph parse_plane_graph(std::string_view text);
PlaneGraph load_plane_graph(const std::string& path);
std::string format_plane_graph(const PlaneGraph& pg);

// Simple facial paths of `len` vertices, one entry per (face, window) after merging
// the two orientations of the same path inside a face. Ordered by face, then offset.
std::vector<std::vector<int>> facial_vertex_paths(const PlaneGraph& pg, int len);
std::vector<std::vector<int>> facial_vertex_paths_through(const PlaneGraph& pg, int v, int len);

// Facial paths of `len` consecutive edges (edge indices) whose len+1 vertices are
// distinct. Same ordering and per-face merging as the vertex version.
std::vector<std::vector<int>> facial_edge_paths(const PlaneGraph& pg, int len);
std::vector<std::vector<int>> facial_edge_paths_through(const PlaneGraph& pg, int e, int len);

// Graph on E(G): two edges are adjacent when they are consecutive on some face walk.
class MedialGraph {
 public:
  explicit MedialGraph(const PlaneGraph& pg);

  int n() const { return static_cast<int>(adj_.size()); }
  const std::vector<int>& neighbors(int e) const { return adj_[e]; }
  bool adjacent(int a, int b) const;
  // Degree counted with multiplicity (one per face corner).
  int multidegree(int e) const { return multideg_[e]; }
  // True when every vertex has multidegree 4.
  bool four_regular() const;
  Graph as_graph() const;

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<int> multideg_;
};

}  // namespace entcolor
