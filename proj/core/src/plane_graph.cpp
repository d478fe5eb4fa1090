#include "entcolor/plane_graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "entcolor/errors.hpp"
#include "entcolor/text.hpp"

namespace entcolor {

PlaneGraph::PlaneGraph(Graph g, std::vector<std::vector<int>> rotation)
    : g_(std::move(g)), rot_(std::move(rotation)) {
  const int n = g_.n();
  if (static_cast<int>(rot_.size()) != n) throw EmbeddingError("rotation system has wrong size");
  rot_pos_.resize(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> sorted = rot_[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g_.neighbors(v))
      throw EmbeddingError("rotation at vertex " + std::to_string(v + 1) +
                           " is not a permutation of its neighbours");
    rot_pos_[v].assign(g_.degree(v), 0);
    for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i) {
      const auto& nb = g_.neighbors(v);
      auto at = std::lower_bound(nb.begin(), nb.end(), rot_[v][i]) - nb.begin();
      rot_pos_[v][at] = i;
    }
  }

  const int darts = 2 * g_.m();
  next_.assign(darts, -1);
  for (int d = 0; d < darts; ++d) {
    int u = dart_tail(d), v = dart_head(d);
    const auto& nb = g_.neighbors(v);
    int at = static_cast<int>(std::lower_bound(nb.begin(), nb.end(), u) - nb.begin());
    int pos = rot_pos_[v][at];
    int w = rot_[v][(pos + 1) % rot_[v].size()];
    next_[d] = dart(v, w);
  }

  face_of_.assign(darts, -1);
  for (int start = 0; start < darts; ++start) {
    if (face_of_[start] != -1) continue;
    int f = static_cast<int>(faces_.size());
    faces_.emplace_back();
    face_darts_.emplace_back();
    int d = start;
    do {
      if (face_of_[d] != -1) throw EmbeddingError("face tracing revisited a dart");
      face_of_[d] = f;
      faces_.back().push_back(dart_tail(d));
      face_darts_.back().push_back(d);
      d = next_[d];
    } while (d != start);
  }
}

int PlaneGraph::dart(int u, int v) const {
  int e = g_.edge_index(u, v);
  if (e < 0) throw EmbeddingError("no edge between " + std::to_string(u + 1) + " and " +
                                  std::to_string(v + 1));
  return 2 * e + (u < v ? 0 : 1);
}

int PlaneGraph::dart_tail(int d) const {
  const Edge& e = g_.edges()[d / 2];
  return d % 2 == 0 ? e.first : e.second;
}

int PlaneGraph::dart_head(int d) const {
  const Edge& e = g_.edges()[d / 2];
  return d % 2 == 0 ? e.second : e.first;
}

bool PlaneGraph::connected() const {
  const int n = g_.n();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g_.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

int PlaneGraph::euler_characteristic() const {
  return g_.n() - g_.m() + static_cast<int>(faces_.size());
}

PlaneGraph parse_plane_graph(std::string_view text) {
  LineReader in(text);
  auto header = in.next();
  if (!header) throw ParseError(in.line_no(), "missing \"n m\" header");
  auto head = parse_ints(*header, in.line_no());
  if (head.size() != 2 || head[0] < 0 || head[1] < 0)
    throw ParseError(in.line_no(), "header must be \"n m\"");
  const int n = static_cast<int>(head[0]);
  std::vector<std::vector<int>> rot(n);
  std::vector<char> given(n, 0);
  std::vector<Edge> edges;
  while (auto line = in.next()) {
    auto colon = line->find(':');
    if (colon == std::string_view::npos) throw ParseError(in.line_no(), "expected \"v: w1 ... wk\"");
    auto vs = parse_ints(line->substr(0, colon), in.line_no());
    if (vs.size() != 1 || vs[0] < 1 || vs[0] > n)
      throw ParseError(in.line_no(), "vertex out of range 1.." + std::to_string(n));
    int v = static_cast<int>(vs[0] - 1);
    if (given[v]) throw ParseError(in.line_no(), "rotation for vertex " + std::to_string(v + 1) + " given twice");
    given[v] = 1;
    for (long long w : parse_ints(line->substr(colon + 1), in.line_no())) {
      if (w < 1 || w > n) throw ParseError(in.line_no(), "neighbour out of range");
      if (w - 1 == v) throw ParseError(in.line_no(), "loop edge");
      rot[v].push_back(static_cast<int>(w - 1));
      edges.emplace_back(v, static_cast<int>(w - 1));
    }
  }
  for (int v = 0; v < n; ++v) {
    std::vector<int> s = rot[v];
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw EmbeddingError("vertex " + std::to_string(v + 1) + " lists a neighbour twice");
    for (int w : rot[v])
      if (std::find(rot[w].begin(), rot[w].end(), v) == rot[w].end())
        throw EmbeddingError("rotation not symmetric: " + std::to_string(v + 1) + " lists " +
                             std::to_string(w + 1) + " but not conversely");
  }
  Graph g(n, edges);
  if (g.m() != head[1])
    throw ParseError(1, "header says " + std::to_string(head[1]) + " edges, rotation has " +
                            std::to_string(g.m()));
  return PlaneGraph(std::move(g), std::move(rot));
}

PlaneGraph load_plane_graph(const std::string& path) { return parse_plane_graph(read_file(path)); }

std::string format_plane_graph(const PlaneGraph& pg) {
  std::ostringstream out;
  out << pg.graph().n() << ' ' << pg.graph().m() << '\n';
  for (int v = 0; v < pg.graph().n(); ++v) {
    out << v + 1 << ':';
    for (int w : pg.rotation(v)) out << ' ' << w + 1;
    out << '\n';
  }
  return out.str();
}

namespace {

bool all_distinct(std::vector<int> xs) {
  std::sort(xs.begin(), xs.end());
  return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
}

std::vector<int> canonical(const std::vector<int>& p) {
  std::vector<int> r(p.rbegin(), p.rend());
  return std::min(p, r);
}

// Windows over every face, skipping the reverse of a window already seen in that face.
template <class Window>
std::vector<std::vector<int>> collect(const PlaneGraph& pg, Window window) {
  std::vector<std::vector<int>> out;
  for (std::size_t f = 0; f < pg.faces().size(); ++f) {
    std::set<std::vector<int>> seen;
    const int L = static_cast<int>(pg.faces()[f].size());
    for (int o = 0; o < L; ++o) {
      std::vector<int> w;
      if (!window(static_cast<int>(f), o, w)) continue;
      if (seen.insert(canonical(w)).second) out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> facial_vertex_paths(const PlaneGraph& pg, int len) {
  if (len < 1) return {};
  return collect(pg, [&](int f, int o, std::vector<int>& w) {
    const auto& walk = pg.faces()[f];
    const int L = static_cast<int>(walk.size());
    if (len > L) return false;
    for (int i = 0; i < len; ++i) w.push_back(walk[(o + i) % L]);
    return all_distinct(w);
  });
}

std::vector<std::vector<int>> facial_vertex_paths_through(const PlaneGraph& pg, int v, int len) {
  std::vector<std::vector<int>> out;
  for (auto& p : facial_vertex_paths(pg, len))
    if (std::find(p.begin(), p.end(), v) != p.end()) out.push_back(std::move(p));
  return out;
}

std::vector<std::vector<int>> facial_edge_paths(const PlaneGraph& pg, int len) {
  if (len < 1) return {};
  return collect(pg, [&](int f, int o, std::vector<int>& w) {
    const auto& darts = pg.face_darts()[f];
    const int L = static_cast<int>(darts.size());
    if (len > L) return false;
    std::vector<int> verts;
    for (int i = 0; i < len; ++i) {
      int d = darts[(o + i) % L];
      w.push_back(d / 2);
      verts.push_back(pg.dart_tail(d));
    }
    verts.push_back(pg.dart_head(darts[(o + len - 1) % L]));
    return all_distinct(verts);
  });
}

std::vector<std::vector<int>> facial_edge_paths_through(const PlaneGraph& pg, int e, int len) {
  std::vector<std::vector<int>> out;
  for (auto& p : facial_edge_paths(pg, len))
    if (std::find(p.begin(), p.end(), e) != p.end()) out.push_back(std::move(p));
  return out;
}

MedialGraph::MedialGraph(const PlaneGraph& pg) {
  const int m = pg.graph().m();
  adj_.assign(m, {});
  multideg_.assign(m, 0);
  for (const auto& darts : pg.face_darts()) {
    const int L = static_cast<int>(darts.size());
    for (int i = 0; i < L; ++i) {
      int a = darts[i] / 2, b = darts[(i + 1) % L] / 2;
      if (a == b) continue;
      ++multideg_[a];
      ++multideg_[b];
      adj_[a].push_back(b);
      adj_[b].push_back(a);
    }
  }
  for (auto& a : adj_) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
}

bool MedialGraph::adjacent(int a, int b) const {
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

bool MedialGraph::four_regular() const {
  return std::all_of(multideg_.begin(), multideg_.end(), [](int d) { return d == 4; });
}

Graph MedialGraph::as_graph() const {
  std::vector<Edge> edges;
  for (int a = 0; a < n(); ++a)
    for (int b : adj_[a])
      if (a < b) edges.emplace_back(a, b);
  return Graph(n(), edges);
}

}  // namespace entcolor
