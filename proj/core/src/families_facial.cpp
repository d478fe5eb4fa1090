#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

#include "entcolor/errors.hpp"
#include "entcolor/families.hpp"

namespace entcolor {

namespace {

std::vector<int> canonical(const std::vector<int>& p) {
  std::vector<int> r(p.rbegin(), p.rend());
  return std::min(p, r);
}

// Drops later copies of a path (either orientation), keeping first-occurrence order.
std::vector<std::vector<int>> distinct(std::vector<std::vector<int>> xs) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> out;
  for (auto& x : xs)
    if (seen.insert(canonical(x)).second) out.push_back(std::move(x));
  return out;
}

bool is_repetition(const std::vector<int>& p, const std::vector<Color>& phi) {
  const std::size_t j = p.size() / 2;
  for (std::size_t i = 0; i < j; ++i)
    if (phi[p[i]] == 0 || phi[p[i]] != phi[p[i + j]]) return false;
  return true;
}

const std::vector<int>& pick(const std::vector<std::vector<int>>& list, const EventId& ev,
                             const std::string& fam) {
  if (ev.cls < 1 || ev.cls > static_cast<long long>(list.size()))
    throw ContractViolation(fam + ": class " + std::to_string(ev.cls) + " of type " +
                            std::to_string(ev.type) + " does not exist");
  return list[ev.cls - 1];
}

std::vector<int> half_with(const std::vector<int>& p, int obj) {
  const std::size_t j = p.size() / 2;
  auto first = std::find(p.begin(), p.begin() + j, obj) != p.begin() + j;
  return first ? std::vector<int>(p.begin(), p.begin() + j) : std::vector<int>(p.begin() + j, p.end());
}

void mirror(const std::vector<int>& p, std::vector<Color>& phi) {
  const std::size_t j = p.size() / 2;
  for (std::size_t i = 0; i < j; ++i) {
    if (phi[p[i]] == 0) phi[p[i]] = phi[p[i + j]];
    else if (phi[p[i + j]] == 0) phi[p[i + j]] = phi[p[i]];
  }
}

}  // namespace

// ---------------------------------------------------------------- facial-thue-vertex

FacialThueVertexFamily::FacialThueVertexFamily(PlaneGraph pg) : pg_(std::move(pg)) {
  order_ = pg_.graph().order();
  const double D = pg_.graph().max_degree();
  for (int j = 1; j <= std::max(1, pg_.graph().n() / 2); ++j)
    metas_.push_back({"facial " + std::to_string(2 * j) + "-repetition", j == 1 ? D : 2 * j * D, j});
}

const std::vector<std::vector<int>>& FacialThueVertexFamily::paths(int v, int j) const {
  return cache_.get(v, j, [&] { return distinct(facial_vertex_paths_through(pg_, v, 2 * j)); });
}

long long FacialThueVertexFamily::class_count(int v, int type) const {
  return static_cast<long long>(paths(v, type).size());
}

std::optional<EventId> FacialThueVertexFamily::detect(const std::vector<Color>& phi, int v) const {
  for (int j = 1; j <= static_cast<int>(metas_.size()); ++j) {
    const auto& list = paths(v, j);
    for (std::size_t r = 0; r < list.size(); ++r)
      if (is_repetition(list[r], phi)) return EventId{j, static_cast<long long>(r) + 1};
  }
  return std::nullopt;
}

std::vector<int> FacialThueVertexFamily::uncolor_set(const EventId& ev, int v,
                                                     const ColoredSet&) const {
  return half_with(pick(paths(v, ev.type), ev, name()), v);
}

void FacialThueVertexFamily::reconstruct(const EventId& ev, int v, const ColoredSet&,
                                         std::vector<Color>& phi) const {
  mirror(pick(paths(v, ev.type), ev, name()), phi);
}

// ---------------------------------------------------------------- facial-thue-edge

FacialThueEdgeFamily::FacialThueEdgeFamily(PlaneGraph pg, int e_star)
    : pg_(std::move(pg)), medial_(pg_), e_star_(e_star) {
  const int m = pg_.graph().m();
  if (e_star < 0 || e_star >= m) throw InputError("e* is not an edge index");
  order_.resize(m);
  for (int e = 0; e < m; ++e) order_[e] = e;
  ColoredSet none(m, 0);
  if (!uncolored_connected(none)) throw InputError("medial graph is not connected");
  for (int j = 1; j <= std::max(1, (pg_.graph().n() - 1) / 2); ++j)
    metas_.push_back({"facial " + std::to_string(2 * j) + "-edge repetition", 1.0 + 2 * j, j});
}

bool FacialThueEdgeFamily::uncolored_connected(const ColoredSet& colored) const {
  const int m = medial_.n();
  int start = -1, total = 0;
  for (int e = 0; e < m; ++e)
    if (!colored[e]) {
      ++total;
      if (start < 0) start = e;
    }
  if (total == 0) return true;
  std::vector<char> seen(m, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int e = stack.back();
    stack.pop_back();
    for (int f : medial_.neighbors(e))
      if (!colored[f] && !seen[f]) {
        seen[f] = 1;
        ++reached;
        stack.push_back(f);
      }
  }
  return reached == total;
}

std::optional<int> FacialThueEdgeFamily::next_uncolored(const ColoredSet& colored) const {
  const int m = medial_.n();
  if (colored[e_star_]) throw InvariantViolation("e* was colored");
  std::vector<int> parent(m, -2), children(m, 0);
  std::deque<int> queue{e_star_};
  parent[e_star_] = -1;
  int reached = 1;
  while (!queue.empty()) {
    int e = queue.front();
    queue.pop_front();
    for (int f : medial_.neighbors(e))
      if (!colored[f] && parent[f] == -2) {
        parent[f] = e;
        ++children[e];
        ++reached;
        queue.push_back(f);
      }
  }
  int uncolored = static_cast<int>(std::count(colored.begin(), colored.end(), 0));
  if (reached != uncolored)
    throw InvariantViolation("uncolored edges do not induce a connected medial subgraph");
  for (int e = 0; e < m; ++e)
    if (e != e_star_ && parent[e] != -2 && children[e] == 0) return e;
  return std::nullopt;
}

std::optional<int> FacialThueEdgeFamily::blocker(int e, const ColoredSet& X) const {
  for (int f : medial_.neighbors(e))
    if (!X[f]) return f;
  return std::nullopt;
}

const std::vector<std::vector<int>>& FacialThueEdgeFamily::all_paths(int e, int j) const {
  return cache_.get(e, -j, [&] { return distinct(facial_edge_paths_through(pg_, e, 2 * j)); });
}

const std::vector<std::vector<int>>& FacialThueEdgeFamily::paths(int e, int j, int avoid) const {
  // key packs (j, avoid) into one int; avoid < m
  const int key = j * (medial_.n() + 1) + avoid + 1;
  return cache_.get(e, key, [&] {
    std::vector<std::vector<int>> out;
    for (const auto& p : all_paths(e, j))
      if (std::find(p.begin(), p.end(), avoid) == p.end()) out.push_back(p);
    return out;
  });
}

std::optional<EventId> FacialThueEdgeFamily::detect(const std::vector<Color>& phi, int e) const {
  ColoredSet X(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) X[i] = phi[i] != 0;
  auto ep = blocker(e, X);
  if (!ep) throw InvariantViolation("colored edge has no uncolored facial neighbour");
  for (int j = 1; j <= static_cast<int>(metas_.size()); ++j) {
    const auto& list = paths(e, j, *ep);
    for (std::size_t r = 0; r < list.size(); ++r)
      if (is_repetition(list[r], phi)) return EventId{j, static_cast<long long>(r) + 1};
  }
  return std::nullopt;
}

std::vector<int> FacialThueEdgeFamily::uncolor_set(const EventId& ev, int e, const ColoredSet& X) const {
  auto ep = blocker(e, X);
  if (!ep) throw ContractViolation(name() + ": no uncolored facial neighbour");
  return half_with(pick(paths(e, ev.type, *ep), ev, name()), e);
}

void FacialThueEdgeFamily::reconstruct(const EventId& ev, int e, const ColoredSet& X,
                                       std::vector<Color>& phi) const {
  auto ep = blocker(e, X);
  if (!ep) throw ContractViolation(name() + ": no uncolored facial neighbour");
  mirror(pick(paths(e, ev.type, *ep), ev, name()), phi);
}

bool FacialThueEdgeFamily::in_forbidden(const std::vector<Color>& phi, int e) const {
  for (int j = 1; j <= static_cast<int>(metas_.size()); ++j)
    for (const auto& p : all_paths(e, j))
      if (is_repetition(p, phi)) return true;
  return false;
}

}  // namespace entcolor
