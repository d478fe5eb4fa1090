#include "entcolor/presets.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "entcolor/errors.hpp"
#include "entcolor/text.hpp"

namespace entcolor {
namespace {

constexpr double kE = 2.718281828459045;

void require_delta(const PresetParams& p, int min, const std::string& problem) {
  if (p.delta < min)
    throw RangeError(problem + " needs Delta >= " + std::to_string(min) + " (got " +
                     std::to_string(p.delta) + ")");
}

void add_acyclic_references(PresetResult& r, double d) {
  r.references.push_back({"Kostochka-Stocker", 1.0 + std::floor((d + 1) * (d + 1) / 4.0)});
  r.references.push_back({"Alon-McDiarmid-Reed", std::ceil(50.0 * std::pow(d, 4.0 / 3.0))});
  r.references.push_back({"Ndreca et al.", std::ceil(6.59 * std::pow(d, 4.0 / 3.0) + 3.3 * d)});
  r.references.push_back({"Sereni-Volec", 2.835 * std::pow(d, 4.0 / 3.0) + d});
}

// sum_{i>=0} A z^i x^4 with sizes 2i+4 (z = Delta^2 x^2).
Tail even_geometric_from_four(double a, double d) {
  Tail t;
  t.q = [a, d](double x) {
    double z = d * d * x * x;
    return a * std::pow(x, 4) / (1 - z);
  };
  t.p = [a, d](double x) {
    double z = d * d * x * x;
    return a * std::pow(x, 4) * (3 / (1 - z) + 2 * z / ((1 - z) * (1 - z)));
  };
  t.radius = 1.0 / d;
  t.gcd = 2;
  return t;
}

PresetResult acyclic_gamma(const PresetParams& p) {
  require_delta(p, 1, "acyclic-gamma");
  if (p.gamma < 1) throw RangeError("acyclic-gamma needs gamma >= 1");
  double d = p.delta, g = p.gamma;
  PresetResult r;
  std::vector<Term> terms{{d, 1}};
  if (p.exact_n) {
    for (int k = 2; k <= *p.exact_n / 2; ++k) terms.push_back({0.5 * g * std::pow(d, 2 * k - 2), 2 * k - 2});
    r.q = QPolynomial(terms);
  } else {
    Tail t;
    t.q = [g, d](double x) {
      double z = d * d * x * x;
      return 0.5 * g * z / (1 - z);
    };
    t.p = [g, d](double x) {
      double z = d * d * x * x;
      return 0.5 * g * (2 * z / ((1 - z) * (1 - z)) - z / (1 - z));
    };
    t.radius = 1.0 / d;
    t.gcd = 2;
    t.description = "gamma Delta^2 x^2 / (2 - 2 Delta^2 x^2)";
    r.q = QPolynomial(terms, t);
  }
  r.pinned = ratio_at(r.q, std::sqrt(2.0 / (g + 2)) / d);
  r.stated = d * (1 + std::sqrt(2 * g + 4));
  add_acyclic_references(r, d);
  return r;
}

PresetResult acyclic_v1(const PresetParams& p) {
  require_delta(p, 24, "acyclic-v1");
  if (!(p.alpha > 0 && p.alpha <= 1)) throw RangeError("acyclic-v1 needs alpha in (0, 1]");
  double d = p.delta, a = p.alpha;
  PresetResult r;
  r.q = QPolynomial({{d, 1},
                     {a * std::pow(d, 4.0 / 3.0), 1},
                     {std::pow(d, 8.0 / 3.0) / (8 * a), 2},
                     {0.5 * d * std::pow(d - 1, 4), 4}});
  r.pinned = ratio_at(r.q, 2 * std::sqrt(2 * a) / std::pow(d, 4.0 / 3.0));
  if (a == 0.5) r.stated = 1.5 * std::pow(d, 4.0 / 3.0) + 5 * d - 15;
  add_acyclic_references(r, d);
  return r;
}

PresetResult acyclic_v2(const PresetParams& p) {
  require_delta(p, 9, "acyclic-v2");
  if (!(p.alpha > 0 && p.alpha <= 1)) throw RangeError("acyclic-v2 needs alpha in (0, 1]");
  double d = p.delta, a = p.alpha;
  PresetResult r;
  std::vector<Term> terms{{d, 1}, {a * std::pow(d, 4.0 / 3.0), 1}, {std::pow(d, 8.0 / 3.0) / (8 * a), 2}};
  if (p.exact_n) {
    for (int k = 3; k <= *p.exact_n / 2; ++k)
      terms.push_back({std::pow(d, 2 * k - 4.0 / 3.0) / (2 * a), 2 * k - 2});
    r.q = QPolynomial(terms);
  } else {
    Tail t = even_geometric_from_four(std::pow(d, 14.0 / 3.0) / (2 * a), d);
    t.description = "Delta^{14/3} x^4 / (2 alpha (1 - Delta^2 x^2))";
    r.q = QPolynomial(terms, t);
  }
  r.pinned = ratio_at(r.q, 2 / std::pow(d, 4.0 / 3.0));
  if (a == 0.5) {
    double d43 = std::pow(d, 4.0 / 3.0);
    r.stated = 1.5 * d43 + d + 8 * d43 / (std::pow(d, 2.0 / 3.0) - 4);
  }
  add_acyclic_references(r, d);
  return r;
}

// sum_j c j Delta^{2j-1} x^j.
PresetResult nonrepetitive(const PresetParams& p, double c, const std::string& name) {
  require_delta(p, 3, name);
  double d = p.delta;
  PresetResult r;
  if (p.exact_n) {
    std::vector<Term> terms;
    for (int j = 1; j <= std::max(1, *p.exact_n / 2); ++j) terms.push_back({c * j * std::pow(d, 2 * j - 1), j});
    r.q = QPolynomial(terms);
  } else {
    Tail t;
    t.q = [c, d](double x) {
      double y = d * d * x;
      return c * d * x / ((1 - y) * (1 - y));
    };
    t.p = [c, d](double x) {
      double y = d * d * x;
      return c / d * 2 * y * y / std::pow(1 - y, 3);
    };
    t.radius = 1.0 / (d * d);
    t.description = "c Delta x / (1 - Delta^2 x)^2";
    r.q = QPolynomial({}, t);
  }
  r.pinned = ratio_at(r.q, 1 / (d * d) - std::cbrt(2 * c / std::pow(d, 7)));
  return r;
}

PresetResult facial_vertex(const PresetParams& p) {
  require_delta(p, 2, "facial-thue-vertex");
  double d = p.delta;
  PresetResult r;
  std::vector<Term> terms{{d, 1}};
  if (p.exact_n) {
    for (int j = 2; j <= *p.exact_n / 2; ++j) terms.push_back({2.0 * j * d, j});
    r.q = QPolynomial(terms);
  } else {
    Tail t;
    t.q = [d](double x) { return 2 * d * x * x * (2 - x) / ((1 - x) * (1 - x)); };
    t.p = [d](double x) { return 4 * d * x * x / std::pow(1 - x, 3); };
    t.radius = 1.0;
    t.description = "2 Delta x^2 (2 - x) / (1 - x)^2";
    r.q = QPolynomial(terms, t);
  }
  r.pinned = ratio_at(r.q, 1 / (2 * std::sqrt(d)));
  r.stated = d + 4 * std::sqrt(d) + 3;
  return r;
}

PresetResult facial_edge(const PresetParams& p) {
  PresetResult r;
  if (p.exact_n) {
    std::vector<Term> terms;
    for (int j = 1; j <= std::max(1, *p.exact_n / 2); ++j) terms.push_back({1.0 + 2 * j, j});
    r.q = QPolynomial(terms);
  } else {
    Tail t;
    t.q = [](double x) { return x / (1 - x) + 2 * x / ((1 - x) * (1 - x)); };
    t.p = [](double x) { return x * x / ((1 - x) * (1 - x)) + 4 * x * x / std::pow(1 - x, 3); };
    t.radius = 1.0;
    t.description = "1/(1 - x) + 2x/(1 - x)^2 - 1";
    r.q = QPolynomial({}, t);
  }
  r.pinned = ratio_at(r.q, (std::sqrt(17.0) - 3) / 4);
  r.stated = 9;
  r.kappa_total = 10;
  return r;
}

PresetResult r_acyclic(const PresetParams& p) {
  require_delta(p, 3, "r-acyclic");
  if (p.r < 4) throw RangeError("r-acyclic needs r >= 4");
  double d = p.delta, rr = p.r;
  int ell = p.r / 2;
  double c2 = 0.5 * std::pow(rr + 2, 6) * std::pow(d, rr + 1);
  PresetResult r;
  if (p.r % 2 == 0) {
    r.q = QPolynomial({{std::pow(d, ell), 1}, {c2, 3}});
    r.pinned = ratio_at(r.q, std::cbrt(1 / (2 * c2)));
    r.stated = std::pow(d, ell) + 1.5 * (rr + 2) * (rr + 2) * std::pow(d, (rr + 1) / 3);
  } else {
    double t = std::pow(d, (rr + 1) / 3);
    r.q = QPolynomial({{std::pow(d, ell), 1}, {c2, 3}, {t, 1}, {ell * t * t, 2}});
    r.pinned = ratio_at(r.q, 1 / t);
    r.stated = std::pow(d, ell) + t * (2 + ell + 0.5 * std::pow(rr + 2, 6));
  }
  return r;
}

PresetResult star(const PresetParams& p) {
  require_delta(p, 2, "star");
  double d = p.delta;
  PresetResult r;
  r.q = QPolynomial({{d, 1}, {2 * d * (d - 1) * (d - 1), 2}});
  r.pinned = ratio_at(r.q, 1 / (std::sqrt(2 * d) * (d - 1)));
  r.stated = 2 * std::sqrt(2.0) * std::pow(d, 1.5) + d - std::sqrt(8 * d) + 1;
  return r;
}

Tail exponential_sets(double dg) {
  Tail t;
  t.q = [dg](double x) { return std::expm1(dg * x); };
  t.p = [dg](double x) {
    double y = dg * x;
    return (y - 1) * std::exp(y) + 1;
  };
  t.description = "exp(Delta^gamma x) - 1";
  return t;
}

PresetResult chi2f(const PresetParams& p) {
  require_delta(p, 2, "chi2f");
  if (p.family.empty()) throw InputError("chi2f needs a forbidden family");
  double d = p.delta;
  PresetResult r;
  if (p.chi2f_mode == "direct") {
    std::vector<Term> terms{{d, 1}};
    auto extra = direct_forbidden_terms(p.family, d);
    terms.insert(terms.end(), extra.begin(), extra.end());
    r.q = QPolynomial(terms);
    r.pinned = optimize_ratio(r.q);
    return r;
  }
  int m = p.family.front().edges;
  for (const auto& h : p.family) m = std::min(m, h.edges);
  if (m < 2) throw RangeError("chi2f needs every forbidden graph to have at least 2 edges");
  double gamma = double(m) / (m - 1);
  double dg = std::pow(d, gamma);

  std::vector<Term> terms{{d, 1}};
  std::optional<Tail> tail;
  if (p.exact_n) {
    double f = 1;
    for (int j = 2; j < *p.exact_n; ++j) {
      f *= (j - 1);
      terms.push_back({std::pow(dg, j - 1) / f, j - 1});
    }
  } else {
    tail = exponential_sets(dg);
  }

  if (p.chi2f_mode == "general") {
    int k_small = 0;
    bool has_large = false;
    for (const auto& h : p.family) {
      if (h.vertices <= m) {
        if (h.vertices < 3) throw InputError("forbidden graphs need at least 3 vertices");
        ++k_small;
        terms.push_back({h.vertices * std::pow(d, gamma * (h.vertices - 2) - double(h.edges - m) / (m - 1)),
                         h.vertices - 2});
      } else {
        has_large = true;
      }
    }
    if (has_large) terms.push_back({(m + 1) * std::pow(4.0, m + 1) * std::pow(d, m), m - 1});
    r.q = QPolynomial(terms, tail);
    r.pinned = ratio_at(r.q, 1 / (4 * dg));
    r.stated = (k_small + 71.0) * (m + 1) * dg;
  } else if (p.chi2f_mode == "edges") {
    int k_e = 0;
    for (const auto& h : p.family) {
      if (h.edges != m) continue;
      if (h.vertices < 3) throw InputError("forbidden graphs need at least 3 vertices");
      ++k_e;
      terms.push_back({h.vertices * std::pow(dg, h.vertices - 2), h.vertices - 2});
    }
    long long trees = unlabeled_trees(m + 2);
    double tree_cost = (m + 2) * std::pow(std::pow(d, double(m + 1) / m), m);
    terms.push_back({double(trees) * tree_cost, m});
    r.q = QPolynomial(terms, tail);
    r.pinned = ratio_at(r.q, 1 / dg);
    double shrink = std::pow(d, -1.0 / (m - 1));
    r.stated = dg * (shrink + kE + k_e * (m + 1.0) + double(trees) * (m + 2) * shrink);
    r.asymptotic = (k_e + 1.0) * (m + 1) * dg;
  } else {
    throw InputError("unknown chi2f mode '" + p.chi2f_mode + "' (general, edges, direct)");
  }
  return r;
}

int automorphisms(const ForbiddenGraph& h) {
  int n = h.vertices;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [a, b] : h.edge_list) adj[a][b] = adj[b][a] = 1;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int count = 0;
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) ok = adj[a][b] == adj[perm[a]][perm[b]];
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Embeddings of a BFS spanning tree of h with `root` pinned: the root picks its
// children among Delta neighbours, every other vertex among Delta - 1.
double rooted_tree_embeddings(const ForbiddenGraph& h, int root, double d) {
  int n = h.vertices;
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : h.edge_list) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> queue{root};
  seen[root] = 1;
  double total = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int u = queue[i];
    double avail = (u == root) ? d : d - 1;
    for (int w : adj[u]) {
      if (seen[w]) continue;
      seen[w] = 1;
      queue.push_back(w);
      total *= std::max(0.0, avail);
      avail -= 1;
    }
  }
  if (static_cast<int>(queue.size()) != n) throw InputError("forbidden graph is not connected");
  return total;
}

}  // namespace

std::vector<ForbiddenGraph> parse_forbidden_family(std::string_view text) {
  std::vector<ForbiddenGraph> out;
  LineReader lines(text);
  while (auto line = lines.next()) {
    auto v = parse_ints(*line, lines.line_no());
    if (v.size() < 2) throw ParseError(lines.line_no(), "expected 'n m [u v ...]'");
    ForbiddenGraph h;
    h.vertices = static_cast<int>(v[0]);
    h.edges = static_cast<int>(v[1]);
    if (h.vertices < 2 || h.edges < 1) throw ParseError(lines.line_no(), "need n >= 2 and m >= 1");
    if (v.size() > 2) {
      if (v.size() != 2 + 2 * static_cast<std::size_t>(h.edges))
        throw ParseError(lines.line_no(), "edge list must have exactly m pairs");
      for (std::size_t i = 2; i < v.size(); i += 2) {
        int a = static_cast<int>(v[i]), b = static_cast<int>(v[i + 1]);
        if (a < 0 || b < 0 || a >= h.vertices || b >= h.vertices || a == b)
          throw ParseError(lines.line_no(), "bad edge endpoint");
        h.edge_list.emplace_back(a, b);
      }
    }
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<std::string> preset_names() {
  return {"acyclic-gamma", "acyclic-v1",         "acyclic-v2",       "nonrep-vertex", "nonrep-edge",
          "facial-thue-vertex", "facial-thue-edge", "r-acyclic", "chi2f",         "star"};
}

PresetResult kappa_preset(const std::string& problem, const PresetParams& params) {
  if (params.exact_n && *params.exact_n < 1) throw RangeError("exact-n must be positive");
  PresetResult r;
  if (problem == "acyclic-gamma") r = acyclic_gamma(params);
  else if (problem == "acyclic-v1") r = acyclic_v1(params);
  else if (problem == "acyclic-v2") r = acyclic_v2(params);
  else if (problem == "nonrep-vertex") {
    r = nonrepetitive(params, 1, problem);
    double d = params.delta, d53 = std::pow(d, 5.0 / 3.0);
    r.stated = d * d + 3 / std::cbrt(4.0) * d53 + std::cbrt(4.0) * d53 / (std::cbrt(d) - std::cbrt(2.0));
  } else if (problem == "nonrep-edge") {
    r = nonrepetitive(params, 2, problem);
    double d = params.delta;
    r.asymptotic = d * d + std::cbrt(16.0) * std::pow(d, 5.0 / 3.0);
  } else if (problem == "facial-thue-vertex") r = facial_vertex(params);
  else if (problem == "facial-thue-edge") r = facial_edge(params);
  else if (problem == "r-acyclic") r = r_acyclic(params);
  else if (problem == "chi2f") r = chi2f(params);
  else if (problem == "star") r = star(params);
  else throw InputError("unknown problem '" + problem + "'");
  r.problem = problem;
  r.exact = params.exact_n.has_value();
  r.optimized = optimize_ratio(r.q);
  r.kappa = r.stated ? ceil_kappa(*r.stated) : r.pinned.kappa;
  return r;
}

double acyclic_v1_closed_form(double alpha, double delta) {
  double c = 8 * std::pow(alpha, 1.5) * std::sqrt(2.0);
  return (1 / std::sqrt(2 * alpha) + alpha) * std::pow(delta, 4.0 / 3.0) + (c + 1) * delta - 4 * c +
         (c / delta) * (6 - 4 / delta + 1 / (delta * delta));
}

AlphaChoice optimal_alpha(double delta) {
  if (delta < 24) throw RangeError("optimal_alpha needs Delta >= 24");
  // The closed form is convex in alpha on (0, 1].
  const double phi = (std::sqrt(5.0) - 1) / 2;
  double lo = 1e-9, hi = 1.0;
  double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
  double f1 = acyclic_v1_closed_form(x1, delta), f2 = acyclic_v1_closed_form(x2, delta);
  while (hi - lo > 1e-7) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = acyclic_v1_closed_form(x1, delta);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = acyclic_v1_closed_form(x2, delta);
    }
  }
  AlphaChoice c;
  c.alpha = 0.5 * (lo + hi);
  c.rounded = std::round(c.alpha * 1000) / 1000;
  c.value = acyclic_v1_closed_form(c.alpha, delta);
  return c;
}

long long unlabeled_trees(int n) {
  static const long long table[] = {1,    1,    1,    1,    2,     3,     6,      11,     23,     47,    106,
                                    235,  551,  1301, 3159, 7741,  19320, 48629,  123867, 317955, 823065};
  if (n < 0 || n > 20) throw RangeError("unlabeled tree table covers n <= 20");
  return table[n];
}

std::vector<Term> direct_forbidden_terms(const std::vector<ForbiddenGraph>& family, double delta) {
  std::vector<Term> out;
  for (const auto& h : family) {
    if (static_cast<int>(h.edge_list.size()) != h.edges)
      throw InputError("direct mode needs explicit edge lists");
    if (h.vertices < 3) throw InputError("forbidden graphs need at least 3 vertices");
    if (h.vertices > 8) throw SizeGuardError("direct mode handles graphs on at most 8 vertices");
    double sum = 0;
    for (int u = 0; u < h.vertices; ++u) sum += rooted_tree_embeddings(h, u, delta);
    out.push_back({sum / automorphisms(h), h.vertices - 2});
  }
  return out;
}

}  // namespace entcolor
