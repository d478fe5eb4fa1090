#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "entcolor/bounds.hpp"
#include "entcolor/errors.hpp"
#include "entcolor/presets.hpp"

namespace ec = entcolor;

namespace {

double grid_min(const ec::QPolynomial& q, int points = 1000) {
  double hi = std::min(1.0, q.radius());
  double best = 1e300;
  for (int i = 1; i <= points; ++i) {
    double x = hi * i / (points + 1.0);
    best = std::min(best, q.q(x) / x);
  }
  if (q.radius() > 1.0) best = std::min(best, q.q(1.0));
  return best;
}

ec::PresetParams params(int delta) {
  ec::PresetParams p;
  p.delta = delta;
  return p;
}

}  // namespace

TEST(Optimize, TrivialExamples) {
  auto r = ec::optimize_ratio(ec::QPolynomial({{1, 2}}));
  EXPECT_NEAR(r.X, 1.0, 1e-9);
  EXPECT_NEAR(r.ratio, 2.0, 1e-9);
  auto g = ec::optimize_ratio(ec::QPolynomial({{10, 1}}));
  EXPECT_DOUBLE_EQ(g.X, 1.0);
  EXPECT_DOUBLE_EQ(g.ratio, 11.0);
  EXPECT_EQ(g.kappa, 11);
  EXPECT_THROW(ec::optimize_ratio(ec::QPolynomial(std::vector<ec::Term>{})), ec::DomainError);
  EXPECT_THROW(ec::QPolynomial({{-1, 2}}), ec::DomainError);
  EXPECT_THROW(ec::QPolynomial({{1, 0}}), ec::DomainError);
}

TEST(Optimize, StarAtTen) {
  const double D = 10;
  ec::QPolynomial q({{D, 1}, {2 * D * (D - 1) * (D - 1), 2}});
  double x = 1.0 / (std::sqrt(2 * D) * (D - 1));
  auto r = ec::ratio_at(q, x);
  double stated = 2 * std::sqrt(2.0) * std::pow(D, 1.5) + D - std::sqrt(8 * D) + 1;
  EXPECT_LE(r.ratio, stated + 1e-9);
  EXPECT_NEAR(stated, 91.50, 0.01);
  auto preset = ec::kappa_preset("star", params(10));
  EXPECT_EQ(preset.kappa, 92);
}

TEST(Optimize, RootAndLocalMinimumCertificate) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> cost(0.1, 50.0);
  std::uniform_int_distribution<int> size(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ec::Term> terms;
    int k = 1 + trial % 4;
    for (int i = 0; i < k; ++i) terms.push_back({cost(rng), size(rng)});
    ec::QPolynomial q(terms);
    auto r = ec::optimize_ratio(q);
    ASSERT_GT(r.X, 0.0);
    ASSERT_LE(r.X, 1.0);
    if (q.all_linear()) {
      EXPECT_EQ(r.X, 1.0);
      continue;
    }
    if (!r.boundary) {
      EXPECT_LE(std::abs(q.p(r.X)), 1e-9 * q.q(r.X));
      const double eps = 1e-6;
      if (r.X + eps <= 1.0) {
        EXPECT_GE(q.q(r.X + eps) / (r.X + eps), r.ratio * (1 - 1e-12));
      }
      EXPECT_GE(q.q(r.X - eps) / (r.X - eps), r.ratio * (1 - 1e-12));
    }
    EXPECT_LE(r.ratio, grid_min(q) * (1 + 1e-12));
  }
}

TEST(Optimize, TailPresetsBeatTheGrid) {
  for (const char* name : {"acyclic-gamma", "acyclic-v2", "nonrep-vertex", "nonrep-edge",
                           "facial-thue-vertex", "facial-thue-edge", "r-acyclic"}) {
    for (int D : {9, 16, 40}) {
      auto res = ec::kappa_preset(name, params(D));
      EXPECT_LE(res.optimized.ratio, grid_min(res.q) * (1 + 1e-12)) << name << " " << D;
      EXPECT_LE(res.optimized.ratio, res.pinned.ratio * (1 + 1e-12)) << name << " " << D;
    }
  }
}

TEST(EvalAt, DomainAndExamples) {
  ec::QPolynomial q({{1, 2}});
  EXPECT_THROW(ec::eval_at(q, 0.0), ec::DomainError);
  EXPECT_THROW(ec::eval_at(q, 1.5), ec::DomainError);
  EXPECT_NEAR(ec::eval_at(q, 0.5), 2.5, 1e-15);

  auto gamma = ec::kappa_preset("acyclic-gamma", params(10));
  EXPECT_THROW(ec::eval_at(gamma.q, 0.1), ec::DomainError);  // radius 1/Δ
  EXPECT_NEAR(gamma.pinned.X, std::sqrt(2.0 / 3.0) / 10, 1e-15);
  // The geometric tail makes the surrogate meet Δ(1+√6) exactly; finite sums stay below.
  EXPECT_NEAR(gamma.pinned.ratio, 10 * (1 + std::sqrt(6.0)), 1e-9);
  auto p = params(10);
  p.exact_n = 30;
  EXPECT_LT(ec::ratio_at(ec::kappa_preset("acyclic-gamma", p).q, gamma.pinned.X).ratio, 10 * (1 + std::sqrt(6.0)));
  EXPECT_EQ(gamma.kappa, 35);

  auto fe = ec::kappa_preset("facial-thue-edge", params(5));
  EXPECT_NEAR(fe.pinned.X, (std::sqrt(17.0) - 3) / 4, 1e-15);
  EXPECT_LT(fe.pinned.ratio, 9.0);
  EXPECT_EQ(fe.kappa, 9);
  EXPECT_EQ(fe.kappa_total, 10);
}

TEST(EvalAt, FacialVertexAtFourMatchesHandComputation) {
  // Q(x) = 1 + Δx + 2Δx²(2−x)/(1−x)² written out independently.
  const double D = 4, x = 0.25;
  double q = 1 + D * x + 2 * D * x * x * (2 - x) / ((1 - x) * (1 - x));
  auto res = ec::kappa_preset("facial-thue-vertex", params(4));
  EXPECT_NEAR(res.pinned.X, x, 1e-15);
  EXPECT_NEAR(res.pinned.ratio, q / x, 1e-12);
  EXPECT_NEAR(res.pinned.ratio, 14.22, 0.01);
  EXPECT_LT(res.pinned.ratio, 15.0);
  EXPECT_EQ(res.kappa, 15);
}

TEST(Tails, PartMatchesNumericDerivative) {
  for (const auto& name : ec::preset_names()) {
    if (name == "chi2f" || name == "star") continue;
    int D = name == "acyclic-v1" ? 30 : 12;
    auto res = ec::kappa_preset(name, params(D));
    const auto& tail = res.q.tail();
    if (!tail) continue;
    double hi = std::min(1.0, tail->radius);
    for (double f : {0.1, 0.4, 0.8}) {
      double x = hi * f;
      double h = 1e-6 * x;
      double dq = (tail->q(x + h) - tail->q(x - h)) / (2 * h);
      double want = x * dq - tail->q(x);
      EXPECT_NEAR(tail->p(x), want, 1e-6 * (std::abs(want) + tail->q(x) + 1e-12)) << name << " x=" << x;
    }
  }
}

TEST(Tails, SurrogateDominatesExactSums) {
  for (const char* name : {"acyclic-gamma", "acyclic-v2", "nonrep-vertex", "nonrep-edge",
                           "facial-thue-vertex", "facial-thue-edge"}) {
    for (int D : {9, 20}) {
      auto surrogate = ec::kappa_preset(name, params(D));
      auto p = params(D);
      p.exact_n = 24;
      auto exact = ec::kappa_preset(name, p);
      EXPECT_TRUE(exact.exact);
      double hi = std::min(1.0, surrogate.q.radius());
      for (double f : {0.05, 0.3, 0.6, 0.9}) {
        double x = hi * f;
        EXPECT_GE(surrogate.q.q(x), exact.q.q(x) * (1 - 1e-12)) << name << " D=" << D << " x=" << x;
      }
      EXPECT_LE(exact.optimized.ratio, surrogate.optimized.ratio * (1 + 1e-12)) << name;
    }
  }
}

TEST(Presets, MonotoneDominanceSweep) {
  for (const auto& name : ec::preset_names()) {
    int lo = name == "acyclic-v1" ? 24 : 9;
    for (int D = lo; D <= 200; D += 7) {
      auto p = params(D);
      if (name == "chi2f") p.family = ec::parse_forbidden_family("4 3 0 1 1 2 2 3\n5 4\n");
      auto res = ec::kappa_preset(name, p);
      EXPECT_LE(res.optimized.kappa, res.pinned.kappa) << name << " " << D;
    }
  }
}

TEST(Presets, ThresholdsRaiseRangeErrors) {
  EXPECT_THROW(ec::kappa_preset("acyclic-v1", params(23)), ec::RangeError);
  EXPECT_THROW(ec::kappa_preset("acyclic-v2", params(8)), ec::RangeError);
  EXPECT_THROW(ec::kappa_preset("nonrep-vertex", params(2)), ec::RangeError);
  EXPECT_THROW(ec::kappa_preset("facial-thue-vertex", params(1)), ec::RangeError);
  EXPECT_THROW(ec::kappa_preset("no-such", params(10)), ec::InputError);
  auto p = params(30);
  p.alpha = 1.5;
  EXPECT_THROW(ec::kappa_preset("acyclic-v1", p), ec::RangeError);
  try {
    ec::kappa_preset("acyclic-v1", params(10));
    FAIL();
  } catch (const ec::RangeError& e) {
    EXPECT_NE(std::string(e.what()).find("24"), std::string::npos);
  }
}

TEST(Presets, AcyclicV1HeadlineNumbers) {
  auto p = params(27);
  p.alpha = 0.225;
  auto a = ec::kappa_preset("acyclic-v1", p);
  // Evaluate the four terms directly at X = 2√(2α)/Δ^{4/3}.
  const double D = 27, al = 0.225;
  double X = 2 * std::sqrt(2 * al) / std::pow(D, 4.0 / 3.0);
  double q = 1 + D * X + al * std::pow(D, 4.0 / 3.0) * X + std::pow(D, 8.0 / 3.0) / (8 * al) * X * X +
             0.5 * D * std::pow(D - 1, 4) * std::pow(X, 4);
  EXPECT_NEAR(a.pinned.ratio, q / X, 1e-9 * q / X);
  EXPECT_NEAR(ec::acyclic_v1_closed_form(al, D), a.pinned.ratio, 1e-9 * a.pinned.ratio);
  p.alpha = 0.5;
  auto b = ec::kappa_preset("acyclic-v1", p);
  EXPECT_EQ(b.kappa, 242);
  bool ks = false;
  for (const auto& r : b.references)
    if (r.name.find("Kostochka") != std::string::npos) {
      ks = true;
      EXPECT_DOUBLE_EQ(r.value, 197);
    }
  EXPECT_TRUE(ks);
}

TEST(Presets, NonrepVertexThreeIndependentEvaluation) {
  // Three-term closed form at Δ=3 in long double, written out from scratch.
  long double D = 3;
  long double v = D * D + 3.0L / std::cbrt(4.0L) * std::pow(D, 5.0L / 3) +
                  std::cbrt(4.0L) * std::pow(D, 5.0L / 3) / (std::cbrt(D) - std::cbrt(2.0L));
  EXPECT_NEAR(static_cast<double>(v), 75.12, 0.01);
  auto res = ec::kappa_preset("nonrep-vertex", params(3));
  EXPECT_EQ(res.kappa, static_cast<long long>(std::ceil(v)));
  EXPECT_EQ(res.kappa, 76);
  EXPECT_LE(res.pinned.ratio, static_cast<double>(v) + 1e-9);
}

TEST(Presets, CrossoverHoldsFromTwentyFour) {
  for (int D = 24; D <= 5000; ++D) {
    double d = D;
    double lhs = 1.5 * std::pow(d, 4.0 / 3.0) + 5 * d - 16 + 24 / d - 16 / (d * d) + 4 / (d * d * d);
    double rhs = 1.5 * std::pow(d, 4.0 / 3.0) + 5 * d - 15;
    EXPECT_LT(lhs, rhs) << D;
  }
}

TEST(Presets, OptimalAlphaTable) {
  EXPECT_NEAR(ec::optimal_alpha(27).rounded, 0.225, 1e-12);
  EXPECT_NEAR(ec::optimal_alpha(30).alpha, 0.226, 0.001);
  EXPECT_NEAR(ec::optimal_alpha(1000).alpha, 0.32, 0.001);
  EXPECT_NEAR(ec::optimal_alpha(1000000).alpha, 0.465, 0.001);
  EXPECT_THROW(ec::optimal_alpha(23), ec::RangeError);
  double prev = 0;
  for (double D : {27.0, 30.0, 50.0, 100.0, 1000.0, 1e4, 1e5, 1e6}) {
    auto a = ec::optimal_alpha(D);
    EXPECT_GT(a.alpha, prev);
    EXPECT_LT(a.alpha, 0.5);
    prev = a.alpha;
    // Golden-section result is a minimum of the closed form.
    EXPECT_LE(a.value, ec::acyclic_v1_closed_form(a.alpha * 0.99, D));
    EXPECT_LE(a.value, ec::acyclic_v1_closed_form(std::min(1.0, a.alpha * 1.01), D));
  }
}

TEST(Characteristic, Examples) {
  auto cs = ec::characteristic_system(ec::QPolynomial({{1, 2}}));
  EXPECT_EQ(cs.d, 2);
  EXPECT_NEAR(cs.X, 1.0, 1e-9);
  EXPECT_NEAR(cs.s, 1.0, 1e-9);
  EXPECT_NEAR(cs.r, 0.25, 1e-9);
  EXPECT_LT(cs.residual, 1e-9);
  EXPECT_THROW(ec::characteristic_system(ec::QPolynomial({{3, 1}})), ec::DomainError);

  auto gamma = ec::kappa_preset("acyclic-gamma", params(10));
  auto g = ec::characteristic_system(gamma.q);
  EXPECT_EQ(g.d, 1);
  EXPECT_NEAR(g.r, std::pow(g.X / gamma.q.q(g.X), g.d), 1e-9);
  EXPECT_LT(g.residual, 1e-6 * (g.s + 1));
}

TEST(Characteristic, GcdFromSizes) {
  auto cs = ec::characteristic_system(ec::QPolynomial({{2, 2}, {5, 4}, {1, 6}}));
  EXPECT_EQ(cs.d, 2);
  EXPECT_LT(cs.residual, 1e-9);
}

TEST(Chi2f, DirectModeReproducesStarTerms) {
  for (int D : {3, 7, 10}) {
    ec::ForbiddenGraph p4{4, 3, {{0, 1}, {1, 2}, {2, 3}}};
    auto terms = ec::direct_forbidden_terms({p4}, D);
    ASSERT_EQ(terms.size(), 1u);
    EXPECT_EQ(terms[0].size, 2);
    EXPECT_NEAR(terms[0].cost, 2.0 * D * (D - 1) * (D - 1), 1e-9);
  }
  ec::ForbiddenGraph big{9, 8, {}};
  for (int i = 0; i + 1 < 9; ++i) big.edge_list.push_back({i, i + 1});
  EXPECT_THROW(ec::direct_forbidden_terms({big}, 5), ec::SizeGuardError);
}

TEST(Chi2f, TreeCountsAndFamilyParsing) {
  std::vector<long long> want{1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(ec::unlabeled_trees(n), want[n]) << n;
  auto fam = ec::parse_forbidden_family("4 3 0 1 1 2 2 3\n5 5\n");
  ASSERT_EQ(fam.size(), 2u);
  EXPECT_EQ(fam[0].edge_list.size(), 3u);
  EXPECT_TRUE(fam[1].edge_list.empty());
  EXPECT_THROW(ec::parse_forbidden_family("4 3 0 9\n"), ec::ParseError);
}
