#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "entcolor/engine.hpp"
#include "entcolor/errors.hpp"
#include "entcolor/families.hpp"
#include "entcolor/records.hpp"
#include "generators.hpp"

namespace ec = entcolor;
using ec::BigInt;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

BigInt binom(int n, int k) {
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt power(long long b, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::vector<ec::CountTerm> random_terms(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 3), cost(1, 3), size(1, 4);
  std::vector<ec::CountTerm> terms;
  for (int i = count(rng); i > 0; --i) terms.push_back({cost(rng), size(rng)});
  return terms;
}

using Key = std::vector<std::pair<int, long long>>;

Key key_of(const ec::AnnotatedPath& p) {
  Key k;
  for (const auto& s : p) k.push_back({s.type, s.cls});
  return k;
}

}  // namespace

TEST(CountB, Examples) {
  auto cat = ec::count_b({{1, 2}}, 6);
  EXPECT_EQ(cat, big({1, 0, 1, 0, 2, 0, 5}));
  auto three = ec::count_b({{3, 1}}, 10);
  for (int t = 0; t <= 10; ++t) EXPECT_EQ(three[t], power(3, t));
  auto mixed = ec::count_b({{2, 1}, {1, 2}}, 2);
  EXPECT_EQ(mixed, big({1, 2, 5}));
}

TEST(CountR, Examples) {
  EXPECT_EQ(ec::count_r({{2, 1}}, 1, 1)[1], 3);
  EXPECT_EQ(ec::count_r({{2, 1}}, 5, 1)[1], 3);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto terms = random_terms(rng);
    EXPECT_EQ(ec::count_r(terms, 0, 15), ec::count_b(terms, 15));
    EXPECT_EQ(ec::count_r(terms, 4, 0)[0], 1);
    auto r = ec::count_r(terms, 3, 15);
    auto b = ec::count_b(terms, 15);
    for (int t = 0; t <= 15; ++t) EXPECT_GE(r[t], b[t]);
  }
}

TEST(CountR, AllLinearBinomialFormula) {
  for (long long C : {1, 2, 5}) {
    for (int n : {0, 1, 3, 20}) {
      auto r = ec::count_r({{C, 1}}, n, 18);
      for (int t = 0; t <= 18; ++t) {
        BigInt want = 0;
        for (int l = 0; l <= std::min(n, t); ++l) want += binom(t, l) * power(C, t - l);
        EXPECT_EQ(r[t], want) << "C=" << C << " n=" << n << " t=" << t;
      }
    }
  }
}

TEST(Enumerate, SmallCases) {
  auto one = ec::enumerate_records({{1, 2}}, 2, 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], (ec::AnnotatedPath{{0, 0}}));
  auto two = ec::enumerate_records({{1, 2}}, 2, 2);
  EXPECT_EQ(BigInt(two.size()), ec::count_r({{1, 2}}, 2, 2)[2]);
  auto three = ec::enumerate_records({{1, 2}}, 5, 3);
  EXPECT_EQ(BigInt(three.size()), ec::count_r({{1, 2}}, 5, 3)[3]);
  EXPECT_THROW(ec::enumerate_records({{1, 2}}, 2, 15), ec::SizeGuardError);
  EXPECT_THROW(ec::brute_count({{1, 2}}, 2, 15), ec::SizeGuardError);
}

TEST(Enumerate, OracleEqualityFuzz) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    auto terms = random_terms(rng);
    int n = static_cast<int>(rng() % 5);
    int tmax = 10;
    auto b = ec::count_b(terms, tmax);
    auto r = ec::count_r(terms, n, tmax);
    for (int t = 0; t <= tmax; ++t) {
      EXPECT_EQ(ec::brute_count(terms, n, t), r[t]) << "trial " << trial << " t=" << t;
      EXPECT_EQ(ec::brute_count(terms, 0, t), b[t]) << "trial " << trial << " t=" << t;
    }
  }
}

TEST(Enumerate, PathsAreLegal) {
  std::vector<ec::CountTerm> terms{{2, 1}, {1, 3}};
  const int n = 3;
  for (int t = 0; t <= 8; ++t) {
    auto all = ec::enumerate_records(terms, n, t);
    std::set<Key> unique;
    for (const auto& p : all) {
      unique.insert(key_of(p));
      int level = 0;
      for (const auto& s : p) {
        ++level;
        if (s.type) {
          ASSERT_GE(s.type, 1);
          ASSERT_LE(s.type, 2);
          ASSERT_GE(s.cls, 1);
          ASSERT_LE(s.cls, terms[s.type - 1].cost);
          level -= terms[s.type - 1].size;
          ASSERT_GE(level, 0);
        }
      }
      EXPECT_LE(level, n);
    }
    EXPECT_EQ(unique.size(), all.size());
  }
}

TEST(Periodicity, ZeroExactlyOffMultiplesOfD) {
  for (auto terms : std::vector<std::vector<ec::CountTerm>>{{{1, 2}}, {{2, 2}, {1, 4}}, {{1, 3}, {2, 6}}, {{3, 2}, {1, 3}}}) {
    int d = 0;
    for (const auto& t : terms) d = std::gcd(d, t.size);
    auto b = ec::count_b(terms, 40);
    for (int t = 0; t <= 40; ++t)
      if (t % d != 0) {
        EXPECT_EQ(b[t], 0) << t;
      }
    // Eventually every multiple of d is reachable.
    for (int t = 20 + (d - 20 % d) % d; t <= 40; t += d) EXPECT_GT(b[t], 0) << t;
  }
}

TEST(Growth, CatalanApproachesTwo) {
  auto rep = ec::growth_check({{1, 2}}, 80);
  EXPECT_TRUE(rep.all_hold);
  EXPECT_NEAR(rep.ratio, 2.0, 1e-9);
  EXPECT_EQ(rep.d, 2);
  const auto& last = rep.rows.back();
  EXPECT_LE(last.trajectory, 1.0);
  EXPECT_GT(last.trajectory, 0.9);
}

TEST(Growth, AcyclicGammaTermsAtThree) {
  // Δ=3, γ=1, n=10: neighbour term plus 2k-cycles for k = 2..5.
  std::vector<ec::CountTerm> terms{{3, 1}};
  for (int k = 2; k <= 5; ++k) {
    double c = 0.5 * std::pow(3.0, 2 * k - 2);
    terms.push_back({static_cast<long long>(std::ceil(c)), 2 * k - 2});
  }
  auto rep = ec::growth_check(terms, 60);
  EXPECT_TRUE(rep.all_hold);
  for (const auto& row : rep.rows) EXPECT_LE(ec::log_big(row.b), row.log_bound + 1e-9);
}

TEST(Growth, FuzzedSystemsHold) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    auto terms = random_terms(rng);
    terms.push_back({1, 2});  // keep the system non-linear
    EXPECT_TRUE(ec::growth_check(terms, 50).all_hold) << trial;
  }
}

TEST(Offset, SurrogateHolds) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 15; ++trial) {
    auto terms = random_terms(rng);
    terms.push_back({1, 2});
    int n = 1 + static_cast<int>(rng() % 4);
    for (const auto& row : ec::offset_check(terms, n, 30)) EXPECT_TRUE(row.holds) << trial << " t=" << row.t;
  }
}

TEST(Offset, LinearSystemsAreRejected) {
  EXPECT_THROW(ec::offset_check({{2, 1}}, 4, 10), ec::DomainError);
}

TEST(LogBig, MatchesDouble) {
  EXPECT_NEAR(ec::log_big(BigInt(1)), 0.0, 1e-15);
  EXPECT_NEAR(ec::log_big(BigInt(1000)), std::log(1000.0), 1e-12);
  BigInt huge = power(7, 400);
  EXPECT_NEAR(ec::log_big(huge), 400 * std::log(7.0), 1e-9);
}

TEST(ParseTerms, FormatAndErrors) {
  auto t = ec::parse_count_terms("2:1,1:2");
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0].cost, 2);
  EXPECT_EQ(t[1].size, 2);
  EXPECT_THROW(ec::parse_count_terms("2-1"), ec::InputError);
  EXPECT_THROW(ec::parse_count_terms("x:1"), ec::InputError);
}

// Every record the engine produces is a legal annotated path with levels capped at
// the object count.
TEST(EngineLinkage, RecordsAreEnumerated) {
  struct Case {
    ec::Graph g;
    std::string family;
    int kappa;
    int t;
  };
  std::vector<Case> cases{{ec::testing::complete_graph(3), "acyclic-gamma", 2, 9},
                          {ec::testing::path_graph(3), "nonrep-vertex", 2, 9},
                          {ec::testing::complete_graph(4), "acyclic-gamma", 3, 5}};
  for (const auto& c : cases) {
    auto fam = ec::make_family(c.family, c.g, nullptr, {});
    std::vector<ec::CountTerm> terms;
    for (const auto& m : fam->metas()) terms.push_back({m.class_bound(), m.size});
    std::map<int, std::set<Key>> legal;
    for (int t = 0; t <= c.t; ++t)
      for (const auto& p : ec::enumerate_records(terms, fam->object_count(), t, true))
        legal[t].insert(key_of(p));
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      ec::EngineInput in;
      in.kappa = c.kappa;
      in.seed = seed;
      in.budget = c.t;
      auto res = ec::run(*fam, in);
      ec::AnnotatedPath p;
      for (const auto& s : res.record.steps)
        p.push_back(s ? ec::PathStep{s->type, s->cls} : ec::PathStep{0, 0});
      int t = static_cast<int>(p.size());
      ASSERT_LE(t, c.t);
      EXPECT_TRUE(legal[t].count(key_of(p))) << c.family << " seed " << seed;
    }
  }
}
