#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace entcolor {

using BigInt = boost::multiprecision::cpp_int;

struct CountTerm {
  long long cost;  // integer class count C_j
  int size;        // s_j
};

// b_t: coefficients of B(y) = 1 + sum C_j y^{s_j} B(y)^{s_j}.
std::vector<BigInt> count_b(const std::vector<CountTerm>& terms, int t_max);
// r_t: coefficients of R(y) = sum_{l <= n} y^l B(y)^{l+1}.
std::vector<BigInt> count_r(const std::vector<CountTerm>& terms, int n, int t_max);

// One step of an annotated partial Dyck path: an up-step, optionally followed by a
// descent of length s_type labelled (type, cls). type == 0 means no descent.
struct PathStep {
  int type = 0;
  long long cls = 0;
  bool operator==(const PathStep&) const = default;
};
using AnnotatedPath = std::vector<PathStep>;

// All records with t Color lines. The final level is at most n; with `strict`
// every intermediate level is too. Throws SizeGuardError for t > 14.
std::vector<AnnotatedPath> enumerate_records(const std::vector<CountTerm>& terms, int n, int t,
                                             bool strict = false);
// Count-only variant of the same enumeration (same guard).
BigInt brute_count(const std::vector<CountTerm>& terms, int n, int t, bool strict = false);

double log_big(const BigInt& v);  // natural log; v > 0

struct GrowthRow {
  int t;
  BigInt b;
  double log_bound;   // log((s+1) (Q(X)/X)^t)
  double trajectory;  // b_t^{1/t} / (Q(X)/X), 0 when b_t = 0
  bool holds;
};

struct GrowthReport {
  double X, s, ratio;
  int d;
  std::vector<GrowthRow> rows;
  bool all_hold = true;
};

// Requires some s_j >= 2 (DomainError otherwise).
GrowthReport growth_check(const std::vector<CountTerm>& terms, int t_max);

struct OffsetRow {
  int t;
  int c;
  bool holds;  // r_t <= b_{t+c}
};
// r_t <= b_{t+c} with c the least value >= n * max s_j making t + c a multiple of d.
// Needs some s_j >= 2.
std::vector<OffsetRow> offset_check(const std::vector<CountTerm>& terms, int n, int t_max);

// "C:s,C:s,..."
std::vector<CountTerm> parse_count_terms(const std::string& spec);

}  // namespace entcolor
