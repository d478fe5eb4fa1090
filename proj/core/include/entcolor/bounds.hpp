// Copyright 2026 The entcolor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace entcolor {

struct Term {
  double cost;  // C_j
  int size;     // s_j
};

// Closed-form replacement for an infinite (or long) part of the sum. `q` is the part
// of Q(x) it replaces and `p` the matching part of P(x) = x Q'(x) - Q(x).
struct Tail {
  std::function<double(double)> q;
  std::function<double(double)> p;
  double radius = 1e300;  // valid for 0 < x < radius
  int gcd = 1;            // gcd of the sizes the tail stands for
  std::string description;
};

// Q(x) = 1 + sum C_j x^{s_j} (+ tail).
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Term> terms, std::optional<Tail> tail = std::nullopt);

  const std::vector<Term>& terms() const { return terms_; }
  const std::optional<Tail>& tail() const { return tail_; }
  double radius() const { return tail_ ? tail_->radius : 1e300; }
  bool all_linear() const;  // every s_j = 1 and no tail

  double q(double x) const;
  // P(x) = -1 + sum (s_j - 1) C_j x^{s_j}; zero exactly where Q(x)/x is stationary.
  double p(double x) const;

 private:
  std::vector<Term> terms_;
  std::optional<Tail> tail_;
};

struct RatioResult {
  double X = 1.0;
  double ratio = 0.0;     // Q(X)/X
  long long kappa = 0;    // ceil(ratio)
  double residual = 0.0;  // |P(X)|
  bool boundary = false;  // minimum sits at the right end of the admissible interval
};

// ceil with a 1e-9 guard so exact integers are not pushed up by rounding noise.
long long ceil_kappa(double ratio);

// Q(x)/x. Throws DomainError unless 0 < x <= 1 and x is inside the tail radius.
double eval_at(const QPolynomial& q, double x);
RatioResult ratio_at(const QPolynomial& q, double x);

// min over 0 < x <= 1 of Q(x)/x via bisection on P.
RatioResult optimize_ratio(const QPolynomial& q);

struct CharacteristicSystem {
  int d = 1;        // gcd of the s_j
  double X = 0;     // positive root of P
  double s = 0;     // sum C_j X^{s_j}
  double r = 0;     // (X / Q(X))^d
  double residual = 0;  // |sum s_j C_j X^{s_j} - (s + 1)|
};

// Throws DomainError when every s_j = 1.
CharacteristicSystem characteristic_system(const QPolynomial& q);

}  // namespace entcolor
