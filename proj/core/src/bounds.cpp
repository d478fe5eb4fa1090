// Copyright 2026 The entcolor Authors
// SPDX-License-Identifier: Apache-2.0

#include "entcolor/bounds.hpp"

#include <cmath>
#include <numeric>

#include "entcolor/errors.hpp"

namespace entcolor {

QPolynomial::QPolynomial(std::vector<Term> terms, std::optional<Tail> tail)
    : terms_(std::move(terms)), tail_(std::move(tail)) {
  for (const auto& t : terms_)
    if (!(t.cost >= 0) || t.size < 1) throw DomainError("terms need C_j >= 0 and s_j >= 1");
}

bool QPolynomial::all_linear() const {
  if (tail_) return false;
  for (const auto& t : terms_)
    if (t.size != 1) return false;
  return true;
}

double QPolynomial::q(double x) const {
  double sum = 1.0;
  for (const auto& t : terms_) sum += t.cost * std::pow(x, t.size);
  if (tail_) sum += tail_->q(x);
  return sum;
}

double QPolynomial::p(double x) const {
  double sum = -1.0;
  for (const auto& t : terms_) sum += (t.size - 1) * t.cost * std::pow(x, t.size);
  if (tail_) sum += tail_->p(x);
  return sum;
}

long long ceil_kappa(double ratio) { return static_cast<long long>(std::ceil(ratio - 1e-9)); }

double eval_at(const QPolynomial& q, double x) {
  if (!(x > 0.0 && x <= 1.0)) throw DomainError("x must lie in (0, 1]");
  if (!(x < q.radius()))
    throw DomainError("x = " + std::to_string(x) + " is outside the closed form's radius " +
                      std::to_string(q.radius()));
  return q.q(x) / x;
}

RatioResult ratio_at(const QPolynomial& q, double x) {
  RatioResult r;
  r.X = x;
  r.ratio = eval_at(q, x);
  r.kappa = ceil_kappa(r.ratio);
  r.residual = std::abs(q.p(x));
  return r;
}

RatioResult optimize_ratio(const QPolynomial& q) {
  if (q.terms().empty() && !q.tail()) throw DomainError("Q has no terms");
  if (q.all_linear()) return ratio_at(q, 1.0);

  // P is increasing on (0, radius) with P(0+) = -1.
  double hi = 1.0;
  bool capped_by_radius = false;
  if (q.radius() <= 1.0) {
    hi = q.radius() * (1.0 - 1e-15);
    capped_by_radius = true;
  }
  if (q.p(hi) <= 0.0) {
    RatioResult r = ratio_at(q, hi);
    r.boundary = capped_by_radius || q.p(hi) < 0.0;
    return r;
  }
  double lo = 0.0;
  while (hi - lo > 1e-12 * hi) {
    double mid = 0.5 * (lo + hi);
    if (q.p(mid) < 0.0) lo = mid;
    else hi = mid;
  }
  double x = 0.5 * (lo + hi);
  if (x > 1.0) x = 1.0;
  return ratio_at(q, x);
}

CharacteristicSystem characteristic_system(const QPolynomial& q) {
  if (q.all_linear()) throw DomainError("characteristic system needs some s_j >= 2");
  CharacteristicSystem cs;
  int d = q.tail() ? q.tail()->gcd : 0;
  for (const auto& t : q.terms()) d = std::gcd(d, t.size);
  cs.d = d;
  auto opt = optimize_ratio(q);
  cs.X = opt.X;
  cs.s = q.q(cs.X) - 1.0;
  // At the root of P, sum s_j C_j X^{s_j} must equal s + 1. The tail part of x Q'(x)
  // is taken by a central difference so the check does not reuse P.
  double weighted = 0.0;
  for (const auto& t : q.terms()) weighted += t.size * t.cost * std::pow(cs.X, t.size);
  if (q.tail()) {
    double h = 1e-6 * cs.X;
    weighted += cs.X * (q.tail()->q(cs.X + h) - q.tail()->q(cs.X - h)) / (2 * h);
  }
  cs.residual = std::abs(weighted - (cs.s + 1.0));
  cs.r = std::pow(cs.X / q.q(cs.X), d);
  return cs;
}

}  // namespace entcolor
