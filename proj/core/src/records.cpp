#include "entcolor/records.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "entcolor/bounds.hpp"
#include "entcolor/errors.hpp"

namespace entcolor {
namespace {

void validate(const std::vector<CountTerm>& terms) {
  for (const auto& t : terms)
    if (t.cost < 1 || t.size < 1) throw DomainError("count terms need C_j >= 1 and s_j >= 1");
}

int max_size(const std::vector<CountTerm>& terms) {
  int m = 1;
  for (const auto& t : terms) m = std::max(m, t.size);
  return m;
}

std::vector<BigInt> multiply(const std::vector<BigInt>& a, const std::vector<BigInt>& b, int t_max) {
  std::vector<BigInt> out(t_max + 1);
  for (int i = 0; i <= t_max; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= t_max; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Depth-first enumeration; `visit` sees each complete path.
template <class Visit>
void walk(const std::vector<CountTerm>& terms, int n, int t, bool strict, AnnotatedPath& path, int level,
          Visit& visit) {
  if (static_cast<int>(path.size()) == t) {
    if (level <= n) visit(path);
    return;
  }
  int up = level + 1;
  if (!strict || up <= n) {
    path.push_back({0, 0});
    walk(terms, n, t, strict, path, up, visit);
    path.pop_back();
  }
  for (std::size_t j = 0; j < terms.size(); ++j) {
    int down = up - terms[j].size;
    if (down < 0) continue;
    // In strict mode the transient level `up` must also respect the cap.
    if (strict && up > n) continue;
    for (long long k = 1; k <= terms[j].cost; ++k) {
      path.push_back({static_cast<int>(j) + 1, k});
      walk(terms, n, t, strict, path, down, visit);
      path.pop_back();
    }
  }
}

}  // namespace

std::vector<BigInt> count_b(const std::vector<CountTerm>& terms, int t_max) {
  validate(terms);
  if (t_max < 0) throw DomainError("t_max must be non-negative");
  int smax = max_size(terms);
  // pow[k][m] = [y^m] B^k, filled column by column.
  std::vector<std::vector<BigInt>> pow(smax + 1, std::vector<BigInt>(t_max + 1));
  std::vector<BigInt> b(t_max + 1);
  b[0] = 1;
  for (int k = 0; k <= smax; ++k) pow[k][0] = 1;
  for (int t = 1; t <= t_max; ++t) {
    BigInt bt = 0;
    for (const auto& term : terms)
      if (term.size <= t) bt += BigInt(term.cost) * pow[term.size][t - term.size];
    b[t] = bt;
    pow[1][t] = bt;
    for (int k = 2; k <= smax; ++k) {
      BigInt c = 0;
      for (int i = 0; i <= t; ++i) c += pow[k - 1][i] * b[t - i];
      pow[k][t] = c;
    }
  }
  return b;
}

std::vector<BigInt> count_r(const std::vector<CountTerm>& terms, int n, int t_max) {
  if (n < 0) throw DomainError("level cap must be non-negative");
  auto b = count_b(terms, t_max);
  std::vector<BigInt> r(t_max + 1);
  std::vector<BigInt> power = b;  // B^{l+1}
  for (int l = 0; l <= n && l <= t_max; ++l) {
    for (int t = l; t <= t_max; ++t) r[t] += power[t - l];
    power = multiply(power, b, t_max);
  }
  return r;
}

std::vector<AnnotatedPath> enumerate_records(const std::vector<CountTerm>& terms, int n, int t,
                                             bool strict) {
  validate(terms);
  if (t > 14) throw SizeGuardError("record enumeration is limited to t <= 14");
  if (t < 0 || n < 0) throw DomainError("t and n must be non-negative");
  std::vector<AnnotatedPath> out;
  AnnotatedPath path;
  auto visit = [&](const AnnotatedPath& p) { out.push_back(p); };
  walk(terms, n, t, strict, path, 0, visit);
  return out;
}

BigInt brute_count(const std::vector<CountTerm>& terms, int n, int t, bool strict) {
  validate(terms);
  if (t > 14) throw SizeGuardError("record enumeration is limited to t <= 14");
  if (t < 0 || n < 0) throw DomainError("t and n must be non-negative");
  BigInt count = 0;
  AnnotatedPath path;
  auto visit = [&](const AnnotatedPath&) { ++count; };
  walk(terms, n, t, strict, path, 0, visit);
  return count;
}

double log_big(const BigInt& v) {
  if (v <= 0) throw DomainError("log of a non-positive integer");
  std::size_t bits = boost::multiprecision::msb(v) + 1;
  if (bits <= 60) return std::log(v.convert_to<double>());
  std::size_t shift = bits - 60;
  BigInt top = v >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

GrowthReport growth_check(const std::vector<CountTerm>& terms, int t_max) {
  validate(terms);
  std::vector<Term> real;
  for (const auto& t : terms) real.push_back({static_cast<double>(t.cost), t.size});
  QPolynomial q(real);
  auto cs = characteristic_system(q);
  GrowthReport rep;
  rep.X = cs.X;
  rep.s = cs.s;
  rep.d = cs.d;
  rep.ratio = q.q(cs.X) / cs.X;
  auto b = count_b(terms, t_max);
  for (int t = 1; t <= t_max; ++t) {
    GrowthRow row;
    row.t = t;
    row.b = b[t];
    row.log_bound = std::log(cs.s + 1) + t * std::log(rep.ratio);
    if (b[t] == 0) {
      row.trajectory = 0;
      row.holds = true;
    } else {
      double lb = log_big(b[t]);
      row.trajectory = std::exp(lb / t) / rep.ratio;
      // Relative slack for double rounding in the bound itself.
      row.holds = lb <= row.log_bound + 1e-12 * std::abs(row.log_bound);
    }
    rep.all_hold = rep.all_hold && row.holds;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::vector<OffsetRow> offset_check(const std::vector<CountTerm>& terms, int n, int t_max) {
  validate(terms);
  // With every s_j = 1, r_t / b_t grows like t^n and no fixed offset can work.
  if (max_size(terms) < 2) throw DomainError("offset check needs some s_j >= 2");
  int d = 0;
  for (const auto& t : terms) d = std::gcd(d, t.size);
  int base = n * max_size(terms);
  int reach = t_max + base + d;
  auto b = count_b(terms, reach);
  auto r = count_r(terms, n, t_max);
  std::vector<OffsetRow> out;
  for (int t = 0; t <= t_max; ++t) {
    int c = base;
    while ((t + c) % d != 0) ++c;
    out.push_back({t, c, r[t] <= b[t + c]});
  }
  return out;
}

std::vector<CountTerm> parse_count_terms(const std::string& spec) {
  std::vector<CountTerm> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw InputError("term '" + item + "' is not of the form C:s");
    try {
      std::size_t used = 0;
      long long c = std::stoll(item.substr(0, colon), &used);
      if (used != colon) throw InputError("bad cost in '" + item + "'");
      std::string rest = item.substr(colon + 1);
      int s = std::stoi(rest, &used);
      if (used != rest.size()) throw InputError("bad size in '" + item + "'");
      out.push_back({c, s});
    } catch (const std::logic_error&) {
      throw InputError("term '" + item + "' is not of the form C:s");
    }
  }
  if (out.empty()) throw InputError("no terms given");
  validate(out);
  return out;
}

}  // namespace entcolor
