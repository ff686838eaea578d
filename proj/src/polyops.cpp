#include "qes2d/polyops.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "qes2d/error.hpp"

namespace qes2d {

Polynomial::Polynomial(std::initializer_list<double> coeffs) : coeffs_(coeffs) {}

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}

int Polynomial::degree() const noexcept {
  for (std::size_t k = coeffs_.size(); k > 0; --k) {
    if (coeffs_[k - 1] != 0.0) return static_cast<int>(k - 1);
  }
  return -1;
}

double Polynomial::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Polynomial& Polynomial::trim() {
  coeffs_.resize(static_cast<std::size_t>(degree() + 1));
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  const std::size_t len = std::max(a.coeffs().size(), b.coeffs().size());
  for (std::size_t k = 0; k < len; ++k) {
    if (a[k] != b[k]) return false;
  }
  return true;
}

double evaluate(const Polynomial& p, double x) {
  const auto& c = p.coeffs();
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial parity_flip(const Polynomial& p) {
  std::vector<double> c = p.coeffs();
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return Polynomial(std::move(c));
}

Polynomial derivative(const Polynomial& p) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return Polynomial{};
  std::vector<double> d(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = static_cast<double>(k) * c[k];
  return Polynomial(std::move(d));
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs().empty() || b.coeffs().empty()) return Polynomial{};
  std::vector<double> c(a.coeffs().size() + b.coeffs().size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return Polynomial(std::move(c));
}

namespace exact {

Poly from_double(const Polynomial& p) {
  Poly out;
  out.reserve(p.coeffs().size());
  for (double c : p.coeffs()) {
    if (!std::isfinite(c)) throw Error(Errc::InvalidInput, "non-finite polynomial coefficient");
    out.emplace_back(c);  // exact: a double is a dyadic rational
  }
  trim(out);
  return out;
}

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = p[k] * static_cast<long>(k);
  return d;
}

Poly remainder(const Poly& a, const Poly& b) {
  Poly r = a;
  trim(r);
  const std::size_t db = b.size() - 1;
  const Rational& lead = b.back();
  while (r.size() >= b.size()) {
    const Rational factor = r.back() / lead;
    const std::size_t shift = r.size() - 1 - db;
    for (std::size_t k = 0; k <= db; ++k) r[shift + k] -= factor * b[k];
    r.pop_back();  // leading term cancels exactly
    trim(r);
  }
  return r;
}

Rational evaluate(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

using Int = boost::multiprecision::cpp_int;
using IntPoly = std::vector<Int>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(IntPoly& p) {
  Int g = 0;
  for (const auto& c : p) g = gcd(g, c);
  if (g > 1) {
    for (auto& c : p) c /= g;
  }
}

IntPoly to_integer(const Poly& p) {
  Int l = 1;
  for (const auto& c : p) {
    const Int d = boost::multiprecision::denominator(c);
    l = l / gcd(l, d) * d;
  }
  IntPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(boost::multiprecision::numerator(c) * (l / boost::multiprecision::denominator(c)));
  make_primitive(out);
  return out;
}

/// Positive multiple of rem(a, b).
IntPoly positive_pseudo_remainder(IntPoly r, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const Int lead_abs = abs(b.back());
  const int lead_sign = b.back() > 0 ? 1 : -1;
  while (r.size() >= b.size()) {
    const Int top = lead_sign > 0 ? Int(r.back()) : Int(-r.back());
    const std::size_t shift = r.size() - 1 - db;
    for (auto& c : r) c *= lead_abs;
    for (std::size_t k = 0; k <= db; ++k) r[shift + k] -= top * b[k];
    r.pop_back();
    trim(r);
  }
  return r;
}

}  // namespace

namespace {

// Integer primitive remainder sequence: every member is a positive multiple of
// the rational Sturm member, so sign patterns are unchanged.
std::vector<IntPoly> integer_sturm_chain(IntPoly a) {
  std::vector<IntPoly> seq;
  trim(a);
  if (a.empty()) return seq;
  make_primitive(a);
  seq.push_back(std::move(a));
  IntPoly b;
  for (std::size_t k = 1; k < seq[0].size(); ++k) b.push_back(seq[0][k] * static_cast<long>(k));
  trim(b);
  make_primitive(b);
  while (!b.empty()) {
    seq.push_back(b);
    IntPoly r = positive_pseudo_remainder(seq[seq.size() - 2], b);
    for (auto& c : r) c = -c;
    make_primitive(r);
    b = std::move(r);
  }
  return seq;
}

/// Sign of b^deg q(a / b) for b > 0, by homogeneous Horner in integers.
int sign_at(const IntPoly& q, const Int& a, const Int& b) {
  if (q.empty()) return 0;
  if (a == 0) return q[0] > 0 ? 1 : (q[0] < 0 ? -1 : 0);
  Int acc = q.back();
  Int bpow = 1;
  for (std::size_t i = q.size() - 1; i-- > 0;) {
    bpow *= b;
    acc = acc * a + q[i] * bpow;
  }
  return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

int lead_sign(const IntPoly& q) { return q.back() > 0 ? 1 : -1; }

int count_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int changes_at(const std::vector<IntPoly>& chain, const Rational& x) {
  const Int a = boost::multiprecision::numerator(x);
  const Int b = boost::multiprecision::denominator(x);
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(sign_at(q, a, b));
  return count_changes(signs);
}

int changes_at_pos_inf(const std::vector<IntPoly>& chain) {
  std::vector<int> signs;
  for (const auto& q : chain) signs.push_back(lead_sign(q));
  return count_changes(signs);
}

int changes_at_neg_inf(const std::vector<IntPoly>& chain) {
  std::vector<int> signs;
  for (const auto& q : chain) signs.push_back((q.size() - 1) % 2 == 0 ? lead_sign(q) : -lead_sign(q));
  return count_changes(signs);
}

}  // namespace

std::vector<Poly> sturm_chain(const Poly& p) {
  Poly a = p;
  trim(a);
  std::vector<Poly> chain;
  if (a.empty()) return chain;
  for (const auto& q : integer_sturm_chain(to_integer(a))) chain.emplace_back(q.begin(), q.end());
  return chain;
}

namespace {

int sign_of(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace

int sign_changes_at(const std::vector<Poly>& chain, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(sign_of(evaluate(q, x)));
  return count_changes(signs);
}

int sign_changes_at_pos_inf(const std::vector<Poly>& chain) {
  std::vector<int> signs;
  for (const auto& q : chain) signs.push_back(sign_of(q.back()));
  return count_changes(signs);
}

int sign_changes_at_neg_inf(const std::vector<Poly>& chain) {
  std::vector<int> signs;
  for (const auto& q : chain) {
    const int s = sign_of(q.back());
    signs.push_back((q.size() - 1) % 2 == 0 ? s : -s);
  }
  return count_changes(signs);
}

int count_positive_roots(const Poly& p) {
  const auto chain = sturm_chain(p);
  if (chain.empty()) throw Error(Errc::InvalidInput, "zero polynomial has no finite root count");
  return sign_changes_at(chain, Rational(0)) - sign_changes_at_pos_inf(chain);
}

}  // namespace exact

namespace {

/// Doubles are m 2^e with integer m; scaling every coefficient by 2^-min(e)
/// gives an integer polynomial with the same roots.
exact::IntPoly integer_coefficients(const Polynomial& p) {
  int min_exp = std::numeric_limits<int>::max();
  for (double c : p.coeffs()) {
    if (!std::isfinite(c)) throw Error(Errc::InvalidInput, "non-finite polynomial coefficient");
    if (c != 0.0) min_exp = std::min(min_exp, std::ilogb(c) - std::numeric_limits<double>::digits + 1);
  }
  exact::IntPoly out;
  out.reserve(p.coeffs().size());
  for (double c : p.coeffs()) {
    if (c == 0.0) {
      out.emplace_back(0);
      continue;
    }
    int e = 0;
    const double frac = std::frexp(c, &e);
    const auto mant = static_cast<long long>(std::ldexp(frac, std::numeric_limits<double>::digits));
    exact::Int v(mant);
    v <<= static_cast<unsigned>(e - std::numeric_limits<double>::digits - min_exp);
    out.push_back(std::move(v));
  }
  return out;
}

/// Power of two c = 2^shift that minimizes the exponent spread of p(c x).
int balancing_shift(const Polynomial& p) {
  std::vector<std::pair<long, long>> exps;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p.coeffs()[k] != 0.0) exps.emplace_back(static_cast<long>(k), std::ilogb(p.coeffs()[k]));
  }
  if (exps.size() < 2) return 0;
  int best = 0;
  long best_spread = std::numeric_limits<long>::max();
  for (int e = -64; e <= 64; ++e) {
    long lo = std::numeric_limits<long>::max();
    long hi = std::numeric_limits<long>::min();
    for (const auto& [k, x] : exps) {
      lo = std::min(lo, x + k * e);
      hi = std::max(hi, x + k * e);
    }
    if (hi - lo < best_spread || (hi - lo == best_spread && std::abs(e) < std::abs(best))) {
      best_spread = hi - lo;
      best = e;
    }
  }
  for (const auto& [k, x] : exps) {
    if (std::abs(x + k * best) > 900) return 0;  // stay inside the normal range
  }
  return best;
}

/// Sturm chain of p(2^shift x). The substitution is exact and maps each root r
/// to r 2^-shift, so counts on intervals are preserved once the endpoints are mapped.
struct Chain {
  std::vector<exact::IntPoly> members;
  int shift = 0;
  Rational at(double x) const { return Rational(std::ldexp(x, -shift)); }
};

Chain checked_chain(const Polynomial& p) {
  Chain c;
  c.shift = balancing_shift(p);
  std::vector<double> scaled(p.coeffs());
  for (std::size_t k = 0; k < scaled.size(); ++k) scaled[k] = std::ldexp(scaled[k], static_cast<int>(k) * c.shift);
  c.members = exact::integer_sturm_chain(integer_coefficients(Polynomial(std::move(scaled))));
  if (c.members.empty()) throw Error(Errc::InvalidInput, "zero polynomial has no finite root count");
  return c;
}

}  // namespace

int count_positive_roots(const Polynomial& p) {
  const auto c = checked_chain(p);
  if (c.members.front()[0] == 0 ||
      exact::changes_at(c.members, c.at(-kDegenerateRootTol)) != exact::changes_at(c.members, c.at(kDegenerateRootTol))) {
    throw Error(Errc::Degenerate, "polynomial has a root within 1e-10 of the origin");
  }
  return exact::changes_at(c.members, Rational(0)) - exact::changes_at_pos_inf(c.members);
}

int count_roots_between(const Polynomial& p, double lo, double hi) {
  const auto c = checked_chain(p);
  return exact::changes_at(c.members, c.at(lo)) - exact::changes_at(c.members, c.at(hi));
}

int count_real_roots(const Polynomial& p) {
  const auto c = checked_chain(p);
  return exact::changes_at_neg_inf(c.members) - exact::changes_at_pos_inf(c.members);
}

}  // namespace qes2d
