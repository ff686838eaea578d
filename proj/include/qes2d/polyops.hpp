#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <span>
#include <vector>

namespace qes2d {

using Rational = boost::multiprecision::cpp_rational;

/// Real polynomial in the monomial basis, lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<double> coeffs);
  explicit Polynomial(std::vector<double> coeffs);

  const std::vector<double>& coeffs() const noexcept { return coeffs_; }
  std::span<const double> view() const noexcept { return coeffs_; }

  /// Coefficient of rho^k; zero past the stored length.
  double operator[](std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : 0.0; }

  /// -1 for the zero polynomial.
  int degree() const noexcept;
  bool is_zero() const noexcept { return degree() < 0; }
  double max_abs_coeff() const noexcept;

  /// Drops trailing zero coefficients.
  Polynomial& trim();

 private:
  std::vector<double> coeffs_;
};

bool operator==(const Polynomial& a, const Polynomial& b);

double evaluate(const Polynomial& p, double x);
Polynomial parity_flip(const Polynomial& p);
Polynomial derivative(const Polynomial& p);
Polynomial multiply(const Polynomial& a, const Polynomial& b);

inline constexpr double kDegenerateRootTol = 1e-10;

/// Number of distinct real roots in (0, inf).
///
/// Every finite double is a dyadic rational, so the coefficients are converted
/// exactly and the Sturm sequence is built in exact integer arithmetic; the count is
/// exact for the stored coefficients. Throws Error{Degenerate} when a root lies
/// within kDegenerateRootTol of 0, Error{InvalidInput} for the zero polynomial
/// or non-finite coefficients.
int count_positive_roots(const Polynomial& p);

/// Distinct real roots in (lo, hi]; lo and hi must not be roots.
int count_roots_between(const Polynomial& p, double lo, double hi);

/// Distinct real roots on the whole line.
int count_real_roots(const Polynomial& p);

namespace exact {

using Poly = std::vector<Rational>;

Poly from_double(const Polynomial& p);
void trim(Poly& p);
Poly derivative(const Poly& p);
/// Remainder of a / b; b must be nonzero.
Poly remainder(const Poly& a, const Poly& b);
Rational evaluate(const Poly& p, const Rational& x);

/// Canonical Sturm chain p, p', -rem(...), ...
std::vector<Poly> sturm_chain(const Poly& p);

int sign_changes_at(const std::vector<Poly>& chain, const Rational& x);
int sign_changes_at_pos_inf(const std::vector<Poly>& chain);
int sign_changes_at_neg_inf(const std::vector<Poly>& chain);

/// Distinct roots of an exact polynomial in (0, inf); p(0) must be nonzero.
int count_positive_roots(const Poly& p);

}  // namespace exact

}  // namespace qes2d
