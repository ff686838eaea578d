#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "qes2d/error.hpp"
#include "qes2d/polyops.hpp"

using namespace qes2d;

namespace {

Polynomial from_roots(const std::vector<double>& roots) {
  Polynomial p{1.0};
  for (double r : roots) p = multiply(p, Polynomial{-r, 1.0});
  return p;
}

// Counts sign changes on a fine grid; only valid for well separated simple roots.
int scan_positive_roots(const Polynomial& p, double hi) {
  int changes = 0;
  double prev = evaluate(p, 1e-6);
  for (int i = 1; i <= 200000; ++i) {
    const double v = evaluate(p, hi * i / 200000.0);
    if ((v > 0) != (prev > 0)) ++changes;
    prev = v;
  }
  return changes;
}

}  // namespace

TEST_CASE("evaluate and basic algebra") {
  const Polynomial p{1, -2, 3};
  CHECK(evaluate(p, 2.0) == 9.0);
  CHECK(parity_flip(p) == Polynomial{1, 2, 3});
  CHECK(derivative(p) == Polynomial{-2, 6});
  CHECK(multiply(p, Polynomial{0, 1}) == Polynomial{0, 1, -2, 3});
  CHECK(p.degree() == 2);
  CHECK(Polynomial{1, 0, 0}.degree() == 0);
  CHECK(Polynomial{}.is_zero());
  CHECK(p.max_abs_coeff() == 3.0);
}

TEST_CASE("positive root counts") {
  CHECK(count_positive_roots(Polynomial{1}) == 0);
  CHECK(count_positive_roots(Polynomial{1, -1}) == 1);
  CHECK(count_positive_roots(from_roots({1, 2, 3})) == 3);
  CHECK(count_positive_roots(from_roots({-1, 2, -3})) == 1);
  CHECK(count_positive_roots(Polynomial{1, 0, 1}) == 0);
  // distinct roots: a double root counts once
  CHECK(count_positive_roots(from_roots({2, 2, 5})) == 2);
  CHECK(count_real_roots(from_roots({-4, -1, 0.5, 3})) == 4);
  CHECK(count_roots_between(from_roots({0.5, 1.5, 2.5}), 1.0, 3.0) == 2);
}

TEST_CASE("root near the origin is degenerate") {
  CHECK_THROWS_AS(count_positive_roots(Polynomial{0, 1}), Error);
  try {
    count_positive_roots(from_roots({1e-12, 3}));
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Degenerate);
  }
  CHECK_THROWS_AS(count_positive_roots(Polynomial{}), Error);
}

TEST_CASE("Sturm count agrees with a brute-force sign scan") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> pos(0.3, 9.7);
  std::uniform_real_distribution<double> neg(-9.7, -0.3);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<double> roots;
    const int np = trial % 5;
    const int nn = (trial / 5) % 4;
    for (int i = 0; i < np; ++i) roots.push_back(pos(rng));
    for (int i = 0; i < nn; ++i) roots.push_back(neg(rng));
    std::sort(roots.begin(), roots.end());
    bool separated = true;
    for (std::size_t i = 1; i < roots.size(); ++i) separated = separated && roots[i] - roots[i - 1] > 0.05;
    if (!separated) continue;
    const auto p = from_roots(roots);
    CHECK(count_positive_roots(p) == np);
    CHECK(scan_positive_roots(p, 10.0) == np);
    CHECK(count_real_roots(p) == np + nn);
  }
}

TEST_CASE("exact Sturm chain on rationals") {
  using namespace qes2d::exact;
  Poly p{Rational(-6), Rational(11), Rational(-6), Rational(1)};  // (x-1)(x-2)(x-3)
  const auto chain = sturm_chain(p);
  CHECK(sign_changes_at_neg_inf(chain) - sign_changes_at_pos_inf(chain) == 3);
  CHECK(sign_changes_at(chain, Rational(3, 2)) - sign_changes_at(chain, Rational(5, 2)) == 1);
  CHECK(count_positive_roots(p) == 3);
  CHECK(evaluate(p, Rational(2)) == 0);
  CHECK(remainder(p, Poly{Rational(-1), Rational(1)}).empty());
}
