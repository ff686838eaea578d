#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qes2d/error.hpp"
#include "qes2d/integrals.hpp"
#include "qes2d/qes.hpp"

using namespace qes2d;

namespace {

double falling_product(int k, int n, int sign) {
  double f = 1.0;
  for (int j = 0; j <= n; ++j) f *= k + sign * j;
  return f;
}

}  // namespace

TEST_CASE("annihilator is diagonal with the expected entries") {
  for (int n = 0; n <= 6; ++n) {
    const auto ec = build_annihilator(n, n + 3, AnnihilatorConvention::EulerCartan);
    const auto ap = build_annihilator(n, n + 3, AnnihilatorConvention::AsPrinted);
    for (int k = 0; k <= n + 3; ++k) {
      for (int r = 0; r <= n + 3; ++r) {
        if (r == k) continue;
        CHECK(ec.op(r, k) == 0);
        CHECK(ap.op(r, k) == 0);
      }
      CHECK(ec.op(k, k) == Exact(static_cast<long long>(falling_product(k, n, -1))));
      CHECK(ap.op(k, k) == Exact(static_cast<long long>(falling_product(k, n, +1))));
    }
  }
  CHECK_THROWS_AS(build_annihilator(4, 3), Error);
}

TEST_CASE("only the minus convention annihilates P_n") {
  for (int n = 0; n <= 10; ++n) {
    const auto rep = annihilation_check(n);
    CHECK(rep.euler_cartan_annihilates);
    CHECK(rep.as_printed_annihilates == (n == 0));
    // the printed form kills the constant only
    CHECK(rep.per_basis_as_printed[0] == 0.0);
    for (int k = 1; k <= n; ++k) CHECK(rep.per_basis_as_printed[k] > 0.0);
  }
}

TEST_CASE("commutator with T vanishes on P_n") {
  for (int n = 0; n <= 10; ++n) {
    for (int s = 0; s <= 5; ++s) {
      const auto rep = commutator_particular_check(n, s);
      CHECK(rep.max_image_norm == 0.0);
      CHECK(rep.per_basis.size() == static_cast<std::size_t>(n + 1));
    }
  }
  // outside P_n the commutator does not vanish
  CHECK(commutator_image_norm(3, 1, 5) > 0.0);
}

TEST_CASE("covariant derivative identity by finite differences") {
  // D = d/drho + rho/2 - |s|/rho applied to zeta0 f equals zeta0 f'
  for (int s = 0; s <= 3; ++s) {
    auto zeta0 = [s](double r) { return std::exp(-r * r / 4) * std::pow(r, s); };
    auto f = [](double r) { return 1.0 - 0.7 * r + 0.2 * r * r * r; };
    auto fp = [](double r) { return -0.7 + 0.6 * r * r; };
    for (double r : {0.4, 1.3, 2.9}) {
      const double h = 1e-5;
      const double g = [&](double x) { return zeta0(x) * f(x); }(r);
      const double dg = (zeta0(r + h) * f(r + h) - zeta0(r - h) * f(r - h)) / (2 * h);
      const double lhs = dg + (r / 2 - s / r) * g;
      CHECK(lhs == doctest::Approx(zeta0(r) * fp(r)).epsilon(1e-7));
    }
  }
}

TEST_CASE("gauge-rotated action on arbitrary polynomials") {
  const Polynomial p{1.0, -2.0, 0.5, 0.25, -0.125};
  const std::vector<double> grid{0.5, 1.5, 3.0};
  for (int n : {1, 2, 3}) {
    for (int s : {0, 2}) {
      for (auto conv : {AnnihilatorConvention::EulerCartan, AnnihilatorConvention::AsPrinted}) {
        const int sign = conv == AnnihilatorConvention::EulerCartan ? -1 : 1;
        const auto got = gauge_rotated_action(p, n, s, grid, conv);
        for (std::size_t i = 0; i < grid.size(); ++i) {
          const double r = grid[i];
          double sum = 0.0;
          for (int k = 0; k <= p.degree(); ++k) sum += falling_product(k, n, sign) * p[k] * std::pow(r, k);
          CHECK(got[i] == doctest::Approx(std::exp(-r * r / 4) * std::pow(r, s) * sum));
        }
      }
    }
  }
}

TEST_CASE("gauge-rotated integral annihilates the eigenfunctions") {
  std::vector<double> grid;
  for (int i = 1; i <= 100; ++i) grid.push_back(0.08 * i);
  for (int n = 1; n <= 8; ++n) {
    for (auto c : {CaseTag::EqualLarmor, CaseTag::Neutral}) {
      for (const auto& ep : solve_eigenpairs(n, 1, c)) {
        for (double v : gauge_rotated_action(ep, grid)) CHECK(v == 0.0);
        double nonzero = 0.0;
        for (double v : gauge_rotated_action(ep, grid, AnnihilatorConvention::AsPrinted)) nonzero = std::max(nonzero, std::abs(v));
        CHECK(nonzero > 0.0);
      }
    }
  }
}
