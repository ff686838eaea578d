#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "qes2d/error.hpp"
#include "qes2d/oracle.hpp"
#include "qes2d/qes.hpp"

using namespace qes2d;

TEST_CASE("finite differences recover the symbolic couplings") {
  for (const auto& f : oracle::frozen_spectra()) {
    if (f.n > 4) continue;
    const auto fd = fd_kappa_spectrum(f.n, f.s, RadialGrid::default_for(f.n, f.s));
    REQUIRE(fd.kappas.size() == static_cast<std::size_t>(f.n + 1));
    for (double lam : f.lambdas) {
      for (double k : {std::sqrt(lam), -std::sqrt(lam)}) {
        double best = 1e300;
        for (double x : fd.kappas) best = std::min(best, std::abs(x - k));
        CHECK(best <= 1e-6);
      }
    }
  }
}

TEST_CASE("couplings ascend and node counts descend") {
  const auto fd = fd_kappa_spectrum(4, 1, RadialGrid::default_for(4, 1));
  CHECK(std::is_sorted(fd.kappas.begin(), fd.kappas.end()));
  for (std::size_t i = 0; i < fd.node_counts.size(); ++i) {
    CHECK(fd.node_counts[i] == static_cast<int>(fd.node_counts.size() - 1 - i));
  }
}

TEST_CASE("matches the algebraic spectrum with node counts") {
  for (int n = 0; n <= 4; ++n) {
    for (int s = 0; s <= 2; ++s) {
      const auto alg = solve_eigenpairs(n, s, CaseTag::EqualLarmor);
      const auto fd = fd_kappa_spectrum(n, s, RadialGrid::default_for(n, s));
      const auto rep = oracle_match(alg, fd, 1e-4);
      CHECK(rep.status == MatchStatus::Ok);
      CHECK(rep.max_abs_err() <= 1e-4);
      CHECK(rep.nodes_all_agree());
    }
  }
}

TEST_CASE("second-order convergence") {
  for (int n : {1, 3}) {
    for (double o : grid_convergence_order(n, 1, RadialGrid{RadialGrid::default_for(n, 1).r_max, 500}, n + 1)) {
      CHECK(o >= 1.8);
      CHECK(o <= 2.2);
    }
  }
}

TEST_CASE("eigenvector follows the polynomial wavefunction") {
  const int n = 3, s = 1;
  const auto grid = RadialGrid::default_for(n, s);
  const auto fd = fd_kappa_spectrum(n, s, grid);
  for (const auto& ep : solve_eigenpairs(n, s, CaseTag::EqualLarmor)) {
    std::size_t idx = 0;
    for (std::size_t i = 1; i < fd.kappas.size(); ++i) {
      if (std::abs(fd.kappas[i] - ep.point.kappa) < std::abs(fd.kappas[idx] - ep.point.kappa)) idx = i;
    }
    std::vector<double> r(static_cast<std::size_t>(grid.num_points));
    for (int i = 0; i < grid.num_points; ++i) r[i] = grid.r(i);
    auto z = assemble_wavefunction(ep, r).zeta;
    double zmax = 0.0;
    for (double v : z) zmax = std::max(zmax, std::abs(v));
    double sign = 1.0;
    for (double v : z) {
      if (std::abs(v) > 1e-6 * zmax) {
        sign = v > 0 ? 1.0 : -1.0;
        break;
      }
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) worst = std::max(worst, std::abs(sign * z[i] / zmax - fd.eigenvectors[idx][i]));
    CHECK(worst <= 1e-3);
  }
}

TEST_CASE("serial and parallel bisection agree bitwise") {
  const RadialGrid g{20.0, 3000};
  CHECK(fd_raw_kappas(4, 2, g, 7, Exec::Serial) == fd_raw_kappas(4, 2, g, 7, Exec::Parallel));
}

TEST_CASE("tight tolerance reports a mismatch") {
  const auto alg = solve_eigenpairs(3, 0, CaseTag::EqualLarmor);
  const auto fd = fd_kappa_spectrum(3, 0, RadialGrid::default_for(3, 0));
  CHECK(oracle_match(alg, fd, 1e-15).status == MatchStatus::Mismatch);
}

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(RadialGrid({2.0, 1000}).validate(3, 0), Error);
  CHECK_THROWS_AS(RadialGrid({20.0, 100}).validate(3, 0), Error);
  CHECK_NOTHROW(RadialGrid::default_for(3, 0).validate(3, 0));
  const auto g = RadialGrid::default_for(2, 1);
  CHECK(g.r_max == doctest::Approx(2 * std::sqrt(8.0) + 10));
  CHECK(g.num_points == 2000);
}

TEST_CASE("coarse grid fails to converge") {
  try {
    fd_kappa_spectrum(4, 0, RadialGrid{RadialGrid::default_for(4, 0).r_max, 600});
    FAIL("expected NO_CONVERGENCE");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoConvergence);
  }
}
