#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qes2d/parallel.hpp"
#include "qes2d/qes.hpp"

namespace qes2d {

/// Uniform cell-centred grid r_i = (i + 1/2) h, h = r_max / num_points.
///
/// The first cell face sits at r = 0 where the radial flux r zeta' vanishes;
/// that row is the regularity condition zeta ~ r^|s|. zeta = 0 is imposed one
/// half-cell beyond the last centre.
struct RadialGrid {
  double r_max = 0.0;
  int num_points = 1000;

  double spacing() const { return r_max / num_points; }
  double r_min() const { return 0.5 * spacing(); }
  double r(int i) const { return (i + 0.5) * spacing(); }

  /// r_max = 2 sqrt(2n + 2|s| + 2) + 10, 2000 points.
  static RadialGrid default_for(int n, int s);
  /// Throws Error{InvalidInput} if the grid violates r_min <= 1e-3 r_max or
  /// r_max >= 2 sqrt(2n + 2|s| + 2).
  void validate(int n, int s) const;
};

struct OracleOptions {
  /// Number of couplings tracked from the top of the spectrum; 0 means n + 1, the size of the algebraic set.
  int num_tracked = 0;
  /// Optional explicit window [lo, hi]; overrides num_tracked.
  std::optional<std::pair<double, double>> window;
  /// Refinement tolerance: NO_CONVERGENCE when the N -> 2N change exceeds 10x this.
  double tol = 1e-4;
  Exec exec = Exec::Parallel;
};

struct OracleResult {
  int n = 0;
  int s = 0;
  RadialGrid grid;
  std::vector<double> kappas;         ///< Richardson-extrapolated, ascending
  std::vector<double> kappas_coarse;  ///< raw values on `grid`
  std::vector<double> kappas_fine;    ///< raw values on the 2x refined grid
  std::vector<std::vector<double>> eigenvectors;  ///< zeta on `grid`, max-normalized, zeta(r_0) >= 0
  std::vector<int> node_counts;
};

/// Couplings kappa for which e_n = (n + 1 + |s|)/2 is an eigenvalue of the
/// scaled radial operator -1/2 (d^2 + d/r - s^2/r^2) + r^2/8 + kappa/(2r).
///
/// Multiplying by -2r gives the symmetric three-point problem
///   (r zeta')' - s^2/r zeta - r^3/4 zeta + 2 e_n r zeta = kappa zeta,
/// whose upper eigenvalues are located by Sturm-count bisection.
OracleResult fd_kappa_spectrum(int n, int s, const RadialGrid& grid, const OracleOptions& opt = {});

/// Raw (unextrapolated) top `count` couplings on one grid, ascending.
std::vector<double> fd_raw_kappas(int n, int s, const RadialGrid& grid, int count, Exec exec = Exec::Parallel);

/// Observed order log2(|k_N - k_2N| / |k_2N - k_4N|) per tracked coupling.
/// Couplings whose N -> 2N change is below 1e-9 are skipped.
std::vector<double> grid_convergence_order(int n, int s, const RadialGrid& grid, int count);

enum class MatchStatus { Ok, Mismatch };

struct OracleMatch {
  int j = 0;
  Branch branch = Branch::Physical;
  double kappa_alg = 0.0;
  std::optional<double> kappa_fd;
  double abs_err = 0.0;
  int nodes_alg = 0;
  std::optional<int> nodes_fd;
  bool within_tol = false;
  bool nodes_agree = false;
};

struct OracleReport {
  int n = 0;
  int s = 0;
  RadialGrid grid;
  double tol = 0.0;
  std::vector<OracleMatch> matches;
  MatchStatus status = MatchStatus::Ok;
  double max_abs_err() const;
  bool nodes_all_agree() const;
};

/// Greedy nearest matching of algebraic couplings to oracle couplings. Status is
/// Mismatch when any physical algebraic coupling has no oracle partner within tol.
OracleReport oracle_match(std::span<const EigenPair> algebraic, const OracleResult& oracle, double tol);

}  // namespace qes2d
