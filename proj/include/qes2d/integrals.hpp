#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "qes2d/qes.hpp"
#include "qes2d/sl2rep.hpp"

namespace qes2d {

/// Sign inside the factors of prod_{j=0..n} (rho d/drho +- j).
///
/// AsPrinted uses +j; its diagonal entry prod (k + j) vanishes on P_n only at
/// k = 0. EulerCartan uses -j, built from rho d/drho - n; its entry
/// prod (k - j) vanishes for every 0 <= k <= n.
enum class AnnihilatorConvention { AsPrinted, EulerCartan };

std::string_view to_string(AnnihilatorConvention c);

struct AnnihilatorOp {
  int n = 0;
  AnnihilatorConvention convention = AnnihilatorConvention::EulerCartan;
  Operator<Exact> op;  ///< on P_N, N >= n
};

/// Product of the n+1 commuting factors on P_N. Throws Error{InvalidInput} if N < n.
AnnihilatorOp build_annihilator(int n, int N, AnnihilatorConvention conv = AnnihilatorConvention::EulerCartan);

struct AnnihilationReport {
  int n = 0;
  std::vector<double> per_basis_as_printed;    ///< |i_n rho^k|, k = 0..n
  std::vector<double> per_basis_euler_cartan;
  bool as_printed_annihilates = false;
  bool euler_cartan_annihilates = false;
};

/// Tests which sign convention annihilates P_n.
AnnihilationReport annihilation_check(int n);

struct ParticularIntegralReport {
  int n = 0;
  int s = 0;
  AnnihilatorConvention convention = AnnihilatorConvention::EulerCartan;
  double max_image_norm = 0.0;
  std::vector<double> per_basis;  ///< max |[T, i_n] rho^k| for k = 0..n
};

/// [T(n), i_n] on P_n, computed inside the padded space P_{n+2}.
ParticularIntegralReport commutator_particular_check(int n, int s,
                                                     AnnihilatorConvention conv = AnnihilatorConvention::EulerCartan);

/// Image of a single monomial rho^k (k may exceed n) under [T(n), i_n].
double commutator_image_norm(int n, int s, int k, AnnihilatorConvention conv = AnnihilatorConvention::EulerCartan);

/// Gauge-rotated integral I_n applied to zeta = zeta0 p, with zeta0 = exp(-rho^2/4) rho^|s|
/// in the scaled variable. Uses D(zeta0 f) = zeta0 f', so I_n zeta = zeta0 (i_n p).
std::vector<double> gauge_rotated_action(const Polynomial& p, int n, int s, std::span<const double> grid,
                                         AnnihilatorConvention conv = AnnihilatorConvention::EulerCartan);

std::vector<double> gauge_rotated_action(const EigenPair& pair, std::span<const double> grid,
                                         AnnihilatorConvention conv = AnnihilatorConvention::EulerCartan);

}  // namespace qes2d
