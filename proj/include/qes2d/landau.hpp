#pragma once

#include <span>
#include <vector>

#include "qes2d/polyops.hpp"
#include "qes2d/system.hpp"

namespace qes2d {

/// Centre-of-mass Landau state: principal number N >= 0, magnetic number S.
struct CMState {
  int N = 0;
  int S = 0;
};

/// Generalized Laguerre L_N^(alpha)(x) by the three-term recurrence in N.
double laguerre(int N, int alpha, double x);

/// Coefficients of L_N^(alpha) in powers of x.
Polynomial laguerre_polynomial(int N, int alpha);

/// E_R = (omega_c/2)(2N + 1 + |S| - S).
double cm_energy(const CMState& st, double omega_c);

/// K^2 = qB (2N + 1 + |S| + S). Throws Error{InvalidInput} unless qB > 0.
double pseudomomentum_sq(const CMState& st, double q, double B);

/// |K^2 - 2qB S - 2M E_R| for an equal-Larmor pair.
double casimir_identity_check(const CMState& st, const DerivedParams& dp);

/// Same identity in units of qB with integer arithmetic (M omega_c = qB).
long long casimir_identity_residual_exact(const CMState& st);

struct CMProfile {
  std::vector<double> R;
  std::vector<double> chi;  ///< radial profile; the phase exp(iS phi) is reported as S
  int S = 0;
  /// The Laguerre argument is taken as printed, 2 R^2 / (M omega_c); it is not
  /// dimensionally consistent with the Gaussian exp(-M omega_c R^2 / 4).
  bool laguerre_argument_as_printed = true;
};

/// Throws Error{InvalidInput} unless dp is an equal-Larmor pair.
CMProfile cm_wavefunction(const CMState& st, const DerivedParams& dp, std::span<const double> grid);

/// Radial nodes of chi on R > 0 (positive roots of the Laguerre factor).
int cm_radial_nodes(const CMState& st);

}  // namespace qes2d
