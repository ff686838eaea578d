#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qes2d/polyops.hpp"
#include "qes2d/system.hpp"

namespace qes2d {

/// Physical status of one root of the secular equation.
enum class Branch {
  Physical,    ///< kappa > 0 (equal-Larmor) or kappa < 0 (neutral)
  Unphysical,  ///< mirror root with the wrong sign of the coupling
  Zero,        ///< lambda = 0, present for even n
};

std::string_view to_string(Branch b);

/// Frequencies entering the energy formulas. The defaults give energies in
/// units of omega_c (equal-Larmor) or Omega_q (neutral, equal masses).
struct Frequencies {
  double omega_c = 1.0;
  double Omega_q = 1.0;
  double omega_q = 0.0;

  static Frequencies from(const DerivedParams& dp);
};

struct SpectralPoint {
  int n = 0;
  int s = 0;
  int j = 0;  ///< 1-based branch index over physical points (descending lambda); 0 otherwise
  double kappa = 0.0;
  double lambda = 0.0;
  std::optional<double> b;
  double energy = 0.0;
  CaseTag case_tag = CaseTag::EqualLarmor;
  Branch branch = Branch::Physical;

  bool physical() const noexcept { return branch == Branch::Physical; }
};

struct EigenPair {
  SpectralPoint point;
  Polynomial p;  ///< degree n, p(0) = 1
  int nodes = 0;  ///< distinct roots of p on (0, inf)
};

struct SolverOptions {
  int max_n = 64;
  Frequencies freq;
  /// Eigenpairs whose polished residual exceeds this are rejected as ill-conditioned.
  double ill_conditioned_residual = 1e-8;
};

/// E_rho = (omega_c/2)(n+1+|s|-s) or E = Omega_q(n+1+|s|) - omega_q s/2.
double qes_energy(int n, int s, CaseTag c, const Frequencies& f);

/// All n+1 roots of the secular equation of T(n, |s|) with their polynomials.
///
/// Eigenvalues come from a dense nonsymmetric eigensolver and are polished by
/// Newton iteration on the bordered system (T + kappa) p = 0, p(0) = 1, in
/// extended precision. Sorted by descending lambda, ties broken by ascending
/// kappa. Throws Error{InvalidInput} for n < 0, n > max_n or case Generic,
/// Error{IllConditioned} if a polished residual stays above the threshold.
std::vector<EigenPair> solve_eigenpairs(int n, int s, CaseTag c, const SolverOptions& opt = {});

std::vector<SpectralPoint> secular_spectrum(int n, int s, CaseTag c, const SolverOptions& opt = {});

/// Polynomial eigenfunction for a point from secular_spectrum(n, s, ...).
/// Throws Error{NonNormalizable} if the constant coefficient of the raw
/// eigenvector is below 1e-12 of its largest coefficient.
EigenPair eigenfunction(int n, int s, const SpectralPoint& point);

/// max |T p + kappa p| / max |p|, with T = T(deg p, |s|).
double residual(const Polynomial& p, int n, int s, double kappa);
double residual(const EigenPair& pair);

struct FieldQuantization {
  double b = 0.0;
  std::optional<double> B;  ///< b * B0 when B0 is defined for the case
};

/// Throws Error{ZeroCoupling} for lambda = 0.
FieldQuantization field_quantization(const SpectralPoint& point, const DerivedParams* dp = nullptr);

/// Radial factor zeta(rho) = exp(-rho^2/4) rho^|s| p(rho) in the scaled variable.
struct RadialSample {
  std::vector<double> rho;
  std::vector<double> zeta;
  int s_abs = 0;
  double gauge_exponent = -0.25;  ///< coefficient of rho^2 in the exponent
  /// Physical length of one scaled unit, 1/sqrt(omega m_r); 1 when no parameters given.
  double length_scale = 1.0;
};

/// Grid values must be positive and ascending.
RadialSample assemble_wavefunction(const EigenPair& pair, std::span<const double> grid,
                                   const DerivedParams* dp = nullptr);

}  // namespace qes2d
