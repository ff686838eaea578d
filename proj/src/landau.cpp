#include "qes2d/landau.hpp"

#include <cmath>
#include <cstdlib>

#include "qes2d/error.hpp"

namespace qes2d {

double laguerre(int N, int alpha, double x) {
  if (N < 0 || alpha < 0) throw Error(Errc::InvalidInput, "laguerre needs N >= 0 and alpha >= 0");
  double prev = 1.0;
  if (N == 0) return prev;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < N; ++k) {
    const double next = ((2.0 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

Polynomial laguerre_polynomial(int N, int alpha) {
  if (N < 0 || alpha < 0) throw Error(Errc::InvalidInput, "laguerre needs N >= 0 and alpha >= 0");
  // c_k = (-1)^k binom(N + alpha, N - k) / k!
  std::vector<double> c(static_cast<std::size_t>(N) + 1);
  double binom = 1.0;  // binom(N + alpha, N)
  for (int i = 1; i <= N; ++i) binom = binom * (alpha + i) / i;
  double fact = 1.0;
  for (int k = 0; k <= N; ++k) {
    if (k > 0) {
      binom = binom * (N - k + 1) / (alpha + k);  // binom(N+a, N-k) from binom(N+a, N-k+1)
      fact *= k;
    }
    c[static_cast<std::size_t>(k)] = (k % 2 == 0 ? 1.0 : -1.0) * binom / fact;
  }
  return Polynomial(std::move(c));
}

double cm_energy(const CMState& st, double omega_c) {
  return omega_c / 2.0 * (2 * st.N + 1 + std::abs(st.S) - st.S);
}

double pseudomomentum_sq(const CMState& st, double q, double B) {
  if (!(q * B > 0.0)) throw Error(Errc::InvalidInput, "pseudomomentum spectrum needs qB > 0");
  return q * B * (2 * st.N + 1 + std::abs(st.S) + st.S);
}

double casimir_identity_check(const CMState& st, const DerivedParams& dp) {
  const double qB = dp.q * dp.pair.B;
  const double k2 = pseudomomentum_sq(st, dp.q, dp.pair.B);
  return std::abs(k2 - 2.0 * qB * st.S - 2.0 * dp.M * cm_energy(st, dp.omega_c));
}

long long casimir_identity_residual_exact(const CMState& st) {
  const long long k2 = 2LL * st.N + 1 + std::llabs(st.S) + st.S;
  // 2 M E_R / (qB) = 2N + 1 + |S| - S
  const long long two_m_er = 2LL * st.N + 1 + std::llabs(st.S) - st.S;
  return k2 - 2LL * st.S - two_m_er;
}

CMProfile cm_wavefunction(const CMState& st, const DerivedParams& dp, std::span<const double> grid) {
  if (dp.case_tag != CaseTag::EqualLarmor) {
    throw Error(Errc::InvalidInput, "centre-of-mass Landau states need an equal-Larmor pair");
  }
  if (st.N < 0) throw Error(Errc::InvalidInput, "N must be nonnegative");
  CMProfile out;
  out.S = st.S;
  const int a = std::abs(st.S);
  const double m_omega = dp.M * dp.omega_c;
  for (double R : grid) {
    out.R.push_back(R);
    out.chi.push_back(std::pow(R, a) * std::exp(-m_omega * R * R / 4.0) * laguerre(st.N, a, 2.0 * R * R / m_omega));
  }
  return out;
}

int cm_radial_nodes(const CMState& st) {
  // x = c R^2 is monotone on R > 0, so nodes in R are positive roots in x.
  return count_positive_roots(laguerre_polynomial(st.N, std::abs(st.S)));
}

}  // namespace qes2d
