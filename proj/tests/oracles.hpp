#pragma once

// Reference computations that do not go through the library: a symbolic
// calculus of differential operators on monomials, closed forms by hand, and
// couplings frozen from an exact characteristic-polynomial computation.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <map>
#include <vector>

namespace oracle {

using Q = boost::multiprecision::cpp_rational;

/// coef * rho^rho_pow * (d/drho)^d_order
struct Term {
  Q coef;
  int rho_pow = 0;
  int d_order = 0;
};

using DiffOp = std::vector<Term>;
using QPoly = std::map<int, Q>;

inline QPoly act(const DiffOp& op, const QPoly& p) {
  QPoly out;
  for (const auto& [k, c] : p) {
    for (const auto& t : op) {
      if (k < t.d_order) continue;
      Q falling = 1;
      for (int i = 0; i < t.d_order; ++i) falling *= (k - i);
      const Q v = t.coef * c * falling;
      if (v == 0) continue;
      out[k - t.d_order + t.rho_pow] += v;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline QPoly monomial(int k) {
  QPoly p;
  p[k] = 1;
  return p;
}

inline QPoly sub(QPoly a, const QPoly& b) {
  for (const auto& [k, c] : b) a[k] -= c;
  for (auto it = a.begin(); it != a.end();) it = it->second == 0 ? a.erase(it) : std::next(it);
  return a;
}

inline QPoly scale(QPoly a, const Q& f) {
  for (auto& [k, c] : a) c *= f;
  if (f == 0) a.clear();
  return a;
}

inline DiffOp jplus(int n) { return {{Q(1), 2, 1}, {Q(-n), 1, 0}}; }
inline DiffOp jzero(int n) { return {{Q(1), 1, 1}, {Q(-n, 2), 0, 0}}; }
inline DiffOp jminus() { return {{Q(1), 0, 1}}; }

/// The rho-equation with omega m_r = 1 and the energy fixed by n:
/// -rho p'' + (rho^2 - 1 - 2|s|) p' - n rho p.
inline DiffOp T_from_ode(int n, int s_abs) {
  return {{Q(-1), 1, 2}, {Q(1), 2, 1}, {Q(-1 - 2 * s_abs), 0, 1}, {Q(-n), 1, 0}};
}

/// Image of rho^k under the composition a(b(.)).
inline QPoly compose_apply(const DiffOp& a, const DiffOp& b, int k) { return act(a, act(b, monomial(k))); }

/// L_N^(alpha)(x) = sum_i (-1)^i C(N + alpha, N - i) x^i / i!
inline double laguerre_explicit(int N, int alpha, double x) {
  double sum = 0.0;
  for (int i = 0; i <= N; ++i) {
    const double binom = std::tgamma(N + alpha + 1.0) / (std::tgamma(N - i + 1.0) * std::tgamma(alpha + i + 1.0));
    sum += (i % 2 ? -1.0 : 1.0) * binom * std::pow(x, i) / std::tgamma(i + 1.0);
  }
  return sum;
}

struct FrozenSpectrum {
  int n;
  int s;
  std::vector<double> lambdas;  ///< descending, physical couplings only
};

/// Roots of the characteristic polynomial of T(n, |s|) computed symbolically
/// to 30 digits, then rounded to double.
inline const std::vector<FrozenSpectrum>& frozen_spectra() {
  static const std::vector<FrozenSpectrum> table{
      {3, 0, {18.5440037453175311678716483262, 1.45599625468246883212835167376}},
      {4, 0, {42.2336879396140859795518344047, 7.76631206038591402044816559534}},
      {3, 1, {36.27882059609970638735301591, 3.72117940390029361264698409002}},
      {5, 0, {80.62667057742833, 22.51406511090851, 1.859264311663155}},
      {6, 0, {137.27595990853723, 49.35019641149587, 9.373843679966884}},
      {7, 0, {215.7359079146899, 91.8427899894343, 26.190524936435054, 2.2307771594407564}},
      {8, 0, {319.56159758607134, 153.54478760625054, 56.01897717293972, 10.874637634738384}},
  };
  return table;
}

}  // namespace oracle
