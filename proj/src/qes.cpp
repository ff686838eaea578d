#include "qes2d/qes.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "qes2d/error.hpp"
#include "qes2d/sl2rep.hpp"

namespace qes2d {

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::Physical: return "physical";
    case Branch::Unphysical: return "unphysical";
    case Branch::Zero: return "zero";
  }
  return "unphysical";
}

Frequencies Frequencies::from(const DerivedParams& dp) {
  return Frequencies{dp.omega_c, dp.Omega_q, dp.omega_q};
}

double qes_energy(int n, int s, CaseTag c, const Frequencies& f) {
  const int sa = std::abs(s);
  if (c == CaseTag::Neutral) return f.Omega_q * (n + 1 + sa) - f.omega_q * s / 2.0;
  return f.omega_c / 2.0 * (n + 1 + sa - s);
}

namespace {

using Ext = long double;
using ExtMatrix = Eigen::Matrix<Ext, Eigen::Dynamic, Eigen::Dynamic>;
using ExtVector = Eigen::Matrix<Ext, Eigen::Dynamic, 1>;

constexpr int kNewtonIterations = 12;
constexpr double kNormalizationFloor = 1e-12;

double operator_scale(const Operator<double>& t) {
  double m = 1.0;
  for (std::size_t c = 0; c < t.dim(); ++c)
    for (double v : t.column(c)) m = std::max(m, std::abs(v));
  return m;
}

ExtMatrix to_ext(const Operator<double>& t) {
  const auto d = static_cast<Eigen::Index>(t.dim());
  ExtMatrix a(d, d);
  for (Eigen::Index c = 0; c < d; ++c)
    for (Eigen::Index r = 0; r < d; ++r) a(r, c) = t(r, c);
  return a;
}

struct Polished {
  Ext kappa;
  ExtVector p;
};

// Newton on F(p1..pn, kappa) = (T + kappa) p with p0 = 1.
Polished polish(const ExtMatrix& t, Ext kappa, ExtVector p) {
  const Eigen::Index d = t.rows();
  if (d == 1) return {kappa, p};
  for (int it = 0; it < kNewtonIterations; ++it) {
    const ExtVector f = t * p + kappa * p;
    ExtMatrix jac(d, d);
    jac.leftCols(d - 1) = t.rightCols(d - 1);
    for (Eigen::Index r = 1; r < d; ++r) jac(r, r - 1) += kappa;
    jac.col(d - 1) = p;
    const ExtVector step = jac.partialPivLu().solve(-f);
    p.tail(d - 1) += step.head(d - 1);
    kappa += step(d - 1);
    const Ext size = std::max<Ext>(1, p.cwiseAbs().maxCoeff());
    if (step.cwiseAbs().maxCoeff() <= 1e-17L * size) break;
  }
  return {kappa, p};
}

ExtVector normalized(const ExtVector& v) {
  const Ext vmax = v.cwiseAbs().maxCoeff();
  if (!(vmax > 0) || std::abs(v(0)) < kNormalizationFloor * vmax) {
    throw Error(Errc::NonNormalizable, "eigenvector has a vanishing constant coefficient");
  }
  return v / v(0);
}

Polynomial to_polynomial(const ExtVector& v) {
  std::vector<double> c(static_cast<std::size_t>(v.size()));
  for (Eigen::Index k = 0; k < v.size(); ++k) c[static_cast<std::size_t>(k)] = static_cast<double>(v(k));
  return Polynomial(std::move(c));
}

Ext residual_ext(const ExtMatrix& t, const ExtVector& p, Ext kappa) {
  const ExtVector r = t * p + kappa * p;
  return r.cwiseAbs().maxCoeff() / p.cwiseAbs().maxCoeff();
}

void validate(int n, CaseTag c, int max_n) {
  if (n < 0 || n > max_n) {
    throw Error(Errc::InvalidInput, "n=" + std::to_string(n) + " outside [0, " + std::to_string(max_n) + "]");
  }
  if (c == CaseTag::Generic) {
    throw Error(Errc::InvalidInput, "the generic case has no quasi-exactly-solvable reduction");
  }
}

Branch branch_of(double kappa, CaseTag c) {
  if (kappa == 0.0) return Branch::Zero;
  const bool positive = kappa > 0.0;
  return (positive == (c == CaseTag::EqualLarmor)) ? Branch::Physical : Branch::Unphysical;
}

SpectralPoint make_point(int n, int s, double kappa, CaseTag c, const Frequencies& f) {
  SpectralPoint pt;
  pt.n = n;
  pt.s = s;
  pt.kappa = kappa;
  pt.lambda = kappa * kappa;
  if (pt.lambda > 0.0) pt.b = 1.0 / pt.lambda;
  pt.energy = qes_energy(n, s, c, f);
  pt.case_tag = c;
  pt.branch = branch_of(kappa, c);
  return pt;
}

bool lambda_ties(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

std::vector<EigenPair> solve_eigenpairs(int n, int s, CaseTag c, const SolverOptions& opt) {
  validate(n, c, opt.max_n);
  const int sa = std::abs(s);
  const auto t = build_T_direct<double>(n, sa);
  const double scale = operator_scale(t);
  const ExtMatrix text = to_ext(t);
  const auto d = static_cast<Eigen::Index>(t.dim());

  Eigen::MatrixXd a(d, d);
  for (Eigen::Index col = 0; col < d; ++col)
    for (Eigen::Index r = 0; r < d; ++r) a(r, col) = t(r, col);
  Eigen::EigenSolver<Eigen::MatrixXd> es(a, true);
  if (es.info() != Eigen::Success) throw Error(Errc::IllConditioned, "dense eigensolver did not converge");

  std::vector<EigenPair> pairs;
  pairs.reserve(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < d; ++i) {
    const std::complex<double> mu = es.eigenvalues()(i);
    if (std::abs(mu.imag()) > 1e-6 * scale) {
      throw Error(Errc::IllConditioned, "secular operator returned a complex eigenvalue");
    }
    ExtVector v(d);
    for (Eigen::Index k = 0; k < d; ++k) v(k) = es.eigenvectors()(k, i).real();
    Polished pol = polish(text, -static_cast<Ext>(mu.real()), normalized(v));

    double kappa = static_cast<double>(pol.kappa);
    if (n % 2 == 0 && std::abs(kappa) <= 1e-9 * scale) kappa = 0.0;  // exact zero root for even n
    const Ext res = residual_ext(text, pol.p, static_cast<Ext>(kappa));
    if (!(res <= opt.ill_conditioned_residual)) {
      throw Error(Errc::IllConditioned, "eigenpair residual " + std::to_string(static_cast<double>(res)) +
                                            " for n=" + std::to_string(n));
    }
    EigenPair ep;
    ep.point = make_point(n, s, kappa, c, opt.freq);
    ep.p = to_polynomial(pol.p);
    ep.nodes = count_positive_roots(ep.p);
    pairs.push_back(std::move(ep));
  }

  std::stable_sort(pairs.begin(), pairs.end(), [](const EigenPair& x, const EigenPair& y) {
    if (lambda_ties(x.point.lambda, y.point.lambda)) return x.point.kappa < y.point.kappa;
    return x.point.lambda > y.point.lambda;
  });
  int j = 0;
  for (auto& ep : pairs) {
    if (ep.point.physical()) ep.point.j = ++j;
  }
  return pairs;
}

std::vector<SpectralPoint> secular_spectrum(int n, int s, CaseTag c, const SolverOptions& opt) {
  std::vector<SpectralPoint> pts;
  for (auto& ep : solve_eigenpairs(n, s, c, opt)) pts.push_back(ep.point);
  return pts;
}

EigenPair eigenfunction(int n, int s, const SpectralPoint& point) {
  validate(n, point.case_tag, std::max(n, 0));
  const auto t = build_T_direct<double>(n, std::abs(s));
  const ExtMatrix text = to_ext(t);
  const Eigen::Index d = text.rows();

  // Inverse iteration seeds the bordered Newton solve.
  const Ext shift = static_cast<Ext>(point.kappa) + 1e-10L * static_cast<Ext>(operator_scale(t));
  const ExtMatrix shifted = text + shift * ExtMatrix::Identity(d, d);
  const auto lu = shifted.partialPivLu();
  ExtVector v = ExtVector::Ones(d);
  for (int it = 0; it < 3; ++it) {
    v = lu.solve(v);
    v /= v.cwiseAbs().maxCoeff();
  }
  Polished pol = polish(text, static_cast<Ext>(point.kappa), normalized(v));

  EigenPair ep;
  ep.point = point;
  ep.point.n = n;
  ep.point.s = s;
  if (point.kappa == 0.0) pol.kappa = 0;
  ep.point.kappa = static_cast<double>(pol.kappa);
  ep.point.lambda = ep.point.kappa * ep.point.kappa;
  ep.p = to_polynomial(pol.p);
  ep.nodes = count_positive_roots(ep.p);
  return ep;
}

double residual(const Polynomial& p, int n, int s, double kappa) {
  if (n < 0) throw Error(Errc::InvalidInput, "negative n");
  const auto t = build_T_direct<double>(n, std::abs(s));
  const ExtMatrix text = to_ext(t);
  ExtVector v = ExtVector::Zero(n + 1);
  for (int k = 0; k <= n; ++k) v(k) = p[static_cast<std::size_t>(k)];
  if (p.degree() > n) throw Error(Errc::InvalidInput, "polynomial degree exceeds n");
  if (v.cwiseAbs().maxCoeff() == 0) throw Error(Errc::InvalidInput, "zero polynomial");
  return static_cast<double>(residual_ext(text, v, static_cast<Ext>(kappa)));
}

double residual(const EigenPair& pair) {
  return residual(pair.p, pair.point.n, pair.point.s, pair.point.kappa);
}

FieldQuantization field_quantization(const SpectralPoint& point, const DerivedParams* dp) {
  if (!(point.lambda > 0.0)) {
    throw Error(Errc::ZeroCoupling,
                "lambda = 0: either a non-normalizable wavefunction or a vanishing Coulomb interaction");
  }
  FieldQuantization fq;
  fq.b = 1.0 / point.lambda;
  if (dp != nullptr && dp->B0) fq.B = fq.b * *dp->B0;
  return fq;
}

RadialSample assemble_wavefunction(const EigenPair& pair, std::span<const double> grid, const DerivedParams* dp) {
  RadialSample out;
  out.s_abs = std::abs(pair.point.s);
  double prev = 0.0;
  for (double r : grid) {
    if (!(r > prev)) throw Error(Errc::InvalidInput, "wavefunction grid must be positive and ascending");
    prev = r;
  }
  out.rho.assign(grid.begin(), grid.end());
  out.zeta.reserve(grid.size());
  for (double r : grid) {
    out.zeta.push_back(std::exp(out.gauge_exponent * r * r) * std::pow(r, out.s_abs) * evaluate(pair.p, r));
  }
  if (dp != nullptr) {
    const double omega = pair.point.case_tag == CaseTag::Neutral ? 2.0 * dp->Omega_q : dp->omega_c;
    out.length_scale = 1.0 / std::sqrt(omega * dp->mr);
  }
  return out;
}

}  // namespace qes2d
