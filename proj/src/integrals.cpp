#include "qes2d/integrals.hpp"

#include <algorithm>
#include <cmath>

#include "qes2d/error.hpp"

namespace qes2d {

std::string_view to_string(AnnihilatorConvention c) {
  return c == AnnihilatorConvention::AsPrinted ? "as_printed" : "euler_cartan";
}

namespace {

int factor_sign(AnnihilatorConvention conv) { return conv == AnnihilatorConvention::AsPrinted ? 1 : -1; }

Exact abs_exact(Exact v) { return v < 0 ? Exact(-v) : v; }

double column_norm(const Operator<Exact>& op, std::size_t col) {
  Exact m = 0;
  for (const Exact& v : op.column(col)) m = std::max(m, abs_exact(v));
  return m.convert_to<double>();
}

}  // namespace

AnnihilatorOp build_annihilator(int n, int N, AnnihilatorConvention conv) {
  if (n < 0 || N < n) throw Error(Errc::InvalidInput, "annihilator needs 0 <= n <= N");
  AnnihilatorOp a;
  a.n = n;
  a.convention = conv;
  const int sign = factor_sign(conv);
  // Each factor (rho d/drho + sign j) is diagonal; compose them one by one.
  a.op = Operator<Exact>(static_cast<std::size_t>(N) + 1);
  for (int k = 0; k <= N; ++k) a.op(k, k) = 1;
  for (int j = 0; j <= n; ++j) {
    Operator<Exact> factor(static_cast<std::size_t>(N) + 1);
    for (int k = 0; k <= N; ++k) factor(k, k) = Exact(k + sign * j);
    a.op = factor * a.op;
  }
  return a;
}

AnnihilationReport annihilation_check(int n) {
  AnnihilationReport rep;
  rep.n = n;
  const auto plus = build_annihilator(n, n, AnnihilatorConvention::AsPrinted);
  const auto minus = build_annihilator(n, n, AnnihilatorConvention::EulerCartan);
  for (int k = 0; k <= n; ++k) {
    rep.per_basis_as_printed.push_back(column_norm(plus.op, static_cast<std::size_t>(k)));
    rep.per_basis_euler_cartan.push_back(column_norm(minus.op, static_cast<std::size_t>(k)));
  }
  auto all_zero = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
  };
  rep.as_printed_annihilates = all_zero(rep.per_basis_as_printed);
  rep.euler_cartan_annihilates = all_zero(rep.per_basis_euler_cartan);
  return rep;
}

double commutator_image_norm(int n, int s, int k, AnnihilatorConvention conv) {
  const int N = std::max(n, k) + 2;
  const auto t = build_T_direct<Exact>(n, std::abs(s), N);
  const auto i = build_annihilator(n, N, conv).op;
  const auto comm = t * i - i * t;
  return column_norm(comm, static_cast<std::size_t>(k));
}

ParticularIntegralReport commutator_particular_check(int n, int s, AnnihilatorConvention conv) {
  if (n < 0) throw Error(Errc::InvalidInput, "n must be nonnegative");
  ParticularIntegralReport rep;
  rep.n = n;
  rep.s = s;
  rep.convention = conv;
  const int N = n + 2;
  const auto t = build_T_direct<Exact>(n, std::abs(s), N);
  const auto i = build_annihilator(n, N, conv).op;
  const auto comm = t * i - i * t;
  for (int k = 0; k <= n; ++k) {
    rep.per_basis.push_back(column_norm(comm, static_cast<std::size_t>(k)));
    rep.max_image_norm = std::max(rep.max_image_norm, rep.per_basis.back());
  }
  return rep;
}

std::vector<double> gauge_rotated_action(const Polynomial& p, int n, int s, std::span<const double> grid,
                                         AnnihilatorConvention conv) {
  const int sign = factor_sign(conv);
  // i_n is diagonal on monomials: rho^k -> prod_j (k + sign j) rho^k.
  std::vector<double> image(p.coeffs().size());
  for (std::size_t k = 0; k < image.size(); ++k) {
    double f = 1.0;
    for (int j = 0; j <= n; ++j) f *= static_cast<double>(static_cast<int>(k) + sign * j);
    image[k] = f * p.coeffs()[k];
  }
  const Polynomial ip(std::move(image));
  const int sa = std::abs(s);
  std::vector<double> out;
  out.reserve(grid.size());
  for (double r : grid) out.push_back(std::exp(-0.25 * r * r) * std::pow(r, sa) * evaluate(ip, r));
  return out;
}

std::vector<double> gauge_rotated_action(const EigenPair& pair, std::span<const double> grid,
                                         AnnihilatorConvention conv) {
  return gauge_rotated_action(pair.p, pair.point.n, pair.point.s, grid, conv);
}

}  // namespace qes2d
