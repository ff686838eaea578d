#include "qes2d/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <tuple>

#include "qes2d/error.hpp"

namespace qes2d {

namespace {

/// Symmetric tridiagonal matrix: diag[i], off[i] couples i and i+1.
struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;
};

Tridiagonal assemble(int n, int s, const RadialGrid& grid) {
  const int N = grid.num_points;
  const double h = grid.spacing();
  const double e = 0.5 * (n + 1 + std::abs(s));
  const double s2 = static_cast<double>(s) * s;
  Tridiagonal t;
  t.diag.resize(static_cast<std::size_t>(N));
  t.off.resize(static_cast<std::size_t>(N - 1));
  for (int i = 0; i < N; ++i) {
    const double r = grid.r(i);
    const double face_in = i * h;  // zero at the origin: regularity row
    const double face_out = (i + 1) * h;
    t.diag[static_cast<std::size_t>(i)] = -(face_in + face_out) / (h * h) - s2 / r - r * r * r / 4 + 2 * e * r;
    if (i + 1 < N) t.off[static_cast<std::size_t>(i)] = face_out / (h * h);
  }
  return t;
}

/// Number of eigenvalues strictly below x (LDL^T inertia).
int count_below(const Tridiagonal& t, double x) {
  const double tiny = std::numeric_limits<double>::min();
  int count = 0;
  double q = t.diag[0] - x;
  if (q < 0) ++count;
  for (std::size_t i = 1; i < t.diag.size(); ++i) {
    if (q == 0.0) q = -tiny;
    q = t.diag[i] - x - t.off[i - 1] * t.off[i - 1] / q;
    if (q < 0) ++count;
  }
  return count;
}

std::pair<double, double> gershgorin(const Tridiagonal& t) {
  double lo = std::numeric_limits<double>::max();
  double hi = std::numeric_limits<double>::lowest();
  const std::size_t N = t.diag.size();
  for (std::size_t i = 0; i < N; ++i) {
    const double radius = (i > 0 ? std::abs(t.off[i - 1]) : 0.0) + (i + 1 < N ? std::abs(t.off[i]) : 0.0);
    lo = std::min(lo, t.diag[i] - radius);
    hi = std::max(hi, t.diag[i] + radius);
  }
  return {lo, hi};
}

/// k-th smallest eigenvalue (0-based) by bisection.
double bisect_eigenvalue(const Tridiagonal& t, int k, double lo, double hi) {
  const double tol = 4 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi));
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (count_below(t, mid) > k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> eigenvalues_by_index(const Tridiagonal& t, int first, int count, Exec exec) {
  const auto [lo, hi] = gershgorin(t);
  std::vector<double> out(static_cast<std::size_t>(count));
  if (exec == Exec::Parallel) {
#if defined(QES2D_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = bisect_eigenvalue(t, first + i, lo, hi);
  } else {
    for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = bisect_eigenvalue(t, first + i, lo, hi);
  }
  return out;
}

/// Solves (t - shift) x = b with partial pivoting (three-point elimination).
std::vector<double> shifted_solve(const Tridiagonal& t, double shift, std::vector<double> b) {
  const std::size_t N = t.diag.size();
  std::vector<double> d(N), du(t.off), dl(t.off), du2(N, 0.0);
  for (std::size_t i = 0; i < N; ++i) d[i] = t.diag[i] - shift;
  const double tiny = 1e-300;
  for (std::size_t i = 0; i + 1 < N; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i])) {
      if (d[i] == 0.0) d[i] = tiny;
      const double fact = dl[i] / d[i];
      d[i + 1] -= fact * du[i];
      b[i + 1] -= fact * b[i];
    } else {
      const double fact = d[i] / dl[i];
      d[i] = dl[i];
      const double temp = d[i + 1];
      d[i + 1] = du[i] - fact * temp;
      if (i + 2 < N) {
        du2[i] = du[i + 1];
        du[i + 1] = -fact * du2[i];
      }
      du[i] = temp;
      const double bt = b[i];
      b[i] = b[i + 1];
      b[i + 1] = bt - fact * b[i + 1];
    }
  }
  if (d[N - 1] == 0.0) d[N - 1] = tiny;
  b[N - 1] /= d[N - 1];
  if (N > 1) b[N - 2] = (b[N - 2] - du[N - 2] * b[N - 1]) / d[N - 2];
  for (std::size_t i = N - 2; i-- > 0;) b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
  return b;
}

std::vector<double> eigenvector(const Tridiagonal& t, double kappa) {
  std::vector<double> v(t.diag.size(), 1.0);
  for (int it = 0; it < 3; ++it) {
    v = shifted_solve(t, kappa, std::move(v));
    double vmax = 0.0;
    for (double x : v) vmax = std::max(vmax, std::abs(x));
    for (double& x : v) x /= vmax;
  }
  const double floor = 1e-11;
  for (double x : v) {
    if (std::abs(x) > floor) {
      if (x < 0) {
        for (double& y : v) y = -y;
      }
      break;
    }
  }
  return v;
}

int count_sign_changes(const std::vector<double>& v) {
  double vmax = 0.0;
  for (double x : v) vmax = std::max(vmax, std::abs(x));
  const double floor = 1e-11 * vmax;
  int changes = 0;
  int last = 0;
  for (double x : v) {
    if (std::abs(x) <= floor) continue;
    const int sgn = x > 0 ? 1 : -1;
    if (last != 0 && sgn != last) ++changes;
    last = sgn;
  }
  return changes;
}

int tracked_count(int n, const OracleOptions& opt) { return opt.num_tracked > 0 ? opt.num_tracked : n + 1; }

}  // namespace

RadialGrid RadialGrid::default_for(int n, int s) {
  RadialGrid g;
  g.r_max = 2.0 * std::sqrt(2.0 * n + 2.0 * std::abs(s) + 2.0) + 10.0;
  g.num_points = 2000;
  return g;
}

void RadialGrid::validate(int n, int s) const {
  if (num_points < 3) throw Error(Errc::InvalidInput, "radial grid needs at least 3 points");
  if (!(r_min() <= 1e-3 * r_max)) throw Error(Errc::InvalidInput, "radial grid too coarse: r_min > 1e-3 r_max");
  if (!(r_max >= 2.0 * std::sqrt(2.0 * n + 2.0 * std::abs(s) + 2.0))) {
    throw Error(Errc::InvalidInput, "r_max does not cover the Gaussian turning region");
  }
}

std::vector<double> fd_raw_kappas(int n, int s, const RadialGrid& grid, int count, Exec exec) {
  grid.validate(n, s);
  const Tridiagonal t = assemble(n, s, grid);
  count = std::min(count, grid.num_points);
  return eigenvalues_by_index(t, grid.num_points - count, count, exec);
}

OracleResult fd_kappa_spectrum(int n, int s, const RadialGrid& grid, const OracleOptions& opt) {
  if (n < 0) throw Error(Errc::InvalidInput, "n must be nonnegative");
  grid.validate(n, s);
  RadialGrid fine = grid;
  fine.num_points *= 2;

  const Tridiagonal tc = assemble(n, s, grid);
  const Tridiagonal tf = assemble(n, s, fine);

  int first = 0;
  int count = 0;
  if (opt.window) {
    first = count_below(tc, opt.window->first);
    count = count_below(tc, opt.window->second) - first;
  } else {
    count = std::min(tracked_count(n, opt), grid.num_points);
    first = grid.num_points - count;
  }

  OracleResult res;
  res.n = n;
  res.s = s;
  res.grid = grid;
  res.kappas_coarse = eigenvalues_by_index(tc, first, count, opt.exec);
  // The same eigenvalue rank on the refined grid: ranks are counted from the top.
  res.kappas_fine = eigenvalues_by_index(tf, fine.num_points - (grid.num_points - first), count, opt.exec);

  for (int i = 0; i < count; ++i) {
    const double kc = res.kappas_coarse[static_cast<std::size_t>(i)];
    const double kf = res.kappas_fine[static_cast<std::size_t>(i)];
    if (std::abs(kf - kc) > 10.0 * opt.tol) {
      throw Error(Errc::NoConvergence, "grid refinement moved kappa=" + std::to_string(kf) + " by " +
                                           std::to_string(std::abs(kf - kc)));
    }
    res.kappas.push_back((4.0 * kf - kc) / 3.0);
    res.eigenvectors.push_back(eigenvector(tc, kc));
    res.node_counts.push_back(count_sign_changes(res.eigenvectors.back()));
  }
  return res;
}

std::vector<double> grid_convergence_order(int n, int s, const RadialGrid& grid, int count) {
  RadialGrid g2 = grid;
  g2.num_points *= 2;
  RadialGrid g4 = grid;
  g4.num_points *= 4;
  const auto k1 = fd_raw_kappas(n, s, grid, count);
  const auto k2 = fd_raw_kappas(n, s, g2, count);
  const auto k4 = fd_raw_kappas(n, s, g4, count);
  std::vector<double> orders;
  for (std::size_t i = 0; i < k1.size(); ++i) {
    const double d12 = std::abs(k1[i] - k2[i]);
    const double d24 = std::abs(k2[i] - k4[i]);
    if (d12 < 1e-9 || d24 == 0.0) continue;
    orders.push_back(std::log2(d12 / d24));
  }
  return orders;
}

double OracleReport::max_abs_err() const {
  double m = 0.0;
  for (const auto& mt : matches) {
    if (mt.kappa_fd) m = std::max(m, mt.abs_err);
  }
  return m;
}

bool OracleReport::nodes_all_agree() const {
  return std::all_of(matches.begin(), matches.end(), [](const OracleMatch& m) { return m.nodes_agree; });
}

OracleReport oracle_match(std::span<const EigenPair> algebraic, const OracleResult& oracle, double tol) {
  OracleReport rep;
  rep.n = oracle.n;
  rep.s = oracle.s;
  rep.grid = oracle.grid;
  rep.tol = tol;

  std::vector<std::tuple<double, std::size_t, std::size_t>> candidates;
  for (std::size_t a = 0; a < algebraic.size(); ++a) {
    for (std::size_t f = 0; f < oracle.kappas.size(); ++f) {
      candidates.emplace_back(std::abs(algebraic[a].point.kappa - oracle.kappas[f]), a, f);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  std::vector<std::optional<std::size_t>> partner(algebraic.size());
  std::vector<bool> used(oracle.kappas.size(), false);
  for (const auto& [dist, a, f] : candidates) {
    if (partner[a] || used[f]) continue;
    partner[a] = f;
    used[f] = true;
  }

  for (std::size_t a = 0; a < algebraic.size(); ++a) {
    const EigenPair& ep = algebraic[a];
    OracleMatch m;
    m.j = ep.point.j;
    m.branch = ep.point.branch;
    m.kappa_alg = ep.point.kappa;
    m.nodes_alg = ep.nodes;
    if (partner[a]) {
      const std::size_t f = *partner[a];
      m.kappa_fd = oracle.kappas[f];
      m.abs_err = std::abs(*m.kappa_fd - m.kappa_alg);
      m.nodes_fd = oracle.node_counts[f];
      m.within_tol = m.abs_err <= tol;
      m.nodes_agree = *m.nodes_fd == m.nodes_alg;
    }
    if (ep.point.physical() && !m.within_tol) rep.status = MatchStatus::Mismatch;
    rep.matches.push_back(m);
  }
  return rep;
}

}  // namespace qes2d
