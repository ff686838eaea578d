#include "qes2d/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qes2d/error.hpp"

namespace qes2d {

namespace {

constexpr double kPi = std::numbers::pi;

void check_range(int n) {
  if (n < 0 || n > kCatalogMaxN) {
    throw Error(Errc::CatalogRange, "closed forms are tabulated for 0 <= n <= 8, got n=" + std::to_string(n));
  }
}

// Cubic-trigonometric families n = 5, 6.
ClosedFormAux aux_cubic(int n, double S) {
  ClosedFormAux a;
  if (n == 5) {
    a.radicand = 1251 + 448 * S * (3 + S);
    a.theta = std::acos(20 * (3 + 2 * S) * (531 + 384 * S + 128 * S * S) / std::pow(a.radicand, 1.5));
  } else {
    a.radicand = 3211 + 392 * S * (7 + 2 * S);
    a.theta = std::acos(8 * (7 + 4 * S) * (1939 + 1001 * S + 286 * S * S) / std::pow(a.radicand, 1.5));
  }
  return a;
}

// Quartic families n = 7, 8 through the resolvent roots z_i.
ClosedFormAux aux_quartic(int n, double S, double s_signed) {
  ClosedFormAux a;
  if (n == 7) {
    const double u = S * (4 + S);
    a.A1 = 571527;
    a.A2 = 24416241;
    a.A3 = 246083;
    a.radicand = a.A1 + 896 * u * (281 + 32 * u);
    a.f_s = 2287 + 448 * u;
    a.theta = std::acos(9 * std::sqrt(3.0) * (a.A2 + 64 * u * (a.A3 + 64 * u * (843 + 64 * u))) /
                        std::pow(a.radicand, 1.5));
    a.F_s = -189153 - 6 * S * (72439 + 46138 * S + 8644 * S * S);
  } else {
    const double u = S * (9 + 2 * S);
    a.A1 = 2750247;
    a.A2 = 246596481;
    a.A3 = 7243319;
    a.radicand = a.A1 + 4528 * u * (97 + 4 * u);
    a.f_s = 4671 + 344 * u;
    a.theta = std::acos(9 * std::sqrt(3.0) * (a.A2 + 8 * u * (a.A3 + 1976 * u * (291 + 8 * u))) /
                        std::pow(a.radicand, 1.5));
    a.F_s = -400896 - 576 * S * (1583 + 1000 * S + 186 * S * S);
    a.G_s = -100467 - 4 * S * (46755 + 25226 * S + 4096 * S * S);
    const double s = s_signed;
    a.D_s = 40320 * (1 + 2 * s) * (3 + 2 * s) * (5 + 2 * s) * (7 + 2 * s);
  }
  for (int i = 1; i <= 3; ++i) {
    a.z.push_back(std::sqrt(12 * a.radicand) * std::cos((a.theta + 2 * i * kPi) / 3) + a.f_s);
  }
  return a;
}

}  // namespace

ClosedFormAux closed_form_aux(int n, int s) {
  check_range(n);
  const double S = std::abs(s);
  if (n == 5 || n == 6) return aux_cubic(n, S);
  if (n == 7 || n == 8) return aux_quartic(n, S, s);
  return {};
}

std::vector<double> closed_form_lambdas(int n, int s) {
  check_range(n);
  const double S = std::abs(s);
  switch (n) {
    case 0: return {0.0};
    case 1: return {1 + 2 * S};
    case 2: return {6 + 8 * S};
    case 3: {
      const double root = std::sqrt(73 + 128 * S + 64 * S * S);
      return {10 + 10 * S + root, 10 + 10 * S - root};  // -(-1)^j
    }
    case 4: {
      const double root = 3 * std::sqrt(33 + 40 * S + 16 * S * S);
      return {25 + 20 * S + root, 25 + 20 * S - root};  // (-1)^{j+1}
    }
    case 5:
    case 6: {
      const ClosedFormAux a = aux_cubic(n, S);
      const double centre = n == 5 ? 35.0 / 3 * (3 + 2 * S) : 28.0 / 3 * (7 + 4 * S);
      std::vector<double> out;
      for (int j = 1; j <= 3; ++j) {
        out.push_back(4.0 / 3 * std::sqrt(a.radicand) * std::cos((a.theta + 2 * (j - 1) * kPi) / 3) + centre);
      }
      return out;
    }
    default: {
      const ClosedFormAux a = aux_quartic(n, S, s);
      const double centre = n == 7 ? 42 * (2 + S) : 15 * (9 + 4 * S);
      const double r1 = std::sqrt(a.z[0]);
      const double r2 = std::sqrt(a.z[1]);
      const double r3 = std::sqrt(a.z[2]);
      return {centre + r1 + r2 + r3, centre + r1 - r2 - r3, centre - r1 - r2 + r3, centre - r1 + r2 - r3};
    }
  }
}

Polynomial catalog_polynomial(int n, int s, int j) {
  const std::vector<double> lambdas = closed_form_lambdas(n, s);
  if (j < 1 || j > static_cast<int>(lambdas.size())) {
    throw Error(Errc::InvalidInput, "branch j=" + std::to_string(j) + " not in the catalog for n=" + std::to_string(n));
  }
  if (n == 0) return Polynomial{1.0};

  const double L = lambdas[static_cast<std::size_t>(j - 1)];
  const double S = std::abs(s);
  const double sq = std::sqrt(L);

  // Shared denominators of the rho^3 .. rho^8 coefficients.
  const double d3 = 12 * (1 + S) * (1 + 2 * S) * (3 + 2 * S);
  const double d4 = 96 * (1 + S) * (2 + S) * (1 + 2 * S) * (3 + 2 * S);
  const double d5 = 480 * (1 + S) * (2 + S) * (1 + 2 * S) * (3 + 2 * S) * (5 + 2 * S);
  const double d6 = 5760 * (1 + S) * (2 + S) * (3 + S) * (1 + 2 * S) * (3 + 2 * S) * (5 + 2 * S);
  const double d7 = 40320 * (1 + S) * (2 + S) * (3 + S) * (1 + 2 * S) * (3 + 2 * S) * (5 + 2 * S) * (7 + 2 * S);
  const double d8 =
      645120 * (1 + S) * (2 + S) * (3 + S) * (4 + S) * (1 + 2 * S) * (3 + 2 * S) * (5 + 2 * S) * (7 + 2 * S);
  const double s2 = 3 + 8 * S + 4 * S * S;

  std::vector<double> c{1.0, sq / (1 + 2 * S)};
  if (n >= 2) c.push_back((L - n - 2 * n * S) / (4 + 12 * S + 8 * S * S));

  switch (n) {
    case 3:
      c.push_back(sq * (L - 11 - 14 * S) / d3);
      break;
    case 4:
      c.push_back(sq * (L - 16 - 20 * S) / d3);
      c.push_back((L * L - L * (34 + 32 * S) + 24 * s2) / d4);
      break;
    case 5:
      c.push_back(sq * (L - 21 - 26 * S) / d3);
      c.push_back((L * L - 4 * L * (12 + 11 * S) + 45 * s2) / d4);
      c.push_back(sq * (L * L - L * (80 + 60 * S) + 807 + 1528 * S + 596 * S * S) / d5);
      break;
    case 6:
      c.push_back(sq * (L - 26 - 32 * S) / d3);
      c.push_back((L * L - L * (62 + 56 * S) + 72 * s2) / d4);
      c.push_back(sq * (L * L - L * (110 + 80 * S) + 24 * (61 + 114 * S + 44 * S * S)) / d5);
      c.push_back((L * L * L - 2 * L * L * (80 + 50 * S) + 4 * L * (1141 + 2 * S * (847 + 272 * S)) -
                   720 * (1 + 2 * S) * (3 + 2 * S) * (5 + 2 * S)) /
                  d6);
      break;
    case 7: {
      const ClosedFormAux a = closed_form_aux(7, s);
      c.push_back(sq * (L - 31 - 38 * S) / d3);
      c.push_back((L * L - 2 * L * (38 + 34 * S) + 315 + 840 * S + 420 * S * S) / d4);
      c.push_back(sq * (L * L - L * (140 + 100 * S) + (2299 + 4264 * S + 1636 * S * S)) / d5);
      c.push_back((L * L * L - 5 * L * L * (43 + 26 * S) + L * (7999 + 4 * S * (2911 + 919 * S)) -
                   1575 * (1 + 2 * S) * (3 + 2 * S) * (5 + 2 * S)) /
                  d6);
      // "lambda_{7,j}18079" read as the product 18079 * lambda.
      c.push_back(sq * (L * L * L - 7 * L * L * (41 + 22 * S) + 28 * L * S * (793 + 217 * S) + L * 18079 + a.F_s) /
                  d7);
      break;
    }
    case 8: {
      const ClosedFormAux a = closed_form_aux(8, s);
      c.push_back(sq * (L - 36 - 44 * S) / d3);
      c.push_back((L * L - L * (90 + 80 * S) + 144 * s2) / d4);
      c.push_back(sq * (L * L - L * (170 + 120 * S) + (3312 + 6112 * S + 2336 * S * S)) / d5);
      c.push_back((L * L * L - 10 * L * L * (27 + 16 * S) + 8 * L * (1539 + S * (2214 + 692 * S)) -
                   2880 * (1 + 2 * S) * (3 + 2 * S) * (5 + 2 * S)) /
                  d6);
      c.push_back(sq * (L * L * L - 14 * L * L * (27 + 14 * S) + 7 * L * S * (657 + 176 * S) + L * 30672 + a.F_s) /
                  d7);
      c.push_back((L * L * L * L - 28 * L * L * L * (17 + 8 * S) + 4 * L * L * (14283 + 224 * S * (67 + 16 * S)) +
                   16 * L * a.G_s + a.D_s) /
                  d8);
      break;
    }
    default:
      break;
  }
  return Polynomial(std::move(c));
}

std::vector<int> catalog_index_by_branch(int n, int s) {
  const std::vector<double> lambdas = closed_form_lambdas(n, s);
  std::vector<int> idx;
  for (int j = 1; j <= static_cast<int>(lambdas.size()); ++j) {
    if (lambdas[static_cast<std::size_t>(j - 1)] > 0.0) idx.push_back(j);
  }
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return lambdas[static_cast<std::size_t>(a - 1)] > lambdas[static_cast<std::size_t>(b - 1)];
  });
  return idx;
}

double CatalogComparison::max_lambda_rel_err() const {
  double m = 0.0;
  for (const auto& e : entries) m = std::max(m, e.lambda_rel_err);
  return m;
}

double CatalogComparison::max_coeff_err() const {
  double m = 0.0;
  for (const auto& e : entries) m = std::max(m, e.coeff_max_abs_err);
  return m;
}

CatalogComparison compare_catalog(int n, int s, double coeff_tol) {
  const std::vector<double> lambdas = closed_form_lambdas(n, s);
  const std::vector<EigenPair> pairs = solve_eigenpairs(n, s, CaseTag::EqualLarmor);

  CatalogComparison out;
  out.n = n;
  out.s = s;
  for (int j = 1; j <= static_cast<int>(lambdas.size()); ++j) {
    const double L = lambdas[static_cast<std::size_t>(j - 1)];
    // The printed families are the kappa >= 0 roots; n = 0 is the zero branch.
    const EigenPair* best = nullptr;
    for (const auto& ep : pairs) {
      if (ep.point.kappa < 0.0) continue;
      if (best == nullptr || std::abs(ep.point.lambda - L) < std::abs(best->point.lambda - L)) best = &ep;
    }
    CatalogEntryCheck e;
    e.j_printed = j;
    e.lambda_closed = L;
    if (best == nullptr) {
      e.lambda_rel_err = 1.0;
      out.entries.push_back(e);
      continue;
    }
    e.branch = best->point.j;
    e.lambda_solver = best->point.lambda;
    const double ref = best->point.lambda > 0.0 ? best->point.lambda : 1.0;
    e.lambda_rel_err = std::abs(L - best->point.lambda) / ref;
    e.nodes = best->nodes;

    const Polynomial cat = catalog_polynomial(n, s, j);
    for (int k = 0; k <= n; ++k) {
      const double err = std::abs(cat[static_cast<std::size_t>(k)] - best->p[static_cast<std::size_t>(k)]);
      e.coeff_max_abs_err = std::max(e.coeff_max_abs_err, err);
      if (!(err <= coeff_tol)) e.mismatched_coeffs.push_back(k);
    }
    e.catalog_residual = residual(cat, n, s, std::sqrt(L));
    out.entries.push_back(std::move(e));
  }
  return out;
}

}  // namespace qes2d
