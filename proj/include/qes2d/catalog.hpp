#pragma once

#include <vector>

#include "qes2d/polyops.hpp"
#include "qes2d/qes.hpp"

namespace qes2d {

inline constexpr int kCatalogMaxN = 8;

/// Intermediates of the trigonometric root formulas (n = 5..8).
struct ClosedFormAux {
  double radicand = 0.0;  ///< quantity under the outer square root / 3/2 power
  double theta = 0.0;
  double f_s = 0.0;
  double A1 = 0.0, A2 = 0.0, A3 = 0.0;
  std::vector<double> z;  ///< z_1..z_3 for n = 7, 8
  double F_s = 0.0, G_s = 0.0, D_s = 0.0;
};

/// Printed closed-form couplings lambda_{n,j}, indexed by the printed j (j = 1 first).
/// Throws Error{CatalogRange} for n outside [0, 8].
std::vector<double> closed_form_lambdas(int n, int s);

ClosedFormAux closed_form_aux(int n, int s);

/// Printed polynomial p_{n,j} (equal-Larmor branch, kappa = +sqrt(lambda)).
/// `s` is signed: the n = 8 constant D_s is printed with s, not |s|, and is
/// evaluated exactly as printed.
Polynomial catalog_polynomial(int n, int s, int j);

/// Printed index j for each physical branch in descending-lambda order.
std::vector<int> catalog_index_by_branch(int n, int s);

struct CatalogEntryCheck {
  int j_printed = 0;
  int branch = 0;  ///< descending-lambda branch index of the matching solver root
  double lambda_closed = 0.0;
  double lambda_solver = 0.0;
  double lambda_rel_err = 0.0;
  double coeff_max_abs_err = 0.0;  ///< vs the solver polynomial
  std::vector<int> mismatched_coeffs;  ///< powers whose error exceeds coeff_tol
  int nodes = 0;
  double catalog_residual = 0.0;
};

struct CatalogComparison {
  int n = 0;
  int s = 0;
  std::vector<CatalogEntryCheck> entries;
  double max_lambda_rel_err() const;
  double max_coeff_err() const;
};

/// Compares the printed catalog to the secular solver for one (n, s).
CatalogComparison compare_catalog(int n, int s, double coeff_tol = 1e-9);

}  // namespace qes2d
