#include "qes2d/system.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "qes2d/error.hpp"

namespace qes2d {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::InvalidInput: return "INVALID_INPUT";
    case Errc::Degenerate: return "DEGENERATE";
    case Errc::IllConditioned: return "ILL_CONDITIONED";
    case Errc::NonNormalizable: return "NONNORMALIZABLE_CONVENTION";
    case Errc::CatalogRange: return "CATALOG_RANGE";
    case Errc::ZeroCoupling: return "ZERO_COUPLING";
    case Errc::NoConvergence: return "NO_CONVERGENCE";
    case Errc::Mismatch: return "MISMATCH";
  }
  return "UNKNOWN";
}

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::EqualLarmor: return "EqualLarmor";
    case CaseTag::Neutral: return "Neutral";
    case CaseTag::Generic: return "Generic";
  }
  return "Generic";
}

namespace {

bool is_neutral(double e1, double e2, double tol_rel) {
  return std::abs(e1 + e2) <= tol_rel * std::max(std::abs(e1), std::abs(e2));
}

// ec = mr (e1/m1 - e2/m2) = e1 mu2 - e2 mu1
bool is_equal_larmor(double e1, double e2, double mu1, double mu2, double tol_rel) {
  const double ec = e1 * mu2 - e2 * mu1;
  return std::abs(ec) <= tol_rel * std::max(std::abs(e1 * mu2), std::abs(e2 * mu1));
}

void fill_mass_terms(DerivedParams& dp) {
  const ChargePair& p = dp.pair;
  dp.M = p.m1 + p.m2;
  dp.mr = p.m1 * p.m2 / dp.M;
  dp.mu1 = p.m1 / dp.M;
  dp.mu2 = p.m2 / dp.M;
  dp.q = p.e1 + p.e2;
  dp.ec = dp.mr * (p.e1 / p.m1 - p.e2 / p.m2);
  dp.qw = p.e1 * dp.mu2 * dp.mu2 + p.e2 * dp.mu1 * dp.mu1;
}

}  // namespace

DerivedParams derive(const ChargePair& cp, double tol_rel) {
  if (!(cp.B > 0.0) || !std::isfinite(cp.B)) {
    throw Error(Errc::InvalidInput, "magnetic field B must be positive (B -> 0 is singular)");
  }
  if (!(cp.m1 > 0.0) || !(cp.m2 > 0.0) || !std::isfinite(cp.m1) || !std::isfinite(cp.m2)) {
    throw Error(Errc::InvalidInput, "masses must be positive");
  }
  if (!std::isfinite(cp.e1) || !std::isfinite(cp.e2) || (cp.e1 == 0.0 && cp.e2 == 0.0)) {
    throw Error(Errc::InvalidInput, "at least one charge must be nonzero");
  }

  DerivedParams dp;
  dp.pair = cp;
  const double mu1 = cp.m1 / (cp.m1 + cp.m2);
  const double mu2 = cp.m2 / (cp.m1 + cp.m2);

  if (is_neutral(cp.e1, cp.e2, tol_rel)) {
    if (cp.e1 < 0.0) {
      std::swap(dp.pair.e1, dp.pair.e2);
      std::swap(dp.pair.m1, dp.pair.m2);
      dp.labels_swapped = true;
    }
    dp.case_tag = CaseTag::Neutral;
  } else if (is_equal_larmor(cp.e1, cp.e2, mu1, mu2, tol_rel)) {
    if (cp.e1 < 0.0) {
      dp.pair.e1 = -cp.e1;
      dp.pair.e2 = -cp.e2;
      dp.charges_mirrored = true;
    }
    dp.case_tag = CaseTag::EqualLarmor;
  }

  fill_mass_terms(dp);
  const ChargePair& p = dp.pair;
  const double e = std::abs(p.e1);
  dp.omega_c = dp.q * p.B / dp.M;
  dp.Omega_q = e * p.B / (2.0 * dp.mr);
  dp.omega_q = e * p.B * std::abs(dp.mu2 - dp.mu1) / dp.mr;

  switch (dp.case_tag) {
    case CaseTag::EqualLarmor:
      dp.B0 = 4.0 * dp.mr * dp.M * p.e1 * p.e1 * p.e2 * p.e2 / (p.e1 + p.e2);
      break;
    case CaseTag::Neutral:
      dp.B0 = 4.0 * dp.mr * dp.mr * e * e * e;
      break;
    case CaseTag::Generic:
      break;
  }
  if (dp.B0) dp.b = p.B / *dp.B0;
  return dp;
}

CaseTag classify(const DerivedParams& dp, double tol_rel) {
  const ChargePair& p = dp.pair;
  if (is_neutral(p.e1, p.e2, tol_rel)) return CaseTag::Neutral;
  if (is_equal_larmor(p.e1, p.e2, dp.mu1, dp.mu2, tol_rel)) return CaseTag::EqualLarmor;
  return CaseTag::Generic;
}

}  // namespace qes2d
