#pragma once

#include <optional>
#include <string_view>

namespace qes2d {

/// Which separable sub-problem a pair of charges belongs to.
enum class CaseTag { EqualLarmor, Neutral, Generic };

std::string_view to_string(CaseTag tag);

/// Physical input: two charges and masses in a field B (hbar = c = 1, Gaussian units).
struct ChargePair {
  double e1 = 0.0;
  double e2 = 0.0;
  double m1 = 1.0;
  double m2 = 1.0;
  double B = 1.0;
};

/// Scalars derived from a ChargePair.
///
/// `pair` holds the pair after relabelling: for a neutral system the labels are
/// swapped when needed so that e1 > 0, and for an equal-Larmor pair of negative
/// charges both signs are flipped (the mirror image in the field) so that
/// e1, e2 > 0. `B0` and `b` are only defined for the two solvable cases.
struct DerivedParams {
  ChargePair pair;
  double M = 0.0;
  double mr = 0.0;
  double mu1 = 0.0;
  double mu2 = 0.0;
  double q = 0.0;
  double ec = 0.0;
  double qw = 0.0;
  double omega_c = 0.0;
  double Omega_q = 0.0;
  double omega_q = 0.0;
  std::optional<double> B0;
  std::optional<double> b;
  CaseTag case_tag = CaseTag::Generic;
  bool labels_swapped = false;
  bool charges_mirrored = false;
};

inline constexpr double kDefaultClassifyTol = 1e-12;

/// Throws Error{InvalidInput} for B <= 0, non-positive masses or two zero charges.
DerivedParams derive(const ChargePair& cp, double tol_rel = kDefaultClassifyTol);

/// Neutral is tested first, then EqualLarmor.
CaseTag classify(const DerivedParams& dp, double tol_rel = kDefaultClassifyTol);

}  // namespace qes2d
