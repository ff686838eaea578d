#pragma once

#include <optional>
#include <vector>

#include "qes2d/parallel.hpp"
#include "qes2d/qes.hpp"

namespace qes2d {

struct IntRange {
  int lo = 0;
  int hi = 0;
  int size() const { return hi >= lo ? hi - lo + 1 : 0; }
};

struct SpectrumRow {
  SpectralPoint point;
  int nodes = 0;
  std::optional<double> closed_form;  ///< printed lambda for n <= 8
  std::optional<double> delta;        ///< lambda - closed_form
  std::optional<double> B;            ///< dimensionful field when parameters are known
};

struct SweepSpec {
  IntRange n;
  IntRange s;
  CaseTag case_tag = CaseTag::EqualLarmor;
  SolverOptions solver;
  std::optional<DerivedParams> params;
};

/// Spectra for every (n, s) in the ranges, ordered by n, then s, then the
/// per-(n, s) order of solve_eigenpairs.
std::vector<SpectrumRow> spectrum_table(const SweepSpec& spec, Exec exec = Exec::Parallel);

/// Rows for one (n, s).
std::vector<SpectrumRow> spectrum_rows(int n, int s, const SweepSpec& spec);

}  // namespace qes2d
