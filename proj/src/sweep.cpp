#include "qes2d/sweep.hpp"

#include <cmath>

#include "qes2d/catalog.hpp"

#if defined(QES2D_HAVE_OPENMP)
#include <omp.h>
#endif

namespace qes2d {

int max_threads() {
#if defined(QES2D_HAVE_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<SpectrumRow> spectrum_rows(int n, int s, const SweepSpec& spec) {
  std::vector<double> closed;
  if (n <= kCatalogMaxN) closed = closed_form_lambdas(n, s);

  std::vector<SpectrumRow> rows;
  for (const EigenPair& ep : solve_eigenpairs(n, s, spec.case_tag, spec.solver)) {
    SpectrumRow row;
    row.point = ep.point;
    row.nodes = ep.nodes;
    const double lam = ep.point.lambda;
    if (!closed.empty() && (lam > 0.0 || n == 0)) {
      double best = closed.front();
      for (double c : closed) {
        if (std::abs(c - lam) < std::abs(best - lam)) best = c;
      }
      row.closed_form = best;
      row.delta = lam - best;
    }
    if (spec.params && spec.params->B0 && lam > 0.0) row.B = *spec.params->B0 / lam;
    rows.push_back(row);
  }
  return rows;
}

std::vector<SpectrumRow> spectrum_table(const SweepSpec& spec, Exec exec) {
  const int ns = spec.s.size();
  const auto tasks = static_cast<std::size_t>(spec.n.size()) * static_cast<std::size_t>(ns);
  auto blocks = parallel_map(
      tasks,
      [&](std::size_t t) {
        const int n = spec.n.lo + static_cast<int>(t) / ns;
        const int s = spec.s.lo + static_cast<int>(t) % ns;
        return spectrum_rows(n, s, spec);
      },
      exec);
  std::vector<SpectrumRow> out;
  for (auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace qes2d
