#include "qes2d/sl2rep.hpp"

#include <algorithm>
#include <string>

#include "qes2d/error.hpp"

namespace qes2d {

double CommutatorReport::max_deviation() const {
  return std::max({dev_j0_jplus, dev_j0_jminus, dev_jminus_jplus});
}

namespace {

// Largest |entry| over the columns whose images stay inside P_N.
double max_abs_valid(const Operator<Exact>& op, int last_col) {
  Exact worst = 0;
  for (int c = 0; c <= last_col; ++c) {
    for (Exact v : op.column(c)) {
      if (v < 0) v = -v;
      if (v > worst) worst = v;
    }
  }
  return worst.convert_to<double>();
}

}  // namespace

CommutatorReport commutator_check(int n, int N) {
  if (n < 0 || N < n + 2) {
    throw Error(Errc::InvalidInput,
                "commutator check needs N >= n + 2 (got n=" + std::to_string(n) + ", N=" + std::to_string(N) + ")");
  }
  const auto jp = jplus(n, N);
  const auto j0 = jzero(n, N);
  const auto jm = jminus(N);
  const int last = N - 2;

  CommutatorReport rep;
  rep.n = n;
  rep.N = N;
  rep.dev_j0_jplus = max_abs_valid(j0 * jp - jp * j0 - jp, last);
  rep.dev_j0_jminus = max_abs_valid(j0 * jm - jm * j0 + jm, last);
  rep.dev_jminus_jplus = max_abs_valid(jm * jp - jp * jm - Exact(2) * j0, last);
  return rep;
}

}  // namespace qes2d
