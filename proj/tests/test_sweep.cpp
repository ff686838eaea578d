#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qes2d/error.hpp"
#include "qes2d/parallel.hpp"
#include "qes2d/sweep.hpp"

using namespace qes2d;

namespace {

bool same_rows(const std::vector<SpectrumRow>& a, const std::vector<SpectrumRow>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& x = a[i];
    const auto& y = b[i];
    if (x.point.n != y.point.n || x.point.s != y.point.s || x.point.j != y.point.j) return false;
    if (x.point.kappa != y.point.kappa || x.nodes != y.nodes) return false;
    if (x.closed_form != y.closed_form || x.B != y.B) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("serial and parallel sweeps agree exactly") {
  SweepSpec spec;
  spec.n = {0, 14};
  spec.s = {-3, 4};
  CHECK(same_rows(spectrum_table(spec, Exec::Serial), spectrum_table(spec, Exec::Parallel)));
  spec.case_tag = CaseTag::Neutral;
  CHECK(same_rows(spectrum_table(spec, Exec::Serial), spectrum_table(spec, Exec::Parallel)));
}

TEST_CASE("row order follows n, then s") {
  SweepSpec spec;
  spec.n = {1, 3};
  spec.s = {0, 1};
  const auto rows = spectrum_table(spec);
  CHECK(rows.size() == 2 * (2 + 3 + 4));
  int last_key = -1;
  for (const auto& r : rows) {
    const int key = r.point.n * 10 + r.point.s;
    CHECK(key >= last_key);
    last_key = key;
  }
}

TEST_CASE("closed-form column") {
  SweepSpec spec;
  spec.n = {0, 9};
  spec.s = {2, 2};
  for (const auto& r : spectrum_table(spec)) {
    if (r.point.n == 9) {
      CHECK_FALSE(r.closed_form.has_value());
      continue;
    }
    if (r.point.branch == Branch::Zero && r.point.n > 0) {
      CHECK_FALSE(r.closed_form.has_value());
      continue;
    }
    REQUIRE(r.closed_form.has_value());
    CHECK(std::abs(*r.delta) <= 1e-8 * std::max(1.0, r.point.lambda));
  }
}

TEST_CASE("dimensionful field when parameters are given") {
  SweepSpec spec;
  spec.n = {2, 2};
  spec.s = {0, 0};
  spec.params = derive({1, 1, 1, 1, 1});
  for (const auto& r : spectrum_table(spec)) {
    if (r.point.lambda > 0) {
      CHECK(*r.B == doctest::Approx(2.0 / 6.0));
      CHECK(*r.B == doctest::Approx(*r.point.b * *spec.params->B0));
    } else {
      CHECK_FALSE(r.B.has_value());
    }
  }
}

TEST_CASE("parallel_map keeps index order and rethrows the first failure") {
  const auto v = parallel_map(100, [](std::size_t i) { return static_cast<int>(i * i); }, Exec::Parallel);
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == static_cast<int>(i * i));
  try {
    parallel_map(
        50,
        [](std::size_t i) -> int {
          if (i == 7 || i == 30) throw Error(Errc::InvalidInput, "index " + std::to_string(i));
          return 0;
        },
        Exec::Parallel);
    FAIL("expected a rethrow");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("index 7") != std::string::npos);
  }
  CHECK(max_threads() >= 1);
}

TEST_CASE("range checks surface from the solver") {
  SweepSpec spec;
  spec.n = {60, 66};
  spec.s = {0, 0};
  CHECK_THROWS_AS(spectrum_table(spec), Error);
}
