#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qes2d/error.hpp"
#include "qes2d/system.hpp"

using namespace qes2d;

TEST_CASE("two unit charges") {
  const auto dp = derive({1, 1, 1, 1, 1});
  CHECK(dp.M == doctest::Approx(2.0));
  CHECK(dp.mr == doctest::Approx(0.5));
  CHECK(dp.q == doctest::Approx(2.0));
  CHECK(dp.ec == 0.0);
  CHECK(dp.omega_c == doctest::Approx(1.0));  // qB/M
  REQUIRE(dp.B0);
  CHECK(*dp.B0 == doctest::Approx(2.0));
  CHECK(*dp.b == doctest::Approx(0.5));
  CHECK(dp.case_tag == CaseTag::EqualLarmor);
}

TEST_CASE("electron-positron pair") {
  const auto dp = derive({1, -1, 1, 1, 1});
  CHECK(dp.q == 0.0);
  CHECK(dp.ec == doctest::Approx(1.0));
  CHECK(dp.Omega_q == doctest::Approx(1.0));
  CHECK(dp.omega_q == 0.0);
  CHECK(*dp.B0 == doctest::Approx(1.0));
  CHECK(*dp.b == doctest::Approx(1.0));
  CHECK(dp.case_tag == CaseTag::Neutral);
  CHECK_FALSE(dp.labels_swapped);
}

TEST_CASE("neutral pair with negative first charge swaps labels") {
  const auto dp = derive({-2, 2, 1, 3, 0.5});
  CHECK(dp.labels_swapped);
  CHECK(dp.pair.e1 == 2.0);
  CHECK(dp.pair.m1 == 3.0);
  CHECK(*dp.B0 == doctest::Approx(4.0 * dp.mr * dp.mr * 8.0));
  CHECK(*dp.b * *dp.B0 == doctest::Approx(0.5));
}

TEST_CASE("equal cyclotron ratio is equal-Larmor") {
  const auto dp = derive({2, 1, 2, 1, 1});
  CHECK(dp.case_tag == CaseTag::EqualLarmor);
  CHECK(std::abs(dp.ec) <= 1e-15);
}

TEST_CASE("generic pair has no characteristic field") {
  const auto dp = derive({1, 2, 1, 1, 1});
  CHECK(dp.case_tag == CaseTag::Generic);
  CHECK_FALSE(dp.B0.has_value());
  CHECK_FALSE(dp.b.has_value());
  CHECK(classify(dp) == CaseTag::Generic);
}

TEST_CASE("classify agrees with derive") {
  for (const ChargePair cp : {ChargePair{1, 1, 1, 1, 1}, ChargePair{1, -1, 2, 5, 3}, ChargePair{3, 1, 2, 1, 1},
                              ChargePair{1, 0.5, 2, 1, 0.1}}) {
    const auto dp = derive(cp);
    CHECK(classify(dp) == dp.case_tag);
  }
}

TEST_CASE("mass identities") {
  for (double a : {0.1, 1.0, 7.5, 1e3}) {
    const auto dp = derive({1, 2, 1.3 * a, 0.4 * a, 1});
    CHECK(dp.mu1 + dp.mu2 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(dp.mr * (1 / dp.pair.m1 + 1 / dp.pair.m2) - 1.0) <= 1e-14);
    CHECK(dp.mu1 == doctest::Approx(1.3 / 1.7).epsilon(1e-14));
    CHECK(dp.ec == doctest::Approx(dp.mr * (1 / dp.pair.m1 - 2 / dp.pair.m2)));
    CHECK(dp.qw == doctest::Approx(dp.mu2 * dp.mu2 + 2 * dp.mu1 * dp.mu1));
  }
}

TEST_CASE("invalid input") {
  auto code = [](const ChargePair& cp) {
    try {
      derive(cp);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Mismatch;
  };
  CHECK(code({1, 1, 1, 1, 0}) == Errc::InvalidInput);
  CHECK(code({1, 1, 1, 1, -1}) == Errc::InvalidInput);
  CHECK(code({1, 1, 0, 1, 1}) == Errc::InvalidInput);
  CHECK(code({1, 1, 1, -2, 1}) == Errc::InvalidInput);
  CHECK(code({0, 0, 1, 1, 1}) == Errc::InvalidInput);
}

TEST_CASE("classification tolerance is relative") {
  const auto near = derive({1.0, -1.0 + 1e-14, 1, 1, 1});
  CHECK(near.case_tag == CaseTag::Neutral);
  const auto off = derive({1.0, -1.0 + 1e-6, 1, 1, 1});
  CHECK(off.case_tag == CaseTag::Generic);
  CHECK(derive({1.0, -1.0 + 1e-6, 1, 1, 1}, 1e-5).case_tag == CaseTag::Neutral);
}
