#include <doctest.h>

#include "hodge/error.hpp"
#include "hodge/family.hpp"
#include "hodge/prescribe.hpp"

using namespace hodge;

namespace {

ErrorCode code_of(const TargetSpectrum& t) {
  try {
    validate(t);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

TargetSpectrum targets(std::vector<double> v) {
  TargetSpectrum t;
  t.targets[1] = std::move(v);
  t.volume = 50.0;
  return t;
}

}  // namespace

TEST_SUITE("prescribe") {
  TEST_CASE("target validation") {
    CHECK(code_of(targets({1, 1, 1})) == ErrorCode::TargetsTooClose);
    CHECK(code_of(targets({1, 1.05})) == ErrorCode::TargetsTooClose);
    CHECK(code_of(targets({1, 20})) == ErrorCode::InvalidArgument);
    auto bad = targets({1, 2});
    bad.volume = -1;
    CHECK(code_of(bad) == ErrorCode::InvalidArgument);
    CHECK_NOTHROW(validate(targets({1, 2, 2})));
  }

  TEST_CASE("target parsing") {
    const auto t = target_spectrum_from_json(
        nlohmann::json::parse(R"({"targets": {"1": [2.0, 1.0, 2.0]}, "volume": 50.0, "tol": 1e-3, "ceiling": 10.0})"));
    CHECK(t.targets.at(1) == std::vector<double>{1.0, 2.0, 2.0});
    CHECK(t.volume == 50.0);
    CHECK_THROWS_AS(target_spectrum_from_json(nlohmann::json::parse(R"({"volume": 1})")), Error);
  }

  TEST_CASE("only degree one") {
    TargetSpectrum t;
    t.targets[2] = {1.0};
    t.volume = 10;
    try {
      prescribe_spectrum(scaled_octahedron(3, 1, 40.0), t);
      FAIL("expected UnsupportedDegree");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnsupportedDegree);
    }
  }

  TEST_CASE("single simple target") {
    const auto t = targets({1.0});
    const auto r = prescribe_spectrum(scaled_octahedron(3, 1, 40.0), t);
    CHECK(r.iterations <= 3);
    CHECK(r.checks.passed());
    const auto again = verify_prescription(r.metric, t);
    CHECK(again.targets_ok);
    CHECK(again.ceiling_ok);
    CHECK(again.volume_ok);
    for (std::size_t i = 1; i < r.deviation_history.size(); ++i) {
      CHECK(r.deviation_history[i] <= r.deviation_history[i - 1]);
    }
  }
}
