#include "doctest.h"

#include <cmath>

#include "fwm/core.hpp"

using namespace fwm;

TEST_CASE("validate_params accepts the standard parameter sets") {
  CHECK_NOTHROW(validate_params({200.0, 0.0, 0.03}));
  CHECK_NOTHROW(validate_params({50.0, 1e-4, 0.03}));
}

TEST_CASE("validate_params names the violated field") {
  try {
    validate_params({0.0, 0.0, 0.03});
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPositiveAlpha);
  }
  try {
    validate_params({50.0, -1.0, 0.03});
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NegativeGamma);
  }
  try {
    validate_params({50.0, 0.0, 0.0});
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPositiveProbe);
  }
}

TEST_CASE("validation is idempotent") {
  const MediumParams p{200.0, 1e-4, 0.03};
  const MediumParams q = validate_params(validate_params(p));
  CHECK(q.alpha == p.alpha);
  CHECK(q.gamma == p.gamma);
  CHECK(q.omega_p0 == p.omega_p0);
}

TEST_CASE("mode_basis endpoints") {
  const ModeBasis b0 = mode_basis(0.0);
  CHECK(b0.dark(0) == 1.0);
  CHECK(b0.dark(1) == 0.0);
  CHECK(b0.bright(0) == 0.0);
  CHECK(b0.bright(1) == -1.0);

  const ModeBasis b1 = mode_basis(M_PI / 2);
  CHECK(b1.dark(0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(b1.dark(1) == doctest::Approx(1.0));
  CHECK(b1.bright(0) == doctest::Approx(1.0));

  const ModeBasis bq = mode_basis(M_PI / 4);
  CHECK(bq.dark(0) == doctest::Approx(std::sqrt(0.5)));
  CHECK(bq.dark(1) == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("mode_basis vectors are orthonormal across the range") {
  for (int i = 0; i <= 100; ++i) {
    const ModeBasis b = mode_basis(M_PI / 2 * i / 100.0);
    CHECK(std::abs(b.dark.dot(b.bright)) <= 1e-12);
    CHECK(std::abs(b.dark.norm() - 1.0) <= 1e-12);
    CHECK(std::abs(b.bright.norm() - 1.0) <= 1e-12);
  }
}

TEST_CASE("mode_basis rejects out-of-range angles") {
  CHECK_THROWS_AS(mode_basis(-0.1), Error);
  CHECK_THROWS_AS(mode_basis(M_PI), Error);
}
