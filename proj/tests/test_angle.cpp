#include <doctest.h>

#include <cmath>
#include <random>

#include "torustat/angle.hpp"

using namespace torustat;

TEST_CASE("wrap_radians canonical examples") {
  CHECK(wrap_radians(0.0) == 0.0);
  CHECK(wrap_radians(-kPi / 2.0) == doctest::Approx(1.5 * kPi).epsilon(1e-15));
  CHECK(wrap_radians(7.0 * kPi) == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(wrap_radians(kTwoPi) == 0.0);
  CHECK(wrap_radians(-1e-18) < kTwoPi);  // rounding at the seam must stay in range
}

TEST_CASE("wrap_radians rejects non-finite input") {
  CHECK_THROWS_AS(wrap_radians(std::nan("")), std::domain_error);
  CHECK_THROWS_AS(wrap_radians(INFINITY), std::domain_error);
  CHECK_THROWS_AS(Angle(-INFINITY), std::domain_error);
}

TEST_CASE("wrap_radians is idempotent") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> wide(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double x = wide(gen);
    const double once = wrap_radians(x);
    CHECK(wrap_radians(once) == once);
    CHECK(once >= 0.0);
    CHECK(once < kTwoPi);
  }
}

TEST_CASE("circular_distance") {
  CHECK(circular_distance(Angle(0.1), Angle(kTwoPi - 0.1)) == doctest::Approx(0.2));
  CHECK(circular_distance(Angle(1.0), Angle(1.0)) == 0.0);
  CHECK(circular_distance(Angle(0.0), Angle(kPi)) == doctest::Approx(kPi));
}

TEST_CASE("degree conversion round trip") {
  CHECK(Angle::from_degrees(90.0).radians() == doctest::Approx(kPi / 2.0));
  CHECK(Angle::from_degrees(450.0).radians() == doctest::Approx(kPi / 2.0));
  CHECK(Angle(kPi).degrees() == doctest::Approx(180.0));
}
