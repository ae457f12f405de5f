#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace torustat {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kPi = std::numbers::pi;

/// Wraps a finite value into [0, 2*pi). Throws std::domain_error on NaN/inf.
inline double wrap_radians(double x) {
  if (!std::isfinite(x)) {
    throw std::domain_error("wrap_radians: non-finite input");
  }
  double y = std::fmod(x, kTwoPi);
  if (y < 0.0) y += kTwoPi;
  if (y >= kTwoPi) y = 0.0;  // fmod rounding can land exactly on 2*pi
  return y;
}

/// An angle in radians, canonically represented in [0, 2*pi).
class Angle {
 public:
  constexpr Angle() = default;
  explicit Angle(double radians) : value_(wrap_radians(radians)) {}

  double radians() const { return value_; }
  double degrees() const { return value_ * (180.0 / kPi); }

  static Angle from_degrees(double deg) { return Angle(deg * (kPi / 180.0)); }

  friend bool operator==(Angle a, Angle b) { return a.value_ == b.value_; }

 private:
  double value_ = 0.0;
};

inline Angle wrap_angle(double radians) { return Angle(radians); }

/// Shortest arc length between two angles, in [0, pi].
inline double circular_distance(Angle a, Angle b) {
  double d = std::fabs(a.radians() - b.radians());
  return d > kPi ? kTwoPi - d : d;
}

/// One observation on the torus: horizontal angle phi, vertical angle theta.
struct AnglePair {
  Angle phi;
  Angle theta;
};

}  // namespace torustat
