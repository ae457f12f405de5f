#include "torustat/torus.hpp"

#include <cmath>
#include <stdexcept>

#include "torustat/cardioid.hpp"
#include "torustat/errors.hpp"

namespace torustat {

TorusGeometry::TorusGeometry(double R_, double r_) : R(R_), r(r_) {
  if (!(R > 0.0) || !(r > 0.0) || !std::isfinite(R) || !std::isfinite(r)) {
    throw std::invalid_argument("TorusGeometry: radii must be positive and finite");
  }
  if (r > R) {
    throw std::invalid_argument("TorusGeometry: requires nu = r/R <= 1");
  }
}

EmbeddedPoint embed(const TorusGeometry& g, Angle phi, Angle theta) {
  const double ring = g.R + g.r * std::cos(theta.radians());
  return {ring * std::cos(phi.radians()), ring * std::sin(phi.radians()),
          g.r * std::sin(theta.radians())};
}

double area_element(const TorusGeometry& g, Angle theta) {
  return g.r * (g.R + g.r * std::cos(theta.radians()));
}

double area_uniform_pdf(const TorusGeometry& g, Angle /*phi*/, Angle theta) {
  return (1.0 + g.nu() * std::cos(theta.radians())) / (kTwoPi * kTwoPi);
}

std::vector<AnglePair> sample_area_uniform(const TorusGeometry& g, std::size_t n,
                                           RandomStream& rng) {
  std::vector<AnglePair> out;
  out.reserve(n);
  const CardioidParams vertical(Angle{}, g.nu());
  for (std::size_t i = 0; i < n; ++i) {
    const Angle phi = rng.uniform_angle();
    const AngleSeries theta = sample_cardioid_exact(vertical, 1, rng);
    out.push_back({phi, theta.at(0)});
  }
  return out;
}

std::array<double, 16> quadrant_area_proportions(const TorusGeometry& g) {
  // Theta-quadrant mass: integral of (1 + nu cos t)/(2 pi) over [a, b) is
  // ((b - a) + nu (sin b - sin a)) / (2 pi); each phi-quadrant carries 1/4.
  const double nu = g.nu();
  std::array<double, 4> theta_mass{};
  for (int qv = 0; qv < 4; ++qv) {
    const double a = qv * (kPi / 2.0);
    const double b = a + kPi / 2.0;
    theta_mass[qv] = ((b - a) + nu * (std::sin(b) - std::sin(a))) / kTwoPi;
  }
  std::array<double, 16> out{};
  for (int qh = 0; qh < 4; ++qh) {
    for (int qv = 0; qv < 4; ++qv) {
      out[qh * 4 + qv] = 0.25 * theta_mass[qv];
    }
  }
  return out;
}

ChiSquareResult quadrant_frequency_test(std::span<const AnglePair> samples,
                                        const TorusGeometry& g) {
  if (samples.size() < 160) {
    throw DataError("quadrant_frequency_test: need at least 160 samples");
  }
  std::array<std::size_t, 16> counts{};
  for (const AnglePair& p : samples) {
    const int qh = std::min(3, static_cast<int>(p.phi.radians() / (kPi / 2.0)));
    const int qv = std::min(3, static_cast<int>(p.theta.radians() / (kPi / 2.0)));
    counts[qh * 4 + qv] += 1;
  }
  const auto expected = quadrant_area_proportions(g);
  return pearson_chi_square(counts, expected);
}

}  // namespace torustat
