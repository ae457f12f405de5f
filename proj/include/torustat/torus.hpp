#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "torustat/angle.hpp"
#include "torustat/rng.hpp"
#include "torustat/stat_tests.hpp"

namespace torustat {

/// Curved torus embedded in R^3 with horizontal radius R and vertical
/// radius r; aspect ratio nu = r/R must satisfy 0 < nu <= 1.
struct TorusGeometry {
  double R = 0.0;
  double r = 0.0;

  TorusGeometry(double R, double r);
  double nu() const { return r / R; }
};

struct EmbeddedPoint {
  double x = 0.0, y = 0.0, z = 0.0;
};

/// Parametric embedding ((R + r cos t) cos p, (R + r cos t) sin p, r sin t).
EmbeddedPoint embed(const TorusGeometry& g, Angle phi, Angle theta);

/// Surface area element per (d phi d theta): r (R + r cos theta).
double area_element(const TorusGeometry& g, Angle theta);

/// Joint density of the area-uniform distribution on the surface,
/// (1 + nu cos theta) / (4 pi^2); phi does not enter.
double area_uniform_pdf(const TorusGeometry& g, Angle phi, Angle theta);

/// Draws pairs with phi ~ Uniform[0, 2 pi) and theta from the cardioid
/// theta-marginal via the exact sampler, independently.
std::vector<AnglePair> sample_area_uniform(const TorusGeometry& g, std::size_t n,
                                           RandomStream& rng);

/// Area fraction of each of the 16 quadrant combinations (Q_H x Q_V, quadrant
/// boundaries at multiples of pi/2, left-closed). Index = q_h * 4 + q_v.
/// Computed in closed form; the four phi-quadrants are identical.
std::array<double, 16> quadrant_area_proportions(const TorusGeometry& g);

/// Pearson chi-square (15 df) of the observed 16-cell quadrant counts against
/// quadrant_area_proportions. Requires at least 160 samples so every expected
/// count is >= 10; throws DataError below that.
ChiSquareResult quadrant_frequency_test(std::span<const AnglePair> samples,
                                        const TorusGeometry& g);

}  // namespace torustat
