#pragma once

#include <cstddef>

#include "torustat/angle.hpp"
#include "torustat/rng.hpp"
#include "torustat/series.hpp"

namespace torustat {

/// Cardioid distribution with density (1 + rho cos(y - mu)) / (2 pi).
/// rho is a signed concentration, |rho| <= 1; negative rho is the same family
/// rotated by pi.
struct CardioidParams {
  Angle mu;
  double rho = 0.0;

  CardioidParams(Angle mu, double rho);
};

/// Density at y.
double cardioid_pdf(const CardioidParams& p, Angle y);

/// CDF (y + rho sin y) / (2 pi) of the zero-mean form.
/// Throws std::invalid_argument when p.mu != 0; callers handle a nonzero mean
/// direction by rotation.
double cardioid_cdf(const CardioidParams& p, Angle y);

/// Inverse CDF of the zero-mean form, |cdf(result) - u| <= 1e-12.
/// Safeguarded bisection with Newton acceleration; used for QQ diagnostics
/// only, the sampler below does not invert the CDF.
Angle cardioid_quantile(const CardioidParams& p, double u);

/// Exact sampler. Each draw consumes exactly one (Theta, U) uniform pair and
/// never rejects: with p(Theta) = (1 + rho cos Theta) / 2,
///   Y = Theta            if U < p(Theta),
///   Y = pi - Theta       otherwise, when Theta < pi,
///   Y = 3 pi - Theta     otherwise,
/// then Y is rotated by mu. Valid for rho in [-1, 1].
AngleSeries sample_cardioid_exact(const CardioidParams& p, std::size_t n, RandomStream& rng);

struct RejectionSampleResult {
  AngleSeries values;
  double acceptance_rate = 0.0;   // accepted / proposals
  std::size_t proposals = 0;
};

/// Acceptance-rejection baseline: propose Theta ~ Uniform[0, 2 pi), accept
/// with probability (1 + rho cos Theta) / 2. Requires mu = 0 and
/// 0 < rho <= 1. Kept for benchmarking against the exact sampler.
RejectionSampleResult sample_cardioid_rejection_aur(const CardioidParams& p, std::size_t n,
                                                    RandomStream& rng);

}  // namespace torustat
