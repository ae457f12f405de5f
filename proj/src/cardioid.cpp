#include "torustat/cardioid.hpp"

#include <cmath>
#include <stdexcept>

#include "torustat/errors.hpp"

namespace torustat {

namespace {
constexpr double kQuantileTol = 1e-12;
constexpr int kQuantileMaxIter = 200;
constexpr double kNewtonDerivativeFloor = 1e-3;

void require_zero_mean(const CardioidParams& p, const char* op) {
  if (p.mu.radians() != 0.0) {
    throw std::invalid_argument(std::string(op) + ": stated for the zero-mean form; rotate outside");
  }
}
}  // namespace

CardioidParams::CardioidParams(Angle mu_, double rho_) : mu(mu_), rho(rho_) {
  if (!std::isfinite(rho) || std::fabs(rho) > 1.0) {
    throw std::invalid_argument("CardioidParams: |rho| must be <= 1");
  }
}

double cardioid_pdf(const CardioidParams& p, Angle y) {
  return (1.0 + p.rho * std::cos(y.radians() - p.mu.radians())) / kTwoPi;
}

double cardioid_cdf(const CardioidParams& p, Angle y) {
  require_zero_mean(p, "cardioid_cdf");
  const double v = y.radians();
  return (v + p.rho * std::sin(v)) / kTwoPi;
}

Angle cardioid_quantile(const CardioidParams& p, double u) {
  require_zero_mean(p, "cardioid_quantile");
  if (!(u > 0.0 && u < 1.0)) {
    throw std::invalid_argument("cardioid_quantile: u must lie in (0, 1)");
  }
  // G(y) = (y + rho sin y)/(2 pi) - u is continuous and nondecreasing on
  // [0, 2 pi], G(0) = -u < 0, G(2 pi) = 1 - u > 0.
  double lo = 0.0, hi = kTwoPi;
  double y = u * kTwoPi;  // uniform-case solution as the initial guess
  for (int it = 0; it < kQuantileMaxIter; ++it) {
    const double g = (y + p.rho * std::sin(y)) / kTwoPi - u;
    if (std::fabs(g) <= kQuantileTol) return Angle(y);
    if (g > 0.0) {
      hi = y;
    } else {
      lo = y;
    }
    const double deriv = (1.0 + p.rho * std::cos(y)) / kTwoPi;
    double next = y - g / deriv;  // Newton step
    if (!(deriv > kNewtonDerivativeFloor) || next <= lo || next >= hi) {
      next = 0.5 * (lo + hi);  // fall back to bisection
    }
    y = next;
  }
  throw NumericError("cardioid_quantile: no convergence");
}

AngleSeries sample_cardioid_exact(const CardioidParams& p, std::size_t n, RandomStream& rng) {
  AngleSeries out;
  const double mu = p.mu.radians();
  for (std::size_t i = 0; i < n; ++i) {
    const double theta = rng.uniform() * kTwoPi;
    const double u = rng.uniform();
    const double accept_prob = 0.5 * (1.0 + p.rho * std::cos(theta));
    double y;
    if (u < accept_prob) {
      y = theta;
    } else if (theta < kPi) {
      y = kPi - theta;
    } else {
      y = 3.0 * kPi - theta;
    }
    out.push_back(Angle(y + mu));
  }
  return out;
}

RejectionSampleResult sample_cardioid_rejection_aur(const CardioidParams& p, std::size_t n,
                                                    RandomStream& rng) {
  require_zero_mean(p, "sample_cardioid_rejection_aur");
  if (!(p.rho > 0.0)) {
    throw std::invalid_argument("sample_cardioid_rejection_aur: requires 0 < rho <= 1");
  }
  RejectionSampleResult result;
  while (result.values.size() < n) {
    const double theta = rng.uniform() * kTwoPi;
    const double u = rng.uniform();
    ++result.proposals;
    if (u < 0.5 * (1.0 + p.rho * std::cos(theta))) {
      result.values.push_back(Angle(theta));
    }
  }
  result.acceptance_rate =
      result.proposals == 0 ? 0.0
                            : static_cast<double>(n) / static_cast<double>(result.proposals);
  return result;
}

}  // namespace torustat
