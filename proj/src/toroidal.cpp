#include "torustat/toroidal.hpp"

#include <cmath>
#include <stdexcept>

#include "torustat/cardioid.hpp"
#include "torustat/errors.hpp"
#include "torustat/quadrature.hpp"
#include "torustat/special.hpp"

namespace torustat {

namespace {
constexpr double kFourPiSq = kTwoPi * kTwoPi;
constexpr double kMarginalQuadTol = 1e-10;
}  // namespace

ToroidalParams::ToroidalParams(double nu_, double kappa_, double lambda_, Angle mu1_, Angle mu2_)
    : nu(nu_), kappa(kappa_), lambda(lambda_), mu1(mu1_), mu2(mu2_) {
  if (!(nu > 0.0) || nu > 1.0 || !std::isfinite(nu)) {
    throw std::invalid_argument("ToroidalParams: requires 0 < nu <= 1");
  }
  if (!std::isfinite(kappa) || std::fabs(kappa) > 1.0) {
    throw std::invalid_argument("ToroidalParams: requires -1 <= kappa <= 1");
  }
  if (!std::isfinite(lambda)) {
    throw std::invalid_argument("ToroidalParams: lambda must be finite");
  }
}

double joint_pdf(const ToroidalParams& p, Angle phi, Angle theta) {
  const double dt = theta.radians() - p.mu1.radians();
  const double dp = phi.radians() - p.mu2.radians();
  return (1.0 + p.nu * std::cos(dt)) * (1.0 - p.kappa * std::sin(dp + p.lambda * dt)) /
         kFourPiSq;
}

double marginal_theta_pdf(const ToroidalParams& p, Angle theta) {
  return (1.0 + p.nu * std::cos(theta.radians() - p.mu1.radians())) / kTwoPi;
}

double conditional_phi_pdf(const ToroidalParams& p, Angle phi, Angle theta) {
  const double dt = theta.radians() - p.mu1.radians();
  const double dp = phi.radians() - p.mu2.radians();
  return (1.0 - p.kappa * std::sin(dp + p.lambda * dt)) / kTwoPi;
}

Angle conditional_phi_mean_direction(const ToroidalParams& p, Angle theta) {
  const double dt = theta.radians() - p.mu1.radians();
  return Angle(1.5 * kPi + p.mu2.radians() - p.lambda * dt);
}

double coefficient_a(double nu, double kappa, double lambda) {
  // sinc_pi(t) = sin(pi t) / (pi t), extended to 1 at t = 0.
  const auto sinc_pi = [](double t) {
    if (std::fabs(t) < 1e-8) {
      const double z = kPi * t;
      return 1.0 - z * z / 6.0;
    }
    return sin_pi(t) / (kPi * t);
  };
  const double bracket = lambda * lambda * (1.0 + nu) - 1.0;
  // Factor the closed form so each removable singularity is absorbed into a
  // sinc term evaluated near zero; the three rewrites agree exactly where
  // their regions overlap.
  if (std::fabs(lambda) <= 0.5) {
    return kappa * (bracket / (lambda * lambda - 1.0)) * sinc_pi(lambda);
  }
  if (std::fabs(lambda - 1.0) <= 0.5) {
    return -kappa * bracket / (lambda * (lambda + 1.0)) * sinc_pi(lambda - 1.0);
  }
  if (std::fabs(lambda + 1.0) <= 0.5) {
    return -kappa * bracket / (lambda * (lambda - 1.0)) * sinc_pi(lambda + 1.0);
  }
  return kappa * bracket * sin_pi(lambda) / (kPi * lambda * (lambda * lambda - 1.0));
}

double marginal_phi_pdf_closed(const ToroidalParams& p, Angle phi) {
  if (p.mu1.radians() != 0.0 || p.mu2.radians() != 0.0) {
    throw std::invalid_argument(
        "marginal_phi_pdf_closed: derived for mu1 = mu2 = 0; use marginal_phi_pdf_numeric");
  }
  const double a = coefficient_a(p.nu, p.kappa, p.lambda);
  const double mean_dir = 1.5 * kPi - p.lambda * kPi;
  return (1.0 + a * std::cos(phi.radians() - mean_dir)) / kTwoPi;
}

double marginal_phi_pdf_numeric(const ToroidalParams& p, Angle phi) {
  QuadratureOptions opts;
  opts.abs_tolerance = kMarginalQuadTol;
  return integrate([&](double t) { return joint_pdf(p, phi, Angle(t)); }, 0.0, kTwoPi, opts);
}

double conditional_theta_pdf(const ToroidalParams& p, Angle theta, Angle phi) {
  const double marginal = marginal_phi_pdf_numeric(p, phi);
  if (!(marginal > 0.0)) {
    throw NumericError("conditional_theta_pdf: phi-marginal vanishes at phi");
  }
  return joint_pdf(p, phi, theta) / marginal;
}

std::vector<AnglePair> sample_joint(const ToroidalParams& p, std::size_t n, RandomStream& rng) {
  std::vector<AnglePair> out;
  out.reserve(n);
  const CardioidParams theta_marginal(p.mu1, p.nu);
  for (std::size_t i = 0; i < n; ++i) {
    const Angle theta = sample_cardioid_exact(theta_marginal, 1, rng).at(0);
    const CardioidParams phi_conditional(conditional_phi_mean_direction(p, theta), p.kappa);
    const Angle phi = sample_cardioid_exact(phi_conditional, 1, rng).at(0);
    out.push_back({phi, theta});
  }
  return out;
}

}  // namespace torustat
