#pragma once

#include <cstddef>
#include <vector>

#include "torustat/angle.hpp"
#include "torustat/rng.hpp"

namespace torustat {

/// The five-parameter dependent toroidal distribution with joint density
///
///   h(phi, theta) = (1/4 pi^2) [1 + nu cos(theta - mu1)]
///                             [1 - kappa sin((phi - mu2) + lambda (theta - mu1))]
///
/// on [0, 2 pi)^2, with 0 < nu <= 1, -1 <= kappa <= 1, lambda real.
///
/// Sign convention: the conditional mean direction of Phi given Theta = theta
/// is (3 pi/2 + mu2 - lambda (theta - mu1)) mod 2 pi; the same convention is
/// used by the sampler and the regression module. Angle differences such as
/// theta - mu1 are taken between canonical representatives in [0, 2 pi), so
/// for non-integer lambda the density lives on the half-open square rather
/// than the torus (it is discontinuous across theta = 0 == 2 pi).
struct ToroidalParams {
  double nu = 0.5;
  double kappa = 0.0;
  double lambda = 0.0;
  Angle mu1;
  Angle mu2;

  ToroidalParams(double nu, double kappa, double lambda, Angle mu1, Angle mu2);
};

/// Joint density at (phi, theta); nonnegative for valid parameters.
double joint_pdf(const ToroidalParams& p, Angle phi, Angle theta);

/// Theta-marginal: cardioid with mean direction mu1 and concentration nu.
double marginal_theta_pdf(const ToroidalParams& p, Angle theta);

/// Conditional density of Phi given Theta = theta: cardioid with
/// concentration kappa and mean direction conditional_phi_mean_direction.
double conditional_phi_pdf(const ToroidalParams& p, Angle phi, Angle theta);

/// (3 pi/2 + mu2 - lambda (theta - mu1)) mod 2 pi. This is the circular mean
/// direction of Phi | Theta = theta when kappa > 0; for kappa < 0 the actual
/// mean direction sits at the antipode (cardioid with negative concentration).
Angle conditional_phi_mean_direction(const ToroidalParams& p, Angle theta);

/// Resultant coefficient of the phi-marginal (mu1 = mu2 = 0 form),
///   A = kappa {lambda^2 (1 + nu) - 1} sin(lambda pi) / (pi (lambda^3 - lambda)),
/// continued through the removable singularities: A -> kappa at lambda = 0 and
/// A -> -kappa nu / 2 at lambda = +-1. Always in [-1, 1].
double coefficient_a(double nu, double kappa, double lambda);

/// Closed-form phi-marginal (1/2 pi)[1 + A cos(phi - (3 pi/2 - lambda pi))].
/// Only valid for mu1 = mu2 = 0; throws std::invalid_argument otherwise
/// (use marginal_phi_pdf_numeric for general means).
double marginal_phi_pdf_closed(const ToroidalParams& p, Angle phi);

/// Phi-marginal by adaptive quadrature of the joint density over theta,
/// absolute tolerance 1e-10. Works for any means; this is the ground truth
/// when mu1 or mu2 is nonzero, where the closed form does not apply.
double marginal_phi_pdf_numeric(const ToroidalParams& p, Angle phi);

/// Conditional density of Theta given Phi = phi, as joint / phi-marginal with
/// the marginal computed numerically. Throws NumericError when the marginal
/// vanishes at phi.
double conditional_theta_pdf(const ToroidalParams& p, Angle theta, Angle phi);

/// Draws n pairs: theta from the cardioid theta-marginal, then phi from the
/// cardioid conditional at that theta, both via the exact sampler (no
/// rejections, two uniforms per coordinate).
std::vector<AnglePair> sample_joint(const ToroidalParams& p, std::size_t n, RandomStream& rng);

}  // namespace torustat
