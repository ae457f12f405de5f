#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "torustat/cardioid.hpp"
#include "torustat/errors.hpp"
#include "torustat/quadrature.hpp"
#include "torustat/series.hpp"
#include "torustat/stat_tests.hpp"
#include "torustat/toroidal.hpp"
#include "torustat/torus.hpp"

using namespace torustat;

namespace {

ToroidalParams random_params(RandomStream& rng, double lambda_span = 6.0) {
  const double nu = 0.05 + 0.95 * rng.uniform();
  const double kappa = -1.0 + 2.0 * rng.uniform();
  const double lambda = lambda_span * (2.0 * rng.uniform() - 1.0);
  return ToroidalParams(nu, kappa, lambda, rng.uniform_angle(), rng.uniform_angle());
}

// First trigonometric moment of the conditional of phi given theta, by
// quadrature; returns (resultant length, direction).
std::pair<double, double> conditional_first_moment(const ToroidalParams& p, Angle theta) {
  const double re = integrate(
      [&](double phi) { return std::cos(phi) * conditional_phi_pdf(p, Angle(phi), theta); },
      0.0, kTwoPi);
  const double im = integrate(
      [&](double phi) { return std::sin(phi) * conditional_phi_pdf(p, Angle(phi), theta); },
      0.0, kTwoPi);
  return {std::hypot(re, im), wrap_radians(std::atan2(im, re))};
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(ToroidalParams(0.0, 0.0, 0.0, Angle(0.0), Angle(0.0)), std::invalid_argument);
  CHECK_THROWS_AS(ToroidalParams(1.2, 0.0, 0.0, Angle(0.0), Angle(0.0)), std::invalid_argument);
  CHECK_THROWS_AS(ToroidalParams(0.5, 1.5, 0.0, Angle(0.0), Angle(0.0)), std::invalid_argument);
  CHECK_THROWS_AS(ToroidalParams(0.5, 0.0, INFINITY, Angle(0.0), Angle(0.0)),
                  std::invalid_argument);
  CHECK_NOTHROW(ToroidalParams(1.0, -1.0, -42.0, Angle(0.0), Angle(0.0)));
}

TEST_CASE("joint density reference value and special cases") {
  // direct substitution: (1/4 pi^2) * 1.5 * 1
  const ToroidalParams p(0.5, 0.8, 1.5, Angle(0.0), Angle(0.0));
  CHECK(joint_pdf(p, Angle(0.0), Angle(0.0)) ==
        doctest::Approx(0.037995443865876664).epsilon(1e-14));

  // kappa = 0, mu1 = 0: equals the area-uniform density with the same nu
  const ToroidalParams indep(0.5, 0.0, 0.7, Angle(0.0), Angle(1.1));
  const TorusGeometry g(3.0, 1.5);
  for (double t = 0.0; t < kTwoPi; t += 0.37) {
    for (double f = 0.0; f < kTwoPi; f += 0.53) {
      CHECK(joint_pdf(indep, Angle(f), Angle(t)) ==
            doctest::Approx(area_uniform_pdf(g, Angle(f), Angle(t))).epsilon(1e-14));
    }
  }

  // nu -> 0 limit drops the first factor
  const ToroidalParams tiny_nu(1e-12, 0.6, 1.3, Angle(0.4), Angle(2.0));
  for (double t = 0.0; t < kTwoPi; t += 0.71) {
    const double dt = t - 0.4;
    const double expected =
        (1.0 - 0.6 * std::sin((1.1 - 2.0) + 1.3 * dt)) / (kTwoPi * kTwoPi);
    CHECK(joint_pdf(tiny_nu, Angle(1.1), Angle(t)) == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("joint density is nonnegative at boundary parameters") {
  RandomStream rng(4);
  for (const auto& p : {ToroidalParams(1.0, 1.0, 2.7, Angle(0.3), Angle(5.1)),
                        ToroidalParams(1.0, -1.0, -4.2, Angle(2.0), Angle(0.0))}) {
    for (int i = 0; i < 2000; ++i) {
      CHECK(joint_pdf(p, rng.uniform_angle(), rng.uniform_angle()) >= 0.0);
    }
  }
}

TEST_CASE("theta marginal is the cardioid factor") {
  RandomStream rng(8);
  const ToroidalParams p = random_params(rng);
  const CardioidParams marginal(p.mu1, p.nu);
  for (double t = 0.0; t < kTwoPi; t += 0.29) {
    CHECK(marginal_theta_pdf(p, Angle(t)) ==
          doctest::Approx(cardioid_pdf(marginal, Angle(t))).epsilon(1e-14));
  }
  CHECK(marginal_theta_pdf(p, p.mu1) == doctest::Approx((1.0 + p.nu) / kTwoPi));
  const double total =
      integrate([&](double t) { return marginal_theta_pdf(p, Angle(t)); }, 0.0, kTwoPi);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("conditioning identity holds pointwise") {
  RandomStream rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const ToroidalParams p = random_params(rng);
    for (double t = 0.05; t < kTwoPi; t += 0.83) {
      for (double f = 0.05; f < kTwoPi; f += 0.97) {
        const double joint = joint_pdf(p, Angle(f), Angle(t));
        const double product =
            conditional_phi_pdf(p, Angle(f), Angle(t)) * marginal_theta_pdf(p, Angle(t));
        CHECK(std::fabs(joint - product) < 1e-12);
      }
    }
  }
}

TEST_CASE("conditional of phi integrates to one and kappa = 0 is uniform") {
  RandomStream rng(22);
  const ToroidalParams p = random_params(rng);
  for (double t = 0.1; t < kTwoPi; t += 1.1) {
    const double total = integrate(
        [&](double f) { return conditional_phi_pdf(p, Angle(f), Angle(t)); }, 0.0, kTwoPi);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  }
  const ToroidalParams flat(0.5, 0.0, 2.0, Angle(1.0), Angle(2.0));
  CHECK(conditional_phi_pdf(flat, Angle(0.123), Angle(4.0)) ==
        doctest::Approx(1.0 / kTwoPi).epsilon(1e-15));
}

TEST_CASE("conditional mean direction: closed form and quadrature") {
  const ToroidalParams base(0.5, 0.7, 0.0, Angle(0.0), Angle(0.0));
  for (double t = 0.0; t < kTwoPi; t += 0.9) {
    CHECK(conditional_phi_mean_direction(base, Angle(t)).radians() ==
          doctest::Approx(1.5 * kPi));
  }

  const ToroidalParams shifted(0.5, 0.7, 2.3, Angle(1.2), Angle(0.7));
  CHECK(conditional_phi_mean_direction(shifted, shifted.mu1).radians() ==
        doctest::Approx(wrap_radians(1.5 * kPi + 0.7)).epsilon(1e-14));

  // lambda = 1.5, mu1 = mu2 = 0, theta = pi/2 -> 3 pi/2 - 3 pi/4 = 3 pi/4
  const ToroidalParams spec_case(0.5, 0.7, 1.5, Angle(0.0), Angle(0.0));
  CHECK(conditional_phi_mean_direction(spec_case, Angle(kPi / 2.0)).radians() ==
        doctest::Approx(3.0 * kPi / 4.0).epsilon(1e-14));

  // quadrature oracle: arg of the first trigonometric moment, kappa > 0
  RandomStream rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    ToroidalParams p = random_params(rng);
    p = ToroidalParams(p.nu, 0.2 + 0.8 * rng.uniform(), p.lambda, p.mu1, p.mu2);
    const Angle theta = rng.uniform_angle();
    const auto [resultant, direction] = conditional_first_moment(p, theta);
    CHECK(resultant == doctest::Approx(p.kappa / 2.0).epsilon(1e-8));
    CHECK(circular_distance(Angle(direction), conditional_phi_mean_direction(p, theta)) < 1e-8);
  }

  // kappa < 0: the actual mean direction is the antipode
  const ToroidalParams neg(0.5, -0.6, 1.1, Angle(0.3), Angle(2.0));
  const Angle theta(2.5);
  const auto [r_neg, dir_neg] = conditional_first_moment(neg, theta);
  CHECK(r_neg == doctest::Approx(0.3).epsilon(1e-8));
  CHECK(circular_distance(Angle(dir_neg),
                          Angle(conditional_phi_mean_direction(neg, theta).radians() + kPi)) <
        1e-8);
}

TEST_CASE("coefficient A: limits, zeros, continuity, frozen oracle") {
  CHECK(coefficient_a(0.3, 0.6, 0.0) == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(coefficient_a(0.3, -0.6, 0.0) == doctest::Approx(-0.6).epsilon(1e-14));
  CHECK(coefficient_a(0.4, 0.9, 2.0) == 0.0);   // sin(2 pi) = 0, exactly
  CHECK(coefficient_a(0.4, 0.9, -3.0) == 0.0);
  CHECK(coefficient_a(0.4, 0.9, 1.0) == doctest::Approx(-0.9 * 0.4 / 2.0).epsilon(1e-14));
  CHECK(coefficient_a(0.4, 0.9, -1.0) == doctest::Approx(-0.9 * 0.4 / 2.0).epsilon(1e-14));

  // continuity across the removable singularities
  for (double k : {-1.0, 0.0, 1.0}) {
    const double at = coefficient_a(0.7, 0.8, k);
    CHECK(std::fabs(coefficient_a(0.7, 0.8, k + 1e-6) - at) < 1e-4);
    CHECK(std::fabs(coefficient_a(0.7, 0.8, k - 1e-6) - at) < 1e-4);
  }

  // frozen from an independent quadrature of the phi-marginal's first moment
  CHECK(coefficient_a(0.2, -0.85, 0.46) == doctest::Approx(-0.552219691451315).epsilon(1e-12));
  CHECK(coefficient_a(0.5, 0.8, 1.5) == doctest::Approx(-0.322554017999575).epsilon(1e-12));
  CHECK(coefficient_a(1.0, 1.0, 2.5) == doctest::Approx(0.278900090751512).epsilon(1e-12));

  // the paper's four panels: |A| <= 1 across lambda in [-50, 50]
  for (double kappa : {-1.0, 1.0}) {
    for (double nu : {0.1, 1.0}) {
      for (int i = 0; i < 1000; ++i) {
        const double lambda = -50.0 + 100.0 * i / 999.0;
        CHECK(std::fabs(coefficient_a(nu, kappa, lambda)) <= 1.0 + 1e-12);
      }
    }
  }
}

TEST_CASE("closed-form phi marginal matches quadrature and exact factorization") {
  // lambda = 2: A = 0, marginal is flat
  const ToroidalParams flat(0.6, 0.9, 2.0, Angle(0.0), Angle(0.0));
  for (double f = 0.0; f < kTwoPi; f += 0.77) {
    CHECK(marginal_phi_pdf_closed(flat, Angle(f)) == doctest::Approx(1.0 / kTwoPi));
  }

  // figure case nu=0.2, kappa=-0.85, lambda=0.46 on a 256-point grid
  const ToroidalParams fig(0.2, -0.85, 0.46, Angle(0.0), Angle(0.0));
  for (int i = 0; i < 256; ++i) {
    const double f = kTwoPi * i / 256.0;
    CHECK(std::fabs(marginal_phi_pdf_closed(fig, Angle(f)) -
                    marginal_phi_pdf_numeric(fig, Angle(f))) < 1e-8);
  }

  // lambda = 0 factorizes exactly: marginal is (1 - kappa sin phi) / (2 pi)
  const ToroidalParams zero_lambda(0.5, 0.7, 0.0, Angle(0.0), Angle(0.0));
  for (double f = 0.0; f < kTwoPi; f += 0.61) {
    CHECK(marginal_phi_pdf_closed(zero_lambda, Angle(f)) ==
          doctest::Approx((1.0 - 0.7 * std::sin(f)) / kTwoPi).epsilon(1e-13));
  }

  const ToroidalParams nonzero_mu(0.5, 0.7, 1.0, Angle(1.0), Angle(0.0));
  CHECK_THROWS_AS(marginal_phi_pdf_closed(nonzero_mu, Angle(0.0)), std::invalid_argument);
}

TEST_CASE("numeric phi marginal: normalization and flat case") {
  RandomStream rng(31);
  const ToroidalParams p = random_params(rng);
  const double total = integrate(
      [&](double f) { return marginal_phi_pdf_numeric(p, Angle(f)); }, 0.0, kTwoPi,
      {1e-9, 15});
  CHECK(total == doctest::Approx(1.0).epsilon(1e-8));

  const ToroidalParams indep(0.5, 0.0, 1.3, Angle(0.7), Angle(0.0));
  CHECK(marginal_phi_pdf_numeric(indep, Angle(2.0)) ==
        doctest::Approx(1.0 / kTwoPi).epsilon(1e-10));
}

TEST_CASE("conditional of theta: normalization and reduction to the marginal") {
  RandomStream rng(33);
  const ToroidalParams p = random_params(rng);
  for (double f = 0.2; f < kTwoPi; f += 2.1) {
    const double total = integrate(
        [&](double t) { return conditional_theta_pdf(p, Angle(t), Angle(f)); }, 0.0, kTwoPi,
        {1e-9, 15});
    CHECK(total == doctest::Approx(1.0).epsilon(1e-8));
  }

  // kappa = 0: theta independent of phi
  const ToroidalParams indep(0.7, 0.0, 0.0, Angle(0.9), Angle(0.0));
  for (double t = 0.0; t < kTwoPi; t += 0.87) {
    CHECK(conditional_theta_pdf(indep, Angle(t), Angle(1.0)) ==
          doctest::Approx(marginal_theta_pdf(indep, Angle(t))).epsilon(1e-9));
  }

  // zero phi-marginal: kappa = 1, lambda = 0 makes the marginal vanish at pi/2
  const ToroidalParams degenerate(0.5, 1.0, 0.0, Angle(0.0), Angle(0.0));
  CHECK_THROWS_AS(conditional_theta_pdf(degenerate, Angle(1.0), Angle(kPi / 2.0)),
                  NumericError);
}

TEST_CASE("sample_joint basics and independence at kappa = 0") {
  RandomStream rng(41);
  const ToroidalParams p(0.5, 0.8, 1.5, Angle(1.0), Angle(2.0));
  CHECK(sample_joint(p, 0, rng).empty());
  CHECK(rng.draw_count() == 0);
  const auto pairs = sample_joint(p, 10, rng);
  CHECK(pairs.size() == 10);
  CHECK(rng.draw_count() == 40);  // two uniforms per coordinate

  RandomStream rng2(42);
  const ToroidalParams indep(0.6, 0.0, 0.0, Angle(0.0), Angle(0.0));
  const auto sample = sample_joint(indep, 100000, rng2);
  std::vector<double> thetas;
  AngleSeries phi_series, theta_series;
  for (const auto& q : sample) {
    thetas.push_back(q.theta.radians());
    phi_series.push_back(q.phi);
    theta_series.push_back(q.theta);
  }
  CHECK(ks_statistic(thetas, [&](double y) { return (y + 0.6 * std::sin(y)) / kTwoPi; }) <
        0.0062);
  CHECK(std::fabs(circular_correlation(phi_series, theta_series)) < 0.02);
}

TEST_CASE("sample_joint phi-marginal matches the closed form (figure case)") {
  const ToroidalParams fig(0.2, -0.85, 0.46, Angle(0.0), Angle(0.0));
  RandomStream rng(43);
  const auto sample = sample_joint(fig, 100000, rng);

  constexpr int kBins = 36;
  std::array<std::size_t, kBins> counts{};
  for (const auto& q : sample) {
    counts[std::min<int>(kBins - 1, static_cast<int>(q.phi.radians() / (kTwoPi / kBins)))]++;
  }
  std::array<double, kBins> expected{};
  for (int b = 0; b < kBins; ++b) {
    expected[b] = integrate(
        [&](double f) { return marginal_phi_pdf_closed(fig, Angle(f)); },
        b * kTwoPi / kBins, (b + 1) * kTwoPi / kBins);
  }
  const auto gof = pearson_chi_square(counts, expected);
  CHECK(gof.p_value > 0.01);
}

TEST_CASE("sample_joint first trigonometric moments match quadrature") {
  const ToroidalParams p(0.5, 0.8, 1.5, Angle(1.0), Angle(2.0));
  const std::size_t n = 100000;
  RandomStream rng(44);
  const auto sample = sample_joint(p, n, rng);

  std::complex<double> phi_sum{0.0, 0.0}, theta_sum{0.0, 0.0};
  for (const auto& q : sample) {
    phi_sum += std::polar(1.0, q.phi.radians());
    theta_sum += std::polar(1.0, q.theta.radians());
  }
  phi_sum /= static_cast<double>(n);
  theta_sum /= static_cast<double>(n);

  const auto moment = [&](auto pdf) {
    const double re = integrate([&](double x) { return std::cos(x) * pdf(x); }, 0.0, kTwoPi);
    const double im = integrate([&](double x) { return std::sin(x) * pdf(x); }, 0.0, kTwoPi);
    return std::complex<double>(re, im);
  };
  const auto theta_true = moment([&](double t) { return marginal_theta_pdf(p, Angle(t)); });
  const auto phi_true = moment([&](double f) { return marginal_phi_pdf_numeric(p, Angle(f)); });

  // Monte-Carlo standard error of each component is at most 1/sqrt(2n).
  const double se = 1.0 / std::sqrt(2.0 * static_cast<double>(n));
  CHECK(std::fabs(phi_sum.real() - phi_true.real()) < 3.0 * se);
  CHECK(std::fabs(phi_sum.imag() - phi_true.imag()) < 3.0 * se);
  CHECK(std::fabs(theta_sum.real() - theta_true.real()) < 3.0 * se);
  CHECK(std::fabs(theta_sum.imag() - theta_true.imag()) < 3.0 * se);
}

TEST_CASE("joint density normalizes for random parameters including large lambda") {
  RandomStream rng(51);
  for (int trial = 0; trial < 5; ++trial) {
    const ToroidalParams p = random_params(rng, 10.0);
    const double total = integrate(
        [&](double t) {
          return integrate([&](double f) { return joint_pdf(p, Angle(f), Angle(t)); }, 0.0,
                           kTwoPi, {1e-11, 15});
        },
        0.0, kTwoPi, {1e-9, 15});
    CHECK(total == doctest::Approx(1.0).epsilon(1e-8));
  }
}
