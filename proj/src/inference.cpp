#include "torustat/inference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "torustat/nelder_mead.hpp"
#include "torustat/series.hpp"

namespace torustat {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kTieTolerance = 1e-9;
constexpr std::size_t kMinObsForSe = 10;
// Profile drop below this over lambda +- 0.5 marks a flat (non-identifiable)
// lambda direction; 2.0 ~ the 95% chi-square(1)/2 cutoff.
constexpr double kFlatProfileDrop = 2.0;

// Log-likelihood on raw natural parameters, without range validation; the
// formula extends smoothly slightly past the boundaries, which the
// finite-difference Hessian relies on.
double loglik_raw(const ParamVector& v, std::span<const AnglePair> data) {
  const double nu = v[0], kappa = v[1], lambda = v[2], mu1 = v[3], mu2 = v[4];
  double sum = -2.0 * static_cast<double>(data.size()) * std::log(kTwoPi);
  for (const AnglePair& obs : data) {
    const double dt = obs.theta.radians() - mu1;
    const double dp = obs.phi.radians() - mu2;
    const double f1 = 1.0 + nu * std::cos(dt);
    const double f2 = 1.0 - kappa * std::sin(dp + lambda * dt);
    if (!(f1 > 0.0) || !(f2 > 0.0)) return kNegInf;
    sum += std::log(f1) + std::log(f2);
  }
  return sum;
}

double logit(double p) { return std::log(p / (1.0 - p)); }
double sigmoid(double a) { return 1.0 / (1.0 + std::exp(-a)); }

ParamVector natural_from_unconstrained(const std::vector<double>& z) {
  return {sigmoid(z[0]), std::tanh(z[1]), z[2], wrap_radians(z[3]), wrap_radians(z[4])};
}

std::vector<double> unconstrained_from_natural(const ParamVector& v) {
  const double nu = std::clamp(v[0], 1e-6, 1.0 - 1e-9);
  const double kappa = std::clamp(v[1], -1.0 + 1e-9, 1.0 - 1e-9);
  return {logit(nu), std::atanh(kappa), v[2], v[3], v[4]};
}

// The density is invariant under (kappa, mu2) -> (-kappa, mu2 + pi); pick the
// kappa >= 0 representative.
ParamVector canonicalize(ParamVector v) {
  if (v[1] < 0.0) {
    v[1] = -v[1];
    v[4] = wrap_radians(v[4] + kPi);
  }
  v[3] = wrap_radians(v[3]);
  v[4] = wrap_radians(v[4]);
  return v;
}

bool lex_less(const ParamVector& a, const ParamVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Slope heuristic: the dependent factor concentrates phi + lambda theta
// around a constant, so scan a lambda grid for the maximal resultant length
// of {phi_i + lambda (theta_i - mu1_hat)}.
struct SlopeHeuristic {
  double lambda = 0.0;
  double kappa = 0.1;
  double mu1 = 0.0;
  double mu2 = 0.0;
  double nu = 0.5;
};

SlopeHeuristic slope_heuristic(std::span<const AnglePair> data) {
  SlopeHeuristic h;
  double ss = 0.0, sc = 0.0;
  for (const AnglePair& obs : data) {
    ss += std::sin(obs.theta.radians());
    sc += std::cos(obs.theta.radians());
  }
  h.mu1 = std::atan2(ss, sc);
  const double r_theta = std::hypot(ss, sc) / static_cast<double>(data.size());
  // Cardioid resultant length is rho/2.
  h.nu = std::clamp(2.0 * r_theta, 0.05, 0.95);

  double best_r = -1.0;
  for (double lam = -5.0; lam <= 5.0 + 1e-12; lam += 0.05) {
    double xs = 0.0, xc = 0.0;
    for (const AnglePair& obs : data) {
      const double x = obs.phi.radians() + lam * (obs.theta.radians() - h.mu1);
      xs += std::sin(x);
      xc += std::cos(x);
    }
    const double r = std::hypot(xs, xc) / static_cast<double>(data.size());
    if (r > best_r) {
      best_r = r;
      h.lambda = lam;
      // X concentrates around 3 pi/2 + mu2 for kappa > 0.
      h.mu2 = wrap_radians(std::atan2(xs, xc) - 1.5 * kPi);
    }
  }
  h.kappa = std::clamp(2.0 * best_r, 0.05, 0.95);
  return h;
}

// Latin hypercube over the unconstrained space.
std::vector<std::vector<double>> latin_hypercube_starts(std::size_t count, RandomStream& rng) {
  constexpr double lo[5] = {-2.5, -2.5, -5.0, 0.0, 0.0};
  constexpr double hi[5] = {2.5, 2.5, 5.0, kTwoPi, kTwoPi};
  std::vector<std::vector<double>> starts(count, std::vector<double>(5));
  for (int j = 0; j < 5; ++j) {
    std::vector<std::size_t> strata(count);
    std::iota(strata.begin(), strata.end(), std::size_t{0});
    for (std::size_t i = count; i > 1; --i) {  // Fisher-Yates on the stream
      const auto k = static_cast<std::size_t>(rng.uniform() * static_cast<double>(i));
      std::swap(strata[i - 1], strata[std::min(k, i - 1)]);
    }
    for (std::size_t i = 0; i < count; ++i) {
      const double u = (static_cast<double>(strata[i]) + rng.uniform()) /
                       static_cast<double>(count);
      starts[i][j] = lo[j] + u * (hi[j] - lo[j]);
    }
  }
  return starts;
}

ParamVector circular_error(const ParamVector& estimate, const ParamVector& truth) {
  ParamVector err{};
  for (int j = 0; j < 3; ++j) err[j] = estimate[j] - truth[j];
  for (int j = 3; j < 5; ++j) {
    double d = std::remainder(estimate[j] - truth[j], kTwoPi);
    err[j] = d;
  }
  return err;
}

// Cholesky inversion of a symmetric positive definite 5x5 matrix; returns
// false when the matrix is not positive definite.
bool invert_spd5(const std::array<std::array<double, 5>, 5>& m,
                 std::array<std::array<double, 5>, 5>& inv) {
  std::array<std::array<double, 5>, 5> chol{};
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = m[i][j];
      for (int k = 0; k < j; ++k) s -= chol[i][k] * chol[j][k];
      if (i == j) {
        if (!(s > 0.0)) return false;
        chol[i][i] = std::sqrt(s);
      } else {
        chol[i][j] = s / chol[j][j];
      }
    }
  }
  // Solve L L^T X = I column by column.
  for (int col = 0; col < 5; ++col) {
    std::array<double, 5> y{};
    for (int i = 0; i < 5; ++i) {
      double s = (i == col) ? 1.0 : 0.0;
      for (int k = 0; k < i; ++k) s -= chol[i][k] * y[k];
      y[i] = s / chol[i][i];
    }
    for (int i = 4; i >= 0; --i) {
      double s = y[i];
      for (int k = i + 1; k < 5; ++k) s -= chol[k][i] * inv[k][col];
      inv[i][col] = s / chol[i][i];
    }
  }
  return true;
}

}  // namespace

ParamVector to_param_vector(const ToroidalParams& p) {
  return {p.nu, p.kappa, p.lambda, p.mu1.radians(), p.mu2.radians()};
}

ToroidalParams params_from_vector(const ParamVector& v) {
  return ToroidalParams(v[0], v[1], v[2], Angle(v[3]), Angle(v[4]));
}

double log_likelihood(const ToroidalParams& p, std::span<const AnglePair> data) {
  return loglik_raw(to_param_vector(p), data);
}

ParamVector score(const ToroidalParams& p, std::span<const AnglePair> data) {
  ParamVector g{};
  for (const AnglePair& obs : data) {
    const double dt = obs.theta.radians() - p.mu1.radians();
    const double dp = obs.phi.radians() - p.mu2.radians();
    const double x = dp + p.lambda * dt;
    const double f1 = 1.0 + p.nu * std::cos(dt);
    const double f2 = 1.0 - p.kappa * std::sin(x);
    if (!(f1 > 0.0) || !(f2 > 0.0)) {
      throw std::domain_error("score: data point on a density zero");
    }
    const double cos_x = std::cos(x);
    g[0] += std::cos(dt) / f1;
    g[1] += -std::sin(x) / f2;
    g[2] += -p.kappa * dt * cos_x / f2;
    g[3] += p.nu * std::sin(dt) / f1 + p.kappa * p.lambda * cos_x / f2;
    g[4] += p.kappa * cos_x / f2;
  }
  return g;
}

double aic(double log_likelihood, int k) { return 2.0 * k - 2.0 * log_likelihood; }

double bic(double log_likelihood, int k, std::size_t n) {
  return static_cast<double>(k) * std::log(static_cast<double>(n)) - 2.0 * log_likelihood;
}

FitResult fit_mle(std::span<const AnglePair> data, const FitConfig& config) {
  if (data.empty()) {
    throw std::invalid_argument("fit_mle: empty data");
  }
  if (config.n_starts < 1) {
    throw std::invalid_argument("fit_mle: n_starts must be >= 1");
  }

  const auto objective = [&](const std::vector<double>& z) {
    return -loglik_raw(natural_from_unconstrained(z), data);
  };

  // Assemble starting points: slope-heuristic pair, Latin hypercube fill,
  // then any user-fixed starts.
  std::vector<std::vector<double>> starts;
  const SlopeHeuristic h = slope_heuristic(data);
  const std::size_t want = static_cast<std::size_t>(config.n_starts);
  if (want >= 2) {
    for (const double lam : {h.lambda, -h.lambda}) {
      starts.push_back(unconstrained_from_natural({h.nu, h.kappa, lam, h.mu1, h.mu2}));
    }
  }
  if (starts.size() < want) {
    RandomStream lhs_stream = RandomStream::substream(config.seed, 0xC0FFEE);
    const auto cube = latin_hypercube_starts(want - starts.size(), lhs_stream);
    starts.insert(starts.end(), cube.begin(), cube.end());
  }
  for (const ParamVector& fixed : config.fixed_starts) {
    starts.push_back(unconstrained_from_natural(fixed));
  }

  NelderMeadOptions nm;
  nm.max_iterations = config.max_iterations;
  nm.f_spread_tolerance = config.tolerance;

  std::vector<StartSummary> summaries;
  summaries.reserve(starts.size());
  std::size_t best_index = 0;
  for (std::size_t s = 0; s < starts.size(); ++s) {
    const NelderMeadResult r = nelder_mead_minimize(objective, starts[s], nm);
    StartSummary summary;
    summary.estimate = canonicalize(natural_from_unconstrained(r.x));
    summary.log_likelihood = -r.f;
    summary.converged = r.converged;
    summary.iterations = r.iterations;
    summaries.push_back(summary);

    const StartSummary& best = summaries[best_index];
    const StartSummary& cur = summaries.back();
    if (cur.log_likelihood > best.log_likelihood + kTieTolerance ||
        (cur.log_likelihood >= best.log_likelihood - kTieTolerance &&
         lex_less(cur.estimate, best.estimate))) {
      best_index = s;
    }
  }

  // Polish the winner from a tight simplex.
  NelderMeadOptions polish = nm;
  polish.initial_step = 0.05;
  const NelderMeadResult polished = nelder_mead_minimize(
      objective, unconstrained_from_natural(summaries[best_index].estimate), polish);
  ParamVector estimate = canonicalize(natural_from_unconstrained(polished.x));
  double best_loglik = -polished.f;
  bool polished_used = true;
  if (best_loglik < summaries[best_index].log_likelihood) {
    estimate = summaries[best_index].estimate;
    best_loglik = summaries[best_index].log_likelihood;
    polished_used = false;
  }

  FitResult result(params_from_vector(estimate));
  result.log_likelihood = best_loglik;
  result.n_obs = data.size();
  result.aic = aic(best_loglik, 5);
  result.bic = bic(best_loglik, 5, data.size());
  result.converged =
      (polished_used && polished.converged) ||
      std::any_of(summaries.begin(), summaries.end(), [&](const StartSummary& s) {
        return s.converged && s.log_likelihood >= best_loglik - kTieTolerance;
      });
  result.starts = std::move(summaries);
  result.standard_errors = standard_errors(result.params, data);
  return result;
}

std::optional<ParamVector> standard_errors(const ToroidalParams& p_hat,
                                           std::span<const AnglePair> data) {
  if (data.size() < kMinObsForSe) return std::nullopt;
  const ParamVector x = to_param_vector(p_hat);

  ParamVector h{};
  for (int j = 0; j < 5; ++j) h[j] = 1e-4 * std::max(1.0, std::fabs(x[j]));

  const auto eval = [&](ParamVector v) { return loglik_raw(v, data); };
  const double f0 = eval(x);
  if (!std::isfinite(f0)) return std::nullopt;

  std::array<std::array<double, 5>, 5> info{};
  for (int i = 0; i < 5; ++i) {
    for (int j = i; j < 5; ++j) {
      double second;
      if (i == j) {
        ParamVector up = x, dn = x;
        up[i] += h[i];
        dn[i] -= h[i];
        second = (eval(up) - 2.0 * f0 + eval(dn)) / (h[i] * h[i]);
      } else {
        ParamVector pp = x, pm = x, mp = x, mm = x;
        pp[i] += h[i]; pp[j] += h[j];
        pm[i] += h[i]; pm[j] -= h[j];
        mp[i] -= h[i]; mp[j] += h[j];
        mm[i] -= h[i]; mm[j] -= h[j];
        second = (eval(pp) - eval(pm) - eval(mp) + eval(mm)) / (4.0 * h[i] * h[j]);
      }
      if (!std::isfinite(second)) return std::nullopt;
      info[i][j] = info[j][i] = -second;  // observed information
    }
  }

  std::array<std::array<double, 5>, 5> inverse{};
  if (!invert_spd5(info, inverse)) return std::nullopt;
  ParamVector se{};
  for (int j = 0; j < 5; ++j) {
    if (!(inverse[j][j] > 0.0)) return std::nullopt;
    se[j] = std::sqrt(inverse[j][j]);
  }
  return se;
}

RecoveryStudy recovery_study(std::span<const RecoveryScenario> scenarios, int replications,
                             const FitConfig& config, std::uint64_t seed) {
  if (replications < 1) {
    throw std::invalid_argument("recovery_study: replications must be >= 1");
  }
  RecoveryStudy study;
  for (std::size_t s = 0; s < scenarios.size(); ++s) {
    const ParamVector truth = canonicalize(to_param_vector(scenarios[s].truth));
    RecoverySummary summary;
    summary.scenario = s;
    summary.truth = truth;
    summary.n_obs = scenarios[s].n_obs;
    summary.replications = static_cast<std::size_t>(replications);

    std::vector<ParamVector> errors;
    std::vector<ParamVector> ses;
    for (int rep = 0; rep < replications; ++rep) {
      RandomStream stream = RandomStream::substream(seed, s * 1000003ULL + rep);
      const auto data = sample_joint(scenarios[s].truth, scenarios[s].n_obs, stream);

      RecoveryReplication row;
      row.scenario = s;
      row.replication = static_cast<std::size_t>(rep);
      try {
        FitConfig rep_config = config;
        rep_config.seed = seed ^ (0xF17BA5E5ULL + s * 2654435761ULL + static_cast<std::uint64_t>(rep));
        const FitResult fit = fit_mle(data, rep_config);
        row.estimate = to_param_vector(fit.params);
        row.reported_se = fit.standard_errors;
        row.error = circular_error(row.estimate, truth);
        row.log_likelihood = fit.log_likelihood;
        row.aic = fit.aic;
        row.bic = fit.bic;
        row.converged = fit.converged;

        // Flat-lambda detection: profile the likelihood +-0.5 around the
        // estimate with the other parameters held fixed.
        ParamVector up = row.estimate, dn = row.estimate;
        up[2] += 0.5;
        dn[2] -= 0.5;
        const double drop = fit.log_likelihood -
                            std::max(loglik_raw(up, data), loglik_raw(dn, data));
        row.lambda_identifiable = drop >= kFlatProfileDrop;

        errors.push_back(row.error);
        if (row.reported_se) ses.push_back(*row.reported_se);
      } catch (const std::exception&) {
        row.converged = false;
        ++summary.failed_fits;
      }
      study.replications.push_back(row);
    }

    const double m = static_cast<double>(errors.size());
    if (!errors.empty()) {
      for (int j = 0; j < 5; ++j) {
        double mean = 0.0;
        for (const auto& e : errors) mean += e[j];
        mean /= m;
        summary.bias[j] = mean;
        double var = 0.0;
        for (const auto& e : errors) var += (e[j] - mean) * (e[j] - mean);
        summary.empirical_sd[j] = errors.size() > 1 ? std::sqrt(var / (m - 1.0)) : 0.0;
      }
    }
    if (!ses.empty()) {
      for (int j = 0; j < 5; ++j) {
        double mean = 0.0;
        for (const auto& se : ses) mean += se[j];
        summary.mean_reported_se[j] = mean / static_cast<double>(ses.size());
      }
    }
    // Coverage of truth +- 3 reported SE among replications with SEs.
    std::array<double, 5> covered{};
    std::size_t with_se = 0;
    for (const auto& row : study.replications) {
      if (row.scenario != s || !row.reported_se) continue;
      ++with_se;
      for (int j = 0; j < 5; ++j) {
        if (std::fabs(row.error[j]) <= 3.0 * (*row.reported_se)[j]) covered[j] += 1.0;
      }
    }
    if (with_se > 0) {
      for (int j = 0; j < 5; ++j) summary.coverage[j] = covered[j] / static_cast<double>(with_se);
    }
    study.summaries.push_back(summary);
  }
  return study;
}

}  // namespace torustat
