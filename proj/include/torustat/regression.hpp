#pragma once

#include <optional>
#include <vector>

#include "torustat/angle.hpp"
#include "torustat/inference.hpp"
#include "torustat/series.hpp"

namespace torustat {

/// Circular-circular regression through the conditional mean direction of the
/// dependent toroidal model; depends only on (mu1, mu2, lambda) of a fit.
struct RegressionModel {
  Angle mu1;
  Angle mu2;
  double lambda = 0.0;
  FitResult source;
};

/// Builds the regression model from a converged fit; throws
/// std::invalid_argument when the fit did not converge.
RegressionModel from_fit(const FitResult& fit);

/// Predicted mean direction wrap(3 pi/2 + mu2 - lambda (theta - mu1)); agrees
/// with conditional_phi_mean_direction of the underlying parameters.
Angle predict(const RegressionModel& m, Angle theta);

enum class AngleUnit { radians, degrees };

struct QQReport {
  // Rank-paired (observed quantile, predicted quantile), sorted ascending in
  // the observed coordinate, in the requested unit.
  std::vector<std::pair<double, double>> pairs;
  // Mean perpendicular distance |x - y| / sqrt(2) of the pairs to the
  // identity line, in the requested unit.
  double mean_perp_distance = 0.0;
  AngleUnit unit = AngleUnit::radians;
};

/// QQ comparison of observed against predicted angles: both series are sorted
/// ascending on [0, 2 pi) and paired by rank. Throws DataError on length
/// mismatch or fewer than two observations.
QQReport qq_report(const AngleSeries& observed, const AngleSeries& predicted,
                   AngleUnit unit = AngleUnit::radians);

struct ResidualSummary {
  std::optional<Angle> mean_direction;  // empty when the resultant vanishes
  double concentration = 0.0;           // resultant length of the residuals
};

/// Circular mean of the wrapped residuals observed - predicted.
ResidualSummary residual_summary(const AngleSeries& observed, const AngleSeries& predicted);

}  // namespace torustat
