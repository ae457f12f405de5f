#pragma once

#include <optional>
#include <span>
#include <vector>

#include "torustat/angle.hpp"

namespace torustat {

/// An ordered series of angles with an explicit missing-value mask.
/// Missing entries are masked rather than encoded as a sentinel value,
/// since 0 is a valid angle.
class AngleSeries {
 public:
  AngleSeries() = default;
  explicit AngleSeries(std::vector<Angle> values)
      : values_(std::move(values)), missing_(values_.size(), false) {}
  AngleSeries(std::vector<Angle> values, std::vector<bool> missing);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  std::size_t missing_count() const;
  bool has_missing() const { return missing_count() > 0; }

  bool is_missing(std::size_t i) const { return missing_.at(i); }
  Angle at(std::size_t i) const;  // throws std::logic_error on a missing entry

  void push_back(Angle a) {
    values_.push_back(a);
    missing_.push_back(false);
  }
  void push_missing() {
    values_.push_back(Angle{});
    missing_.push_back(true);
  }

  /// Non-missing values in order.
  std::vector<Angle> present_values() const;

  /// Raw radians of every entry (missing slots hold 0; check the mask).
  std::vector<double> radians() const;

  friend bool operator==(const AngleSeries&, const AngleSeries&) = default;

 private:
  std::vector<Angle> values_;
  std::vector<bool> missing_;
};

struct CircularMeanResult {
  double resultant_length = 0.0;          // |mean unit vector|, in [0, 1]
  std::optional<Angle> direction;         // empty when the resultant vanishes
};

/// Circular mean direction and resultant length of the non-missing entries.
/// Throws DataError when no non-missing entry exists. The direction is left
/// empty when the resultant length is indistinguishable from zero.
CircularMeanResult circular_mean(const AngleSeries& series);

/// Jammalamadaka-Sarma circular correlation coefficient:
///   rho = sum sin(a_i - abar) sin(b_i - bbar)
///         / sqrt(sum sin^2(a_i - abar) * sum sin^2(b_i - bbar)),
/// with abar, bbar the circular mean directions.
/// Throws DataError on length mismatch, missing entries, series shorter than
/// two, an undefined mean, or a zero-dispersion denominator.
double circular_correlation(const AngleSeries& a, const AngleSeries& b);

/// Converts axial measurements in degrees to circular data: each entry is
/// mapped to (multiplier * x) mod 360 and then to radians in [0, 2*pi).
/// Missing entries stay missing. Throws std::domain_error on non-finite
/// entries and std::invalid_argument when multiplier < 1.
AngleSeries axial_to_circular(std::span<const double> degrees, int multiplier = 4);
AngleSeries axial_to_circular(std::span<const double> degrees,
                              const std::vector<bool>& missing, int multiplier = 4);

/// Replaces every missing entry with the circular mean of the non-missing
/// entries. Throws DataError when the series is all-missing or the mean
/// direction is undefined (zero resultant).
AngleSeries impute_circular_mean(const AngleSeries& series);

}  // namespace torustat
