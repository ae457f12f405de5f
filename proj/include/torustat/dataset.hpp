#pragma once

#include <span>
#include <string>
#include <vector>

#include "torustat/angle.hpp"
#include "torustat/series.hpp"

namespace torustat {

enum class IngestUnit { degrees, radians };

struct IngestOptions {
  std::string phi_column = "phi";
  std::string theta_column = "theta";
  IngestUnit unit = IngestUnit::degrees;
  int axial_multiplier = 1;  // 1 = plain circular data; axial data uses 4
  bool impute = false;       // replace single-column gaps by the circular mean
};

struct PreprocessEvent {
  enum class Action { drop_row, impute };
  Action action = Action::drop_row;
  std::size_t row = 0;        // 0-based data-row index in the raw file
  std::string column;         // imputed column name (impute only)
  double value_radians = 0.0; // imputed value (impute only)

  friend bool operator==(const PreprocessEvent&, const PreprocessEvent&) = default;
};

/// Paired angle series ready for fitting, plus everything needed to
/// reconstruct them from the raw file.
struct Dataset {
  AngleSeries phi;
  AngleSeries theta;
  std::string source_path;
  IngestOptions options;
  std::vector<PreprocessEvent> log;
  std::size_t raw_rows = 0;
};

/// Reads a two-angle-column CSV: empty cells mark missing values, rows with
/// both values missing are dropped (logged), the optional axial multiplier
/// and unit conversion are applied, and missing single values are imputed
/// with the per-column circular mean when options.impute is set. Ends with
/// no missing values unless imputation was skipped and gaps remain, which is
/// a DataError.
Dataset ingest(const std::string& csv_path, const IngestOptions& options);

/// Reconstructs a Dataset from the raw file by re-applying a recorded log
/// verbatim (drops and imputed values are taken from the log, not
/// recomputed). ingest followed by replay_ingest over its log reproduces the
/// same Dataset.
Dataset replay_ingest(const std::string& csv_path, const IngestOptions& options,
                      std::span<const PreprocessEvent> log);

}  // namespace torustat
