#pragma once

#include <string>
#include <vector>

#include "torustat/dataset.hpp"
#include "torustat/inference.hpp"

namespace torustat {

/// FitResult as a flat JSON record with keys nu, kappa, lambda, mu1, mu2,
/// se_nu..se_mu2 (null when unavailable), logL, aic, bic, n, converged.
std::string fit_result_to_json(const FitResult& fit);

/// Parses a model record. Only the parameter keys are required; missing
/// diagnostics default to zero/absent and converged defaults to true so that
/// hand-written model files work. Throws DataError on malformed input.
FitResult fit_result_from_json(const std::string& text);

/// Ingest provenance (source, options, events) as JSON.
std::string dataset_log_to_json(const Dataset& ds);

/// Parses the provenance JSON back into options + events for replay.
struct DatasetLog {
  IngestOptions options;
  std::vector<PreprocessEvent> events;
  std::string source_path;
};
DatasetLog dataset_log_from_json(const std::string& text);

/// Simulation-study specification for the `simulate` subcommand.
struct StudySpec {
  std::uint64_t seed = 0;
  int replications = 1;
  FitConfig fit_config;
  std::vector<RecoveryScenario> scenarios;
};
StudySpec study_spec_from_json(const std::string& text);

}  // namespace torustat
