#include "torustat/serialize.hpp"

#include <json.hpp>

#include "torustat/errors.hpp"

namespace torustat {

using nlohmann::json;

namespace {
const char* kSeKeys[5] = {"se_nu", "se_kappa", "se_lambda", "se_mu1", "se_mu2"};
const char* kParamKeys[5] = {"nu", "kappa", "lambda", "mu1", "mu2"};
}  // namespace

std::string fit_result_to_json(const FitResult& fit) {
  json j;
  const ParamVector v = to_param_vector(fit.params);
  for (int i = 0; i < 5; ++i) j[kParamKeys[i]] = v[i];
  for (int i = 0; i < 5; ++i) {
    if (fit.standard_errors) {
      j[kSeKeys[i]] = (*fit.standard_errors)[i];
    } else {
      j[kSeKeys[i]] = nullptr;
    }
  }
  j["logL"] = fit.log_likelihood;
  j["aic"] = fit.aic;
  j["bic"] = fit.bic;
  j["n"] = fit.n_obs;
  j["converged"] = fit.converged;
  return j.dump(2) + "\n";
}

FitResult fit_result_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw DataError(std::string("model json: ") + e.what());
  }
  ParamVector v{};
  for (int i = 0; i < 5; ++i) {
    if (!j.contains(kParamKeys[i])) {
      throw DataError(std::string("model json: missing key '") + kParamKeys[i] + "'");
    }
    v[i] = j[kParamKeys[i]].get<double>();
  }
  FitResult fit(params_from_vector(v));
  if (j.contains(kSeKeys[0]) && !j[kSeKeys[0]].is_null()) {
    ParamVector se{};
    for (int i = 0; i < 5; ++i) se[i] = j[kSeKeys[i]].get<double>();
    fit.standard_errors = se;
  }
  fit.log_likelihood = j.value("logL", 0.0);
  fit.aic = j.value("aic", 0.0);
  fit.bic = j.value("bic", 0.0);
  fit.n_obs = j.value("n", std::size_t{0});
  fit.converged = j.value("converged", true);
  return fit;
}

std::string dataset_log_to_json(const Dataset& ds) {
  json j;
  j["source"] = ds.source_path;
  j["raw_rows"] = ds.raw_rows;
  j["rows"] = ds.phi.size();
  j["options"] = {
      {"phi_column", ds.options.phi_column},
      {"theta_column", ds.options.theta_column},
      {"unit", ds.options.unit == IngestUnit::degrees ? "deg" : "rad"},
      {"axial_multiplier", ds.options.axial_multiplier},
      {"impute", ds.options.impute},
  };
  json events = json::array();
  for (const PreprocessEvent& e : ds.log) {
    json ev;
    ev["row"] = e.row;
    if (e.action == PreprocessEvent::Action::drop_row) {
      ev["action"] = "drop_row";
    } else {
      ev["action"] = "impute";
      ev["column"] = e.column;
      ev["value_radians"] = e.value_radians;
    }
    events.push_back(ev);
  }
  j["events"] = events;
  return j.dump(2) + "\n";
}

DatasetLog dataset_log_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw DataError(std::string("dataset log json: ") + e.what());
  }
  DatasetLog out;
  out.source_path = j.value("source", "");
  const json& o = j.at("options");
  out.options.phi_column = o.value("phi_column", "phi");
  out.options.theta_column = o.value("theta_column", "theta");
  out.options.unit = o.value("unit", "deg") == std::string("deg") ? IngestUnit::degrees
                                                                  : IngestUnit::radians;
  out.options.axial_multiplier = o.value("axial_multiplier", 1);
  out.options.impute = o.value("impute", false);
  for (const json& ev : j.at("events")) {
    PreprocessEvent e;
    e.row = ev.at("row").get<std::size_t>();
    if (ev.at("action") == "impute") {
      e.action = PreprocessEvent::Action::impute;
      e.column = ev.at("column").get<std::string>();
      e.value_radians = ev.at("value_radians").get<double>();
    } else {
      e.action = PreprocessEvent::Action::drop_row;
    }
    out.events.push_back(e);
  }
  return out;
}

StudySpec study_spec_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw DataError(std::string("study spec json: ") + e.what());
  }
  StudySpec spec;
  spec.seed = j.value("seed", std::uint64_t{0});
  spec.replications = j.value("replications", 1);
  if (j.contains("fit")) {
    const json& f = j["fit"];
    spec.fit_config.n_starts = f.value("starts", spec.fit_config.n_starts);
    spec.fit_config.max_iterations = f.value("max_iterations", spec.fit_config.max_iterations);
    spec.fit_config.tolerance = f.value("tolerance", spec.fit_config.tolerance);
  }
  if (!j.contains("scenarios") || !j["scenarios"].is_array() || j["scenarios"].empty()) {
    throw DataError("study spec json: 'scenarios' array required");
  }
  for (const json& s : j["scenarios"]) {
    try {
      ToroidalParams p(s.at("nu").get<double>(), s.at("kappa").get<double>(),
                       s.at("lambda").get<double>(), Angle(s.at("mu1").get<double>()),
                       Angle(s.at("mu2").get<double>()));
      spec.scenarios.push_back({p, s.at("n").get<std::size_t>()});
    } catch (const DataError&) {
      throw;
    } catch (const std::exception& e) {
      throw DataError(std::string("study spec json: bad scenario: ") + e.what());
    }
  }
  return spec;
}

}  // namespace torustat
