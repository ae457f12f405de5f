#include "torustat/dataset.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

#include "torustat/csv.hpp"
#include "torustat/errors.hpp"

namespace torustat {

namespace {

struct RawColumn {
  std::vector<double> values;   // NaN-free; missing slots hold 0
  std::vector<bool> missing;
};

std::optional<double> parse_cell(const std::string& cell, std::size_t row) {
  if (cell.empty()) return std::nullopt;
  try {
    std::size_t pos = 0;
    const double v = std::stod(cell, &pos);
    if (pos != cell.size() || !std::isfinite(v)) {
      throw DataError("ingest: non-numeric cell '" + cell + "' in row " + std::to_string(row));
    }
    return v;
  } catch (const std::invalid_argument&) {
    throw DataError("ingest: non-numeric cell '" + cell + "' in row " + std::to_string(row));
  } catch (const std::out_of_range&) {
    throw DataError("ingest: cell out of range '" + cell + "' in row " + std::to_string(row));
  }
}

// Converts one raw column to wrapped radians per the options.
AngleSeries to_angles(const RawColumn& col, const IngestOptions& options) {
  if (options.axial_multiplier > 1) {
    if (options.unit != IngestUnit::degrees) {
      throw DataError("ingest: axial multiplier applies to degree input only");
    }
    return axial_to_circular(col.values, col.missing, options.axial_multiplier);
  }
  AngleSeries out;
  for (std::size_t i = 0; i < col.values.size(); ++i) {
    if (col.missing[i]) {
      out.push_missing();
    } else {
      out.push_back(options.unit == IngestUnit::degrees ? Angle::from_degrees(col.values[i])
                                                        : Angle(col.values[i]));
    }
  }
  return out;
}

struct RawPair {
  RawColumn phi, theta;
  std::size_t raw_rows = 0;
};

RawPair read_raw(const std::string& csv_path, const IngestOptions& options) {
  const CsvTable table = read_csv_file(csv_path);
  const std::size_t phi_col = table.column(options.phi_column);
  const std::size_t theta_col = table.column(options.theta_column);
  RawPair raw;
  raw.raw_rows = table.rows.size();
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto phi = parse_cell(table.rows[i][phi_col], i);
    const auto theta = parse_cell(table.rows[i][theta_col], i);
    raw.phi.values.push_back(phi.value_or(0.0));
    raw.phi.missing.push_back(!phi.has_value());
    raw.theta.values.push_back(theta.value_or(0.0));
    raw.theta.missing.push_back(!theta.has_value());
  }
  return raw;
}

}  // namespace

Dataset ingest(const std::string& csv_path, const IngestOptions& options) {
  const RawPair raw = read_raw(csv_path, options);

  Dataset ds;
  ds.source_path = csv_path;
  ds.options = options;
  ds.raw_rows = raw.raw_rows;

  // Drop rows where both values are missing.
  RawColumn phi, theta;
  for (std::size_t i = 0; i < raw.raw_rows; ++i) {
    if (raw.phi.missing[i] && raw.theta.missing[i]) {
      ds.log.push_back({PreprocessEvent::Action::drop_row, i, "", 0.0});
      continue;
    }
    phi.values.push_back(raw.phi.values[i]);
    phi.missing.push_back(raw.phi.missing[i]);
    theta.values.push_back(raw.theta.values[i]);
    theta.missing.push_back(raw.theta.missing[i]);
  }
  if (phi.values.empty()) {
    throw DataError("ingest: no usable rows");
  }

  ds.phi = to_angles(phi, options);
  ds.theta = to_angles(theta, options);

  if (options.impute) {
    // Map kept-row indices back to raw-file rows for the log.
    std::vector<std::size_t> raw_index;
    for (std::size_t i = 0; i < raw.raw_rows; ++i) {
      if (!(raw.phi.missing[i] && raw.theta.missing[i])) raw_index.push_back(i);
    }
    const auto impute_column = [&](AngleSeries& series, const std::string& name) {
      if (!series.has_missing()) return;
      const AngleSeries filled = impute_circular_mean(series);
      for (std::size_t i = 0; i < series.size(); ++i) {
        if (series.is_missing(i)) {
          ds.log.push_back({PreprocessEvent::Action::impute, raw_index[i], name,
                            filled.at(i).radians()});
        }
      }
      series = filled;
    };
    impute_column(ds.phi, options.phi_column);
    impute_column(ds.theta, options.theta_column);
  }

  if (ds.phi.has_missing() || ds.theta.has_missing()) {
    throw DataError("ingest: missing values remain; pass impute or clean the file");
  }
  return ds;
}

Dataset replay_ingest(const std::string& csv_path, const IngestOptions& options,
                      std::span<const PreprocessEvent> log) {
  const RawPair raw = read_raw(csv_path, options);

  Dataset ds;
  ds.source_path = csv_path;
  ds.options = options;
  ds.raw_rows = raw.raw_rows;
  ds.log.assign(log.begin(), log.end());

  std::vector<bool> dropped(raw.raw_rows, false);
  for (const PreprocessEvent& e : log) {
    if (e.action == PreprocessEvent::Action::drop_row) dropped.at(e.row) = true;
  }

  RawColumn phi, theta;
  std::vector<std::size_t> raw_index;
  for (std::size_t i = 0; i < raw.raw_rows; ++i) {
    if (dropped[i]) continue;
    phi.values.push_back(raw.phi.values[i]);
    phi.missing.push_back(raw.phi.missing[i]);
    theta.values.push_back(raw.theta.values[i]);
    theta.missing.push_back(raw.theta.missing[i]);
    raw_index.push_back(i);
  }
  AngleSeries phi_series = to_angles(phi, options);
  AngleSeries theta_series = to_angles(theta, options);

  const auto apply_impute = [&](AngleSeries& series, const std::string& column) {
    AngleSeries out;
    for (std::size_t i = 0; i < series.size(); ++i) {
      if (!series.is_missing(i)) {
        out.push_back(series.at(i));
        continue;
      }
      bool found = false;
      for (const PreprocessEvent& e : log) {
        if (e.action == PreprocessEvent::Action::impute && e.column == column &&
            e.row == raw_index[i]) {
          out.push_back(Angle(e.value_radians));
          found = true;
          break;
        }
      }
      if (!found) {
        throw DataError("replay_ingest: missing cell has no logged imputation");
      }
    }
    series = out;
  };
  apply_impute(phi_series, options.phi_column);
  apply_impute(theta_series, options.theta_column);

  ds.phi = std::move(phi_series);
  ds.theta = std::move(theta_series);
  return ds;
}

}  // namespace torustat
