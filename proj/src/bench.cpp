// Copyright 2026 The qaelab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qaelab/bench.hpp"

#include <algorithm>
#include <cmath>
#include <ios>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qaelab/iqae.hpp"
#include "qaelab/mci.hpp"
#include "qaelab/oracle.hpp"
#include "qaelab/parallel.hpp"

namespace qaelab {

namespace {

std::uint64_t algorithm_tag(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::MLQAE: return 1;
    case Algorithm::IQAE: return 2;
    case Algorithm::MCI: return 3;
  }
  return 0;
}

std::uint64_t mci_cell_seed(const ExperimentConfig& config, std::uint64_t shots) {
  return derive_seed({config.base_seed, algorithm_tag(Algorithm::MCI), shots});
}

}  // namespace

Algorithm parse_algorithm(std::string_view name) {
  if (name == "mlqae") return Algorithm::MLQAE;
  if (name == "iqae") return Algorithm::IQAE;
  if (name == "mci") return Algorithm::MCI;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::MLQAE: return "mlqae";
    case Algorithm::IQAE: return "iqae";
    case Algorithm::MCI: return "mci";
  }
  return "?";
}

void validate(const ExperimentConfig& config) {
  if (config.algorithm != Algorithm::MCI) {
    (void)oracle_from_amplitude(config.domain_qubits, config.a_true);
  } else if (!(config.a_true >= 0.0 && config.a_true <= 1.0)) {
    throw std::invalid_argument("a must lie in [0, 1]");
  }
  if (config.shots_list.empty()) throw std::invalid_argument("shots list is empty");
  if (std::find(config.shots_list.begin(), config.shots_list.end(), 0u) != config.shots_list.end()) {
    throw std::invalid_argument("shots must be positive");
  }
  if (config.repetitions == 0) throw std::invalid_argument("repetitions must be positive");
  if (config.algorithm == Algorithm::IQAE) {
    if (!(config.epsilon > 0.0 && config.epsilon < 0.5)) throw std::invalid_argument("epsilon must lie in (0, 0.5)");
    if (!(config.alpha > 0.0 && config.alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
    if (config.ratio < 2) throw std::invalid_argument("ratio must be at least 2");
  }
}

Summary summarize(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("summarize needs at least one value");
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  double squares = 0.0;
  for (double v : values) squares += (v - mean) * (v - mean);
  return {*hi, mean, *lo, std::sqrt(squares / static_cast<double>(values.size()))};
}

double relative_error_pct(double a_hat, double a_true) {
  const double diff = std::abs(a_hat - a_true);
  return a_true == 0.0 ? 100.0 * diff : 100.0 * diff / a_true;
}

std::uint64_t repetition_seed(const ExperimentConfig& config, std::uint64_t shots, std::uint64_t r) {
  if (config.algorithm == Algorithm::MCI) return derive_seed({mci_cell_seed(config, shots), r});
  return derive_seed({config.base_seed, algorithm_tag(config.algorithm), shots, r});
}

CellResult run_cell(const ExperimentConfig& config, std::uint64_t shots) {
  CellResult cell;
  const std::size_t reps = config.repetitions;
  cell.estimates.resize(reps);
  cell.oracle_calls.resize(reps);

  if (config.algorithm == Algorithm::MCI) {
    cell.estimates = run_mci({config.a_true, shots, reps, mci_cell_seed(config, shots)}, config.jobs);
    std::fill(cell.oracle_calls.begin(), cell.oracle_calls.end(), static_cast<double>(shots));
    return cell;
  }

  const OracleSpec oracle = oracle_from_amplitude(config.domain_qubits, config.a_true);
  std::vector<char> capped(reps, 0);
  parallel_for(reps, config.jobs, [&](std::size_t r) {
    const std::uint64_t seed = repetition_seed(config, shots, r);
    if (config.algorithm == Algorithm::MLQAE) {
      const MlqaeReport report = run_mlqae(oracle, config.m, shots, config.schedule, config.backend, seed);
      cell.estimates[r] = report.a_hat;
      cell.oracle_calls[r] = static_cast<double>(report.oracle_calls);
      return;
    }
    const IqaeOptions options{config.epsilon, config.alpha, shots, config.ratio};
    try {
      const IqaeReport report = run_iqae(oracle, options, config.backend, seed);
      cell.estimates[r] = report.a_hat;
      cell.oracle_calls[r] = static_cast<double>(report.oracle_calls);
    } catch (const IterationCapError& e) {
      cell.estimates[r] = e.report().a_hat;
      cell.oracle_calls[r] = static_cast<double>(e.report().oracle_calls);
      capped[r] = 1;
    }
  });
  cell.capped_runs = static_cast<std::uint64_t>(std::count(capped.begin(), capped.end(), 1));
  return cell;
}

SummaryRow summarize_cell(std::uint64_t shots, const CellResult& cell, double a_true) {
  std::vector<double> errors;
  errors.reserve(cell.estimates.size());
  for (double a_hat : cell.estimates) errors.push_back(relative_error_pct(a_hat, a_true));
  return {shots, summarize(cell.estimates), summarize(errors), summarize(cell.oracle_calls),
          cell.capped_runs};
}

std::vector<SummaryRow> run_sweep(const ExperimentConfig& config) {
  validate(config);
  std::vector<SummaryRow> rows;
  rows.reserve(config.shots_list.size());
  for (std::uint64_t shots : config.shots_list) {
    rows.push_back(summarize_cell(shots, run_cell(config, shots), config.a_true));
  }
  return rows;
}

void emit_csv(std::span<const SummaryRow> rows, std::ostream& out) {
  std::ostringstream buffer;
  buffer.precision(6);
  buffer << kCsvHeader << '\n';
  for (const SummaryRow& row : rows) {
    buffer << row.shots;
    for (const Summary* s : {&row.a, &row.err_pct, &row.calls}) {
      buffer << ',' << s->max << ',' << s->avg << ',' << s->min << ',' << s->std;
    }
    buffer << '\n';
  }
  out << buffer.str();
  out.flush();
  if (!out) throw std::ios_base::failure("failed to write CSV output");
}

PlotKind parse_plot_kind(std::string_view name) {
  if (name == "err_vs_shots") return PlotKind::ErrVsShots;
  if (name == "a_vs_shots") return PlotKind::AVsShots;
  if (name == "calls_vs_shots") return PlotKind::CallsVsShots;
  if (name == "err_vs_calls") return PlotKind::ErrVsCalls;
  throw std::invalid_argument("unknown plot kind '" + std::string(name) + "'");
}

std::string_view to_string(PlotKind kind) {
  switch (kind) {
    case PlotKind::ErrVsShots: return "err_vs_shots";
    case PlotKind::AVsShots: return "a_vs_shots";
    case PlotKind::CallsVsShots: return "calls_vs_shots";
    case PlotKind::ErrVsCalls: return "err_vs_calls";
  }
  return "?";
}

PlotTable emit_plot_data(std::span<const SummaryRow> rows, PlotKind kind) {
  if (rows.empty()) throw std::invalid_argument("plot data needs at least one row");
  PlotTable table;
  auto point = [](double x, const Summary& y) { return std::array<double, 4>{x, y.avg, y.min, y.max}; };
  for (const SummaryRow& row : rows) {
    const auto shots = static_cast<double>(row.shots);
    switch (kind) {
      case PlotKind::ErrVsShots: table.points.push_back(point(shots, row.err_pct)); break;
      case PlotKind::AVsShots: table.points.push_back(point(shots, row.a)); break;
      case PlotKind::CallsVsShots: table.points.push_back(point(shots, row.calls)); break;
      case PlotKind::ErrVsCalls: table.points.push_back(point(row.calls.avg, row.err_pct)); break;
    }
  }
  switch (kind) {
    case PlotKind::ErrVsShots: table.columns = {"shots", "avg_err_pct", "min_err_pct", "max_err_pct"}; break;
    case PlotKind::AVsShots: table.columns = {"shots", "avg_a", "min_a", "max_a"}; break;
    case PlotKind::CallsVsShots: table.columns = {"shots", "avg_calls", "min_calls", "max_calls"}; break;
    case PlotKind::ErrVsCalls: table.columns = {"avg_calls", "avg_err_pct", "min_err_pct", "max_err_pct"}; break;
  }
  std::stable_sort(table.points.begin(), table.points.end(),
                   [](const auto& l, const auto& r) { return l[0] < r[0]; });
  return table;
}

void write_plot_data(const PlotTable& table, std::ostream& out) {
  std::ostringstream buffer;
  buffer.precision(6);
  buffer << "# " << table.columns[0] << ' ' << table.columns[1] << ' ' << table.columns[2] << ' '
         << table.columns[3] << '\n';
  for (const auto& p : table.points) {
    buffer << p[0] << ' ' << p[1] << ' ' << p[2] << ' ' << p[3] << '\n';
  }
  out << buffer.str();
  out.flush();
  if (!out) throw std::ios_base::failure("failed to write plot data");
}

std::vector<TableSweep> table_sweeps(int table) {
  auto base = [table](Algorithm algorithm, int qubits, std::uint64_t index) {
    ExperimentConfig c;
    c.algorithm = algorithm;
    c.domain_qubits = qubits;
    c.a_true = 0.125;
    c.base_seed = 1000 + 10 * static_cast<std::uint64_t>(table) + index;
    return c;
  };
  auto mlqae = [&](int qubits, std::uint64_t m, std::uint64_t index) {
    ExperimentConfig c = base(Algorithm::MLQAE, qubits, index);
    c.m = m;
    return c;
  };
  auto iqae = [&](int qubits, double epsilon) {
    ExperimentConfig c = base(Algorithm::IQAE, qubits, 0);
    c.epsilon = epsilon;
    return c;
  };
  const std::string name = "table" + std::to_string(table);
  switch (table) {
    case 1: {
      ExperimentConfig c = base(Algorithm::MCI, 10, 0);
      c.shots_list = {1024, 16384};
      c.repetitions = 10'000;
      return {{name, c}};
    }
    case 2: return {{name, mlqae(10, 3, 0)}};
    case 3: return {{name, mlqae(10, 4, 0)}};
    case 4: return {{name + "_m3", mlqae(14, 3, 0)}, {name + "_m4", mlqae(14, 4, 1)}};
    case 5: return {{name, iqae(10, 0.01)}};
    case 6: return {{name, iqae(10, 0.005)}};
    case 7: return {{name, iqae(14, 0.01)}};
    case 8: return {{name, iqae(14, 0.005)}};
    default: throw std::invalid_argument("table must be in 1..8, got " + std::to_string(table));
  }
}

}  // namespace qaelab
