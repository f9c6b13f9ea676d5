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

/**
 * @file
 * Experiment harness: repeated runs per shots value, summary statistics, and
 * CSV / plot-data output.
 */

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qaelab/backend.hpp"
#include "qaelab/mlqae.hpp"

namespace qaelab {

enum class Algorithm { MLQAE, IQAE, MCI };

Algorithm parse_algorithm(std::string_view name);
std::string_view to_string(Algorithm algorithm);

struct ExperimentConfig {
  Algorithm algorithm = Algorithm::MLQAE;
  int domain_qubits = 10;
  double a_true = 0.125;
  // MLQAE
  std::uint64_t m = 3;
  ScheduleKind schedule = ScheduleKind::EIS;
  // IQAE
  double epsilon = 0.01;
  double alpha = 0.05;
  std::uint64_t ratio = 2;
  /// Shots per circuit (MLQAE), per round (IQAE), or samples (MCI).
  std::vector<std::uint64_t> shots_list = {16, 32, 64, 128, 256, 512, 1024};
  std::uint64_t repetitions = 30;
  std::uint64_t base_seed = 0;
  Backend backend = Backend::Analytic;
  unsigned jobs = 1;
};

/// Throws std::invalid_argument if a_true * 2^n is not a good-state count,
/// the shots list is empty or holds a zero, or repetitions is zero.
void validate(const ExperimentConfig& config);

struct Summary {
  double max = 0.0;
  double avg = 0.0;
  double min = 0.0;
  double std = 0.0;  ///< population (divide-by-N) standard deviation
};

/// Throws std::invalid_argument on an empty list.
Summary summarize(std::span<const double> values);

/// 100 |a_hat - a| / a; for a = 0 the absolute error in percent points.
double relative_error_pct(double a_hat, double a_true);

struct SummaryRow {
  std::uint64_t shots = 0;
  Summary a;
  Summary err_pct;
  Summary calls;
  /// Repetitions that hit the IQAE round cap. Their partial estimates are
  /// still included in the statistics.
  std::uint64_t capped_runs = 0;
};

/// Raw per-repetition outcomes of one sweep cell.
struct CellResult {
  std::vector<double> estimates;
  std::vector<double> oracle_calls;
  std::uint64_t capped_runs = 0;
};

/// Seed of repetition r in the cell for `shots`: derive_seed over
/// (base_seed, algorithm, shots, r).
std::uint64_t repetition_seed(const ExperimentConfig& config, std::uint64_t shots, std::uint64_t r);

/// All repetitions of one cell, ordered by repetition index.
CellResult run_cell(const ExperimentConfig& config, std::uint64_t shots);

SummaryRow summarize_cell(std::uint64_t shots, const CellResult& cell, double a_true);

/// One row per entry of shots_list, in that order. Byte-for-byte reproducible
/// for a fixed config, independent of `jobs`.
std::vector<SummaryRow> run_sweep(const ExperimentConfig& config);

inline constexpr std::string_view kCsvHeader =
    "shots,max_a,avg_a,min_a,std_a,max_err_pct,avg_err_pct,min_err_pct,std_err_pct,"
    "max_calls,avg_calls,min_calls,std_calls";

/// Header plus one line per row; floats with 6 significant digits. Throws
/// std::ios_base::failure if the stream goes bad.
void emit_csv(std::span<const SummaryRow> rows, std::ostream& out);

enum class PlotKind { ErrVsShots, AVsShots, CallsVsShots, ErrVsCalls };

PlotKind parse_plot_kind(std::string_view name);
std::string_view to_string(PlotKind kind);

/// Columns x, y_avg, y_min, y_max.
struct PlotTable {
  std::array<std::string, 4> columns;
  std::vector<std::array<double, 4>> points;
};

/// Rows sorted by x ascending. Throws std::invalid_argument on empty rows.
PlotTable emit_plot_data(std::span<const SummaryRow> rows, PlotKind kind);

/// Whitespace-separated columns under a '#'-prefixed header line.
void write_plot_data(const PlotTable& table, std::ostream& out);

/// A named sweep belonging to one reference table.
struct TableSweep {
  std::string name;
  ExperimentConfig config;
};

/// Sweeps behind reference table 1..8:
///   1 MCI, 2^10 and 2^14 samples            5 IQAE, 10 qubits, eps 0.01
///   2 MLQAE, 10 qubits, m = 3               6 IQAE, 10 qubits, eps 0.005
///   3 MLQAE, 10 qubits, m = 4               7 IQAE, 14 qubits, eps 0.01
///   4 MLQAE, 14 qubits, m = 3 and m = 4     8 IQAE, 14 qubits, eps 0.005
/// Each table has a fixed base seed (1000 + table, plus the sweep index).
std::vector<TableSweep> table_sweeps(int table);

}  // namespace qaelab
