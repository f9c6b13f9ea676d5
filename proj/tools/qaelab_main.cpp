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

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qaelab/bench.hpp"
#include "qaelab/config.hpp"
#include "qaelab/iqae.hpp"
#include "qaelab/mci.hpp"
#include "qaelab/mlqae.hpp"
#include "qaelab/oracle.hpp"
#include "qaelab/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitIterationCap = 3;

struct Options {
  int qubits = 10;
  double a = 0.125;
  std::uint64_t m = 3;
  std::uint64_t shots = 1024;
  std::uint64_t seed = 0;
  std::string backend = "analytic";
  std::string schedule = "eis";
  double epsilon = 0.01;
  double alpha = 0.05;
  std::uint64_t ratio = 2;
  bool trace = false;
  std::uint64_t samples = 1024;
  std::uint64_t reps = 1;
  std::string config_path;
  std::string out_path;
  std::vector<std::string> plots;
  std::string plot_dir;
  int table = 0;
  unsigned jobs = 1;
};

void print_interval(std::ostream& out, const qaelab::ConfidenceInterval& ci) {
  out << '[' << ci.theta_lo << ", " << ci.theta_hi << ']';
}

int run_mlqae_command(const Options& o) {
  const qaelab::OracleSpec oracle = qaelab::oracle_from_amplitude(o.qubits, o.a);
  const auto kind = qaelab::parse_schedule_kind(o.schedule);
  const auto report = qaelab::run_mlqae(oracle, o.m, o.shots, kind, qaelab::parse_backend(o.backend), o.seed);
  std::cout.precision(6);
  std::cout << "algorithm,qubits,a_true,a_hat,theta_hat,oracle_calls,log_likelihood\n"
            << "mlqae," << o.qubits << ',' << oracle.amplitude() << ',' << report.a_hat << ','
            << report.theta_hat << ',' << report.oracle_calls << ',' << report.log_likelihood_at_max << '\n';
  std::cout << "# schedule " << o.schedule << " m=" << o.m << ", " << o.shots << " shots per circuit\n";
  for (const auto& r : report.records) {
    std::cout << "#   Q^" << r.power << " A|0>: " << r.hits << '/' << r.shots << " hits\n";
  }
  std::cout << "# a_hat = " << report.a_hat << " (relative error "
            << qaelab::relative_error_pct(report.a_hat, oracle.amplitude()) << "%), " << report.oracle_calls
            << " oracle calls\n";
  return kExitOk;
}

void print_iqae(const Options& o, const qaelab::OracleSpec& oracle, const qaelab::IqaeReport& report) {
  std::cout.precision(6);
  std::cout << "algorithm,qubits,a_true,a_hat,a_lo,a_hi,oracle_calls,rounds\n"
            << "iqae," << o.qubits << ',' << oracle.amplitude() << ',' << report.a_hat << ',' << report.a_lo
            << ',' << report.a_hi << ',' << report.oracle_calls << ',' << report.rounds.size() << '\n';
  if (o.trace) {
    std::cout << "# round k half_plane new_shots pooled_shots pooled_hits theta_interval\n";
    for (std::size_t i = 0; i < report.rounds.size(); ++i) {
      const auto& r = report.rounds[i];
      std::cout << "# " << i << ' ' << r.k << ' ' << (r.upper_half_plane ? "upper" : "lower") << ' '
                << r.new_shots << ' ' << r.shots << ' ' << r.hits << ' ';
      print_interval(std::cout, r.interval_after);
      std::cout << '\n';
    }
  }
  std::cout << "# a_hat = " << report.a_hat << " in [" << report.a_lo << ", " << report.a_hi
            << "] (epsilon " << report.epsilon << ", alpha " << report.alpha << "), " << report.oracle_calls
            << " oracle calls\n";
}

int run_iqae_command(const Options& o) {
  const qaelab::OracleSpec oracle = qaelab::oracle_from_amplitude(o.qubits, o.a);
  const qaelab::IqaeOptions options{o.epsilon, o.alpha, o.shots, o.ratio};
  try {
    print_iqae(o, oracle, qaelab::run_iqae(oracle, options, qaelab::parse_backend(o.backend), o.seed));
  } catch (const qaelab::IterationCapError& e) {
    print_iqae(o, oracle, e.report());
    std::cerr << "error: " << e.what() << '\n';
    return kExitIterationCap;
  }
  return kExitOk;
}

int run_mci_command(const Options& o) {
  const auto estimates = qaelab::run_mci({o.a, o.samples, o.reps, o.seed}, o.jobs);
  qaelab::CellResult cell{estimates, std::vector<double>(estimates.size(), static_cast<double>(o.samples)), 0};
  const qaelab::SummaryRow row = qaelab::summarize_cell(o.samples, cell, o.a);
  qaelab::emit_csv({&row, 1}, std::cout);
  std::cout.precision(6);
  std::cout << "# " << o.reps << " repetitions of " << o.samples << " samples: mean estimate " << row.a.avg
            << ", mean relative error " << row.err_pct.avg << "%\n";
  return kExitOk;
}

void write_outputs(const std::vector<qaelab::SummaryRow>& rows, std::ostream& csv, const std::string& plot_dir,
                   const std::string& stem, const std::vector<std::string>& plots) {
  qaelab::emit_csv(rows, csv);
  for (const std::string& name : plots) {
    const auto kind = qaelab::parse_plot_kind(name);
    const auto path = std::filesystem::path(plot_dir) / (stem + "." + name + ".dat");
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot open " + path.string());
    qaelab::write_plot_data(qaelab::emit_plot_data(rows, kind), out);
  }
}

int report_caps(const std::vector<qaelab::SummaryRow>& rows) {
  std::uint64_t capped = 0;
  for (const auto& row : rows) {
    if (row.capped_runs > 0) {
      std::cerr << "warning: " << row.capped_runs << " repetition(s) at shots=" << row.shots
                << " hit the IQAE round cap\n";
      capped += row.capped_runs;
    }
  }
  return capped > 0 ? kExitIterationCap : kExitOk;
}

int run_sweep_command(const Options& o) {
  std::ifstream in(o.config_path);
  if (!in) {
    std::cerr << "error: cannot open config file " << o.config_path << '\n';
    return kExitUsage;
  }
  qaelab::ExperimentConfig config;
  try {
    config = qaelab::parse_experiment_config(in);
  } catch (const qaelab::ConfigError& e) {
    std::cerr << o.config_path << ':' << e.what() << '\n';
    return kExitUsage;
  }
  if (o.jobs > 1) config.jobs = o.jobs;
  const auto rows = qaelab::run_sweep(config);
  const std::string plot_dir = o.plot_dir.empty() ? "." : o.plot_dir;
  const std::string stem = std::filesystem::path(o.config_path).stem().string();
  if (o.out_path.empty()) {
    write_outputs(rows, std::cout, plot_dir, stem, o.plots);
  } else {
    std::ofstream out(o.out_path);
    if (!out) throw std::ios_base::failure("cannot open " + o.out_path);
    write_outputs(rows, out, plot_dir, stem, o.plots);
  }
  return report_caps(rows);
}

int run_verify_command() {
  bool ok = true;
  for (const auto& check : qaelab::run_verification()) {
    std::cout << (check.passed ? "PASS " : "FAIL ") << check.name << ": " << check.detail << '\n';
    ok = ok && check.passed;
  }
  std::cout << (ok ? "all checks passed\n" : "verification FAILED\n");
  return ok ? kExitOk : kExitVerifyFailed;
}

int run_reproduce_command(const Options& o) {
  const std::filesystem::path dir = o.out_path.empty() ? "." : o.out_path;
  std::filesystem::create_directories(dir);
  const std::vector<std::string> all_plots = {"err_vs_shots", "a_vs_shots", "calls_vs_shots", "err_vs_calls"};
  int status = kExitOk;
  for (auto [name, config] : qaelab::table_sweeps(o.table)) {
    config.jobs = o.jobs;
    const auto rows = qaelab::run_sweep(config);
    const auto csv_path = dir / (name + ".csv");
    std::ofstream csv(csv_path);
    if (!csv) throw std::ios_base::failure("cannot open " + csv_path.string());
    write_outputs(rows, csv, dir.string(), name, all_plots);
    std::cout << "wrote " << csv_path.string() << '\n';
    if (report_caps(rows) != kExitOk) status = kExitIterationCap;
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum amplitude estimation laboratory"};
  app.require_subcommand(1);
  Options o;

  auto add_oracle = [&o](CLI::App* cmd) {
    cmd->add_option("--qubits", o.qubits, "Domain qubits n")->check(CLI::Range(1, qaelab::kMaxDomainQubits));
    cmd->add_option("--a", o.a, "Target amplitude; a * 2^n must be an integer")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--seed", o.seed, "Random seed");
  };

  auto* mlqae = app.add_subcommand("mlqae", "Maximum-likelihood amplitude estimation, single run");
  add_oracle(mlqae);
  mlqae->add_option("--m", o.m, "Schedule depth");
  mlqae->add_option("--shots", o.shots, "Shots per circuit")->check(CLI::PositiveNumber);
  mlqae->add_option("--backend", o.backend, "sv | analytic")->check(CLI::IsMember({"sv", "analytic"}));
  mlqae->add_option("--schedule", o.schedule, "eis | lis")->check(CLI::IsMember({"eis", "lis"}));

  auto* iqae = app.add_subcommand("iqae", "Iterative amplitude estimation, single run");
  add_oracle(iqae);
  iqae->add_option("--epsilon", o.epsilon, "Target half-width on a")->check(CLI::Range(0.0, 0.5));
  iqae->add_option("--alpha", o.alpha, "Confidence complement")->check(CLI::Range(0.0, 1.0));
  iqae->add_option("--shots", o.shots, "Shots per round")->check(CLI::PositiveNumber);
  iqae->add_option("--ratio", o.ratio, "Minimum Q-power growth factor")->check(CLI::Range(2, 1 << 20));
  iqae->add_option("--backend", o.backend, "sv | analytic")->check(CLI::IsMember({"sv", "analytic"}));
  iqae->add_flag("--trace", o.trace, "Print the per-round trace");

  auto* mci = app.add_subcommand("mci", "Classical hit-or-miss Monte Carlo baseline");
  mci->add_option("--a", o.a, "Integral value")->check(CLI::Range(0.0, 1.0));
  mci->add_option("--samples", o.samples, "Samples per repetition")->check(CLI::PositiveNumber);
  mci->add_option("--reps", o.reps, "Repetitions")->check(CLI::PositiveNumber);
  mci->add_option("--seed", o.seed, "Random seed");
  mci->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* sweep = app.add_subcommand("sweep", "Run an experiment config and write summary CSV");
  sweep->add_option("--config", o.config_path, "key = value config file")->required();
  sweep->add_option("--out", o.out_path, "CSV output file (default stdout)");
  sweep->add_option("--plot", o.plots, "Plot data to emit: err_vs_shots, a_vs_shots, calls_vs_shots, err_vs_calls")
      ->check(CLI::IsMember({"err_vs_shots", "a_vs_shots", "calls_vs_shots", "err_vs_calls"}));
  sweep->add_option("--plot-dir", o.plot_dir, "Directory for plot data (default .)");
  sweep->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Run the brute-force invariant suite");

  auto* reproduce = app.add_subcommand("reproduce", "Regenerate a reference table sweep");
  reproduce->add_option("--table", o.table, "Table number 1..8")->required()->check(CLI::Range(1, 8));
  reproduce->add_option("--out", o.out_path, "Output directory (default .)");
  reproduce->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*mlqae) return run_mlqae_command(o);
    if (*iqae) return run_iqae_command(o);
    if (*mci) return run_mci_command(o);
    if (*sweep) return run_sweep_command(o);
    if (*verify) return run_verify_command();
    if (*reproduce) return run_reproduce_command(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
