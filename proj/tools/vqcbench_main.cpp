// Copyright 2026 The vqcbench developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line driver: sweep, report, trajectory, auto-select, dedup.
// Exit codes: 0 success, 1 configuration error, 2 data error,
// 3 partial sweep failure.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>

#include "vqcbench/bench/auto_select.hpp"
#include "vqcbench/bench/results.hpp"
#include "vqcbench/bench/sweep.hpp"
#include "vqcbench/data/dataset.hpp"
#include "vqcbench/encoding/strategy.hpp"
#include "vqcbench/encoding/trajectory.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 1;
constexpr int kExitDataError = 2;
constexpr int kExitPartialSweep = 3;

int run_sweep_command(const std::string &config_path,
                      const std::string &out_dir, bool resume, int threads) {
  nlohmann::json config_json;
  {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot open config file: " << config_path << "\n";
      return kExitConfigError;
    }
    try {
      in >> config_json;
    } catch (const std::exception &e) {
      std::cerr << "error: config is not valid JSON: " << e.what() << "\n";
      return kExitConfigError;
    }
  }
  vqcbench::SweepConfig config;
  try {
    config = vqcbench::sweep_config_from_json(config_json);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  config.output_dir = out_dir;
  if (threads > 0) config.threads = threads;

  try {
    const vqcbench::SweepOutcome outcome = vqcbench::run_sweep(
        config, resume, [](std::size_t done, std::size_t total) {
          std::cerr << "\r[" << done << "/" << total << "] runs" << std::flush;
        });
    std::cerr << "\n";
    vqcbench::export_results(config, config_json, outcome.results);
    std::cout << "completed " << outcome.results.size() << " runs, "
              << outcome.failures.size() << " failures; results in "
              << config.output_dir << "\n";
    for (const vqcbench::RunFailure &failure : outcome.failures) {
      std::cerr << "failed run " << failure.key.encoding << " L"
                << failure.key.layers << " RU" << failure.key.reuploading
                << " r" << failure.key.repetition << ": " << failure.message
                << "\n";
    }
    return outcome.failures.empty() ? kExitOk : kExitPartialSweep;
  } catch (const vqcbench::DataError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataError;
  }
}

int run_report_command(const std::string &in_dir, const std::string &metric,
                       const std::string &split, const std::string &out_file) {
  try {
    const auto rows =
        vqcbench::parse_runs_csv(std::filesystem::path(in_dir) / "runs.csv");
    const auto aggregates = vqcbench::aggregate_rows(rows, split);
    const auto reports = vqcbench::best_worst_report(
        vqcbench::metric_rows(aggregates, metric));
    const std::string text = vqcbench::group_report_csv_text(reports);
    if (out_file.empty()) {
      std::cout << text;
    } else {
      vqcbench::atomic_write_text(out_file, text);
      std::cout << "report written to " << out_file << "\n";
    }
    return kExitOk;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataError;
  }
}

int run_trajectory_command(const std::string &strategy, int points,
                           const std::string &out_file) {
  std::vector<vqcbench::EncodingSpec> specs;
  try {
    if (strategy == "all") {
      specs = vqcbench::enumerate_angle_strategies();
    } else {
      specs.push_back(vqcbench::encoding_from_name(strategy));
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  std::ostringstream out;
  vqcbench::write_trajectory_header(out);
  for (const vqcbench::EncodingSpec &spec : specs) {
    vqcbench::write_trajectory_rows(out, spec.name,
                                    vqcbench::bloch_trajectory(spec, points));
  }
  try {
    vqcbench::atomic_write_text(out_file, out.str());
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataError;
  }
  std::cout << "trajectories for " << specs.size() << " strategies written to "
            << out_file << "\n";
  return kExitOk;
}

std::string guess_label_column(const std::string &path) {
  std::ifstream in(path);
  std::string header;
  if (in && std::getline(in, header)) {
    if (header.find("Outcome") != std::string::npos) return "Outcome";
    if (header.find("class") != std::string::npos) return "class";
  }
  return "";
}

int run_auto_select_command(vqcbench::AutoSelectConfig config) {
  if (config.label_column.empty()) {
    config.label_column = guess_label_column(config.dataset_path);
    if (config.label_column.empty()) {
      std::cerr << "error: cannot infer label column; pass --label\n";
      return kExitConfigError;
    }
  }
  if (config.dataset_name.empty()) {
    config.dataset_name =
        std::filesystem::path(config.dataset_path).stem().string();
  }
  try {
    const vqcbench::AutoSelectResult result = vqcbench::auto_select(config);
    for (const vqcbench::StageDecision &d : result.audit) {
      std::cout << "stage " << d.stage << ": " << d.encodings.size()
                << " encodings, " << d.runs_used << " runs, best "
                << d.best_encoding << " (layers " << d.best_layers << ") "
                << config.metric << " " << d.best_metric
                << (d.met_threshold ? " -> threshold met" : "") << "\n";
    }
    if (result.truncated) {
      std::cout << "budget exhausted before the next stage; best so far:\n";
    }
    std::cout << "recommended: encoding "
              << result.recommended.encoding.name << ", layers "
              << result.recommended.layers << ", reuploading false, "
              << config.metric << " " << result.best_metric << "\n";
    return kExitOk;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const vqcbench::DataError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataError;
  }
}

int run_dedup_command(const std::string &universe) {
  std::vector<vqcbench::EncodingSpec> raw;
  if (universe == "full") {
    raw = vqcbench::angle_strategy_universe();
  } else if (universe == "catalog") {
    raw = vqcbench::enumerate_angle_strategies();
  } else {
    std::cerr << "error: --universe must be 'full' or 'catalog'\n";
    return kExitConfigError;
  }
  const auto classes = vqcbench::dedup_strategies_detailed(raw);
  std::cout << "universe size: " << raw.size() << "\n";
  std::cout << "distinct strategies: " << classes.size() << "\n";
  for (const vqcbench::DedupEntry &entry : classes) {
    std::cout << "  " << entry.kept.name;
    if (!entry.merged.empty()) {
      std::cout << "  (also:";
      for (const std::string &name : entry.merged) std::cout << ' ' << name;
      std::cout << ')';
    }
    std::cout << "\n";
  }
  std::size_t dropped = 0;
  for (const vqcbench::EncodingSpec &spec : raw) {
    if (vqcbench::strategy_feature_independent(spec)) {
      ++dropped;
      std::cout << "  dropped (feature-independent): " << spec.name << "\n";
    }
  }
  (void)dropped;
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"vqcbench: variational quantum classifier encoding benchmark"};
  app.require_subcommand(1);

  auto *sweep_cmd =
      app.add_subcommand("sweep", "run the (encoding x layers x RU) grid");
  std::string sweep_config, sweep_out;
  bool sweep_resume = false;
  int sweep_threads = 0;
  sweep_cmd->add_option("--config", sweep_config, "sweep config JSON file")
      ->required();
  sweep_cmd->add_option("--out", sweep_out, "output directory")->required();
  sweep_cmd->add_flag("--resume", sweep_resume,
                      "skip runs whose result files already exist");
  sweep_cmd->add_option("--threads", sweep_threads, "worker threads");

  auto *report_cmd =
      app.add_subcommand("report", "best/worst table from sweep results");
  std::string report_in, report_metric = "accuracy", report_split = "test",
              report_out;
  report_cmd->add_option("--in", report_in, "sweep output directory")
      ->required();
  report_cmd->add_option("--metric", report_metric,
                         "accuracy|balanced_accuracy|precision|recall|f1");
  report_cmd->add_option("--split", report_split, "train or test");
  report_cmd->add_option("--out", report_out, "output CSV (default stdout)");

  auto *traj_cmd =
      app.add_subcommand("trajectory", "Bloch trajectory CSV export");
  std::string traj_strategy, traj_out;
  int traj_points = 101;
  traj_cmd->add_option("--strategy", traj_strategy, "strategy name or 'all'")
      ->required();
  traj_cmd->add_option("--points", traj_points, "samples per strategy");
  traj_cmd->add_option("--out", traj_out, "output CSV file")->required();

  auto *auto_cmd =
      app.add_subcommand("auto-select", "staged encoding selection");
  vqcbench::AutoSelectConfig auto_config;
  long auto_budget = -1;
  auto_cmd->add_option("--dataset", auto_config.dataset_path, "dataset CSV")
      ->required();
  auto_cmd->add_option("--label", auto_config.label_column, "label column");
  auto_cmd->add_option("--threshold", auto_config.threshold,
                       "stop once the best mean test metric reaches this");
  auto_cmd->add_option("--metric", auto_config.metric, "selection metric");
  auto_cmd->add_option("--budget", auto_budget, "max runs (-1 = unlimited)");
  auto_cmd->add_option("--layers", auto_config.layer_grid, "layer grid");
  auto_cmd->add_option("--repetitions", auto_config.repetitions,
                       "seeds per model");
  auto_cmd->add_option("--epochs", auto_config.train.epochs, "epochs per run");
  auto_cmd->add_option("--qubits", auto_config.num_qubits,
                       "qubit count (0 = derive)");
  auto_cmd->add_option("--seed", auto_config.base_seed, "base seed");

  auto *dedup_cmd =
      app.add_subcommand("dedup", "equivalence-prune angle strategies");
  std::string dedup_universe = "full";
  dedup_cmd->add_option("--universe", dedup_universe, "'full' or 'catalog'");

  CLI11_PARSE(app, argc, argv);

  if (sweep_cmd->parsed()) {
    return run_sweep_command(sweep_config, sweep_out, sweep_resume,
                             sweep_threads);
  }
  if (report_cmd->parsed()) {
    return run_report_command(report_in, report_metric, report_split,
                              report_out);
  }
  if (traj_cmd->parsed()) {
    return run_trajectory_command(traj_strategy, traj_points, traj_out);
  }
  if (auto_cmd->parsed()) {
    auto_config.budget = auto_budget;
    return run_auto_select_command(auto_config);
  }
  if (dedup_cmd->parsed()) {
    return run_dedup_command(dedup_universe);
  }
  return kExitConfigError;
}
