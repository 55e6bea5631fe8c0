#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "beliefdyn/config.hpp"
#include "beliefdyn/dynamics.hpp"
#include "beliefdyn/errors.hpp"
#include "beliefdyn/generator.hpp"
#include "beliefdyn/predictor.hpp"
#include "beliefdyn/report_json.hpp"
#include "beliefdyn/runner.hpp"

namespace fs = std::filesystem;
using namespace beliefdyn;

namespace {

void print_warnings(const ScenarioConfig& cfg) {
  for (const auto& w : cfg.warnings) std::cerr << "warning: " << w << "\n";
}

void describe(const ScenarioConfig& cfg) {
  const int n = static_cast<int>(cfg.net.W.rows());
  const int m = static_cast<int>(cfg.profile.matrices.front().C.rows());
  const TopicPartition partition = condense_logic(cfg.profile);
  std::cout << "ok: " << cfg.name << " n=" << n << " m=" << m
            << " blocks=" << partition.count() << "\n";
  for (int j = 0; j < partition.count(); ++j) {
    std::cout << "  block " << j + 1 << ": topics";
    for (int p : partition.blocks[static_cast<size_t>(j)]) std::cout << " " << p + 1;
    std::cout << (partition.closed[static_cast<size_t>(j)] ? " (closed)" : " (open)")
              << "\n";
  }
}

void print_prediction(const PredictionReport& report) {
  for (size_t p = 0; p < report.topics.size(); ++p) {
    const TopicVerdict& v = report.topics[p];
    std::cout << "topic " << p + 1 << ": " << verdict_name(v.kind);
    if (v.alpha.has_value()) std::cout << " alpha=" << *v.alpha;
    std::cout << " [" << v.rule << "]";
    if (!v.note.empty()) std::cout << " (" << v.note << ")";
    std::cout << "\n";
  }
}

int do_verify(const ScenarioConfig& cfg, const RunOptions& opts) {
  print_warnings(cfg);
  const RunResult result = run(cfg, opts);
  const VerificationReport& report = result.report;
  print_prediction(report.prediction);
  for (const TopicComparison& c : report.topics) {
    std::cout << "topic " << c.topic + 1 << ": sim mean=" << c.simulated_mean
              << " spread=" << c.simulated_spread
              << " |oracle-sim|=" << c.oracle_vs_simulation
              << (c.category_match ? " match" : " MISMATCH") << "\n";
  }
  std::cout << "steps=" << report.simulation_steps
            << " fixed_point_residual=" << report.fixed_point_residual
            << " agreement=" << (report.agreement ? "yes" : "NO") << "\n";
  if (!result.trajectory_path.empty()) {
    std::cout << "wrote " << result.trajectory_path << ", " << result.prediction_path
              << ", " << result.verification_path << "\n";
  }
  return result.exit_code;
}

std::vector<std::string> collect_configs(const std::vector<std::string>& paths) {
  std::vector<std::string> files;
  for (const auto& path : paths) {
    if (fs::is_directory(path)) {
      for (const auto& entry : fs::directory_iterator(path)) {
        if (entry.path().extension() == ".json") files.push_back(entry.path().string());
      }
    } else {
      files.push_back(path);
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"heterogeneous multi-topic opinion dynamics"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out;
  std::vector<std::string> batch_paths;
  double sim_tol = -1.0;
  long max_steps = -1;
  std::uint64_t seed = 0;
  bool seed_given = false;

  CLI::App* c_validate = app.add_subcommand("validate", "check a scenario config");
  c_validate->add_option("config", config_path, "scenario file")->required();

  CLI::App* c_predict =
      app.add_subcommand("predict", "run the consensus decision procedure");
  c_predict->add_option("config", config_path, "scenario file")->required();
  c_predict->add_option("--out", out, "directory for prediction.json");

  CLI::App* c_simulate = app.add_subcommand("simulate", "iterate the update map");
  c_simulate->add_option("config", config_path, "scenario file")->required();
  c_simulate->add_option("--tol", sim_tol, "residual tolerance");
  c_simulate->add_option("--max-steps", max_steps, "iteration budget");
  c_simulate->add_option("--out", out, "directory for trajectory.csv");

  CLI::App* c_verify =
      app.add_subcommand("verify", "cross-validate prediction, oracle and simulation");
  c_verify->add_option("config", config_path, "scenario file")->required();
  c_verify->add_option("--tol", sim_tol, "residual tolerance");
  c_verify->add_option("--max-steps", max_steps, "iteration budget");
  c_verify->add_option("--out", out, "output directory");

  CLI::App* c_generate = app.add_subcommand("generate", "resolve a generator config");
  c_generate->add_option("config", config_path, "generator file")->required();
  c_generate->add_option("--out", out, "output file")->required();
  c_generate->add_option("--seed", seed, "override the generator seed");

  CLI::App* c_batch = app.add_subcommand("batch", "verify several scenarios");
  c_batch->add_option("paths", batch_paths, "config files or directories")->required();
  c_batch->add_option("--tol", sim_tol, "residual tolerance");
  c_batch->add_option("--max-steps", max_steps, "iteration budget");
  c_batch->add_option("--out", out, "output root directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  seed_given = c_generate->count("--seed") > 0;

  RunOptions opts;
  if (sim_tol > 0.0) opts.sim_tol = sim_tol;
  if (max_steps > 0) opts.max_steps = max_steps;

  try {
    if (c_validate->parsed()) {
      const ScenarioConfig cfg = load_config(config_path);
      print_warnings(cfg);
      describe(cfg);
      return 0;
    }

    if (c_predict->parsed()) {
      const ScenarioConfig cfg = load_config(config_path);
      print_warnings(cfg);
      const PredictionReport report = predict_all(cfg.net, cfg.profile, cfg.x0);
      print_prediction(report);
      if (!out.empty()) {
        fs::create_directories(out);
        std::ofstream f(out + "/prediction.json");
        f << prediction_to_json(report, cfg.name).dump(2) << "\n";
        std::cout << "wrote " << out << "/prediction.json\n";
      }
      return 0;
    }

    if (c_simulate->parsed()) {
      const ScenarioConfig cfg = load_config(config_path);
      print_warnings(cfg);
      const int n = static_cast<int>(cfg.net.W.rows());
      const int m = static_cast<int>(cfg.profile.matrices.front().C.rows());
      SimulateOptions sopts;
      sopts.tol = opts.sim_tol.value_or(cfg.tols.sim_tol);
      sopts.max_steps = opts.max_steps.value_or(cfg.tols.max_steps);
      const Eigen::MatrixXd A = build_system(cfg.net, cfg.profile, Ordering::TopicMajor);
      const Eigen::VectorXd y0 =
          apply_permutation(interleave_permutation(n, m), cfg.x0);
      const Trajectory traj = simulate(A, y0, sopts);
      const auto outcomes =
          detect_per_topic_outcome(traj, n, m, Ordering::TopicMajor, cfg.tols.consensus_tol);
      std::cout << "converged after " << *traj.converged_at << " steps\n";
      for (size_t p = 0; p < outcomes.size(); ++p) {
        std::cout << "topic " << p + 1 << ": "
                  << (outcomes[p].consensus ? "consensus" : "disagreement")
                  << " mean=" << outcomes[p].value << " spread=" << outcomes[p].spread
                  << "\n";
      }
      if (!out.empty()) {
        fs::create_directories(out);
        std::ofstream f(out + "/trajectory.csv");
        f << trajectory_csv(traj, n, m);
        std::cout << "wrote " << out << "/trajectory.csv\n";
      }
      return 0;
    }

    if (c_verify->parsed()) {
      const ScenarioConfig cfg = load_config(config_path);
      if (!out.empty()) opts.output_dir = out;
      return do_verify(cfg, opts);
    }

    if (c_generate->parsed()) {
      std::ifstream in(config_path);
      if (!in) throw ParseError("cannot open config file " + config_path);
      json doc = json::parse(in, nullptr, true, true);
      if (!doc.is_object() || !doc.contains("generator")) {
        throw ParseError("config " + config_path + ": generate needs a \"generator\" field");
      }
      if (seed_given) doc["generator"]["seed"] = seed;
      const ScenarioConfig cfg =
          parse_config(doc, fs::path(config_path).stem().string());
      save_config(cfg, out);
      std::cout << "wrote " << out << "\n";
      return 0;
    }

    if (c_batch->parsed()) {
      const auto files = collect_configs(batch_paths);
      if (files.empty()) throw Error("batch: no config files found");
      bool any_error = false;
      bool any_mismatch = false;
      for (const auto& file : files) {
        try {
          const ScenarioConfig cfg = load_config(file);
          RunOptions ropts = opts;
          if (!out.empty()) ropts.output_dir = out + "/" + cfg.name;
          const RunResult result = run(cfg, ropts);
          std::cout << cfg.name << ": "
                    << (result.exit_code == 0 ? "agreement" : "MISMATCH")
                    << " steps=" << result.report.simulation_steps << "\n";
          if (result.exit_code != 0) any_mismatch = true;
        } catch (const std::exception& e) {
          std::cout << file << ": error: " << e.what() << "\n";
          any_error = true;
        }
      }
      if (any_error) return 1;
      return any_mismatch ? 2 : 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
