#pragma once

#include <optional>
#include <string>

#include "beliefdyn/config.hpp"
#include "beliefdyn/verify.hpp"

namespace beliefdyn {

struct RunOptions {
  std::optional<std::string> output_dir;  // overrides the config's choice
  std::optional<double> sim_tol;
  std::optional<long> max_steps;
  bool write_files = true;
};

struct RunResult {
  int exit_code = 0;  // 0 agreement, 2 predictor/simulation mismatch
  VerificationReport report;
  std::string output_dir;
  std::string trajectory_path;
  std::string prediction_path;
  std::string verification_path;
};

// Full pipeline on one scenario: cross-validate, then write trajectory.csv
// (individual-major columns x{i}_t{p}), prediction.json and
// verification.json into the output directory. Files are written to a
// temporary name and renamed, and identical configs produce identical
// bytes. Errors propagate as exceptions; the caller maps them to exit 1.
RunResult run(const ScenarioConfig& cfg, const RunOptions& opts = {});

// trajectory.csv text for a topic-major trajectory, converted to
// individual-major columns.
std::string trajectory_csv(const Trajectory& traj, int n, int m);

}  // namespace beliefdyn
