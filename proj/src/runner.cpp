#include "beliefdyn/runner.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "beliefdyn/errors.hpp"
#include "beliefdyn/report_json.hpp"

namespace beliefdyn {

namespace {

std::string fmt(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void write_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error("cannot write " + tmp);
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

std::string trajectory_csv(const Trajectory& traj, int n, int m) {
  std::ostringstream os;
  os << "t";
  for (int i = 0; i < n; ++i) {
    for (int p = 0; p < m; ++p) os << ",x" << i + 1 << "_t" << p + 1;
  }
  os << "\n";
  for (size_t t = 0; t < traj.states.size(); ++t) {
    os << t;
    const Eigen::VectorXd& y = traj.states[t];  // topic-major
    for (int i = 0; i < n; ++i) {
      for (int p = 0; p < m; ++p) os << "," << fmt(y(p * n + i));
    }
    os << "\n";
  }
  return os.str();
}

RunResult run(const ScenarioConfig& cfg, const RunOptions& opts) {
  Tolerances tols = cfg.tols;
  if (opts.sim_tol.has_value()) tols.sim_tol = *opts.sim_tol;
  if (opts.max_steps.has_value()) tols.max_steps = *opts.max_steps;

  RunResult result;
  result.report = cross_validate(cfg.net, cfg.profile, cfg.x0, tols);
  result.exit_code = result.report.agreement ? 0 : 2;

  std::string dir = opts.output_dir.value_or(cfg.output_dir);
  if (dir.empty()) dir = "out/" + cfg.name;
  result.output_dir = dir;

  if (opts.write_files) {
    std::filesystem::create_directories(dir);
    const int n = static_cast<int>(cfg.net.W.rows());
    const int m = static_cast<int>(cfg.profile.matrices.front().C.rows());

    result.trajectory_path = dir + "/trajectory.csv";
    write_atomic(result.trajectory_path, trajectory_csv(result.report.trajectory, n, m));

    result.prediction_path = dir + "/prediction.json";
    write_atomic(result.prediction_path,
                 prediction_to_json(result.report.prediction, cfg.name).dump(2) + "\n");

    result.verification_path = dir + "/verification.json";
    write_atomic(result.verification_path,
                 verification_to_json(result.report, cfg.name).dump(2) + "\n");
  }
  return result;
}

}  // namespace beliefdyn
