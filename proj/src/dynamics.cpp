#include "beliefdyn/dynamics.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "beliefdyn/errors.hpp"
#include "beliefdyn/graph.hpp"
#include "beliefdyn/spectral.hpp"

namespace beliefdyn {

std::vector<int> interleave_permutation(int n, int m) {
  std::vector<int> sigma(static_cast<size_t>(n) * m);
  for (int i = 0; i < n; ++i) {
    for (int p = 0; p < m; ++p) {
      sigma[static_cast<size_t>(i) * m + p] = p * n + i;
    }
  }
  return sigma;
}

Eigen::VectorXd apply_permutation(const std::vector<int>& sigma,
                                  const Eigen::Ref<const Eigen::VectorXd>& x) {
  Eigen::VectorXd y(x.size());
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    y(sigma[static_cast<size_t>(k)]) = x(k);
  }
  return y;
}

Eigen::MatrixXd build_system(const InfluenceNetwork& net, const LogicProfile& profile,
                             Ordering ordering) {
  const int n = net.n();
  const int m = profile.m();
  if (profile.n() != n) {
    std::ostringstream os;
    os << "profile has " << profile.n() << " individuals but the network has " << n;
    throw PreconditionViolation(os.str());
  }
  if (ordering == Ordering::TopicMajor) {
    return build_multiplex_pattern(net, profile);
  }
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(n * m, n * m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (net.W(i, j) <= tol::sign_zero) continue;
      B.block(i * m, j * m, m, m) = net.W(i, j) * profile.C(i);
    }
  }
  return B;
}

Trajectory simulate(const Eigen::Ref<const Eigen::MatrixXd>& M,
                    const Eigen::Ref<const Eigen::VectorXd>& x0,
                    const SimulateOptions& opts) {
  if (M.rows() != M.cols() || M.rows() != x0.size()) {
    throw PreconditionViolation("simulate needs a square matrix matching the state size");
  }
  if (x0.size() > 0 && x0.cwiseAbs().maxCoeff() > 1.0 + tol::structure) {
    std::ostringstream os;
    os << "initial state leaves [-1, 1]: max abs entry " << x0.cwiseAbs().maxCoeff();
    throw PreconditionViolation(os.str());
  }

  Trajectory traj;
  traj.states.push_back(x0);
  int streak = 0;
  for (long t = 0; t < opts.max_steps; ++t) {
    Eigen::VectorXd next = M * traj.states.back();
    const double residual = (next - traj.states.back()).cwiseAbs().maxCoeff();
    traj.states.push_back(std::move(next));
    traj.residuals.push_back(residual);
    if (residual < opts.tol) {
      if (++streak >= opts.streak) {
        const long final_step = static_cast<long>(traj.states.size()) - 1;
        traj.converged_at = final_step - opts.streak;
        traj.limit = traj.states.back();
        return traj;
      }
    } else {
      streak = 0;
    }
  }
  std::ostringstream os;
  os << "no convergence within " << opts.max_steps << " steps; last residual "
     << traj.residuals.back();
  throw MaxStepsExceeded(os.str(), traj.states.back(), traj.residuals.back(),
                         opts.max_steps);
}

Eigen::VectorXd homogeneous_limit(const InfluenceNetwork& net, const LogicMatrix& logic,
                                  const Eigen::Ref<const Eigen::VectorXd>& x0) {
  const int n = net.n();
  const int m = logic.m();
  if (x0.size() != static_cast<Eigen::Index>(n) * m) {
    throw PreconditionViolation("homogeneous limit: state size must be n*m");
  }
  // The network part converges to the rank-one projector onto its left unit
  // eigenvector, so every individual ends at lim C^k applied to the same
  // weighted average of initial opinions.
  const Eigen::VectorXd gamma = left_perron_vector(net.W);
  const Eigen::MatrixXd Cinf = power_limit(logic.C);
  Eigen::VectorXd mix = Eigen::VectorXd::Zero(m);
  for (int j = 0; j < n; ++j) mix += gamma(j) * x0.segment(static_cast<Eigen::Index>(j) * m, m);
  const Eigen::VectorXd each = Cinf * mix;
  Eigen::VectorXd out(static_cast<Eigen::Index>(n) * m);
  for (int i = 0; i < n; ++i) out.segment(static_cast<Eigen::Index>(i) * m, m) = each;
  return out;
}

std::vector<TopicOutcome> detect_per_topic_outcome(const Trajectory& traj, int n, int m,
                                                   Ordering ordering, double consensus_tol) {
  if (!traj.converged_at.has_value() || !traj.limit.has_value()) {
    throw NotConverged("per-topic outcome needs a converged trajectory");
  }
  const Eigen::VectorXd& limit = *traj.limit;
  if (limit.size() != static_cast<Eigen::Index>(n) * m) {
    throw PreconditionViolation("per-topic outcome: limit size must be n*m");
  }
  std::vector<TopicOutcome> out(static_cast<size_t>(m));
  for (int p = 0; p < m; ++p) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const Eigen::Index idx = ordering == Ordering::IndividualMajor
                                   ? static_cast<Eigen::Index>(i) * m + p
                                   : static_cast<Eigen::Index>(p) * n + i;
      const double v = limit(idx);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      sum += v;
    }
    TopicOutcome& o = out[static_cast<size_t>(p)];
    o.spread = hi - lo;
    o.value = sum / n;
    o.consensus = o.spread < consensus_tol;
  }
  return out;
}

}  // namespace beliefdyn
