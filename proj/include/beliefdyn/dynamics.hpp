#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "beliefdyn/model.hpp"
#include "beliefdyn/tolerances.hpp"

namespace beliefdyn {

// State layout of a stacked opinion vector. IndividualMajor groups the m
// topic positions of each individual together (index i*m + p); TopicMajor
// groups the n individual positions of each topic (index p*n + i).
enum class Ordering { IndividualMajor, TopicMajor };

// Permutation sigma with sigma[i*m + p] = p*n + i: applying it to an
// individual-major vector yields the topic-major one.
std::vector<int> interleave_permutation(int n, int m);

Eigen::VectorXd apply_permutation(const std::vector<int>& sigma,
                                  const Eigen::Ref<const Eigen::VectorXd>& x);

// Full nm x nm update matrix in the requested layout. IndividualMajor gives
// block (i, j) = W(i,j) * C_i; TopicMajor gives the build_multiplex_pattern
// matrix. The two are similar under interleave_permutation.
Eigen::MatrixXd build_system(const InfluenceNetwork& net, const LogicProfile& profile,
                             Ordering ordering);

struct SimulateOptions {
  double tol = tol::simulate;
  long max_steps = tol::max_steps;
  int streak = tol::residual_streak;
};

struct Trajectory {
  std::vector<Eigen::VectorXd> states;  // states[t] is the state at step t
  std::vector<double> residuals;        // residuals[t] = ||states[t+1] - states[t]||_inf
  std::optional<long> converged_at;     // first step of the accepting residual streak
  std::optional<Eigen::VectorXd> limit; // final state when converged
};

// Iterates x(t+1) = M x(t) until `streak` consecutive residuals fall below
// `tol`, recording every state. Throws MaxStepsExceeded (carrying the last
// state and residual) if the budget runs out first.
// Precondition: x0 entries lie in [-1, 1].
Trajectory simulate(const Eigen::Ref<const Eigen::MatrixXd>& M,
                    const Eigen::Ref<const Eigen::VectorXd>& x0,
                    const SimulateOptions& opts = {});

// Closed-form limit for a profile where everyone shares one logic matrix:
// every individual converges to lim C^k applied to the influence-weighted
// average of the initial individual opinions. Individual-major result.
Eigen::VectorXd homogeneous_limit(const InfluenceNetwork& net, const LogicMatrix& logic,
                                  const Eigen::Ref<const Eigen::VectorXd>& x0);

struct TopicOutcome {
  bool consensus = false;
  double value = 0.0;   // mean terminal position (meaningful under consensus)
  double spread = 0.0;  // max minus min terminal position
};

// Per-topic consensus/disagreement classification of a converged
// trajectory's limit. Throws NotConverged for an unconverged trajectory.
std::vector<TopicOutcome> detect_per_topic_outcome(const Trajectory& traj, int n, int m,
                                                   Ordering ordering,
                                                   double consensus_tol = tol::consensus);

}  // namespace beliefdyn
