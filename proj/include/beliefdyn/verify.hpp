#pragma once

#include <map>
#include <vector>

#include "beliefdyn/dynamics.hpp"
#include "beliefdyn/oracle.hpp"
#include "beliefdyn/predictor.hpp"
#include "beliefdyn/tolerances.hpp"

namespace beliefdyn {

struct TopicComparison {
  int topic = 0;                 // 0-based
  VerdictKind predicted = VerdictKind::Undetermined;
  Eigen::VectorXd oracle_limit;     // per individual
  Eigen::VectorXd simulated_limit;  // per individual
  double simulated_spread = 0.0;
  double simulated_mean = 0.0;
  double oracle_vs_simulation = 0.0;  // max abs deviation
  bool category_match = true;
};

struct VerificationReport {
  PredictionReport prediction;
  std::vector<TopicComparison> topics;
  std::map<int, SpectralCertificate> open_block_certificates;  // block index -> rho
  double fixed_point_residual = 0.0;  // ||A y* - y*||_inf of the oracle limit
  long simulation_steps = 0;
  Trajectory trajectory;  // topic-major
  bool agreement = false;
};

// Runs the decision procedure, the fixed-point oracle and the simulation on
// one scenario and scores them against each other. Consensus topics must
// match category and value, disagreement topics must show spread, and
// conjectured topics are scored on oracle-vs-simulation deviation only.
VerificationReport cross_validate(const InfluenceNetwork& net, const LogicProfile& profile,
                                  const Eigen::Ref<const Eigen::VectorXd>& x0,
                                  const Tolerances& tols = {});

}  // namespace beliefdyn
