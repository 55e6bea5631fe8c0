#include "beliefdyn/verify.hpp"

#include <cmath>

#include "beliefdyn/errors.hpp"

namespace beliefdyn {

VerificationReport cross_validate(const InfluenceNetwork& net, const LogicProfile& profile,
                                  const Eigen::Ref<const Eigen::VectorXd>& x0,
                                  const Tolerances& tols) {
  const int n = net.n();
  const int m = profile.m();
  VerificationReport report;
  report.prediction = predict_all(net, profile, x0);

  const Eigen::MatrixXd A = build_multiplex_pattern(net, profile);
  const Eigen::VectorXd y0 = apply_permutation(interleave_permutation(n, m), x0);

  const std::vector<Eigen::VectorXd> oracle = oracle_limits(net, profile, x0);
  Eigen::VectorXd y_star(static_cast<Eigen::Index>(n) * m);
  for (int p = 0; p < m; ++p) {
    y_star.segment(static_cast<Eigen::Index>(p) * n, n) = oracle[static_cast<size_t>(p)];
  }
  report.fixed_point_residual = (A * y_star - y_star).cwiseAbs().maxCoeff();

  for (int j = 0; j < report.prediction.partition.count(); ++j) {
    if (!report.prediction.partition.closed[static_cast<size_t>(j)]) {
      report.open_block_certificates[j] =
          spectral_certificate(A, report.prediction.partition, j, n);
    }
  }

  SimulateOptions opts;
  opts.tol = tols.sim_tol;
  opts.max_steps = tols.max_steps;
  report.trajectory = simulate(A, y0, opts);
  report.simulation_steps = static_cast<long>(report.trajectory.states.size()) - 1;
  const auto outcomes =
      detect_per_topic_outcome(report.trajectory, n, m, Ordering::TopicMajor,
                               tols.consensus_tol);

  bool all_ok = report.fixed_point_residual < tol::fixed_point_residual;
  report.topics.resize(static_cast<size_t>(m));
  for (int p = 0; p < m; ++p) {
    TopicComparison& cmp = report.topics[static_cast<size_t>(p)];
    const TopicVerdict& predicted = report.prediction.topics[static_cast<size_t>(p)];
    cmp.topic = p;
    cmp.predicted = predicted.kind;
    cmp.oracle_limit = oracle[static_cast<size_t>(p)];
    cmp.simulated_limit =
        report.trajectory.limit->segment(static_cast<Eigen::Index>(p) * n, n);
    cmp.simulated_spread = outcomes[static_cast<size_t>(p)].spread;
    cmp.simulated_mean = outcomes[static_cast<size_t>(p)].value;
    cmp.oracle_vs_simulation =
        (cmp.oracle_limit - cmp.simulated_limit).cwiseAbs().maxCoeff();

    switch (predicted.kind) {
      case VerdictKind::Consensus:
      case VerdictKind::ZeroConsensus:
        cmp.category_match = outcomes[static_cast<size_t>(p)].consensus &&
                             std::abs(*predicted.alpha - cmp.simulated_mean) <= tols.alpha_tol;
        break;
      case VerdictKind::Disagreement:
        cmp.category_match = !outcomes[static_cast<size_t>(p)].consensus;
        break;
      case VerdictKind::ConjecturedDisagreement:
      case VerdictKind::Undetermined:
        // No rule-backed claim to score; the oracle/simulation deviation
        // below still has to hold.
        cmp.category_match = true;
        break;
    }
    all_ok = all_ok && cmp.category_match &&
             cmp.oracle_vs_simulation <= tols.agreement_tol;
  }
  report.agreement = all_ok;
  return report;
}

}  // namespace beliefdyn
