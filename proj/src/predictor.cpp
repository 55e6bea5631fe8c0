#include "beliefdyn/predictor.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <sstream>

#include "beliefdyn/dynamics.hpp"
#include "beliefdyn/errors.hpp"
#include "beliefdyn/oracle.hpp"

namespace beliefdyn {

const char* verdict_name(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Consensus: return "consensus";
    case VerdictKind::ZeroConsensus: return "zero-consensus";
    case VerdictKind::Disagreement: return "disagreement";
    case VerdictKind::ConjecturedDisagreement: return "conjectured-disagreement";
    case VerdictKind::Undetermined: return "undetermined";
  }
  return "undetermined";
}

ClosedCase closed_block_case(const LogicProfile& profile, const std::vector<int>& topics) {
  for (int p : topics) {
    for (int q : topics) {
      if (p != q && cell_competing(profile, p, q)) return ClosedCase::Competing;
    }
  }
  // No sign conflicts, so one individual's restricted matrix carries the
  // shared signs of the whole block.
  const Eigen::Index s = static_cast<Eigen::Index>(topics.size());
  Eigen::MatrixXd sub(s, s);
  for (Eigen::Index a = 0; a < s; ++a) {
    for (Eigen::Index b = 0; b < s; ++b) {
      sub(a, b) = profile.C(0)(topics[static_cast<size_t>(a)], topics[static_cast<size_t>(b)]);
    }
  }
  return structural_balance(sub).balanced ? ClosedCase::Balanced : ClosedCase::Unbalanced;
}

namespace {

struct UpstreamView {
  bool all_consensus = true;
  bool any_disagreement = false;
  bool any_undetermined = false;
};

UpstreamView scan_upstream(const std::vector<int>& deps,
                           const std::vector<TopicVerdict>& resolved) {
  UpstreamView view;
  for (int q : deps) {
    switch (resolved[static_cast<size_t>(q)].kind) {
      case VerdictKind::Consensus:
      case VerdictKind::ZeroConsensus:
        break;
      case VerdictKind::Disagreement:
      case VerdictKind::ConjecturedDisagreement:
        view.any_disagreement = true;
        view.all_consensus = false;
        break;
      case VerdictKind::Undetermined:
        view.any_undetermined = true;
        view.all_consensus = false;
        break;
    }
  }
  return view;
}

double upstream_alpha(const TopicVerdict& v) {
  return v.kind == VerdictKind::ZeroConsensus ? 0.0 : v.alpha.value_or(0.0);
}

}  // namespace

std::vector<TopicVerdict> predict_closed_block(const InfluenceNetwork& net,
                                               const LogicProfile& profile,
                                               const TopicPartition& partition, int j,
                                               const Eigen::Ref<const Eigen::VectorXd>& x0) {
  const std::vector<int>& block = partition.blocks[static_cast<size_t>(j)];
  if (!partition.closed[static_cast<size_t>(j)]) {
    throw PreconditionViolation("predict_closed_block called on an open block");
  }
  std::vector<TopicVerdict> out(block.size());
  switch (closed_block_case(profile, block)) {
    case ClosedCase::Competing:
      for (auto& v : out) {
        v.kind = VerdictKind::ZeroConsensus;
        v.alpha = 0.0;
        v.rule = rules::closed_competing;
      }
      return out;
    case ClosedCase::Unbalanced:
      for (auto& v : out) {
        v.kind = VerdictKind::ZeroConsensus;
        v.alpha = 0.0;
        v.rule = rules::closed_unbalanced;
      }
      return out;
    case ClosedCase::Balanced:
      break;
  }
  // Consensus with a common magnitude and the two-camp sign split. The
  // magnitude has no closed form at this level; the spectral fixed-point
  // oracle fills it in.
  const int n = net.n();
  const Eigen::MatrixXd A = build_multiplex_pattern(net, profile);
  const Eigen::VectorXd y0 = apply_permutation(interleave_permutation(n, profile.m()), x0);
  const Eigen::VectorXd ylim =
      fixed_point_block(A, partition, j, n, std::vector<Eigen::VectorXd>(), y0);
  for (size_t k = 0; k < block.size(); ++k) {
    TopicVerdict& v = out[k];
    v.kind = VerdictKind::Consensus;
    v.alpha = ylim(static_cast<Eigen::Index>(k) * n);
    v.rule = rules::closed_balanced;
    v.note = "consensus value filled by the spectral fixed-point oracle";
    if (std::abs(*v.alpha) < tol::consensus) {
      v.note += "; near-zero value, nonzero holds for almost every initial state";
    }
  }
  return out;
}

TopicVerdict predict_singleton_block(int p, const InfluenceNetwork& net,
                                     const LogicProfile& profile,
                                     const TopicPartition& partition,
                                     const std::vector<TopicVerdict>& resolved) {
  (void)net;
  const std::vector<int>& deps = partition.dep_sets[static_cast<size_t>(p)];
  if (deps.empty()) {
    throw PreconditionViolation("predict_singleton_block needs external dependencies");
  }
  TopicVerdict v;
  const UpstreamView view = scan_upstream(deps, resolved);
  if (view.any_disagreement) {
    v.kind = VerdictKind::ConjecturedDisagreement;
    v.rule = rules::upstream_conjecture;
    return v;
  }
  if (view.any_undetermined) {
    v.kind = VerdictKind::Undetermined;
    v.rule = rules::upstream_conjecture;
    return v;
  }
  // Every individual's terminal value is the coupling-weighted mean of the
  // upstream consensus values; consensus holds exactly when those means
  // agree across individuals.
  const int n = profile.n();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double first = 0.0;
  for (int i = 0; i < n; ++i) {
    double num = 0.0;
    double den = 0.0;
    for (int q : deps) {
      const double c = profile.C(i)(p, q);
      num += upstream_alpha(resolved[static_cast<size_t>(q)]) * c;
      den += std::abs(c);
    }
    const double r = num / den;
    if (i == 0) first = r;
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  if (hi - lo < tol::rule_residual) {
    v.kind = VerdictKind::Consensus;
    v.alpha = first;
    v.rule = rules::singleton_kappa;
  } else {
    v.kind = VerdictKind::Disagreement;
    v.rule = rules::singleton_infeasible;
    std::ostringstream os;
    os << "per-individual ratios span " << hi - lo;
    v.note = os.str();
  }
  return v;
}

std::vector<TopicVerdict> predict_multi_block(const InfluenceNetwork& net,
                                              const LogicProfile& profile,
                                              const TopicPartition& partition, int j,
                                              const std::vector<TopicVerdict>& resolved,
                                              std::vector<double>* solved) {
  (void)net;
  const std::vector<int>& block = partition.blocks[static_cast<size_t>(j)];
  const std::vector<int>& ext = partition.ext_dep_sets[static_cast<size_t>(j)];
  if (block.size() < 2 || ext.empty()) {
    throw PreconditionViolation("predict_multi_block needs an open block of 2+ topics");
  }
  std::vector<TopicVerdict> out(block.size());
  const UpstreamView view = scan_upstream(ext, resolved);
  if (view.any_disagreement || view.any_undetermined) {
    for (auto& v : out) {
      v.kind = view.any_disagreement ? VerdictKind::ConjecturedDisagreement
                                     : VerdictKind::Undetermined;
      v.rule = rules::upstream_conjecture;
    }
    return out;
  }

  // One equation per individual and block topic: the candidate value of a
  // topic must reproduce itself under that individual's couplings to the
  // rest of the block and to the settled upstream topics.
  const int n = profile.n();
  const int s = static_cast<int>(block.size());
  Eigen::MatrixXd lhs = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n) * s, s);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n) * s);
  bool upstream_all_zero = true;
  for (int q : ext) {
    if (std::abs(upstream_alpha(resolved[static_cast<size_t>(q)])) > tol::sign_zero) {
      upstream_all_zero = false;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int kk = 0; kk < s; ++kk) {
      const int k = block[static_cast<size_t>(kk)];
      const Eigen::Index row = static_cast<Eigen::Index>(i) * s + kk;
      double diag = 0.0;
      for (int rr = 0; rr < s; ++rr) {
        if (rr == kk) continue;
        const double c = profile.C(i)(k, block[static_cast<size_t>(rr)]);
        diag += std::abs(c);
        lhs(row, rr) -= c;
      }
      for (int q : ext) {
        const double c = profile.C(i)(k, q);
        diag += std::abs(c);
        rhs(row) += upstream_alpha(resolved[static_cast<size_t>(q)]) * c;
      }
      lhs(row, kk) += diag;
    }
  }

  Eigen::BDCSVD<Eigen::MatrixXd> svd(lhs, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd phi = svd.solve(rhs);
  const double residual = (lhs * phi - rhs).cwiseAbs().maxCoeff();
  const bool in_range = phi.cwiseAbs().maxCoeff() <= 1.0 + tol::rule_residual;

  if (residual < tol::rule_residual && in_range) {
    if (solved) solved->assign(phi.data(), phi.data() + phi.size());
    for (int kk = 0; kk < s; ++kk) {
      TopicVerdict& v = out[static_cast<size_t>(kk)];
      if (upstream_all_zero) {
        v.kind = VerdictKind::ZeroConsensus;
        v.alpha = 0.0;
        v.rule = rules::block_phi_zero;
      } else {
        v.kind = VerdictKind::Consensus;
        v.alpha = phi(kk);
        v.rule = rules::block_phi;
      }
    }
  } else {
    for (auto& v : out) {
      v.kind = VerdictKind::Disagreement;
      v.rule = rules::block_phi_infeasible;
      std::ostringstream os;
      os << "self-consistency residual " << residual;
      if (!in_range) os << ", solution leaves [-1,1]";
      v.note = os.str();
    }
  }
  return out;
}

PredictionReport predict_all(const InfluenceNetwork& net, const LogicProfile& profile,
                             const Eigen::Ref<const Eigen::VectorXd>& x0) {
  const int n = net.n();
  const int m = profile.m();
  if (profile.n() != n) {
    throw PreconditionViolation("predict_all: profile and network disagree on n");
  }
  if (x0.size() != static_cast<Eigen::Index>(n) * m) {
    throw PreconditionViolation("predict_all: state size must be n*m");
  }
  PredictionReport report;
  report.partition = condense_logic(profile);
  report.topics.resize(static_cast<size_t>(m));

  for (int j = 0; j < report.partition.count(); ++j) {
    const std::vector<int>& block = report.partition.blocks[static_cast<size_t>(j)];
    if (report.partition.closed[static_cast<size_t>(j)]) {
      const auto verdicts = predict_closed_block(net, profile, report.partition, j, x0);
      for (size_t k = 0; k < block.size(); ++k) {
        report.topics[static_cast<size_t>(block[k])] = verdicts[k];
      }
    } else if (block.size() == 1) {
      const TopicVerdict v =
          predict_singleton_block(block.front(), net, profile, report.partition,
                                  report.topics);
      report.topics[static_cast<size_t>(block.front())] = v;
      if (v.kind == VerdictKind::Consensus || v.kind == VerdictKind::ZeroConsensus) {
        report.kappa_values[j] = *v.alpha;
      }
    } else {
      std::vector<double> solved;
      const auto verdicts =
          predict_multi_block(net, profile, report.partition, j, report.topics, &solved);
      for (size_t k = 0; k < block.size(); ++k) {
        report.topics[static_cast<size_t>(block[k])] = verdicts[k];
      }
      if (!solved.empty()) report.phi_values[j] = solved;
    }
  }
  return report;
}

}  // namespace beliefdyn
