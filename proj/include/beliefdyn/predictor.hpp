#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "beliefdyn/graph.hpp"
#include "beliefdyn/model.hpp"

namespace beliefdyn {

enum class VerdictKind {
  Consensus,                // all individuals converge to one value
  ZeroConsensus,            // that value is 0 for structural reasons
  Disagreement,             // terminal positions provably differ
  ConjecturedDisagreement,  // upstream disagreement; outside the rule set,
                            // expected to disagree, checked empirically
  Undetermined,
};

const char* verdict_name(VerdictKind kind);

// Stable rule labels recorded per topic in prediction reports.
namespace rules {
inline constexpr const char* closed_balanced = "closed-balanced-consensus";
inline constexpr const char* closed_unbalanced = "closed-unbalanced-zero";
inline constexpr const char* closed_competing = "closed-competing-zero";
inline constexpr const char* singleton_kappa = "singleton-kappa-consensus";
inline constexpr const char* singleton_infeasible = "singleton-kappa-infeasible";
inline constexpr const char* block_phi = "block-phi-consensus";
inline constexpr const char* block_phi_zero = "block-phi-zero";
inline constexpr const char* block_phi_infeasible = "block-phi-infeasible";
inline constexpr const char* upstream_conjecture = "upstream-disagreement-conjecture";
}  // namespace rules

struct TopicVerdict {
  VerdictKind kind = VerdictKind::Undetermined;
  std::optional<double> alpha;  // consensus value when kind is a consensus
  std::string rule;
  std::string note;  // diagnostics, e.g. a non-generic initial condition
};

struct PredictionReport {
  TopicPartition partition;
  std::vector<TopicVerdict> topics;               // per topic, original ids
  std::map<int, double> kappa_values;             // open singleton block -> ratio
  std::map<int, std::vector<double>> phi_values;  // open multi block -> solved values
};

// Which of the three closed-block regimes applies: a shared-sign balanced
// block, a shared-sign unbalanced one, or one with conflicting signs.
enum class ClosedCase { Balanced, Unbalanced, Competing };
ClosedCase closed_block_case(const LogicProfile& profile, const std::vector<int>& topics);

// Closed irreducible block: Competing and Unbalanced regimes force every
// topic in the block to zero; the Balanced regime yields consensus per
// topic with equal magnitudes and the two-camp sign split, values filled
// by the spectral fixed-point oracle (they have no closed form here).
std::vector<TopicVerdict> predict_closed_block(const InfluenceNetwork& net,
                                               const LogicProfile& profile,
                                               const TopicPartition& partition, int j,
                                               const Eigen::Ref<const Eigen::VectorXd>& x0);

// Open single-topic block: consensus exactly when the dependency-weighted
// ratio (sum of upstream consensus values times couplings over the
// absolute coupling sum) agrees across individuals; that ratio is the
// consensus value. Upstream disagreement yields ConjecturedDisagreement.
TopicVerdict predict_singleton_block(int p, const InfluenceNetwork& net,
                                     const LogicProfile& profile,
                                     const TopicPartition& partition,
                                     const std::vector<TopicVerdict>& resolved);

// Open multi-topic block: consensus exactly when the per-individual linear
// system for the block's consensus values has a solution in [-1,1]^s;
// solved by least squares with an explicit residual bound. A vanishing
// right-hand side (all upstream values zero) gives ZeroConsensus.
std::vector<TopicVerdict> predict_multi_block(const InfluenceNetwork& net,
                                              const LogicProfile& profile,
                                              const TopicPartition& partition, int j,
                                              const std::vector<TopicVerdict>& resolved,
                                              std::vector<double>* solved = nullptr);

// Full decision procedure: condense, then resolve blocks in dependency
// order, dispatching on closed/singleton/multi. x0 is individual-major.
PredictionReport predict_all(const InfluenceNetwork& net, const LogicProfile& profile,
                             const Eigen::Ref<const Eigen::VectorXd>& x0);

}  // namespace beliefdyn
