#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "beliefdyn/model.hpp"
#include "beliefdyn/patterns.hpp"

namespace beliefdyn {

// Ordered partition of the topic set into strongly connected blocks of the
// shared dependency pattern. Blocks are listed so that every dependency of
// a block lands in the same or an earlier block; reordering topics by
// `perm` therefore makes every logic matrix lower block triangular.
struct TopicPartition {
  std::vector<std::vector<int>> blocks;        // ascending topic ids per block
  std::vector<int> perm;                       // perm[k] = topic at position k
  std::vector<bool> closed;                    // no dependencies outside block
  std::vector<std::vector<int>> dep_sets;      // per topic p: {q != p : C(p,q) != 0}
  std::vector<std::vector<int>> ext_dep_sets;  // per block: dependencies outside it
  std::vector<int> block_of;                   // per topic: its block index
  int count() const { return static_cast<int>(blocks.size()); }
};

// SCC condensation of the shared dependency pattern. Block order is the
// topological order of the condensation with ties broken by the smallest
// topic id, so the result is unique and deterministic.
TopicPartition condense_logic(const LogicProfile& profile);

// One matrix entry read as an undirected signed edge between u and v.
struct SignedEdge {
  int u;  // row of the entry
  int v;  // column of the entry
  double weight;
};

struct BalanceVerdict {
  bool balanced = false;
  // Two-camp split when balanced. Within each weakly connected component
  // the split is unique; the smallest node of a component goes to plus_set.
  std::vector<int> plus_set;
  std::vector<int> minus_set;
  // When unbalanced: a concrete undirected cycle with an odd number of
  // negative edges, if the check that failed can produce one.
  std::vector<SignedEdge> witness;
};

// Structural balance of the signed graph of G, directions ignored.
// Union-find with parity; the spanning forest of accepted constraints
// reconstructs a witness cycle on the first contradiction.
BalanceVerdict structural_balance(const Eigen::Ref<const Eigen::MatrixXd>& G,
                                  double zero_tol = tol::sign_zero);

// Topic-major system matrix: block (p, q) is diag(C_i(p,q) over i) * W, so
// row p*n + i, column q*n + j holds C_i(p,q) * W(i,j). Every row's absolute
// sum equals 1.
Eigen::MatrixXd build_multiplex_pattern(const InfluenceNetwork& net,
                                        const LogicProfile& profile);

// Primitivity of a nonnegative matrix via boolean pattern powers. A matrix
// of dimension d is primitive exactly when its pattern to the power
// (d-1)^2 + 1 is all positive; since positivity of powers is monotone for
// irreducible patterns, one squared-up exponent at or above that bound
// decides the question.
bool primitivity_check(const Eigen::Ref<const Eigen::MatrixXd>& M,
                       double zero_tol = tol::sign_zero);

// Balance of the full topic-major system graph without building it: with a
// sign conflict between individuals the graph is never balanced; without
// one it is balanced exactly when a single individual's logic graph is,
// and the topic-level split lifts to all n copies of each topic.
// Precondition: the shared pattern is irreducible.
BalanceVerdict multiplex_balance_via_lemma(const LogicProfile& profile, bool competing);

}  // namespace beliefdyn
