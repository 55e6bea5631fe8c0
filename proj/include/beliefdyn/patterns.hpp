#pragma once

#include <Eigen/Core>
#include <vector>

#include "beliefdyn/tolerances.hpp"

namespace beliefdyn {

using BoolMatrix = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

// Nonzero support of a matrix: entries strictly beyond the zero threshold.
BoolMatrix pattern_of(const Eigen::Ref<const Eigen::MatrixXd>& M,
                      double zero_tol = tol::sign_zero);

// Graph convention throughout: the digraph of a square matrix M has an edge
// u -> v exactly when M(v, u) is nonzero, i.e. column u lists the out-edges
// of node u. out_adjacency materializes that edge list.
std::vector<std::vector<int>> out_adjacency(const BoolMatrix& P);

struct SccResult {
  std::vector<int> comp;  // component id per node
  int count = 0;
};

// Tarjan's algorithm, iterative. Component ids are assigned so that every
// edge between distinct components points from a lower id to a higher id
// is NOT guaranteed; use condensation helpers for ordering.
SccResult strongly_connected_components(const BoolMatrix& P);

bool is_strongly_connected(const BoolMatrix& P);

// Period of a strongly connected digraph (gcd of its cycle lengths);
// 1 means aperiodic. Returns 0 for a single node without a self-loop.
int graph_period(const BoolMatrix& P);

// Boolean matrix product over the (or, and) semiring.
BoolMatrix bool_product(const BoolMatrix& X, const BoolMatrix& Y);

bool all_true(const BoolMatrix& P);

}  // namespace beliefdyn
