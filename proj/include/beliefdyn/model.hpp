#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "beliefdyn/patterns.hpp"
#include "beliefdyn/tolerances.hpp"

namespace beliefdyn {

// Row-stochastic interpersonal weight matrix with self-loops, strongly
// connected. Construct through validate_influence.
struct InfluenceNetwork {
  Eigen::MatrixXd W;
  int n() const { return static_cast<int>(W.rows()); }
};

// One individual's topic coupling matrix: unit row absolute sums, positive
// diagonal, spectrum inside the unit disk except a semi-simple eigenvalue 1.
// Construct through validate_logic.
struct LogicMatrix {
  Eigen::MatrixXd C;
  int m() const { return static_cast<int>(C.rows()); }
};

// Per-individual logic matrices sharing one nonzero pattern.
struct LogicProfile {
  std::vector<LogicMatrix> matrices;
  int n() const { return static_cast<int>(matrices.size()); }
  int m() const { return matrices.empty() ? 0 : matrices.front().m(); }
  const Eigen::MatrixXd& C(int i) const { return matrices[static_cast<size_t>(i)].C; }
};

// Stacked opinion vector, individual-major: entry i*m + p is individual i's
// position on topic p (0-based). All entries in [-1, 1].
struct OpinionState {
  Eigen::VectorXd x;
  long t = 0;
};

// Checks squareness, nonnegativity, positive diagonal, unit row sums and
// strong connectivity. Row sums within tol::renormalize of 1 are rescaled
// and reported through `warnings`; anything worse throws RowSumViolation.
InfluenceNetwork validate_influence(Eigen::MatrixXd W,
                                    std::vector<std::string>* warnings = nullptr);

// Checks squareness, unit row absolute sums (same renormalization band as
// validate_influence), positive diagonal, and the spectrum requirement:
// every eigenvalue either within tol::spectral of 1 or with modulus below
// 1 - tol::spectral, and the unit eigenvalue semi-simple (rank of C - I
// equals m minus the unit-eigenvalue count, rank decided by SVD).
LogicMatrix validate_logic(Eigen::MatrixXd C,
                           std::vector<std::string>* warnings = nullptr);

// Checks the matrices agree in dimension and nonzero pattern.
LogicProfile validate_profile(std::vector<LogicMatrix> matrices);

// Shared nonzero support of a validated profile.
BoolMatrix shared_pattern(const LogicProfile& profile);

// Individuals i and j disagree about the sign of topic q's influence on
// topic p: C_i(p,q) > 0 > C_j(p,q).
struct CompetingWitness {
  int q;
  int i;
  int j;
};

// All sign conflicts on row p across individuals, one witness per
// (column, positive individual, negative individual) triple.
std::vector<CompetingWitness> detect_competing(const LogicProfile& profile, int p);

// True when some topic's row carries a sign conflict. Cheaper than
// materializing witnesses for every topic.
bool has_competition(const LogicProfile& profile);

bool cell_competing(const LogicProfile& profile, int p, int q);

}  // namespace beliefdyn
