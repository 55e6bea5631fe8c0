#pragma once

#include <Eigen/Core>
#include <vector>

#include "beliefdyn/graph.hpp"
#include "beliefdyn/model.hpp"

namespace beliefdyn {

// Rows/columns of the topic-major system matrix A restricted to the given
// topic lists (n rows per topic, block order follows the lists).
Eigen::MatrixXd submatrix_topics(const Eigen::Ref<const Eigen::MatrixXd>& A,
                                 const std::vector<int>& row_topics,
                                 const std::vector<int>& col_topics, int n);

// Exact limit of block j of the partition, given the limits of every
// upstream topic (full n-vectors, valid whether or not upstream reached
// consensus) and the topic-major initial state y0.
//
// Open blocks solve (I - A_jj) y = sum over upstream columns of A y_q*,
// nonsingular because the block's absolute row sums stay below 1 somewhere
// and the block is irreducible. Closed blocks either admit a sign gauge
// (structural balance of the block graph) that turns A_jj row-stochastic,
// in which case the limit is the gauged left Perron vector projected onto
// y0, or they have spectral radius below 1 and the limit is zero.
Eigen::VectorXd fixed_point_block(const Eigen::Ref<const Eigen::MatrixXd>& A,
                                  const TopicPartition& partition, int j, int n,
                                  const std::vector<Eigen::VectorXd>& topic_limits,
                                  const Eigen::Ref<const Eigen::VectorXd>& y0);

struct SpectralCertificate {
  double radius;     // spectral radius of the block by dense eigensolve
  double abs_bound;  // power-iteration upper bound via the absolute pattern
};

// Certifies that block j's update is a strict contraction: returns both
// radius estimates and throws CertificateFailure when the eigensolver
// radius is not below 1 - tol::certificate_margin.
SpectralCertificate spectral_certificate(const Eigen::Ref<const Eigen::MatrixXd>& A,
                                         const TopicPartition& partition, int j, int n);

// Block-by-block fixed-point propagation over the whole partition.
// Returns one n-vector limit per topic, original topic indexing.
std::vector<Eigen::VectorXd> oracle_limits(const InfluenceNetwork& net,
                                           const LogicProfile& profile,
                                           const Eigen::Ref<const Eigen::VectorXd>& x0);

}  // namespace beliefdyn
