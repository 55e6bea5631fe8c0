#include "beliefdyn/oracle.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "beliefdyn/dynamics.hpp"
#include "beliefdyn/errors.hpp"
#include "beliefdyn/spectral.hpp"

namespace beliefdyn {

Eigen::MatrixXd submatrix_topics(const Eigen::Ref<const Eigen::MatrixXd>& A,
                                 const std::vector<int>& row_topics,
                                 const std::vector<int>& col_topics, int n) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(row_topics.size()) * n,
                      static_cast<Eigen::Index>(col_topics.size()) * n);
  for (size_t r = 0; r < row_topics.size(); ++r) {
    for (size_t c = 0; c < col_topics.size(); ++c) {
      out.block(static_cast<Eigen::Index>(r) * n, static_cast<Eigen::Index>(c) * n, n, n) =
          A.block(static_cast<Eigen::Index>(row_topics[r]) * n,
                  static_cast<Eigen::Index>(col_topics[c]) * n, n, n);
    }
  }
  return out;
}

namespace {

Eigen::VectorXd slice_topics(const Eigen::Ref<const Eigen::VectorXd>& y,
                             const std::vector<int>& topics, int n) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(topics.size()) * n);
  for (size_t k = 0; k < topics.size(); ++k) {
    out.segment(static_cast<Eigen::Index>(k) * n, n) =
        y.segment(static_cast<Eigen::Index>(topics[k]) * n, n);
  }
  return out;
}

// Limit of y(t+1) = Abb y(t) for a closed irreducible block. When the
// block's signed graph is balanced, flipping the minus camp's signs turns
// Abb into a row-stochastic nonnegative primitive matrix, so the limit is
// the rank-one projector onto its left unit eigenvector, pulled back
// through the flip. Otherwise the radius is strictly below 1 and the limit
// is zero.
Eigen::VectorXd closed_block_limit(const Eigen::MatrixXd& Abb,
                                   const Eigen::VectorXd& y0_block) {
  const Eigen::Index d = Abb.rows();
  const BalanceVerdict bv = structural_balance(Abb);
  if (!bv.balanced) {
    const double rho = spectral_radius_eig(Abb);
    if (rho >= 1.0 - tol::certificate_margin) {
      std::ostringstream os;
      os << "unbalanced closed block should contract but has spectral radius " << rho;
      throw CertificateFailure(os.str(), rho);
    }
    return Eigen::VectorXd::Zero(d);
  }
  Eigen::VectorXd sign = Eigen::VectorXd::Ones(d);
  for (int v : bv.minus_set) sign(v) = -1.0;
  Eigen::MatrixXd gauged = sign.asDiagonal() * Abb * sign.asDiagonal();
  // Balance plus unit absolute row sums make this exactly stochastic up to
  // roundoff; clamp stray negatives from the multiplications.
  gauged = gauged.cwiseMax(0.0);
  const Eigen::VectorXd gamma = left_perron_vector(gauged);
  const double level = gamma.dot(sign.cwiseProduct(y0_block));
  return sign * level;
}

}  // namespace

Eigen::VectorXd fixed_point_block(const Eigen::Ref<const Eigen::MatrixXd>& A,
                                  const TopicPartition& partition, int j, int n,
                                  const std::vector<Eigen::VectorXd>& topic_limits,
                                  const Eigen::Ref<const Eigen::VectorXd>& y0) {
  const std::vector<int>& block = partition.blocks[static_cast<size_t>(j)];
  const Eigen::MatrixXd Abb = submatrix_topics(A, block, block, n);

  if (partition.closed[static_cast<size_t>(j)]) {
    return closed_block_limit(Abb, slice_topics(y0, block, n));
  }

  const std::vector<int>& upstream = partition.ext_dep_sets[static_cast<size_t>(j)];
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(Abb.rows());
  for (int q : upstream) {
    const Eigen::VectorXd& yq = topic_limits[static_cast<size_t>(q)];
    if (yq.size() != n) {
      std::ostringstream os;
      os << "fixed point of block " << j + 1 << " needs the limit of topic " << q + 1;
      throw PreconditionViolation(os.str());
    }
    rhs += submatrix_topics(A, block, {q}, n) * yq;
  }

  const Eigen::MatrixXd lhs = Eigen::MatrixXd::Identity(Abb.rows(), Abb.cols()) - Abb;
  const Eigen::VectorXd y = Eigen::PartialPivLU<Eigen::MatrixXd>(lhs).solve(rhs);
  const double scale = std::max(1.0, rhs.cwiseAbs().maxCoeff());
  const double residual = (lhs * y - rhs).cwiseAbs().maxCoeff();
  if (!y.allFinite() || residual > tol::fixed_point_residual * scale) {
    std::ostringstream os;
    os << "fixed-point solve for block " << j + 1 << " failed: residual " << residual;
    throw SingularSystem(os.str());
  }
  return y;
}

SpectralCertificate spectral_certificate(const Eigen::Ref<const Eigen::MatrixXd>& A,
                                         const TopicPartition& partition, int j, int n) {
  const std::vector<int>& block = partition.blocks[static_cast<size_t>(j)];
  const Eigen::MatrixXd Abb = submatrix_topics(A, block, block, n);
  SpectralCertificate cert{spectral_radius_eig(Abb), spectral_radius_abs_bound(Abb)};
  if (cert.radius >= 1.0 - tol::certificate_margin) {
    std::ostringstream os;
    os << "block " << j + 1 << " is not a certified contraction: spectral radius "
       << cert.radius;
    throw CertificateFailure(os.str(), cert.radius);
  }
  return cert;
}

std::vector<Eigen::VectorXd> oracle_limits(const InfluenceNetwork& net,
                                           const LogicProfile& profile,
                                           const Eigen::Ref<const Eigen::VectorXd>& x0) {
  const int n = net.n();
  const int m = profile.m();
  if (x0.size() != static_cast<Eigen::Index>(n) * m) {
    throw PreconditionViolation("oracle limits: state size must be n*m");
  }
  const TopicPartition partition = condense_logic(profile);
  const Eigen::MatrixXd A = build_multiplex_pattern(net, profile);
  const Eigen::VectorXd y0 = apply_permutation(interleave_permutation(n, m), x0);

  std::vector<Eigen::VectorXd> limits(static_cast<size_t>(m));
  for (int j = 0; j < partition.count(); ++j) {
    const Eigen::VectorXd yj = fixed_point_block(A, partition, j, n, limits, y0);
    const std::vector<int>& block = partition.blocks[static_cast<size_t>(j)];
    for (size_t k = 0; k < block.size(); ++k) {
      limits[static_cast<size_t>(block[k])] = yj.segment(static_cast<Eigen::Index>(k) * n, n);
    }
  }
  return limits;
}

}  // namespace beliefdyn
