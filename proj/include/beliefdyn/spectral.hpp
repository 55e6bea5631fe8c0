#pragma once

#include <Eigen/Core>

#include "beliefdyn/tolerances.hpp"

namespace beliefdyn {

// Left eigenvector for eigenvalue 1 of a nonnegative primitive matrix with
// unit spectral radius, normalized to sum 1. Plain power iteration on the
// transpose; throws PowerLimitNonconvergent if the iteration stalls.
Eigen::VectorXd left_perron_vector(const Eigen::Ref<const Eigen::MatrixXd>& M,
                                   double tol = 1e-15, long max_iters = 1'000'000);

// Limit of M^k for k -> infinity by repeated squaring, accepted once two
// consecutive squarings agree entrywise within `tol`. The squaring budget
// covers more than 10^6 plain multiplications.
Eigen::MatrixXd power_limit(const Eigen::Ref<const Eigen::MatrixXd>& M,
                            double tol = tol::structure,
                            int max_squarings = tol::max_squarings);

// Largest eigenvalue modulus via a dense eigensolver.
double spectral_radius_eig(const Eigen::Ref<const Eigen::MatrixXd>& M);

// Upper bound on the spectral radius of |M| by power iteration with the
// max-ratio bound, tightened until it stabilizes. For any M this also
// bounds the spectral radius of M itself.
double spectral_radius_abs_bound(const Eigen::Ref<const Eigen::MatrixXd>& M,
                                 double tol = 1e-13, long max_iters = 100'000);

}  // namespace beliefdyn
