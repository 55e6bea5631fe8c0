#include "beliefdyn/spectral.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "beliefdyn/errors.hpp"

namespace beliefdyn {

Eigen::VectorXd left_perron_vector(const Eigen::Ref<const Eigen::MatrixXd>& M,
                                   double tol, long max_iters) {
  const Eigen::Index d = M.rows();
  Eigen::VectorXd v = Eigen::VectorXd::Constant(d, 1.0 / static_cast<double>(d));
  Eigen::VectorXd next(d);
  double diff = 0.0;
  for (long it = 0; it < max_iters; ++it) {
    next.noalias() = M.transpose() * v;
    next /= next.sum();
    diff = (next - v).cwiseAbs().maxCoeff();
    v = next;
    if (diff < tol) return v;
  }
  if (diff > 1e-10) {
    std::ostringstream os;
    os << "left eigenvector power iteration stalled at residual " << diff;
    throw PowerLimitNonconvergent(os.str());
  }
  return v;
}

Eigen::MatrixXd power_limit(const Eigen::Ref<const Eigen::MatrixXd>& M, double tol,
                            int max_squarings) {
  Eigen::MatrixXd S = M;
  Eigen::MatrixXd next;
  for (int k = 0; k < max_squarings; ++k) {
    next.noalias() = S * S;
    if ((next - S).cwiseAbs().maxCoeff() <= tol) return next;
    S = next;
  }
  std::ostringstream os;
  os << "matrix power sequence did not settle within " << max_squarings << " squarings";
  throw PowerLimitNonconvergent(os.str());
}

double spectral_radius_eig(const Eigen::Ref<const Eigen::MatrixXd>& M) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(M, /*computeEigenvectors=*/false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

double spectral_radius_abs_bound(const Eigen::Ref<const Eigen::MatrixXd>& M, double tol,
                                 long max_iters) {
  const Eigen::Index d = M.rows();
  const Eigen::MatrixXd absM = M.cwiseAbs();
  Eigen::VectorXd v = Eigen::VectorXd::Ones(d);
  double bound = absM.rowwise().sum().maxCoeff();  // max-ratio bound at v = ones
  for (long it = 0; it < max_iters; ++it) {
    Eigen::VectorXd next = absM * v;
    const double norm = next.maxCoeff();
    if (norm <= 0.0) return 0.0;  // nilpotent-like pattern, radius 0
    next /= norm;
    // The max ratio (absM v)_i / v_i over positive entries bounds the
    // radius from above and tightens as v approaches the Perron vector.
    double ratio = 0.0;
    Eigen::VectorXd image = absM * next;
    for (Eigen::Index i = 0; i < d; ++i) {
      if (next(i) > 1e-300) ratio = std::max(ratio, image(i) / next(i));
    }
    v = next;
    if (std::abs(ratio - bound) < tol) return std::min(bound, ratio);
    bound = ratio;
  }
  return bound;
}

}  // namespace beliefdyn
