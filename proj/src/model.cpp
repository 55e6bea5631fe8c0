#include "beliefdyn/model.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "beliefdyn/errors.hpp"
#include "beliefdyn/patterns.hpp"

namespace beliefdyn {

namespace {

void require_square(const Eigen::MatrixXd& M, const char* what) {
  if (M.rows() < 1 || M.rows() != M.cols()) {
    std::ostringstream os;
    os << what << " must be square and nonempty, got " << M.rows() << "x" << M.cols();
    throw PreconditionViolation(os.str());
  }
}

std::string row_msg(const char* what, int row, const char* detail, double value) {
  std::ostringstream os;
  os << what << " row " << row + 1 << ": " << detail << " (" << value << ")";
  return os.str();
}

}  // namespace

InfluenceNetwork validate_influence(Eigen::MatrixXd W, std::vector<std::string>* warnings) {
  require_square(W, "influence matrix");
  const int n = static_cast<int>(W.rows());

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (W(i, j) < 0.0) {
        std::ostringstream os;
        os << "influence matrix entry (" << i + 1 << "," << j + 1 << ") is negative: "
           << W(i, j);
        throw NonnegativityViolation(os.str());
      }
    }
    if (W(i, i) <= tol::sign_zero) {
      throw ZeroDiagonal(row_msg("influence matrix", i, "self-weight must be positive",
                                 W(i, i)));
    }
  }

  for (int i = 0; i < n; ++i) {
    const double sum = W.row(i).sum();
    const double dev = std::abs(sum - 1.0);
    if (dev <= tol::structure) continue;
    if (dev <= tol::renormalize) {
      W.row(i) /= sum;
      if (warnings) {
        std::ostringstream os;
        os << "influence matrix row " << i + 1 << " sum deviates from 1 by " << dev
           << "; renormalized";
        warnings->push_back(os.str());
      }
    } else {
      throw RowSumViolation(row_msg("influence matrix", i, "row sum must be 1", sum));
    }
  }

  if (!is_strongly_connected(pattern_of(W))) {
    throw NotStronglyConnected("influence matrix is not strongly connected");
  }
  return InfluenceNetwork{std::move(W)};
}

LogicMatrix validate_logic(Eigen::MatrixXd C, std::vector<std::string>* warnings) {
  require_square(C, "logic matrix");
  const int m = static_cast<int>(C.rows());

  for (int p = 0; p < m; ++p) {
    if (C(p, p) <= tol::sign_zero) {
      throw NonpositiveDiagonal(row_msg("logic matrix", p, "diagonal must be positive",
                                        C(p, p)));
    }
  }

  for (int p = 0; p < m; ++p) {
    const double sum = C.row(p).cwiseAbs().sum();
    const double dev = std::abs(sum - 1.0);
    if (dev <= tol::structure) continue;
    if (dev <= tol::renormalize) {
      C.row(p) /= sum;
      if (warnings) {
        std::ostringstream os;
        os << "logic matrix row " << p + 1 << " absolute sum deviates from 1 by " << dev
           << "; renormalized";
        warnings->push_back(os.str());
      }
    } else {
      throw RowAbsSumViolation(row_msg("logic matrix", p, "row absolute sum must be 1",
                                       sum));
    }
  }

  // Spectrum: unit row absolute sums cap the moduli at 1; what needs
  // checking is that nothing sits near the unit circle away from 1, and
  // that the eigenvalue 1 (if present) is semi-simple.
  Eigen::EigenSolver<Eigen::MatrixXd> es(C, /*computeEigenvectors=*/false);
  int unit_count = 0;
  for (int k = 0; k < m; ++k) {
    const std::complex<double> lam = es.eigenvalues()(k);
    if (std::abs(lam - 1.0) <= tol::spectral) {
      ++unit_count;
    } else if (std::abs(lam) > 1.0 - tol::spectral) {
      std::ostringstream os;
      os << "logic matrix eigenvalue " << lam.real();
      if (lam.imag() != 0.0) os << (lam.imag() < 0 ? "-" : "+") << std::abs(lam.imag()) << "i";
      os << " has modulus " << std::abs(lam) << ", inside the rejection band around the"
         << " unit circle";
      throw EigenvalueModulusViolation(os.str());
    }
  }
  if (unit_count > 0) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(C - Eigen::MatrixXd::Identity(m, m));
    const double cutoff = tol::spectral * svd.singularValues()(0);
    int rank = 0;
    for (int k = 0; k < svd.singularValues().size(); ++k) {
      if (svd.singularValues()(k) > cutoff) ++rank;
    }
    if (rank != m - unit_count) {
      std::ostringstream os;
      os << "unit eigenvalue of logic matrix is not semi-simple: rank(C - I) = " << rank
         << ", expected " << m - unit_count;
      throw NonSemiSimpleUnitEigenvalue(os.str());
    }
  }
  return LogicMatrix{std::move(C)};
}

LogicProfile validate_profile(std::vector<LogicMatrix> matrices) {
  if (matrices.empty()) {
    throw PreconditionViolation("logic profile needs at least one individual");
  }
  const int m = matrices.front().m();
  for (size_t i = 1; i < matrices.size(); ++i) {
    if (matrices[i].m() != m) {
      std::ostringstream os;
      os << "logic profile dimension mismatch: individual 1 has " << m
         << " topics, individual " << i + 1 << " has " << matrices[i].m();
      throw PreconditionViolation(os.str());
    }
  }
  const BoolMatrix ref = pattern_of(matrices.front().C);
  for (size_t i = 1; i < matrices.size(); ++i) {
    const BoolMatrix pat = pattern_of(matrices[i].C);
    for (int p = 0; p < m; ++p) {
      for (int q = 0; q < m; ++q) {
        if (ref(p, q) != pat(p, q)) {
          std::ostringstream os;
          os << "logic pattern mismatch at entry (" << p + 1 << "," << q + 1
             << "): individual 1 " << (ref(p, q) ? "nonzero" : "zero") << ", individual "
             << i + 1 << " " << (pat(p, q) ? "nonzero" : "zero");
          throw PatternMismatch(os.str());
        }
      }
    }
  }
  return LogicProfile{std::move(matrices)};
}

BoolMatrix shared_pattern(const LogicProfile& profile) {
  return pattern_of(profile.C(0));
}

bool cell_competing(const LogicProfile& profile, int p, int q) {
  bool pos = false;
  bool neg = false;
  for (int i = 0; i < profile.n(); ++i) {
    const double v = profile.C(i)(p, q);
    pos = pos || v > tol::sign_zero;
    neg = neg || v < -tol::sign_zero;
  }
  return pos && neg;
}

std::vector<CompetingWitness> detect_competing(const LogicProfile& profile, int p) {
  std::vector<CompetingWitness> out;
  const int m = profile.m();
  const int n = profile.n();
  for (int q = 0; q < m; ++q) {
    if (q == p || !cell_competing(profile, p, q)) continue;
    for (int i = 0; i < n; ++i) {
      if (profile.C(i)(p, q) <= tol::sign_zero) continue;
      for (int j = 0; j < n; ++j) {
        if (profile.C(j)(p, q) < -tol::sign_zero) out.push_back({q, i, j});
      }
    }
  }
  return out;
}

bool has_competition(const LogicProfile& profile) {
  const int m = profile.m();
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) {
      if (q != p && cell_competing(profile, p, q)) return true;
    }
  }
  return false;
}

}  // namespace beliefdyn
