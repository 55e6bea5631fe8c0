#pragma once

// Shared fixtures for the test suite: the six-individual showcase scenario,
// values frozen from an independent numeric oracle, and deterministic
// builders for profiles with a controlled closed-block regime.

#include <Eigen/Core>
#include <vector>

#include "beliefdyn/config.hpp"
#include "beliefdyn/errors.hpp"
#include "beliefdyn/graph.hpp"
#include "beliefdyn/model.hpp"
#include "beliefdyn/rng.hpp"

namespace testsup {

using beliefdyn::BoolMatrix;
using beliefdyn::InfluenceNetwork;
using beliefdyn::LogicMatrix;
using beliefdyn::LogicProfile;
using beliefdyn::Rng;

inline Eigen::MatrixXd showcase_w() {
  Eigen::MatrixXd W(6, 6);
  W << 0.2, 0.0, 0.0, 0.0, 0.8, 0.0,
       0.5, 0.3, 0.0, 0.0, 0.0, 0.2,
       0.0, 0.3, 0.1, 0.0, 0.0, 0.6,
       0.0, 0.0, 0.85, 0.15, 0.0, 0.0,
       0.0, 0.0, 0.0, 0.2, 0.8, 0.0,
       0.0, 0.0, 0.0, 0.0, 0.5, 0.5;
  return W;
}

// First logic style of the mixed showcase.
inline Eigen::MatrixXd logic_hat() {
  Eigen::MatrixXd C(5, 5);
  C << 1.0, 0.0, 0.0, 0.0, 0.0,
       -0.5, 0.5, 0.0, 0.0, 0.0,
       -0.3, -0.6, 0.1, 0.0, 0.0,
       0.0, -0.3, 0.0, 0.2, -0.5,
       0.0, -0.5, 0.0, -0.2, 0.3;
  return C;
}

// Second logic style, shared by both showcases.
inline Eigen::MatrixXd logic_bar() {
  Eigen::MatrixXd C(5, 5);
  C << 1.0, 0.0, 0.0, 0.0, 0.0,
       -0.8, 0.2, 0.0, 0.0, 0.0,
       -0.3, -0.1, 0.6, 0.0, 0.0,
       0.0, -0.3, 0.0, 0.2, -0.5,
       0.0, -0.5, 0.0, -0.2, 0.3;
  return C;
}

// logic_hat with the second-topic dependency sign flipped and the third
// row softened; drives the cascade showcase.
inline Eigen::MatrixXd logic_til() {
  Eigen::MatrixXd C = logic_hat();
  C(1, 0) = 0.5;
  C.row(2) << -0.3, -0.1, 0.6, 0.0, 0.0;
  return C;
}

inline Eigen::VectorXd showcase_x0() {
  Eigen::VectorXd x(30);
  x << -0.710601, -0.115573, -0.319415, 0.937479, -0.59974,
       -0.138531, -0.086996, 0.303581, 0.373259, 0.058567,
       0.760946, 0.530841, -0.227256, 0.400538, 0.105665,
       0.86404, 0.69914, 0.931288, -0.279661, 0.082666,
       0.639247, 0.246815, -0.475317, 0.638309, -0.740883,
       0.515472, -0.338768, -0.399104, -0.774033, -0.705047;
  return x;
}

inline InfluenceNetwork showcase_net() {
  return beliefdyn::validate_influence(showcase_w());
}

inline LogicProfile make_profile(const Eigen::MatrixXd& first,
                                 const Eigen::MatrixXd& second) {
  std::vector<LogicMatrix> mats;
  for (int i = 0; i < 3; ++i) mats.push_back(beliefdyn::validate_logic(first));
  for (int i = 0; i < 3; ++i) mats.push_back(beliefdyn::validate_logic(second));
  return beliefdyn::validate_profile(std::move(mats));
}

inline LogicProfile mixed_profile() { return make_profile(logic_hat(), logic_bar()); }
inline LogicProfile cascade_profile() { return make_profile(logic_til(), logic_bar()); }

// Values frozen from the independent oracle run: left Perron vector of the
// showcase network, the consensus values the decision procedure must
// reproduce, and the exact per-individual fixed points of the topics that
// split.
namespace frozen {

inline constexpr double alpha1 = 0.5807154129264787;
inline constexpr double phi4 = -0.05049699242838948;
inline constexpr double phi5 = 0.42922443564131035;
inline constexpr double mixed_topic3_spread = 0.4474206040016572;
inline constexpr double rho_open3 = 0.5064932662262112;
inline constexpr double rho_open45 = 0.570156211871642;

inline Eigen::VectorXd gamma() {
  Eigen::VectorXd g(6);
  g << 0.03104985023013431, 0.04967976036821468, 0.11591944085916765,
       0.12273823149794223, 0.5216374838662543, 0.1589752331782868;
  return g;
}

inline Eigen::VectorXd mixed_topic3_limit() {
  Eigen::VectorXd y(6);
  y << 0.15887947128206587, 0.18232651090738286, 0.16543310466617034,
       -0.03491450462148227, -0.23140927526898758, -0.2650940930942743;
  return y;
}

inline Eigen::VectorXd cascade_topic2_limit() {
  Eigen::VectorXd y(6);
  y << 0.06730386871227317, 0.2931548596437958, 0.16876295429217364,
       -0.44936353413558083, -0.5744605615554836, -0.5800204294408126;
  return y;
}

// Terminal spreads of the cascade showcase, topics 2 through 5.
inline Eigen::Vector4d cascade_spreads() {
  return {0.8731752890846083, 9.090826e-02, 1.631608e-01, 3.664919e-01};
}

}  // namespace frozen

// Dense random row-stochastic network with strictly positive entries.
inline InfluenceNetwork random_dense_net(int n, Rng& rng) {
  Eigen::MatrixXd W(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) W(i, j) = rng.uniform(0.05, 1.0);
    W.row(i) /= W.row(i).sum();
  }
  return beliefdyn::validate_influence(std::move(W));
}

// Irreducible topic pattern with diagonal, a ring, a reciprocal pair on
// (1,2) and random extra cells. The reciprocal pair guarantees a cycle
// whose sign a single flipped entry can break.
inline BoolMatrix random_irreducible_pattern(int m, Rng& rng) {
  BoolMatrix P = BoolMatrix::Constant(m, m, false);
  for (int p = 0; p < m; ++p) {
    P(p, p) = true;
    P(p, (p + 1) % m) = true;
  }
  P(1, 0) = true;
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) {
      if (!P(p, q) && rng.bernoulli(0.3)) P(p, q) = true;
    }
  }
  return P;
}

enum class ClosedRegime { Balanced, Unbalanced, Competing };

struct ClosedScenario {
  InfluenceNetwork net;
  LogicProfile profile;
  Eigen::VectorXd sigma;  // two-camp assignment used for the base signs
  Eigen::VectorXd x0;     // individual-major
};

// Deterministic scenario whose whole topic set is one closed irreducible
// block in the requested regime. Balanced uses camp-product signs; the
// other regimes flip the (1,2) cell, globally or for one individual only.
inline ClosedScenario closed_scenario(int n, int m, ClosedRegime regime,
                                      std::uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Eigen::MatrixXd Wd(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) Wd(i, j) = rng.uniform(0.05, 1.0);
      Wd.row(i) /= Wd.row(i).sum();
    }
    const BoolMatrix P = random_irreducible_pattern(m, rng);
    Eigen::VectorXd sigma(m);
    for (int p = 0; p < m; ++p) sigma(p) = rng.bernoulli(0.5) ? 1.0 : -1.0;

    std::vector<LogicMatrix> mats;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      Eigen::MatrixXd C = Eigen::MatrixXd::Zero(m, m);
      for (int p = 0; p < m; ++p) {
        double abs_sum = 0.0;
        for (int q = 0; q < m; ++q) {
          if (!P(p, q)) continue;
          double sign = p == q ? 1.0 : sigma(p) * sigma(q);
          if (p == 0 && q == 1) {
            if (regime == ClosedRegime::Unbalanced) sign = -sign;
            if (regime == ClosedRegime::Competing && i == 1) sign = -sign;
          }
          const double mag = rng.uniform(0.1, 1.0) * (p == q ? 1.5 : 1.0);
          C(p, q) = sign * mag;
          abs_sum += mag;
        }
        C.row(p) /= abs_sum;
      }
      try {
        mats.push_back(beliefdyn::validate_logic(std::move(C)));
      } catch (const beliefdyn::ValidationError&) {
        ok = false;
      }
    }
    if (!ok) continue;

    ClosedScenario out;
    try {
      out.net = beliefdyn::validate_influence(std::move(Wd));
      out.profile = beliefdyn::validate_profile(std::move(mats));
    } catch (const beliefdyn::ValidationError&) {
      continue;
    }
    out.sigma = sigma;
    out.x0.resize(n * m);
    for (Eigen::Index k = 0; k < out.x0.size(); ++k) out.x0(k) = rng.uniform(-1.0, 1.0);
    return out;
  }
  throw beliefdyn::GenerationExhausted("closed_scenario: no valid draw");
}

// Exhaustive structural balance oracle: tries every two-camp assignment.
inline bool brute_force_balanced(const Eigen::MatrixXd& G, double zero_tol = 1e-12) {
  const int k = static_cast<int>(G.rows());
  for (long mask = 0; mask < (1L << k); ++mask) {
    bool consistent = true;
    for (int u = 0; u < k && consistent; ++u) {
      for (int v = 0; v < k && consistent; ++v) {
        if (std::abs(G(u, v)) <= zero_tol) continue;
        const double su = (mask >> u) & 1 ? 1.0 : -1.0;
        const double sv = (mask >> v) & 1 ? 1.0 : -1.0;
        if (G(u, v) * su * sv < 0.0) consistent = false;
      }
    }
    if (consistent) return true;
  }
  return false;
}

inline Eigen::MatrixXd bool_to_double(const BoolMatrix& P) {
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(P.rows(), P.cols());
  for (Eigen::Index r = 0; r < P.rows(); ++r) {
    for (Eigen::Index c = 0; c < P.cols(); ++c) {
      if (P(r, c)) M(r, c) = 1.0;
    }
  }
  return M;
}

// Kronecker product of two 0/1 matrices, the pattern of the topic-major
// system matrix for a shared-pattern profile over a network pattern.
inline Eigen::MatrixXd kron_pattern(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y) {
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(X.rows() * Y.rows(), X.cols() * Y.cols());
  for (Eigen::Index a = 0; a < X.rows(); ++a) {
    for (Eigen::Index b = 0; b < X.cols(); ++b) {
      if (X(a, b) == 0.0) continue;
      K.block(a * Y.rows(), b * Y.cols(), Y.rows(), Y.cols()) = Y;
    }
  }
  return K;
}

inline Eigen::VectorXd random_state(int size, Rng& rng) {
  Eigen::VectorXd x(size);
  for (int k = 0; k < size; ++k) x(k) = rng.uniform(-1.0, 1.0);
  return x;
}

}  // namespace testsup
