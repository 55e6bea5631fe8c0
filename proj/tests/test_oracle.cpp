#include "beliefdyn/dynamics.hpp"
#include "beliefdyn/errors.hpp"
#include "beliefdyn/graph.hpp"
#include "beliefdyn/oracle.hpp"
#include "beliefdyn/spectral.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace beliefdyn;

namespace {

Eigen::VectorXd topic_major_x0() {
  return apply_permutation(interleave_permutation(6, 5), testsup::showcase_x0());
}

}  // namespace

TEST_CASE("left Perron vector of the showcase network") {
  const Eigen::VectorXd gamma = left_perron_vector(testsup::showcase_w());
  const Eigen::VectorXd expected = testsup::frozen::gamma();
  CHECK((gamma - expected).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(gamma.sum() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("power limit of the single-individual chain logic") {
  Eigen::MatrixXd C(2, 2);
  C << 1.0, 0.0, 0.5, 0.5;
  const Eigen::MatrixXd L = power_limit(C);
  Eigen::MatrixXd expected(2, 2);
  expected << 1.0, 0.0, 1.0, 0.0;
  CHECK((L - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("spectral radius helpers") {
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(3, 3);
  D.diagonal() << 0.5, -0.9, 0.2;
  CHECK(spectral_radius_eig(D) == doctest::Approx(0.9).epsilon(1e-12));
  // the absolute-pattern bound dominates the true radius
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Rng rng(seed);
    Eigen::MatrixXd M(4, 4);
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) M(r, c) = rng.uniform(-0.3, 0.3);
    }
    CHECK(spectral_radius_abs_bound(M) >= spectral_radius_eig(M) - 1e-10);
  }
}

TEST_CASE("topic submatrix extraction") {
  const Eigen::MatrixXd A =
      build_multiplex_pattern(testsup::showcase_net(), testsup::mixed_profile());
  const Eigen::MatrixXd S = submatrix_topics(A, {2}, {0, 1}, 6);
  REQUIRE(S.rows() == 6);
  REQUIRE(S.cols() == 12);
  CHECK(S.block(0, 0, 6, 6).isApprox(A.block(12, 0, 6, 6), 1e-15));
  CHECK(S.block(0, 6, 6, 6).isApprox(A.block(12, 6, 6, 6), 1e-15));
}

TEST_CASE("open-block fixed points reproduce the frozen values") {
  const InfluenceNetwork net = testsup::showcase_net();
  const LogicProfile profile = testsup::mixed_profile();
  const Eigen::MatrixXd A = build_multiplex_pattern(net, profile);
  const TopicPartition part = condense_logic(profile);
  const Eigen::VectorXd y0 = topic_major_x0();
  const double a1 = testsup::frozen::alpha1;

  std::vector<Eigen::VectorXd> limits(5, Eigen::VectorXd::Zero(6));
  limits[0] = Eigen::VectorXd::Constant(6, a1);
  limits[1] = Eigen::VectorXd::Constant(6, -a1);

  // closed lead topic via the gauge route
  const Eigen::VectorXd y1 = fixed_point_block(A, part, 0, 6, limits, y0);
  CHECK((y1 - limits[0]).cwiseAbs().maxCoeff() < 1e-12);

  const Eigen::VectorXd y3 = fixed_point_block(A, part, 2, 6, limits, y0);
  CHECK((y3 - testsup::frozen::mixed_topic3_limit()).cwiseAbs().maxCoeff() < 1e-12);
  limits[2] = y3;

  const Eigen::VectorXd y45 = fixed_point_block(A, part, 3, 6, limits, y0);
  REQUIRE(y45.size() == 12);
  CHECK((y45.head(6) - Eigen::VectorXd::Constant(6, testsup::frozen::phi4))
            .cwiseAbs()
            .maxCoeff() < 1e-10);
  CHECK((y45.tail(6) - Eigen::VectorXd::Constant(6, testsup::frozen::phi5))
            .cwiseAbs()
            .maxCoeff() < 1e-10);
}

TEST_CASE("full oracle propagation matches simulation on both showcases") {
  const InfluenceNetwork net = testsup::showcase_net();
  for (const LogicProfile& profile :
       {testsup::mixed_profile(), testsup::cascade_profile()}) {
    const auto limits = oracle_limits(net, profile, testsup::showcase_x0());
    REQUIRE(limits.size() == 5);
    const Eigen::MatrixXd A = build_system(net, profile, Ordering::TopicMajor);
    const Trajectory traj = simulate(A, topic_major_x0());
    REQUIRE(traj.limit.has_value());
    for (int p = 0; p < 5; ++p) {
      const Eigen::VectorXd sim = traj.limit->segment(p * 6, 6);
      CHECK((limits[static_cast<size_t>(p)] - sim).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
  // the cascade's split second topic has an exact per-individual fixed point
  const auto cascade =
      oracle_limits(net, testsup::cascade_profile(), testsup::showcase_x0());
  CHECK((cascade[1] - testsup::frozen::cascade_topic2_limit()).cwiseAbs().maxCoeff() <
        1e-12);
}

TEST_CASE("oracle handles balanced closed blocks of several topics") {
  for (std::uint64_t seed = 41; seed <= 46; ++seed) {
    const auto sc = testsup::closed_scenario(3, 3, testsup::ClosedRegime::Balanced, seed);
    const auto limits = oracle_limits(sc.net, sc.profile, sc.x0);
    const Eigen::MatrixXd B = build_system(sc.net, sc.profile, Ordering::IndividualMajor);
    const Trajectory traj = simulate(B, sc.x0);
    REQUIRE(traj.limit.has_value());
    for (int p = 0; p < 3; ++p) {
      for (int i = 0; i < 3; ++i) {
        CHECK(limits[static_cast<size_t>(p)](i) ==
              doctest::Approx((*traj.limit)(i * 3 + p)).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("contraction certificates for the open showcase blocks") {
  const InfluenceNetwork net = testsup::showcase_net();
  const LogicProfile profile = testsup::mixed_profile();
  const Eigen::MatrixXd A = build_multiplex_pattern(net, profile);
  const TopicPartition part = condense_logic(profile);

  const SpectralCertificate c3 = spectral_certificate(A, part, 2, 6);
  CHECK(c3.radius == doctest::Approx(testsup::frozen::rho_open3).epsilon(1e-9));
  CHECK(c3.abs_bound >= c3.radius - 1e-9);
  CHECK(c3.radius < 1.0);

  const SpectralCertificate c45 = spectral_certificate(A, part, 3, 6);
  CHECK(c45.radius == doctest::Approx(testsup::frozen::rho_open45).epsilon(1e-9));
  CHECK(c45.abs_bound < 1.0);

  // the closed lead block has radius one and no certificate
  try {
    spectral_certificate(A, part, 0, 6);
    FAIL("closed block must not certify");
  } catch (const CertificateFailure& e) {
    CHECK(e.radius == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("a non-invertible open-block system is reported") {
  TopicPartition part;
  part.blocks = {{0}, {1}};
  part.perm = {0, 1};
  part.closed = {true, false};
  part.dep_sets = {{}, {0}};
  part.ext_dep_sets = {{}, {0}};
  part.block_of = {0, 1};
  Eigen::MatrixXd A(2, 2);
  A << 1.0, 0.0, 1.0, 1.0;  // the open block's diagonal entry is exactly 1
  std::vector<Eigen::VectorXd> limits(2, Eigen::VectorXd::Constant(1, 0.7));
  CHECK_THROWS_AS(fixed_point_block(A, part, 1, 1, limits, Eigen::VectorXd::Zero(2)),
                  SingularSystem);
}
