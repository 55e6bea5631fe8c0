#include <Eigen/Eigenvalues>

#include "beliefdyn/errors.hpp"
#include "beliefdyn/generator.hpp"
#include "beliefdyn/model.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace beliefdyn;

TEST_CASE("influence validation accepts the showcase network") {
  const InfluenceNetwork net = validate_influence(testsup::showcase_w());
  CHECK(net.n() == 6);
  CHECK(net.W.rowwise().sum().isApproxToConstant(1.0, 1e-15));
}

TEST_CASE("influence validation rejects structural defects") {
  CHECK_THROWS_AS(validate_influence(Eigen::MatrixXd::Zero(2, 3)), PreconditionViolation);

  Eigen::MatrixXd neg(2, 2);
  neg << 1.2, -0.2, 0.5, 0.5;
  CHECK_THROWS_AS(validate_influence(neg), NonnegativityViolation);

  Eigen::MatrixXd zdiag(2, 2);
  zdiag << 0.0, 1.0, 0.5, 0.5;
  CHECK_THROWS_AS(validate_influence(zdiag), ZeroDiagonal);

  Eigen::MatrixXd badsum(2, 2);
  badsum << 0.6, 0.6, 0.5, 0.5;
  CHECK_THROWS_AS(validate_influence(badsum), RowSumViolation);

  // two isolated self-listeners
  Eigen::MatrixXd split = Eigen::MatrixXd::Identity(2, 2);
  CHECK_THROWS_AS(validate_influence(split), NotStronglyConnected);
}

TEST_CASE("row sums slightly off are renormalized with a warning") {
  Eigen::MatrixXd W(2, 2);
  W << 0.5, 0.5 + 3e-10, 0.5, 0.5;
  std::vector<std::string> warnings;
  const InfluenceNetwork net = validate_influence(W, &warnings);
  CHECK(warnings.size() == 1);
  CHECK(net.W.row(0).sum() == doctest::Approx(1.0).epsilon(1e-14));

  // beyond the renormalization band the same defect is an error
  Eigen::MatrixXd W2(2, 2);
  W2 << 0.5, 0.5 + 3e-8, 0.5, 0.5;
  CHECK_THROWS_AS(validate_influence(W2), RowSumViolation);
}

TEST_CASE("logic validation accepts the showcase styles") {
  for (const auto& C : {testsup::logic_hat(), testsup::logic_bar(), testsup::logic_til()}) {
    const LogicMatrix mat = validate_logic(C);
    CHECK(mat.m() == 5);
    CHECK(mat.C.cwiseAbs().rowwise().sum().isApproxToConstant(1.0, 1e-15));
  }
}

TEST_CASE("logic validation rejects structural defects") {
  Eigen::MatrixXd bad(2, 2);
  bad << 0.9, 0.0, 0.5, 0.5;
  CHECK_THROWS_AS(validate_logic(bad), RowAbsSumViolation);

  Eigen::MatrixXd negdiag(2, 2);
  negdiag << -0.5, 0.5, 0.0, 1.0;
  CHECK_THROWS_AS(validate_logic(negdiag), NonpositiveDiagonal);

  Eigen::MatrixXd zerodiag(2, 2);
  zerodiag << 0.0, 1.0, 0.5, 0.5;
  CHECK_THROWS_AS(validate_logic(zerodiag), NonpositiveDiagonal);
}

TEST_CASE("logic renormalization band mirrors the influence one") {
  Eigen::MatrixXd C(2, 2);
  C << 1.0, 0.0, -0.5 - 2e-10, 0.5;
  std::vector<std::string> warnings;
  const LogicMatrix mat = validate_logic(C, &warnings);
  CHECK(warnings.size() == 1);
  CHECK(mat.C.cwiseAbs().row(1).sum() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("accepted logic matrices satisfy the spectrum contract") {
  // random accepted matrices: every eigenvalue inside the unit disk except
  // ones that sit numerically at 1
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    GeneratorSpec spec;
    spec.n = 2;
    spec.m = 2 + static_cast<int>(seed % 4);
    spec.seed = seed;
    const ScenarioConfig cfg = generate_scenario(spec);
    for (const auto& mat : cfg.profile.matrices) {
      const Eigen::VectorXcd ev = Eigen::EigenSolver<Eigen::MatrixXd>(mat.C).eigenvalues();
      for (Eigen::Index k = 0; k < ev.size(); ++k) {
        const double mod = std::abs(ev(k));
        const bool at_one = std::abs(ev(k) - std::complex<double>(1.0, 0.0)) <= 1e-9;
        CHECK((at_one || mod < 1.0 - 1e-9 + 1e-12));
      }
    }
  }
}

TEST_CASE("profile validation requires one shared pattern") {
  std::vector<LogicMatrix> mats;
  mats.push_back(validate_logic(testsup::logic_hat()));
  mats.push_back(validate_logic(testsup::logic_bar()));
  CHECK_NOTHROW(validate_profile(mats));

  Eigen::MatrixXd other(5, 5);
  other = testsup::logic_hat();
  other(0, 0) = 0.5;
  other(0, 2) = 0.5;  // extra support cell breaks the shared pattern
  mats.push_back(validate_logic(other));
  CHECK_THROWS_AS(validate_profile(mats), PatternMismatch);

  std::vector<LogicMatrix> sizes;
  sizes.push_back(validate_logic(testsup::logic_hat()));
  Eigen::MatrixXd small(2, 2);
  small << 1.0, 0.0, 0.5, 0.5;
  sizes.push_back(validate_logic(small));
  CHECK_THROWS_AS(validate_profile(sizes), PreconditionViolation);
}

TEST_CASE("shared pattern reflects the support of the showcase styles") {
  const LogicProfile profile = testsup::mixed_profile();
  const BoolMatrix P = shared_pattern(profile);
  CHECK(P(0, 0));
  CHECK_FALSE(P(0, 1));
  CHECK(P(1, 0));
  CHECK(P(3, 4));
  CHECK_FALSE(P(2, 3));
}

TEST_CASE("competition detection distinguishes the two showcases") {
  const LogicProfile mixed = testsup::mixed_profile();
  CHECK_FALSE(has_competition(mixed));
  for (int p = 0; p < 5; ++p) CHECK(detect_competing(mixed, p).empty());

  const LogicProfile cascade = testsup::cascade_profile();
  CHECK(has_competition(cascade));
  CHECK(cell_competing(cascade, 1, 0));
  CHECK_FALSE(cell_competing(cascade, 2, 0));
  const auto witnesses = detect_competing(cascade, 1);
  // three individuals per side of the conflict on the (2,1) dependency
  CHECK(witnesses.size() == 9);
  for (const auto& w : witnesses) {
    CHECK(w.q == 0);
    CHECK(cascade.C(w.i)(1, w.q) > 0.0);
    CHECK(cascade.C(w.j)(1, w.q) < 0.0);
  }
}
