#include "beliefdyn/generator.hpp"

#include <sstream>

#include "beliefdyn/errors.hpp"
#include "beliefdyn/rng.hpp"

namespace beliefdyn {

namespace {

Eigen::MatrixXd draw_network(int n, Rng& rng) {
  Eigen::MatrixXd W = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    W(i, i) = rng.uniform(0.2, 1.0);
    if (n > 1) W(i, (i + 1) % n) = rng.uniform(0.2, 1.0);
    for (int j = 0; j < n; ++j) {
      if (j == i || j == (i + 1) % n) continue;
      if (rng.bernoulli(0.3)) W(i, j) = rng.uniform(0.2, 1.0);
    }
  }
  for (int i = 0; i < n; ++i) W.row(i) /= W.row(i).sum();
  return W;
}

BoolMatrix draw_pattern(const GeneratorSpec& spec, Rng& rng) {
  if (spec.pattern.has_value()) {
    BoolMatrix P = *spec.pattern;
    for (int p = 0; p < spec.m; ++p) {
      if (!P(p, p)) {
        throw PreconditionViolation("generator pattern must include the diagonal");
      }
    }
    return P;
  }
  BoolMatrix P(spec.m, spec.m);
  for (int p = 0; p < spec.m; ++p) {
    for (int q = 0; q < spec.m; ++q) {
      P(p, q) = p == q || rng.bernoulli(spec.pattern_density);
    }
  }
  return P;
}

// Shared sign assignment: diagonal positive, off-diagonal support cells
// flip negative with the configured probability.
Eigen::MatrixXd draw_signs(const BoolMatrix& P, double flip_prob, Rng& rng) {
  const int m = static_cast<int>(P.rows());
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(m, m);
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) {
      if (!P(p, q)) continue;
      S(p, q) = (p != q && rng.bernoulli(flip_prob)) ? -1.0 : 1.0;
    }
  }
  return S;
}

Eigen::MatrixXd draw_logic(const BoolMatrix& P, const Eigen::MatrixXd& signs, Rng& rng) {
  const int m = static_cast<int>(P.rows());
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(m, m);
  for (int p = 0; p < m; ++p) {
    double abs_sum = 0.0;
    for (int q = 0; q < m; ++q) {
      if (!P(p, q)) continue;
      // the diagonal draw is biased upward so self-reliance tends to dominate
      const double mag = rng.uniform(0.1, 1.0) * (p == q ? 1.5 : 1.0);
      C(p, q) = signs(p, q) * mag;
      abs_sum += mag;
    }
    C.row(p) /= abs_sum;
  }
  return C;
}

}  // namespace

ScenarioConfig generate_scenario(const GeneratorSpec& spec) {
  if (spec.n < 1 || spec.m < 1) {
    throw PreconditionViolation("generator needs n >= 1 and m >= 1");
  }
  if (spec.competition && spec.n < 2) {
    throw PreconditionViolation("a sign conflict needs at least two individuals");
  }
  if (spec.competition && spec.m < 2) {
    throw PreconditionViolation("a sign conflict needs an off-diagonal dependency");
  }
  Rng rng(spec.seed);

  for (int attempt = 0; attempt < 100; ++attempt) {
    const Eigen::MatrixXd Wdraw = draw_network(spec.n, rng);
    const BoolMatrix P = draw_pattern(spec, rng);

    int conflict_p = -1;
    int conflict_q = -1;
    if (spec.competition) {
      for (int p = 0; p < spec.m && conflict_p < 0; ++p) {
        for (int q = 0; q < spec.m; ++q) {
          if (p != q && P(p, q)) {
            conflict_p = p;
            conflict_q = q;
            break;
          }
        }
      }
      if (conflict_p < 0) {
        if (spec.pattern.has_value()) {
          throw PreconditionViolation(
              "a sign conflict needs an off-diagonal cell in the pattern");
        }
        continue;  // diagonal-only draw, try another pattern
      }
    }

    const Eigen::MatrixXd signs = draw_signs(P, spec.sign_flip_prob, rng);
    std::vector<Eigen::MatrixXd> raw;
    raw.reserve(spec.n);
    for (int i = 0; i < spec.n; ++i) {
      Eigen::MatrixXd Si = signs;
      if (spec.competition && i == 1) Si(conflict_p, conflict_q) *= -1.0;
      raw.push_back(draw_logic(P, Si, rng));
    }

    ScenarioConfig cfg;
    try {
      cfg.net = validate_influence(Wdraw);
      std::vector<LogicMatrix> mats;
      mats.reserve(raw.size());
      for (auto& C : raw) mats.push_back(validate_logic(std::move(C)));
      cfg.profile = validate_profile(std::move(mats));
    } catch (const ValidationError&) {
      continue;
    }

    cfg.x0.resize(spec.n * spec.m);
    for (Eigen::Index k = 0; k < cfg.x0.size(); ++k) cfg.x0(k) = rng.uniform(-1.0, 1.0);

    std::ostringstream name;
    name << "generated_" << spec.seed;
    cfg.name = name.str();
    std::ostringstream desc;
    desc << "random scenario, n=" << spec.n << " m=" << spec.m << " seed=" << spec.seed
         << (spec.competition ? ", with a deliberate sign conflict" : "");
    cfg.description = desc.str();
    cfg.generated_from = spec;
    return cfg;
  }
  throw GenerationExhausted("no valid scenario after 100 attempts");
}

}  // namespace beliefdyn
