#pragma once

#include <cstdint>

namespace beliefdyn {

// Every numeric threshold used by the library lives here so that tests and
// documentation can refer to a single set of named constants.
namespace tol {

// Structural checks on input matrices (row sums, pattern comparisons).
inline constexpr double structure = 1e-12;

// Row sums off by more than `structure` but at most this much are
// renormalized with a warning instead of rejected.
inline constexpr double renormalize = 1e-9;

// Eigenvalue modulus and rank decisions.
inline constexpr double spectral = 1e-9;

// Entries with absolute value at or below this are structurally zero.
inline constexpr double sign_zero = 1e-12;

// Iteration step residual threshold and streak length for convergence.
inline constexpr double simulate = 1e-12;
inline constexpr long max_steps = 1'000'000;
inline constexpr int residual_streak = 10;

// A topic counts as in consensus when its terminal spread is below this.
inline constexpr double consensus = 1e-8;

// Residual bound for the per-block consensus feasibility solves.
inline constexpr double rule_residual = 1e-9;

// Bound on ||A y* - y*||_inf for an accepted fixed point.
inline constexpr double fixed_point_residual = 1e-10;

// Default oracle vs. simulation agreement bound in cross-validation.
inline constexpr double agreement = 1e-6;

// Spectral radius certificates must come in below 1 by this margin.
inline constexpr double certificate_margin = 1e-12;

// Squarings of the power-limit iteration; covers 2^20 > 10^6 plain steps.
inline constexpr int max_squarings = 20;

}  // namespace tol

// Runtime-adjustable tolerance bundle threaded through cross-validation and
// the scenario runner. Defaults mirror the constants above.
struct Tolerances {
  double sim_tol = tol::simulate;
  long max_steps = tol::max_steps;
  double consensus_tol = tol::consensus;
  double agreement_tol = tol::agreement;
  double alpha_tol = tol::agreement;
};

}  // namespace beliefdyn
