#pragma once

// Independent oracles for the spectral construction. Nothing here calls
// eigh or gramian: the eigenvalues come from power iteration with deflation
// and the Gram matrices are assembled locally.

#include "tfapprox/approximation.hpp"
#include "tfapprox/spectral.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace tfa {

struct OracleReport {
  std::string case_name;
  double main_value = 0.0;
  double oracle_value = 0.0;
  double abs_deviation = 0.0;
  double rel_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

inline constexpr std::uint64_t kPowerIterationSeed = 0x5eed0f9ab04ull;

/// Top `count` eigenvalues of a PSD matrix, descending. Each eigenpair runs
/// until ||G v - mu v|| <= 1e-13 max(1, ||G||_F), then is deflated.
/// Throws ConvergenceFailure after 10000 iterations on one eigenpair.
std::vector<double> power_iteration_eigs(const HermitianMatrix &g,
                                         std::size_t count,
                                         std::uint64_t seed = kPowerIterationSeed);

/// min over subspaces Q of C^r with dim Q <= n of sum_i ||v_i - P_Q v_i||^2,
/// evaluated as trace(G) minus its top-n eigenvalues.
double fiber_best_rank_error(std::span<const std::vector<cplx>> fibers,
                             std::size_t n);

/// Compares the main path's per-fiber residual sum_{i>n} lambda_i with
/// fiber_best_rank_error on every fiber. Tolerance 1e-9 absolute.
std::vector<OracleReport> fiber_oracle_reports(const DataSet &data,
                                               std::size_t n);

/// One report per trial, in trial order. Trial t draws n generators with
/// independent standard complex Gaussian samples from a generator seeded by
/// (seed, t), and passes when the optimal error is at most the sampled
/// error plus 1e-9.
std::vector<OracleReport> random_subspace_sweep(const DataSet &data,
                                                std::size_t n,
                                                std::size_t trials,
                                                std::uint64_t seed);

/// Standard complex Gaussian signal: real and imaginary parts N(0, 1/2).
Signal random_signal(const GroupConfig &config, std::mt19937_64 &rng);

/// Stream seed for trial t of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t t);

} // namespace tfa
