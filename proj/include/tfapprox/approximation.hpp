#pragma once

// Best approximation of a finite data set by time-frequency invariant spaces.
//
// Everything is computed fiberwise on the Helson image: at each grid point
// (omega, tau) the m data fibers in C^r are compressed onto their top-n
// eigendirections, and the generators are pulled back with helson_inverse.

#include "tfapprox/group_lattice.hpp"
#include "tfapprox/spectral.hpp"
#include "tfapprox/transforms.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace tfa {

/// m >= 1 signals sharing one GroupConfig.
class DataSet {
public:
  explicit DataSet(std::vector<Signal> signals);

  const GroupConfig &config() const noexcept { return signals_.front().config(); }
  std::size_t size() const noexcept { return signals_.size(); }
  const Signal &operator[](std::size_t j) const { return signals_[j]; }
  const std::vector<Signal> &signals() const noexcept { return signals_; }

  double energy() const;

private:
  std::vector<Signal> signals_;
};

/// S_Gamma(generators): the closed span of all T_ell M_beta phi.
class TFSubspace {
public:
  explicit TFSubspace(std::vector<Signal> generators);

  const GroupConfig &config() const noexcept {
    return generators_.front().config();
  }
  std::size_t size() const noexcept { return generators_.size(); }
  const std::vector<Signal> &generators() const noexcept { return generators_; }
  const std::vector<FiberTensor> &generator_fibers() const noexcept {
    return fibers_;
  }

  /// The spanning set of the range space J_V(omega, tau) in C^r.
  std::vector<std::vector<cplx>> fiber_basis(std::size_t omega,
                                             std::size_t tau) const;

  /// Gram eigenvalues at or below this level are round-off on every fiber:
  /// 1e-12 times the largest fiber Gram trace of the generators.
  double zero_floor() const noexcept { return zero_floor_; }

private:
  std::vector<Signal> generators_;
  std::vector<FiberTensor> fibers_;
  double zero_floor_ = 0.0;
};

/// lambda_i(omega, tau) for i in [0,m), stored i-major, then omega, then tau.
class EigenvalueField {
public:
  EigenvalueField() = default;
  EigenvalueField(std::size_t m, std::size_t q, std::size_t s)
      : m_(m), q_(q), s_(s), values_(m * q * s) {}

  std::size_t m() const noexcept { return m_; }
  std::size_t q() const noexcept { return q_; }
  std::size_t s() const noexcept { return s_; }

  double &at(std::size_t i, std::size_t omega, std::size_t tau) {
    return values_[(i * q_ + omega) * s_ + tau];
  }
  double at(std::size_t i, std::size_t omega, std::size_t tau) const {
    return values_[(i * q_ + omega) * s_ + tau];
  }

  std::span<const double> values() const noexcept { return values_; }

private:
  std::size_t m_ = 0;
  std::size_t q_ = 0;
  std::size_t s_ = 0;
  std::vector<double> values_;
};

struct ApproxResult {
  GroupConfig config;
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<Signal> generators;
  EigenvalueField eigenvalues;
  double error = 0.0;
};

/// Per-fiber Gramian spectra of the data.
EigenvalueField eigenvalue_field(const DataSet &data);

/// Optimal generators psi_1..psi_n, 1 <= n <= m. Some may be zero signals.
ApproxResult optimal_generators(const DataSet &data, std::size_t n);

/// Orthogonal projection of v onto span(basis) through the pseudo-inverse
/// of the basis Gram matrix. Gram eigenvalues at or below
/// max(1e-12 lambda_max, zero_floor) count as zero.
std::vector<cplx> fiber_projection(std::span<const cplx> v,
                                   std::span<const std::vector<cplx>> basis,
                                   double zero_floor = 0.0);

/// Orthogonal projection of f onto V, computed fiber by fiber.
Signal project(const Signal &f, const TFSubspace &space);

/// sum_j ||f_j - P_V f_j||^2 measured in the time domain.
double approximation_error(const DataSet &data, const TFSubspace &space);

/// The same error accumulated fiber by fiber on the Helson side.
double fiberwise_error(const DataSet &data, const TFSubspace &space);

/// sum_{i > n} sum_{omega, tau} lambda_i(omega, tau), 0 <= n <= m.
double error_from_spectrum(const EigenvalueField &eigenvalues, std::size_t n);

struct ErrorCurvePoint {
  std::size_t n;
  double error;
};

/// Optimal error for n = 0..n_max from a single spectral pass.
std::vector<ErrorCurvePoint> error_curve(const DataSet &data,
                                         std::size_t n_max);

} // namespace tfa
