#pragma once

// Per-fiber Gramians and a deterministic Hermitian eigensolver.

#include "tfapprox/group_lattice.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace tfa {

/// Dense square complex matrix, row-major.
class HermitianMatrix {
public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(std::size_t m) : m_(m), a_(m * m) {}
  HermitianMatrix(std::size_t m, std::vector<cplx> entries);

  static HermitianMatrix identity(std::size_t m);

  std::size_t size() const noexcept { return m_; }

  cplx &operator()(std::size_t i, std::size_t j) { return a_[i * m_ + j]; }
  const cplx &operator()(std::size_t i, std::size_t j) const {
    return a_[i * m_ + j];
  }

  std::span<const cplx> entries() const noexcept { return a_; }

  double frobenius_norm() const;
  double trace() const;

  /// True when |a_ij - conj(a_ji)| <= tol * max(1, max|a|) for all i, j.
  bool is_hermitian(double tol = 1e-12) const;

private:
  std::size_t m_ = 0;
  std::vector<cplx> a_;
};

/// Eigenpairs in descending order. vectors[i] is the row vector y_i with
/// y_i G = values[i] y_i, i.e. the conjugate of a right eigenvector. The
/// first component of y_i with modulus above 1e-10 is real and positive.
struct EigenDecomposition {
  std::vector<double> values;
  std::vector<std::vector<cplx>> vectors;
};

/// G(i,j) = sum_h fibers[i][h] conj(fibers[j][h]).
HermitianMatrix gramian(std::span<const std::vector<cplx>> fibers);

/// Cyclic complex Jacobi. Rotates until the off-diagonal Frobenius mass
/// drops below 1e-14 ||G||_F or 100 sweeps have run. Eigenvalues within
/// 1e-12 max(1, lambda_max) below zero are clamped to 0.
EigenDecomposition eigh(const HermitianMatrix &g);

} // namespace tfa
