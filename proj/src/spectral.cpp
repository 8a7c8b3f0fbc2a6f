#include "tfapprox/spectral.hpp"

#include "tfapprox/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

namespace tfa {

namespace {

constexpr double kOffDiagonalTolerance = 1e-14;
constexpr int kMaxSweeps = 100;
constexpr double kClampTolerance = 1e-12;
constexpr double kPhaseThreshold = 1e-10;

double off_diagonal_norm(const HermitianMatrix &a) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (i != j)
        acc += std::norm(a(i, j));
  return std::sqrt(acc);
}

// Zeroes a(p,q) with the unitary U = diag(1, e^{-i phi}) R(theta), where
// a(p,q) = g e^{i phi}, and accumulates U into the columns of v.
void rotate(HermitianMatrix &a, HermitianMatrix &v, std::size_t p,
            std::size_t q) {
  const cplx apq = a(p, q);
  const double g = std::abs(apq);
  if (g == 0.0)
    return;
  const cplx phase = apq / g; // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double zeta = (aqq - app) / (2.0 * g);
  const double t = (zeta >= 0.0 ? -1.0 : 1.0) /
                   (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const cplx u00 = c;
  const cplx u01 = -s;
  const cplx u10 = std::conj(phase) * s;
  const cplx u11 = std::conj(phase) * c;

  const std::size_t m = a.size();
  for (std::size_t k = 0; k < m; ++k) {
    const cplx akp = a(k, p);
    const cplx akq = a(k, q);
    a(k, p) = akp * u00 + akq * u10;
    a(k, q) = akp * u01 + akq * u11;
  }
  for (std::size_t k = 0; k < m; ++k) {
    const cplx apk = a(p, k);
    const cplx aqk = a(q, k);
    a(p, k) = std::conj(u00) * apk + std::conj(u10) * aqk;
    a(q, k) = std::conj(u01) * apk + std::conj(u11) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < m; ++k) {
    const cplx vkp = v(k, p);
    const cplx vkq = v(k, q);
    v(k, p) = vkp * u00 + vkq * u10;
    v(k, q) = vkp * u01 + vkq * u11;
  }
}

void normalize_phase(std::vector<cplx> &y) {
  for (const cplx &c : y) {
    const double mag = std::abs(c);
    if (mag > kPhaseThreshold) {
      const cplx factor = std::conj(c) / mag;
      for (cplx &e : y)
        e *= factor;
      break;
    }
  }
  for (cplx &c : y) {
    if (std::abs(c) > kPhaseThreshold) {
      c = c.real();
      break;
    }
  }
}

} // namespace

HermitianMatrix::HermitianMatrix(std::size_t m, std::vector<cplx> entries)
    : m_(m), a_(std::move(entries)) {
  if (a_.size() != m_ * m_)
    throw DimensionMismatch("matrix of order " + std::to_string(m_) +
                            " needs " + std::to_string(m_ * m_) +
                            " entries, got " + std::to_string(a_.size()));
}

HermitianMatrix HermitianMatrix::identity(std::size_t m) {
  HermitianMatrix a(m);
  for (std::size_t i = 0; i < m; ++i)
    a(i, i) = 1.0;
  return a;
}

double HermitianMatrix::frobenius_norm() const {
  double acc = 0.0;
  for (const cplx &c : a_)
    acc += std::norm(c);
  return std::sqrt(acc);
}

double HermitianMatrix::trace() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < m_; ++i)
    acc += (*this)(i, i).real();
  return acc;
}

bool HermitianMatrix::is_hermitian(double tol) const {
  double scale = 1.0;
  for (const cplx &c : a_)
    scale = std::max(scale, std::abs(c));
  const double bound = tol * scale;
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = i; j < m_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > bound)
        return false;
  return true;
}

HermitianMatrix gramian(std::span<const std::vector<cplx>> fibers) {
  const std::size_t m = fibers.size();
  if (m == 0)
    throw DimensionMismatch("gramian needs at least one vector");
  const std::size_t r = fibers[0].size();
  for (const auto &f : fibers)
    if (f.size() != r)
      throw DimensionMismatch("fiber vectors differ in length (" +
                              std::to_string(f.size()) + " vs " +
                              std::to_string(r) + ")");
  HermitianMatrix g(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      cplx acc = 0.0;
      for (std::size_t h = 0; h < r; ++h)
        acc += fibers[i][h] * std::conj(fibers[j][h]);
      g(i, j) = acc;
      g(j, i) = std::conj(acc);
    }
    g(i, i) = g(i, i).real();
  }
  return g;
}

EigenDecomposition eigh(const HermitianMatrix &g) {
  if (!g.is_hermitian())
    throw NotHermitian("matrix is not Hermitian within 1e-12");
  const std::size_t m = g.size();
  HermitianMatrix a = g;
  for (std::size_t i = 0; i < m; ++i)
    a(i, i) = a(i, i).real();
  HermitianMatrix v = HermitianMatrix::identity(m);

  const double target = kOffDiagonalTolerance * g.frobenius_norm();
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= target)
      break;
    for (std::size_t p = 0; p + 1 < m; ++p)
      for (std::size_t q = p + 1; q < m; ++q)
        rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) {
                     return a(i, i).real() > a(j, j).real();
                   });

  EigenDecomposition out;
  out.values.reserve(m);
  out.vectors.reserve(m);
  double lambda_max = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    lambda_max = std::max(lambda_max, a(i, i).real());
  const double clamp = kClampTolerance * std::max(1.0, lambda_max);
  for (std::size_t idx : order) {
    double lambda = a(idx, idx).real();
    if (lambda < 0.0 && lambda >= -clamp)
      lambda = 0.0;
    out.values.push_back(lambda);
    std::vector<cplx> y(m);
    for (std::size_t k = 0; k < m; ++k)
      y[k] = std::conj(v(k, idx));
    normalize_phase(y);
    out.vectors.push_back(std::move(y));
  }
  return out;
}

} // namespace tfa
