#pragma once

// Fourier, time-frequency and Zak/Helson transforms on Z_d.
//
// All transforms are unitary with respect to plain (unweighted) sums:
//   dft:    fhat(w) = d^{-1/2} sum_g f(g) exp(-2 pi i g w / d)
//   zak:    Z(w, l) = p^{-1/2} sum_k fhat(w + k q) exp(-2 pi i k l / p)
//   helson: H(w, tau, h) = Z(w, tau + h s)
// for w in [0,q), l in [0,p), tau in [0,s), h in [0,r).

#include "tfapprox/group_lattice.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tfa {

class Signal {
public:
  explicit Signal(const GroupConfig &config);
  Signal(const GroupConfig &config, std::vector<cplx> values);

  static Signal delta(const GroupConfig &config, std::size_t x);

  const GroupConfig &config() const noexcept { return config_; }
  std::size_t size() const noexcept { return values_.size(); }

  cplx &operator[](std::size_t x) { return values_[x]; }
  const cplx &operator[](std::size_t x) const { return values_[x]; }

  std::span<const cplx> values() const noexcept { return values_; }
  std::span<cplx> values() noexcept { return values_; }

  double squared_norm() const;
  double norm() const;

private:
  GroupConfig config_;
  std::vector<cplx> values_;
};

/// <f, g> = sum_x f(x) conj(g(x)).
cplx inner(const Signal &f, const Signal &g);

/// Normalized Zak transform sampled on [0,q) x [0,p), row-major in omega.
struct ZakGrid {
  GroupConfig config;
  std::vector<cplx> values;

  explicit ZakGrid(const GroupConfig &c) : config(c), values(c.q * c.p) {}

  cplx &at(std::size_t omega, std::size_t ell) {
    return values[omega * config.p + ell];
  }
  const cplx &at(std::size_t omega, std::size_t ell) const {
    return values[omega * config.p + ell];
  }
};

/// Helson image, laid out row-major as [omega][tau][h] so that each fiber
/// (omega, tau) is a contiguous vector of length r.
class FiberTensor {
public:
  explicit FiberTensor(const GroupConfig &config);
  FiberTensor(const GroupConfig &config, std::vector<cplx> values);

  /// The tensor with a single unit entry at (omega, tau, h).
  static FiberTensor unit(const GroupConfig &config, std::size_t omega,
                          std::size_t tau, std::size_t h);

  const GroupConfig &config() const noexcept { return config_; }

  cplx &at(std::size_t omega, std::size_t tau, std::size_t h) {
    return values_[index(omega, tau, h)];
  }
  const cplx &at(std::size_t omega, std::size_t tau, std::size_t h) const {
    return values_[index(omega, tau, h)];
  }

  std::span<const cplx> fiber(std::size_t omega, std::size_t tau) const {
    return std::span<const cplx>(values_).subspan(index(omega, tau, 0),
                                                  config_.r);
  }
  std::span<cplx> fiber(std::size_t omega, std::size_t tau) {
    return std::span<cplx>(values_).subspan(index(omega, tau, 0), config_.r);
  }

  std::span<const cplx> values() const noexcept { return values_; }

  double squared_norm() const;

private:
  std::size_t index(std::size_t omega, std::size_t tau, std::size_t h) const {
    return (omega * config_.s + tau) * config_.r + h;
  }

  GroupConfig config_;
  std::vector<cplx> values_;
};

/// Full tensor inner product sum F conj(G).
cplx inner(const FiberTensor &a, const FiberTensor &b);

/// Unitary length-n DFT of x: sign = -1 forward, +1 inverse.
std::vector<cplx> unitary_dft(std::span<const cplx> x, int sign);

Signal dft(const Signal &f);
Signal idft(const Signal &fhat);

/// T_ell f(x) = f(x - ell); ell must lie in L.
Signal translate(const Signal &f, std::int64_t ell);

/// M_beta f(x) = exp(2 pi i x beta / d) f(x); beta must lie in B.
Signal modulate(const Signal &f, std::int64_t beta);

/// Frequency-side evaluation of the Zak transform.
ZakGrid zak(const Signal &f);

/// Time-side evaluation of the same transform:
///   Z(w, l) = exp(2 pi i l w / d) q^{-1/2} sum_n f(p n - l) exp(-2 pi i n w / q).
ZakGrid zak_time_domain(const Signal &f);

FiberTensor helson(const Signal &f);
Signal helson_inverse(const FiberTensor &fibers);

} // namespace tfa
