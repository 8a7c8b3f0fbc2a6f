#pragma once

// Test-only helpers. The reference transforms here are written straight
// from the defining sums with std::polar and share no code with the library.

#include "tfapprox/group_lattice.hpp"
#include "tfapprox/transforms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace tfa::test {

inline const std::vector<std::array<std::int64_t, 3>> kConfigs = {
    {4, 2, 2}, {12, 6, 3}, {24, 4, 2}, {60, 12, 4}, {210, 30, 5}};

inline cplx expi(double turns) {
  return std::polar(1.0, 2.0 * std::numbers::pi * turns);
}

inline Signal gaussian_signal(const GroupConfig &c, std::mt19937_64 &rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<cplx> v(c.d);
  for (auto &x : v) {
    const double re = n(rng);
    const double im = n(rng);
    x = {re, im};
  }
  return Signal(c, v);
}

inline std::vector<cplx> reference_dft(const std::vector<cplx> &f) {
  const std::size_t d = f.size();
  std::vector<cplx> out(d);
  for (std::size_t w = 0; w < d; ++w)
    for (std::size_t g = 0; g < d; ++g)
      out[w] += f[g] * expi(-double(g * w) / double(d));
  for (auto &x : out)
    x /= std::sqrt(double(d));
  return out;
}

// Z(w, l) = p^{-1/2} sum_{lambda in L^perp} fhat(w + lambda) conj((l/q, lambda)).
inline std::vector<cplx> reference_zak(const Signal &f) {
  const GroupConfig &c = f.config();
  const std::vector<cplx> x(f.values().begin(), f.values().end());
  const auto fhat = reference_dft(x);
  std::vector<cplx> grid(c.q * c.p);
  for (std::size_t w = 0; w < c.q; ++w)
    for (std::size_t l = 0; l < c.p; ++l) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < c.p; ++k) {
        const double t = double(l) / double(c.q);
        const double lambda = double(k * c.q);
        acc += fhat[(w + k * c.q) % c.d] * expi(-t * lambda / double(c.p));
      }
      grid[w * c.p + l] = acc / std::sqrt(double(c.p));
    }
  return grid;
}

inline double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

} // namespace tfa::test
