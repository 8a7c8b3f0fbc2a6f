#pragma once

// Lattice structure of the cyclic group Z_d.
//
//   L     = {n p   : n in [0,q)}  subset of Z_d        (|L|  = q)
//   L^perp= {k q   : k in [0,p)}  subset of dual Z_d   (|L^perp| = p)
//   B     = {j r q : j in [0,s)}  subset of L^perp     (|B|  = s)
//   B^perp= {h s/q : h in [0,r)}  subset of dual(L^perp), stored as numerators h s
//
// with d = p q and p = r s. Points of dual(L^perp) are l/q for l in [0,p); the
// cross-section of dual(L^perp)/B^perp is tau/q for tau in [0,s), so
// (tau, h) -> tau + h s enumerates [0,p) exactly once.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace tfa {

using cplx = std::complex<double>;

struct GroupConfig {
  std::size_t d = 1;
  std::size_t p = 1;
  std::size_t q = 1;
  std::size_t s = 1;
  std::size_t r = 1;

  friend bool operator==(const GroupConfig &, const GroupConfig &) = default;
};

/// Builds the config for G = Z_d with L generated by p and B of size s.
/// Throws InvalidArgument for non-positive input and DivisibilityError when
/// p does not divide d or s does not divide p.
GroupConfig make_config(std::int64_t d, std::int64_t p, std::int64_t s);

struct LatticeElements {
  std::vector<std::size_t> L;
  std::vector<std::size_t> L_perp;
  std::vector<std::size_t> B;
  std::vector<std::size_t> B_perp_numerators;
};

LatticeElements lattice_elements(const GroupConfig &config);

bool in_L(const GroupConfig &config, std::int64_t x);
bool in_B(const GroupConfig &config, std::int64_t beta);

/// Index into [0,p) of the dual point (tau + h s)/q.
inline std::size_t fiber_point(const GroupConfig &config, std::size_t tau,
                               std::size_t h) {
  return tau + h * config.s;
}

/// exp(2 pi i k / n), with k reduced mod n first. Exact at multiples of a
/// quarter turn.
cplx unit_root(std::int64_t k, std::int64_t n);

/// exp(2 pi i x w / d).
cplx character(std::int64_t d, std::int64_t x, std::int64_t w);

/// X_ell(omega) X_beta(t) for ell in L, beta = j r q in B, the frequency
/// index omega in [0,q) and t = tau/q. The t-factor is exp(2 pi i j r tau / p).
/// The Helson image of T_ell M_beta f is conj(gamma_character) times that of f.
cplx gamma_character(const GroupConfig &config, std::int64_t ell,
                     std::int64_t beta, std::size_t omega, std::size_t tau);

} // namespace tfa
