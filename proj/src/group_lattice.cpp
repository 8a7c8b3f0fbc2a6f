#include "tfapprox/group_lattice.hpp"

#include "tfapprox/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace tfa {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t n) {
  const std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

} // namespace

GroupConfig make_config(std::int64_t d, std::int64_t p, std::int64_t s) {
  if (d < 1 || p < 1 || s < 1)
    throw InvalidArgument("d, p and s must be positive (got d=" +
                          std::to_string(d) + ", p=" + std::to_string(p) +
                          ", s=" + std::to_string(s) + ")");
  if (d % p != 0)
    throw DivisibilityError("p must divide d: " + std::to_string(p) +
                            " does not divide " + std::to_string(d));
  if (p % s != 0)
    throw DivisibilityError("s must divide p: " + std::to_string(s) +
                            " does not divide " + std::to_string(p));
  GroupConfig c;
  c.d = static_cast<std::size_t>(d);
  c.p = static_cast<std::size_t>(p);
  c.q = static_cast<std::size_t>(d / p);
  c.s = static_cast<std::size_t>(s);
  c.r = static_cast<std::size_t>(p / s);
  return c;
}

LatticeElements lattice_elements(const GroupConfig &c) {
  LatticeElements e;
  e.L.reserve(c.q);
  for (std::size_t n = 0; n < c.q; ++n)
    e.L.push_back(n * c.p);
  e.L_perp.reserve(c.p);
  for (std::size_t k = 0; k < c.p; ++k)
    e.L_perp.push_back(k * c.q);
  e.B.reserve(c.s);
  for (std::size_t j = 0; j < c.s; ++j)
    e.B.push_back(j * c.r * c.q);
  e.B_perp_numerators.reserve(c.r);
  for (std::size_t h = 0; h < c.r; ++h)
    e.B_perp_numerators.push_back(h * c.s);
  return e;
}

bool in_L(const GroupConfig &c, std::int64_t x) {
  return mod(x, static_cast<std::int64_t>(c.d)) %
             static_cast<std::int64_t>(c.p) ==
         0;
}

bool in_B(const GroupConfig &c, std::int64_t beta) {
  return mod(beta, static_cast<std::int64_t>(c.d)) %
             static_cast<std::int64_t>(c.r * c.q) ==
         0;
}

cplx unit_root(std::int64_t k, std::int64_t n) {
  k = mod(k, n);
  if ((4 * k) % n == 0) {
    switch ((4 * k) / n) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
    }
  }
  const double angle =
      2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

cplx character(std::int64_t d, std::int64_t x, std::int64_t w) {
  return unit_root(mod(x, d) * mod(w, d), d);
}

cplx gamma_character(const GroupConfig &c, std::int64_t ell, std::int64_t beta,
                     std::size_t omega, std::size_t tau) {
  if (!in_L(c, ell))
    throw LatticeMembershipError(std::to_string(ell) + " is not in L");
  if (!in_B(c, beta))
    throw LatticeMembershipError(std::to_string(beta) + " is not in B");
  const auto d = static_cast<std::int64_t>(c.d);
  const auto p = static_cast<std::int64_t>(c.p);
  const std::int64_t j = mod(beta, d) / static_cast<std::int64_t>(c.r * c.q);
  const cplx x_ell = character(d, ell, static_cast<std::int64_t>(omega));
  const cplx x_beta = unit_root(j * static_cast<std::int64_t>(c.r) *
                                    static_cast<std::int64_t>(tau),
                                p);
  return x_ell * x_beta;
}

} // namespace tfa
