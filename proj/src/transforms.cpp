#include "tfapprox/transforms.hpp"

#include "tfapprox/errors.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace tfa {

namespace {

void require_same_config(const GroupConfig &a, const GroupConfig &b) {
  if (!(a == b))
    throw ConfigMismatch("operands belong to different group configurations");
}

std::vector<cplx> twiddles(std::size_t n, int sign) {
  std::vector<cplx> w(n);
  const auto nn = static_cast<std::int64_t>(n);
  for (std::size_t k = 0; k < n; ++k)
    w[k] = unit_root(sign * static_cast<std::int64_t>(k), nn);
  return w;
}

} // namespace

Signal::Signal(const GroupConfig &config)
    : config_(config), values_(config.d) {}

Signal::Signal(const GroupConfig &config, std::vector<cplx> values)
    : config_(config), values_(std::move(values)) {
  if (values_.size() != config_.d)
    throw DimensionMismatch("signal has " + std::to_string(values_.size()) +
                            " samples, expected d=" +
                            std::to_string(config_.d));
}

Signal Signal::delta(const GroupConfig &config, std::size_t x) {
  Signal f(config);
  f[x % config.d] = 1.0;
  return f;
}

double Signal::squared_norm() const {
  double acc = 0.0;
  for (const cplx &v : values_)
    acc += std::norm(v);
  return acc;
}

double Signal::norm() const { return std::sqrt(squared_norm()); }

cplx inner(const Signal &f, const Signal &g) {
  require_same_config(f.config(), g.config());
  cplx acc = 0.0;
  for (std::size_t x = 0; x < f.size(); ++x)
    acc += f[x] * std::conj(g[x]);
  return acc;
}

FiberTensor::FiberTensor(const GroupConfig &config)
    : config_(config), values_(config.q * config.s * config.r) {}

FiberTensor::FiberTensor(const GroupConfig &config, std::vector<cplx> values)
    : config_(config), values_(std::move(values)) {
  if (values_.size() != config_.q * config_.s * config_.r)
    throw DimensionMismatch("fiber tensor has " +
                            std::to_string(values_.size()) +
                            " entries, expected q*s*r=" +
                            std::to_string(config_.d));
}

FiberTensor FiberTensor::unit(const GroupConfig &config, std::size_t omega,
                              std::size_t tau, std::size_t h) {
  if (omega >= config.q || tau >= config.s || h >= config.r)
    throw DimensionMismatch("fiber index out of range");
  FiberTensor t(config);
  t.at(omega, tau, h) = 1.0;
  return t;
}

double FiberTensor::squared_norm() const {
  double acc = 0.0;
  for (const cplx &v : values_)
    acc += std::norm(v);
  return acc;
}

cplx inner(const FiberTensor &a, const FiberTensor &b) {
  require_same_config(a.config(), b.config());
  cplx acc = 0.0;
  const auto av = a.values();
  const auto bv = b.values();
  for (std::size_t i = 0; i < av.size(); ++i)
    acc += av[i] * std::conj(bv[i]);
  return acc;
}

std::vector<cplx> unitary_dft(std::span<const cplx> x, int sign) {
  const std::size_t n = x.size();
  std::vector<cplx> out(n);
  if (n == 0)
    return out;
  const std::vector<cplx> w = twiddles(n, sign < 0 ? -1 : 1);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc = 0.0;
    std::size_t idx = 0; // (j * k) mod n
    for (std::size_t j = 0; j < n; ++j) {
      acc += x[j] * w[idx];
      idx += k;
      if (idx >= n)
        idx -= n;
    }
    out[k] = acc * scale;
  }
  return out;
}

Signal dft(const Signal &f) {
  return Signal(f.config(), unitary_dft(f.values(), -1));
}

Signal idft(const Signal &fhat) {
  return Signal(fhat.config(), unitary_dft(fhat.values(), +1));
}

Signal translate(const Signal &f, std::int64_t ell) {
  const GroupConfig &c = f.config();
  if (!in_L(c, ell))
    throw LatticeMembershipError(std::to_string(ell) +
                                 " is not in L = pZ_d with p=" +
                                 std::to_string(c.p));
  const auto d = static_cast<std::int64_t>(c.d);
  const auto shift = static_cast<std::size_t>(((ell % d) + d) % d);
  Signal out(c);
  for (std::size_t x = 0; x < c.d; ++x)
    out[(x + shift) % c.d] = f[x];
  return out;
}

Signal modulate(const Signal &f, std::int64_t beta) {
  const GroupConfig &c = f.config();
  if (!in_B(c, beta))
    throw LatticeMembershipError(std::to_string(beta) +
                                 " is not in B = rqZ_d with rq=" +
                                 std::to_string(c.r * c.q));
  const auto d = static_cast<std::int64_t>(c.d);
  Signal out(c);
  for (std::size_t x = 0; x < c.d; ++x)
    out[x] = character(d, static_cast<std::int64_t>(x), beta) * f[x];
  return out;
}

ZakGrid zak(const Signal &f) {
  const GroupConfig &c = f.config();
  const Signal fhat = dft(f);
  ZakGrid grid(c);
  std::vector<cplx> column(c.p);
  for (std::size_t omega = 0; omega < c.q; ++omega) {
    for (std::size_t k = 0; k < c.p; ++k)
      column[k] = fhat[omega + k * c.q];
    const std::vector<cplx> z = unitary_dft(column, -1);
    for (std::size_t ell = 0; ell < c.p; ++ell)
      grid.at(omega, ell) = z[ell];
  }
  return grid;
}

ZakGrid zak_time_domain(const Signal &f) {
  const GroupConfig &c = f.config();
  const auto d = static_cast<std::int64_t>(c.d);
  const auto q = static_cast<std::int64_t>(c.q);
  const double scale = 1.0 / std::sqrt(static_cast<double>(c.q));
  ZakGrid grid(c);
  for (std::size_t omega = 0; omega < c.q; ++omega) {
    const auto w = static_cast<std::int64_t>(omega);
    for (std::size_t ell = 0; ell < c.p; ++ell) {
      const auto l = static_cast<std::int64_t>(ell);
      cplx acc = 0.0;
      for (std::int64_t n = 0; n < q; ++n) {
        const auto x = static_cast<std::size_t>(
            ((n * static_cast<std::int64_t>(c.p) - l) % d + d) % d);
        acc += f[x] * unit_root(-n * w, q);
      }
      grid.at(omega, ell) = unit_root(l * w, d) * scale * acc;
    }
  }
  return grid;
}

FiberTensor helson(const Signal &f) {
  const GroupConfig &c = f.config();
  const ZakGrid grid = zak(f);
  FiberTensor t(c);
  for (std::size_t omega = 0; omega < c.q; ++omega)
    for (std::size_t tau = 0; tau < c.s; ++tau)
      for (std::size_t h = 0; h < c.r; ++h)
        t.at(omega, tau, h) = grid.at(omega, fiber_point(c, tau, h));
  return t;
}

Signal helson_inverse(const FiberTensor &fibers) {
  const GroupConfig &c = fibers.config();
  Signal fhat(c);
  std::vector<cplx> row(c.p);
  for (std::size_t omega = 0; omega < c.q; ++omega) {
    for (std::size_t tau = 0; tau < c.s; ++tau)
      for (std::size_t h = 0; h < c.r; ++h)
        row[fiber_point(c, tau, h)] = fibers.at(omega, tau, h);
    const std::vector<cplx> a = unitary_dft(row, +1);
    for (std::size_t k = 0; k < c.p; ++k)
      fhat[omega + k * c.q] = a[k];
  }
  return idft(fhat);
}

} // namespace tfa
