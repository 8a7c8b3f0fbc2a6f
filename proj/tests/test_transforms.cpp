#include "support.hpp"

#include "tfapprox/errors.hpp"
#include "tfapprox/transforms.hpp"

#include <doctest.h>

using namespace tfa;
using test::max_abs_diff;

namespace {

Signal make(const GroupConfig &c, std::vector<cplx> v) {
  return Signal(c, std::move(v));
}

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

} // namespace

TEST_CASE("dft examples") {
  const GroupConfig c = make_config(4, 2, 2);
  const cplx i(0.0, 1.0);
  CHECK(max_abs_diff(dft(Signal::delta(c, 0)).values(),
                     make(c, {0.5, 0.5, 0.5, 0.5}).values()) < 1e-15);
  CHECK(max_abs_diff(dft(make(c, {1, 1, 1, 1})).values(),
                     make(c, {2, 0, 0, 0}).values()) < 1e-15);
  CHECK(max_abs_diff(dft(make(c, {1, i, -1.0, -i})).values(),
                     make(c, {0, 2, 0, 0}).values()) < 1e-15);
}

TEST_CASE("idft examples") {
  const GroupConfig c = make_config(4, 2, 2);
  const Signal d0 = Signal::delta(c, 0);
  CHECK(max_abs_diff(idft(dft(d0)).values(), d0.values()) < 1e-15);
  CHECK(max_abs_diff(idft(make(c, {2, 0, 0, 0})).values(),
                     make(c, {1, 1, 1, 1}).values()) < 1e-15);
  CHECK(max_abs_diff(idft(Signal(c)).values(), Signal(c).values()) == 0.0);
}

TEST_CASE("dft matches the defining sum and is unitary") {
  std::mt19937_64 rng(11);
  for (std::int64_t d : {1, 2, 7, 12, 60}) {
    const GroupConfig c = make_config(d, 1, 1);
    const Signal f = test::gaussian_signal(c, rng);
    const std::vector<cplx> x(f.values().begin(), f.values().end());
    CHECK(max_abs_diff(dft(f).values(), test::reference_dft(x)) < 1e-12);
    CHECK(std::abs(dft(f).squared_norm() - f.squared_norm()) <=
          1e-12 * f.squared_norm());
    CHECK(max_abs_diff(idft(dft(f)).values(), f.values()) <= 1e-12 * f.norm());
  }
}

TEST_CASE("translate") {
  const GroupConfig c = make_config(12, 6, 3);
  CHECK(max_abs_diff(translate(Signal::delta(c, 0), 6).values(),
                     Signal::delta(c, 6).values()) == 0.0);
  std::mt19937_64 rng(3);
  const Signal f = test::gaussian_signal(c, rng);
  CHECK(max_abs_diff(translate(f, 0).values(), f.values()) == 0.0);
  CHECK_THROWS_AS(translate(Signal::delta(c, 0), 1), LatticeMembershipError);
  CHECK(max_abs_diff(translate(f, -6).values(), translate(f, 6).values()) ==
        0.0);
}

TEST_CASE("modulate") {
  const GroupConfig c = make_config(4, 2, 2);
  const Signal ones = make(c, {1, 1, 1, 1});
  CHECK(max_abs_diff(modulate(ones, 0).values(), ones.values()) == 0.0);
  CHECK(max_abs_diff(modulate(Signal::delta(c, 0), 2).values(),
                     Signal::delta(c, 0).values()) == 0.0);
  CHECK(max_abs_diff(modulate(ones, 2).values(),
                     make(c, {1, -1, 1, -1}).values()) < 1e-15);
  CHECK_THROWS_AS(modulate(ones, 1), LatticeMembershipError);
}

TEST_CASE("zak of delta in config(4,2,2)") {
  const GroupConfig c = make_config(4, 2, 2);
  const Signal d0 = Signal::delta(c, 0);
  // fhat = 1/2 everywhere; entry = (1/sqrt 2)(1/2)(1 + (-1)^l)
  const std::vector<cplx> expected = {kInvSqrt2, 0.0, kInvSqrt2, 0.0};
  CHECK(max_abs_diff(test::reference_zak(d0), expected) < 1e-15);
  CHECK(max_abs_diff(zak(d0).values, expected) < 1e-15);
  CHECK(max_abs_diff(zak_time_domain(d0).values, expected) < 1e-15);
  CHECK(max_abs_diff(zak(Signal(c)).values, std::vector<cplx>(4)) == 0.0);
  CHECK(max_abs_diff(zak_time_domain(Signal(c)).values,
                     std::vector<cplx>(4)) == 0.0);
}

TEST_CASE("zak agrees with the reference sum and preserves energy") {
  std::mt19937_64 rng(5);
  for (const auto &[d, p, s] : test::kConfigs) {
    const GroupConfig c = make_config(d, p, s);
    for (int trial = 0; trial < 5; ++trial) {
      const Signal f = test::gaussian_signal(c, rng);
      const ZakGrid z = zak(f);
      CHECK(max_abs_diff(z.values, test::reference_zak(f)) <= 1e-10 * f.norm());
      double energy = 0.0;
      for (const cplx &v : z.values)
        energy += std::norm(v);
      CHECK(std::abs(energy - f.squared_norm()) <= 1e-10 * f.squared_norm());
    }
  }
}

TEST_CASE("zak routes agree") {
  std::mt19937_64 rng(17);
  for (const auto &[d, p, s] : test::kConfigs) {
    const GroupConfig c = make_config(d, p, s);
    for (int trial = 0; trial < 10; ++trial) {
      const Signal f = test::gaussian_signal(c, rng);
      CHECK(max_abs_diff(zak(f).values, zak_time_domain(f).values) <=
            1e-10 * std::max(1.0, f.norm()));
    }
  }
}

TEST_CASE("helson examples in config(4,2,2)") {
  const GroupConfig c = make_config(4, 2, 2);
  const FiberTensor h0 = helson(Signal::delta(c, 0));
  for (std::size_t w = 0; w < 2; ++w) {
    CHECK(std::abs(h0.at(w, 0, 0) - kInvSqrt2) < 1e-15);
    CHECK(std::abs(h0.at(w, 1, 0)) < 1e-15);
  }
  CHECK(std::abs(h0.squared_norm() - 1.0) < 1e-15);
  CHECK(helson(Signal(c)).squared_norm() == 0.0);

  const FiberTensor h2 = helson(translate(Signal::delta(c, 0), 2));
  for (std::size_t w = 0; w < 2; ++w)
    for (std::size_t tau = 0; tau < 2; ++tau) {
      const double sign = w == 0 ? 1.0 : -1.0;
      CHECK(std::abs(h2.at(w, tau, 0) - sign * h0.at(w, tau, 0)) < 1e-15);
    }
}

TEST_CASE("helson_inverse examples") {
  const GroupConfig c = make_config(4, 2, 2);
  CHECK(helson_inverse(FiberTensor(c)).squared_norm() == 0.0);

  // e_(0,0,0) pulls back to (delta_0 + delta_2)/sqrt 2.
  const FiberTensor e = FiberTensor::unit(c, 0, 0, 0);
  const Signal f = helson_inverse(e);
  const std::vector<cplx> expected = {kInvSqrt2, 0.0, kInvSqrt2, 0.0};
  CHECK(max_abs_diff(f.values(), expected) < 1e-15);
  CHECK(max_abs_diff(helson(f).values(), e.values()) < 1e-15);

  const GroupConfig big = make_config(12, 6, 3);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const Signal g = test::gaussian_signal(big, rng);
    CHECK(max_abs_diff(helson_inverse(helson(g)).values(), g.values()) <=
          1e-10 * g.norm());
  }
}

TEST_CASE("every unit tensor round-trips") {
  for (const auto &[d, p, s] : test::kConfigs) {
    if (d > 60)
      continue;
    const GroupConfig c = make_config(d, p, s);
    for (std::size_t w = 0; w < c.q; ++w)
      for (std::size_t tau = 0; tau < c.s; ++tau)
        for (std::size_t h = 0; h < c.r; ++h) {
          const FiberTensor e = FiberTensor::unit(c, w, tau, h);
          const Signal f = helson_inverse(e);
          CHECK(std::abs(f.squared_norm() - 1.0) < 1e-12);
          CHECK(max_abs_diff(helson(f).values(), e.values()) < 1e-12);
        }
  }
}

TEST_CASE("unitarity and polarization") {
  std::mt19937_64 rng(29);
  for (const auto &[d, p, s] : test::kConfigs) {
    const GroupConfig c = make_config(d, p, s);
    for (int trial = 0; trial < 5; ++trial) {
      const Signal f = test::gaussian_signal(c, rng);
      const Signal g = test::gaussian_signal(c, rng);
      const FiberTensor hf = helson(f);
      const FiberTensor hg = helson(g);
      CHECK(std::abs(hf.squared_norm() - f.squared_norm()) <=
            1e-10 * f.squared_norm());
      CHECK(std::abs(inner(hf, hg) - inner(f, g)) <= 1e-10 * f.norm() * g.norm());
    }
  }
}

TEST_CASE("intertwining with the characters of Gamma") {
  std::mt19937_64 rng(31);
  for (const auto &cfg : {std::array<std::int64_t, 3>{12, 6, 3},
                          std::array<std::int64_t, 3>{24, 4, 2},
                          std::array<std::int64_t, 3>{12, 12, 12},
                          std::array<std::int64_t, 3>{12, 1, 1}}) {
    const GroupConfig c = make_config(cfg[0], cfg[1], cfg[2]);
    const auto e = lattice_elements(c);
    for (int trial = 0; trial < 3; ++trial) {
      const Signal f = test::gaussian_signal(c, rng);
      const FiberTensor hf = helson(f);
      for (auto ell : e.L)
        for (auto beta : e.B) {
          const FiberTensor hg =
              helson(translate(modulate(f, std::int64_t(beta)), std::int64_t(ell)));
          double worst = 0.0;
          for (std::size_t w = 0; w < c.q; ++w)
            for (std::size_t tau = 0; tau < c.s; ++tau) {
              const cplx factor = std::conj(gamma_character(
                  c, std::int64_t(ell), std::int64_t(beta), w, tau));
              for (std::size_t h = 0; h < c.r; ++h)
                worst = std::max(worst, std::abs(hg.at(w, tau, h) -
                                                 factor * hf.at(w, tau, h)));
            }
          CHECK(worst <= 1e-10 * std::max(1.0, f.norm()));
        }
    }
  }
}

TEST_CASE("transforms are linear") {
  std::mt19937_64 rng(37);
  const GroupConfig c = make_config(24, 4, 2);
  const Signal f = test::gaussian_signal(c, rng);
  const Signal g = test::gaussian_signal(c, rng);
  const cplx a(0.3, -1.2), b(-2.0, 0.5);
  Signal mix(c);
  for (std::size_t x = 0; x < c.d; ++x)
    mix[x] = a * f[x] + b * g[x];
  const FiberTensor hf = helson(f), hg = helson(g), hm = helson(mix);
  double worst = 0.0;
  for (std::size_t i = 0; i < hm.values().size(); ++i)
    worst = std::max(worst,
                     std::abs(hm.values()[i] - (a * hf.values()[i] + b * hg.values()[i])));
  CHECK(worst < 1e-12 * (f.norm() + g.norm()) * 4.0);
  const ZakGrid zf = zak_time_domain(f), zg = zak_time_domain(g),
                zm = zak_time_domain(mix);
  worst = 0.0;
  for (std::size_t i = 0; i < zm.values.size(); ++i)
    worst = std::max(worst, std::abs(zm.values[i] - (a * zf.values[i] + b * zg.values[i])));
  CHECK(worst < 1e-12 * (f.norm() + g.norm()) * 4.0);
}

TEST_CASE("shape errors") {
  const GroupConfig c = make_config(12, 6, 3);
  CHECK_THROWS_AS(Signal(c, std::vector<cplx>(5)), DimensionMismatch);
  CHECK_THROWS_AS(FiberTensor(c, std::vector<cplx>(5)), DimensionMismatch);
  CHECK_THROWS_AS(FiberTensor::unit(c, 2, 0, 0), DimensionMismatch);
  CHECK_THROWS_AS(inner(Signal(c), Signal(make_config(12, 4, 2))),
                  ConfigMismatch);
}
