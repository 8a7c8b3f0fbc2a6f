#include "tfapprox/approximation.hpp"

#include "tfapprox/errors.hpp"
#include "tfapprox/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace tfa {

namespace {

constexpr double kZeroEigenvalue = 1e-12;

std::vector<FiberTensor> helson_all(const std::vector<Signal> &signals) {
  std::vector<FiberTensor> out;
  out.reserve(signals.size());
  for (const Signal &f : signals)
    out.push_back(helson(f));
  return out;
}

std::vector<std::vector<cplx>> gather(const std::vector<FiberTensor> &tensors,
                                      std::size_t omega, std::size_t tau) {
  std::vector<std::vector<cplx>> fibers;
  fibers.reserve(tensors.size());
  for (const FiberTensor &t : tensors) {
    const auto f = t.fiber(omega, tau);
    fibers.emplace_back(f.begin(), f.end());
  }
  return fibers;
}

// One eigendecomposition per grid point, indexed omega * s + tau.
std::vector<EigenDecomposition>
fiber_spectra(const std::vector<FiberTensor> &tensors, const GroupConfig &c) {
  std::vector<EigenDecomposition> spectra(c.q * c.s);
  parallel_for(spectra.size(), [&](std::size_t k) {
    const auto fibers = gather(tensors, k / c.s, k % c.s);
    spectra[k] = eigh(gramian(fibers));
  });
  return spectra;
}

EigenvalueField to_field(const std::vector<EigenDecomposition> &spectra,
                         const GroupConfig &c, std::size_t m) {
  EigenvalueField field(m, c.q, c.s);
  for (std::size_t omega = 0; omega < c.q; ++omega)
    for (std::size_t tau = 0; tau < c.s; ++tau)
      for (std::size_t i = 0; i < m; ++i)
        field.at(i, omega, tau) = spectra[omega * c.s + tau].values[i];
  return field;
}

void require_config(const GroupConfig &expected, const GroupConfig &actual) {
  if (!(expected == actual))
    throw ConfigMismatch("signal and subspace use different group configurations");
}

} // namespace

DataSet::DataSet(std::vector<Signal> signals) : signals_(std::move(signals)) {
  if (signals_.empty())
    throw InvalidArgument("a data set needs at least one signal");
  for (const Signal &f : signals_)
    if (!(f.config() == signals_.front().config()))
      throw ConfigMismatch("data signals use different group configurations");
}

double DataSet::energy() const {
  double acc = 0.0;
  for (const Signal &f : signals_)
    acc += f.squared_norm();
  return acc;
}

TFSubspace::TFSubspace(std::vector<Signal> generators)
    : generators_(std::move(generators)) {
  if (generators_.empty())
    throw InvalidArgument("a subspace needs at least one generator");
  for (const Signal &g : generators_)
    if (!(g.config() == generators_.front().config()))
      throw ConfigMismatch("generators use different group configurations");
  fibers_ = helson_all(generators_);
  const GroupConfig &c = config();
  double largest_trace = 0.0;
  for (std::size_t omega = 0; omega < c.q; ++omega)
    for (std::size_t tau = 0; tau < c.s; ++tau) {
      double trace = 0.0;
      for (const FiberTensor &t : fibers_)
        for (const cplx &x : t.fiber(omega, tau))
          trace += std::norm(x);
      largest_trace = std::max(largest_trace, trace);
    }
  zero_floor_ = kZeroEigenvalue * largest_trace;
}

std::vector<std::vector<cplx>> TFSubspace::fiber_basis(std::size_t omega,
                                                       std::size_t tau) const {
  return gather(fibers_, omega, tau);
}

EigenvalueField eigenvalue_field(const DataSet &data) {
  const auto tensors = helson_all(data.signals());
  return to_field(fiber_spectra(tensors, data.config()), data.config(),
                  data.size());
}

ApproxResult optimal_generators(const DataSet &data, std::size_t n) {
  const std::size_t m = data.size();
  if (n < 1 || n > m)
    throw InvalidRank("n must satisfy 1 ≤ n ≤ m (n=" + std::to_string(n) +
                      ", m=" + std::to_string(m) + ")");
  const GroupConfig &c = data.config();
  const auto tensors = helson_all(data.signals());
  const auto spectra = fiber_spectra(tensors, c);

  double global_max = 0.0;
  for (const auto &ed : spectra)
    global_max = std::max(global_max, ed.values.front());
  const double zero_level = kZeroEigenvalue * std::max(global_max, 1.0);

  std::vector<FiberTensor> q_tensors(n, FiberTensor(c));
  parallel_for(spectra.size(), [&](std::size_t k) {
    const std::size_t omega = k / c.s;
    const std::size_t tau = k % c.s;
    const EigenDecomposition &ed = spectra[k];
    for (std::size_t i = 0; i < n; ++i) {
      const double lambda = ed.values[i];
      if (lambda <= zero_level)
        continue;
      const double sigma = 1.0 / std::sqrt(lambda);
      auto out = q_tensors[i].fiber(omega, tau);
      for (std::size_t j = 0; j < m; ++j) {
        const cplx w = sigma * ed.vectors[i][j];
        const auto fj = tensors[j].fiber(omega, tau);
        for (std::size_t h = 0; h < c.r; ++h)
          out[h] += w * fj[h];
      }
    }
  });

  ApproxResult result;
  result.config = c;
  result.m = m;
  result.n = n;
  result.generators.reserve(n);
  for (const FiberTensor &t : q_tensors)
    result.generators.push_back(helson_inverse(t));
  result.eigenvalues = to_field(spectra, c, m);
  result.error = error_from_spectrum(result.eigenvalues, n);
  return result;
}

std::vector<cplx> fiber_projection(std::span<const cplx> v,
                                   std::span<const std::vector<cplx>> basis,
                                   double zero_floor) {
  const std::size_t r = v.size();
  std::vector<cplx> out(r);
  for (const auto &b : basis)
    if (b.size() != r)
      throw DimensionMismatch("basis vector length " + std::to_string(b.size()) +
                              " does not match " + std::to_string(r));
  if (basis.empty())
    return out;

  // With G(i,j) = <b_i, b_j>, a row eigenvector y of G is a column
  // eigenvector of the normal matrix B^H B, so
  //   (B^H B)^+ = sum_k y_k^T conj(y_k) / lambda_k.
  const EigenDecomposition ed = eigh(gramian(basis));
  const double lambda_max = ed.values.front();
  const double cutoff = std::max(kZeroEigenvalue * lambda_max, zero_floor);
  if (lambda_max <= cutoff)
    return out;

  const std::size_t k = basis.size();
  std::vector<cplx> rhs(k); // (B^H v)_a = <v, b_a>
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t h = 0; h < r; ++h)
      rhs[a] += v[h] * std::conj(basis[a][h]);

  std::vector<cplx> coeff(k);
  for (std::size_t e = 0; e < k; ++e) {
    if (ed.values[e] <= cutoff)
      break;
    cplx dot = 0.0;
    for (std::size_t a = 0; a < k; ++a)
      dot += std::conj(ed.vectors[e][a]) * rhs[a];
    dot /= ed.values[e];
    for (std::size_t a = 0; a < k; ++a)
      coeff[a] += ed.vectors[e][a] * dot;
  }

  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t h = 0; h < r; ++h)
      out[h] += coeff[a] * basis[a][h];
  return out;
}

Signal project(const Signal &f, const TFSubspace &space) {
  require_config(space.config(), f.config());
  const GroupConfig &c = f.config();
  const FiberTensor hf = helson(f);
  FiberTensor projected(c);
  for (std::size_t omega = 0; omega < c.q; ++omega) {
    for (std::size_t tau = 0; tau < c.s; ++tau) {
      const auto p = fiber_projection(hf.fiber(omega, tau),
                                      space.fiber_basis(omega, tau),
                                      space.zero_floor());
      std::copy(p.begin(), p.end(), projected.fiber(omega, tau).begin());
    }
  }
  return helson_inverse(projected);
}

double approximation_error(const DataSet &data, const TFSubspace &space) {
  require_config(space.config(), data.config());
  double acc = 0.0;
  for (const Signal &f : data.signals()) {
    const Signal pf = project(f, space);
    for (std::size_t x = 0; x < f.size(); ++x)
      acc += std::norm(f[x] - pf[x]);
  }
  return acc;
}

double fiberwise_error(const DataSet &data, const TFSubspace &space) {
  require_config(space.config(), data.config());
  const GroupConfig &c = data.config();
  const auto tensors = helson_all(data.signals());
  double acc = 0.0;
  for (std::size_t omega = 0; omega < c.q; ++omega) {
    for (std::size_t tau = 0; tau < c.s; ++tau) {
      const auto basis = space.fiber_basis(omega, tau);
      for (const FiberTensor &t : tensors) {
        const auto v = t.fiber(omega, tau);
        const auto p = fiber_projection(v, basis, space.zero_floor());
        for (std::size_t h = 0; h < c.r; ++h)
          acc += std::norm(v[h] - p[h]);
      }
    }
  }
  return acc;
}

double error_from_spectrum(const EigenvalueField &eigenvalues, std::size_t n) {
  if (n > eigenvalues.m())
    throw InvalidRank("n must satisfy 0 ≤ n ≤ m (n=" + std::to_string(n) +
                      ", m=" + std::to_string(eigenvalues.m()) + ")");
  double acc = 0.0;
  for (std::size_t omega = 0; omega < eigenvalues.q(); ++omega)
    for (std::size_t tau = 0; tau < eigenvalues.s(); ++tau)
      for (std::size_t i = n; i < eigenvalues.m(); ++i)
        acc += eigenvalues.at(i, omega, tau);
  return acc;
}

std::vector<ErrorCurvePoint> error_curve(const DataSet &data,
                                         std::size_t n_max) {
  if (n_max > data.size())
    throw InvalidRank("n_max must not exceed m (n_max=" +
                      std::to_string(n_max) +
                      ", m=" + std::to_string(data.size()) + ")");
  const EigenvalueField field = eigenvalue_field(data);
  std::vector<ErrorCurvePoint> curve;
  curve.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n)
    curve.push_back({n, error_from_spectrum(field, n)});
  return curve;
}

} // namespace tfa
