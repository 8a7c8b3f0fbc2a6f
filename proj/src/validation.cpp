#include "tfapprox/validation.hpp"

#include "tfapprox/errors.hpp"
#include "tfapprox/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tfa {

namespace {

constexpr int kMaxIterations = 10000;
constexpr double kResidualTolerance = 1e-13;
constexpr double kFiberTolerance = 1e-9;
constexpr double kSweepTolerance = 1e-9;

using Dense = std::vector<cplx>;

void multiply(const Dense &a, std::size_t m, const std::vector<cplx> &v,
              std::vector<cplx> &out) {
  for (std::size_t i = 0; i < m; ++i) {
    cplx acc = 0.0;
    for (std::size_t j = 0; j < m; ++j)
      acc += a[i * m + j] * v[j];
    out[i] = acc;
  }
}

double vector_norm(const std::vector<cplx> &v) {
  double acc = 0.0;
  for (const cplx &c : v)
    acc += std::norm(c);
  return std::sqrt(acc);
}

OracleReport make_report(std::string name, double main_value,
                         double oracle_value, double tolerance) {
  OracleReport r;
  r.case_name = std::move(name);
  r.main_value = main_value;
  r.oracle_value = oracle_value;
  r.abs_deviation = std::abs(main_value - oracle_value);
  r.rel_deviation =
      r.abs_deviation / std::max(std::abs(oracle_value), 1e-300);
  r.tolerance = tolerance;
  r.pass = r.abs_deviation <= tolerance;
  return r;
}

} // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t t) {
  // splitmix64 finalizer over the pair
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (t + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Signal random_signal(const GroupConfig &config, std::mt19937_64 &rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  std::vector<cplx> values(config.d);
  for (cplx &v : values) {
    const double re = normal(rng);
    const double im = normal(rng);
    v = {re, im};
  }
  return Signal(config, std::move(values));
}

std::vector<double> power_iteration_eigs(const HermitianMatrix &g,
                                         std::size_t count,
                                         std::uint64_t seed) {
  const std::size_t m = g.size();
  if (count > m)
    throw InvalidRank("cannot extract " + std::to_string(count) +
                      " eigenvalues from an order-" + std::to_string(m) +
                      " matrix");
  Dense a(g.entries().begin(), g.entries().end());
  const double tol = kResidualTolerance * std::max(1.0, g.frobenius_norm());

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> eigenvalues;
  eigenvalues.reserve(count);
  std::vector<cplx> v(m), w(m);

  for (std::size_t e = 0; e < count; ++e) {
    for (cplx &c : v) {
      const double re = normal(rng);
      const double im = normal(rng);
      c = {re, im};
    }
    const double n0 = vector_norm(v);
    for (cplx &c : v)
      c /= n0;

    double mu = 0.0;
    bool converged = false;
    for (int it = 0; it < kMaxIterations; ++it) {
      multiply(a, m, v, w);
      cplx rq = 0.0;
      for (std::size_t i = 0; i < m; ++i)
        rq += std::conj(v[i]) * w[i];
      mu = rq.real();
      double residual = 0.0;
      for (std::size_t i = 0; i < m; ++i)
        residual += std::norm(w[i] - mu * v[i]);
      if (std::sqrt(residual) <= tol) {
        converged = true;
        break;
      }
      const double wn = vector_norm(w);
      for (std::size_t i = 0; i < m; ++i)
        v[i] = w[i] / wn;
    }
    if (!converged)
      throw ConvergenceFailure("power iteration did not converge for eigenvalue " +
                               std::to_string(e + 1) + " within " +
                               std::to_string(kMaxIterations) + " iterations");
    eigenvalues.push_back(mu);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        a[i * m + j] -= mu * v[i] * std::conj(v[j]);
  }
  return eigenvalues;
}

double fiber_best_rank_error(std::span<const std::vector<cplx>> fibers,
                             std::size_t n) {
  const std::size_t m = fibers.size();
  if (n >= m)
    return 0.0;
  HermitianMatrix g(m);
  double trace = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      cplx acc = 0.0;
      for (std::size_t h = 0; h < fibers[i].size(); ++h)
        acc += fibers[i][h] * std::conj(fibers[j][h]);
      g(i, j) = acc;
    }
    trace += g(i, i).real();
  }
  double kept = 0.0;
  for (double lambda : power_iteration_eigs(g, n))
    kept += lambda;
  return std::max(0.0, trace - kept);
}

std::vector<OracleReport> fiber_oracle_reports(const DataSet &data,
                                               std::size_t n) {
  const GroupConfig &c = data.config();
  const EigenvalueField field = eigenvalue_field(data);
  std::vector<FiberTensor> tensors;
  for (const Signal &f : data.signals())
    tensors.push_back(helson(f));

  std::vector<OracleReport> reports(c.q * c.s);
  parallel_for(reports.size(), [&](std::size_t k) {
    const std::size_t omega = k / c.s;
    const std::size_t tau = k % c.s;
    double main_value = 0.0;
    for (std::size_t i = n; i < data.size(); ++i)
      main_value += field.at(i, omega, tau);
    std::vector<std::vector<cplx>> fibers;
    for (const FiberTensor &t : tensors) {
      const auto f = t.fiber(omega, tau);
      fibers.emplace_back(f.begin(), f.end());
    }
    reports[k] = make_report("fiber(" + std::to_string(omega) + "," +
                                 std::to_string(tau) + ")",
                             main_value, fiber_best_rank_error(fibers, n),
                             kFiberTolerance);
  });
  return reports;
}

std::vector<OracleReport> random_subspace_sweep(const DataSet &data,
                                                std::size_t n,
                                                std::size_t trials,
                                                std::uint64_t seed) {
  if (trials < 1)
    throw InvalidArgument("trials must be at least 1");
  const ApproxResult optimal = optimal_generators(data, n);
  const double optimal_error =
      approximation_error(data, TFSubspace(optimal.generators));

  std::vector<OracleReport> reports(trials);
  parallel_for(trials, [&](std::size_t t) {
    std::mt19937_64 rng(derive_seed(seed, t));
    std::vector<Signal> generators;
    generators.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      generators.push_back(random_signal(data.config(), rng));
    const double sampled =
        approximation_error(data, TFSubspace(std::move(generators)));
    OracleReport r = make_report("trial " + std::to_string(t), optimal_error,
                                 sampled, kSweepTolerance);
    r.pass = optimal_error <= sampled + kSweepTolerance;
    reports[t] = std::move(r);
  });
  return reports;
}

} // namespace tfa
