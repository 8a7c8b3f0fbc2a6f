#include "tfapprox/cli.hpp"

#include "tfapprox/approximation.hpp"
#include "tfapprox/errors.hpp"
#include "tfapprox/parallel.hpp"
#include "tfapprox/signal_io.hpp"
#include "tfapprox/validation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <limits>
#include <optional>
#include <ostream>

namespace tfa {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string input;
  std::string output_dir = ".";
  std::string generators;
  std::string manifest;
  std::string projections_dir;
  std::int64_t p = 0;
  std::int64_t s = 0;
  std::optional<std::int64_t> n;
  std::optional<std::uint64_t> seed;
  std::int64_t trials = 1000;
};

void apply_thread_env() {
  const char *env = std::getenv("TFAPPROX_THREADS");
  if (env == nullptr)
    return;
  std::size_t workers = 0;
  const std::string_view sv(env);
  const auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), workers);
  if (ec != std::errc() || ptr != sv.data() + sv.size())
    throw InvalidArgument("TFAPPROX_THREADS must be a non-negative integer");
  set_worker_count(workers);
}

DataSet load_data(const Options &o, GroupConfig &config) {
  const SignalFile file = read_signals(o.input);
  config = make_config(static_cast<std::int64_t>(file.d), o.p, o.s);
  return to_dataset(file, config);
}

std::size_t rank_in(std::optional<std::int64_t> n, std::size_t lo,
                    std::size_t hi, const char *message) {
  if (!n || *n < static_cast<std::int64_t>(lo) ||
      *n > static_cast<std::int64_t>(hi))
    throw InvalidRank(std::string(message) + " (n=" +
                      (n ? std::to_string(*n) : std::string("unset")) +
                      ", m=" + std::to_string(hi) + ")");
  return static_cast<std::size_t>(*n);
}

fs::path prepare_dir(const std::string &dir) {
  fs::path p(dir);
  fs::create_directories(p);
  return p;
}

int cmd_approx(const Options &o, std::ostream &out) {
  GroupConfig config;
  const DataSet data = load_data(o, config);
  const std::size_t n = rank_in(o.n, 1, data.size(), "n must satisfy 1 ≤ n ≤ m");
  const ApproxResult result = optimal_generators(data, n);

  bool sweep_ok = true;
  if (o.seed) {
    if (o.trials < 1)
      throw InvalidArgument("--trials must be at least 1");
    const auto reports = random_subspace_sweep(
        data, n, static_cast<std::size_t>(o.trials), *o.seed);
    sweep_ok = std::all_of(reports.begin(), reports.end(),
                           [](const OracleReport &r) { return r.pass; });
  }

  const fs::path dir = prepare_dir(o.output_dir);
  ResultManifest mf;
  mf.config = config;
  mf.m = data.size();
  mf.n = n;
  mf.error = result.error;
  mf.generators_path = "generators.csv";
  mf.eigenvalues_path = "eigenvalues.csv";
  mf.seed = o.seed;
  write_signals(dir / mf.generators_path, result.generators);
  write_eigenvalues(dir / mf.eigenvalues_path, result.eigenvalues);
  write_manifest(dir / "manifest.json", mf);

  out << format_error_value(result.error) << "\n";
  return sweep_ok ? kExitOk : kExitInternal;
}

int cmd_project(const Options &o, std::ostream &out) {
  std::vector<Signal> generators;
  GroupConfig config;
  if (!o.manifest.empty()) {
    ApproxResult loaded = load_result(o.manifest);
    config = loaded.config;
    generators = std::move(loaded.generators);
  } else {
    if (o.generators.empty())
      throw InvalidArgument("project needs --manifest or --generators");
    const SignalFile gens = read_signals(o.generators);
    config = make_config(static_cast<std::int64_t>(gens.d), o.p, o.s);
    generators = to_dataset(gens, config).signals();
  }
  const DataSet data = to_dataset(read_signals(o.input), config);
  const TFSubspace space(std::move(generators));
  const double error = approximation_error(data, space);

  if (!o.projections_dir.empty()) {
    std::vector<Signal> projections;
    for (const Signal &f : data.signals())
      projections.push_back(project(f, space));
    write_signals(prepare_dir(o.projections_dir) / "projections.csv",
                  projections);
  }
  out << format_error_value(error) << "\n";
  return kExitOk;
}

int cmd_zak(const Options &o, std::ostream &out) {
  GroupConfig config;
  const DataSet data = load_data(o, config);
  std::string csv = "signal,omega,ell,re,im\n";
  char buf[128];
  for (std::size_t j = 0; j < data.size(); ++j) {
    const ZakGrid grid = zak(data[j]);
    for (std::size_t omega = 0; omega < config.q; ++omega)
      for (std::size_t ell = 0; ell < config.p; ++ell) {
        const cplx z = grid.at(omega, ell);
        std::snprintf(buf, sizeof buf, "%zu,%zu,%zu,%.17g,%.17g\n", j, omega,
                      ell, z.real(), z.imag());
        csv += buf;
      }
  }
  const fs::path path = prepare_dir(o.output_dir) / "zak.csv";
  write_file_atomic(path, csv);
  out << path.string() << "\n";
  return kExitOk;
}

int cmd_spectrum(const Options &o, std::ostream &out) {
  GroupConfig config;
  const DataSet data = load_data(o, config);
  const EigenvalueField field = eigenvalue_field(data);
  write_eigenvalues(prepare_dir(o.output_dir) / "eigenvalues.csv", field);
  out << format_error_value(error_from_spectrum(field, 0)) << "\n";
  return kExitOk;
}

int cmd_curve(const Options &o, std::ostream &out) {
  GroupConfig config;
  const DataSet data = load_data(o, config);
  const std::size_t n_max =
      o.n ? rank_in(o.n, 0, data.size(), "n_max must satisfy 0 ≤ n ≤ m")
          : data.size();
  const auto curve = error_curve(data, n_max);
  const std::string csv = format_error_curve(curve);
  write_file_atomic(prepare_dir(o.output_dir) / "curve.csv", csv);
  out << csv;
  return kExitOk;
}

int cmd_validate(const Options &o, std::ostream &out) {
  GroupConfig config;
  const DataSet data = load_data(o, config);
  const std::size_t n = rank_in(o.n, 1, data.size(), "n must satisfy 1 ≤ n ≤ m");
  if (o.trials < 1)
    throw InvalidArgument("--trials must be at least 1");
  const std::uint64_t seed = o.seed.value_or(7);

  const auto fibers = fiber_oracle_reports(data, n);
  const auto sweep = random_subspace_sweep(
      data, n, static_cast<std::size_t>(o.trials), seed);

  const ApproxResult result = optimal_generators(data, n);
  const double direct = approximation_error(data, TFSubspace(result.generators));
  OracleReport consistency;
  consistency.case_name = "direct_vs_spectral";
  consistency.main_value = result.error;
  consistency.oracle_value = direct;
  consistency.abs_deviation = std::abs(direct - result.error);
  consistency.rel_deviation = consistency.abs_deviation / std::max(direct, 1e-300);
  consistency.tolerance = 1e-9 * (1.0 + direct);
  consistency.pass = consistency.abs_deviation <= consistency.tolerance;

  double min_sampled = std::numeric_limits<double>::infinity();
  for (const auto &r : sweep)
    min_sampled = std::min(min_sampled, r.oracle_value);
  const auto all_pass = [](const std::vector<OracleReport> &rs) {
    return std::all_of(rs.begin(), rs.end(),
                       [](const OracleReport &r) { return r.pass; });
  };
  const bool pass = all_pass(fibers) && all_pass(sweep) && consistency.pass;

  nlohmann::ordered_json j;
  j["seed"] = seed;
  j["trials"] = o.trials;
  j["n"] = n;
  j["optimal_error"] = direct;
  j["spectral_error"] = result.error;
  j["min_sampled_error"] = min_sampled;
  j["pass"] = pass;
  j["consistency"] = nlohmann::ordered_json::parse(
      format_reports(std::span<const OracleReport>(&consistency, 1)));
  j["fiber_reports"] = nlohmann::ordered_json::parse(format_reports(fibers));
  j["sweep_reports"] = nlohmann::ordered_json::parse(format_reports(sweep));
  write_file_atomic(prepare_dir(o.output_dir) / "validation.json",
                    j.dump(2) + "\n");

  out << "optimal " << format_error_value(direct) << "\n"
      << "min_sampled " << format_error_value(min_sampled) << "\n"
      << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kExitOk : kExitInternal;
}

void add_data_flags(CLI::App *cmd, Options &o) {
  cmd->add_option("--input", o.input, "signal file")->required();
  cmd->add_option("--p", o.p, "generator of L, d = p q")->required();
  cmd->add_option("--s", o.s, "size of B, p = r s")->required();
  cmd->add_option("--output-dir", o.output_dir, "directory for result files");
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Optimal time-frequency invariant approximation on Z_d",
               args.empty() ? "tfapprox" : args.front()};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Options o;
  auto *approx = app.add_subcommand("approx", "optimal generators and error");
  add_data_flags(approx, o);
  approx->add_option("--n", o.n, "number of generators")->required();
  approx->add_option("--seed", o.seed, "run a seeded random-subspace check");
  approx->add_option("--trials", o.trials, "random subspaces to sample");

  auto *proj = app.add_subcommand("project", "error of the data against given generators");
  proj->add_option("--input", o.input, "signal file")->required();
  proj->add_option("--manifest", o.manifest, "manifest written by approx");
  proj->add_option("--generators", o.generators, "generator file");
  proj->add_option("--p", o.p, "generator of L, d = p q");
  proj->add_option("--s", o.s, "size of B, p = r s");
  proj->add_option("--output-dir", o.projections_dir, "directory for projections.csv");

  auto *zk = app.add_subcommand("zak", "Zak transform of every signal");
  add_data_flags(zk, o);

  auto *spec = app.add_subcommand("spectrum", "per-fiber eigenvalue field");
  add_data_flags(spec, o);

  auto *curve = app.add_subcommand("curve", "optimal error for n = 0..n_max");
  add_data_flags(curve, o);
  curve->add_option("--n", o.n, "largest n (default m)");

  auto *val = app.add_subcommand("validate", "run the independent oracles");
  add_data_flags(val, o);
  val->add_option("--n", o.n, "number of generators")->required();
  val->add_option("--seed", o.seed, "random subspace seed (default 7)");
  val->add_option("--trials", o.trials, "random subspaces to sample");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty())
    reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::Success &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    apply_thread_env();
    if (*approx)
      return cmd_approx(o, out);
    if (*proj)
      return cmd_project(o, out);
    if (*zk)
      return cmd_zak(o, out);
    if (*spec)
      return cmd_spectrum(o, out);
    if (*curve)
      return cmd_curve(o, out);
    return cmd_validate(o, out);
  } catch (const ConvergenceFailure &e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

} // namespace tfa
