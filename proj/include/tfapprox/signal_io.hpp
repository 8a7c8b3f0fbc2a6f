#pragma once

// Text formats used by the command line tool.
//
// Signal file (UTF-8 CSV):
//   d=<int>,m=<int>
//   re,im            <- m*d rows, signals concatenated in order
// Generator files use the same layout with m = n.
//
// Eigenvalue field (CSV): header "i,omega,tau,lambda", i is the 1-based
// eigenvalue rank, rows ordered by i, then omega, then tau.
//
// Manifest (JSON): keys config, m, n, error, generators_path,
// eigenvalues_path, seed, version. Paths are relative to the manifest.

#include "tfapprox/approximation.hpp"
#include "tfapprox/group_lattice.hpp"
#include "tfapprox/transforms.hpp"
#include "tfapprox/validation.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tfa {

inline constexpr const char *kToolVersion = "0.1.0";

struct SignalFile {
  std::size_t d = 0;
  std::vector<std::vector<cplx>> signals;
};

SignalFile parse_signals(std::istream &in);
SignalFile read_signals(const std::filesystem::path &path);

/// Binds raw samples to a lattice configuration; config.d must equal file.d.
DataSet to_dataset(const SignalFile &file, const GroupConfig &config);

std::string format_signals(std::span<const Signal> signals);
void write_signals(const std::filesystem::path &path,
                   std::span<const Signal> signals);

std::string format_eigenvalues(const EigenvalueField &field);
void write_eigenvalues(const std::filesystem::path &path,
                       const EigenvalueField &field);
EigenvalueField read_eigenvalues(const std::filesystem::path &path,
                                 std::size_t m, std::size_t q, std::size_t s);

std::string format_error_curve(std::span<const ErrorCurvePoint> curve);

struct ResultManifest {
  GroupConfig config;
  std::size_t m = 0;
  std::size_t n = 0;
  double error = 0.0;
  std::string generators_path;
  std::string eigenvalues_path;
  std::optional<std::uint64_t> seed;
  std::string version = kToolVersion;
};

std::string format_manifest(const ResultManifest &manifest);
void write_manifest(const std::filesystem::path &path,
                    const ResultManifest &manifest);
ResultManifest read_manifest(const std::filesystem::path &path);

/// Reloads the generators and eigenvalue field a manifest points to,
/// checking their dimensions against the recorded configuration.
ApproxResult load_result(const std::filesystem::path &manifest_path);

std::string format_reports(std::span<const OracleReport> reports);

/// Writes to a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path &path,
                       const std::string &contents);

/// Scientific notation with 12 digits after the point and a bare exponent,
/// e.g. 0.000000000000e0 or 1.250000000000e-3.
std::string format_error_value(double value);

} // namespace tfa
