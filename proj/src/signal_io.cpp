#include "tfapprox/signal_io.hpp"

#include "tfapprox/errors.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>
#include <system_error>

namespace tfa {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

bool parse_double(std::string_view token, double &out) {
  token = trim(token);
  if (!token.empty() && token.front() == '+')
    token.remove_prefix(1);
  if (token.empty())
    return false;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size() &&
         std::isfinite(out);
}

bool parse_size(std::string_view token, std::size_t &out) {
  token = trim(token);
  if (token.empty())
    return false;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

// Splits "a,b,..." into exactly `count` fields.
bool split(std::string_view line, std::size_t count,
           std::vector<std::string_view> &fields) {
  fields.clear();
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields.size() == count;
}

bool parse_key(std::string_view field, std::string_view key,
               std::size_t &out) {
  field = trim(field);
  if (field.size() <= key.size() + 1 || field.substr(0, key.size()) != key ||
      field[key.size()] != '=')
    return false;
  return parse_size(field.substr(key.size() + 1), out);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ifstream open_input(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw InvalidArgument("cannot open " + path.string());
  return in;
}

} // namespace

SignalFile parse_signals(std::istream &in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line))
    throw ParseError(1, "missing header 'd=<int>,m=<int>'");

  std::vector<std::string_view> fields;
  std::size_t d = 0;
  std::size_t m = 0;
  if (!split(trim(line), 2, fields) || !parse_key(fields[0], "d", d) ||
      !parse_key(fields[1], "m", m))
    throw ParseError(1, "malformed header, expected 'd=<int>,m=<int>'");
  if (d == 0 || m == 0)
    throw ParseError(1, "header requires d >= 1 and m >= 1");

  SignalFile file;
  file.d = d;
  file.signals.assign(m, std::vector<cplx>(d));
  const std::size_t expected = m * d;
  std::size_t rows = 0;
  bool saw_blank = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty()) {
      saw_blank = true;
      continue;
    }
    if (saw_blank)
      throw ParseError(line_no, "data row after a blank line");
    if (rows == expected)
      throw LengthMismatch("more than the declared m*d=" +
                           std::to_string(expected) + " sample rows");
    double re = 0.0;
    double im = 0.0;
    if (!split(body, 2, fields) || !parse_double(fields[0], re) ||
        !parse_double(fields[1], im))
      throw ParseError(line_no, "expected 're,im' with finite decimals, got '" +
                                    std::string(body) + "'");
    file.signals[rows / d][rows % d] = {re, im};
    ++rows;
  }
  if (rows != expected)
    throw LengthMismatch("expected m*d=" + std::to_string(expected) +
                         " sample rows, found " + std::to_string(rows));
  return file;
}

SignalFile read_signals(const std::filesystem::path &path) {
  std::ifstream in = open_input(path);
  return parse_signals(in);
}

DataSet to_dataset(const SignalFile &file, const GroupConfig &config) {
  if (file.d != config.d)
    throw ConfigMismatch("signal length " + std::to_string(file.d) +
                         " does not match d=" + std::to_string(config.d));
  std::vector<Signal> signals;
  signals.reserve(file.signals.size());
  for (const auto &values : file.signals)
    signals.emplace_back(config, values);
  return DataSet(std::move(signals));
}

std::string format_signals(std::span<const Signal> signals) {
  if (signals.empty())
    throw InvalidArgument("cannot write an empty signal list");
  const std::size_t d = signals.front().size();
  std::string out = "d=" + std::to_string(d) +
                    ",m=" + std::to_string(signals.size()) + "\n";
  for (const Signal &f : signals) {
    if (f.size() != d)
      throw DimensionMismatch("signals of different lengths");
    for (const cplx &v : f.values())
      out += format_double(v.real()) + "," + format_double(v.imag()) + "\n";
  }
  return out;
}

void write_signals(const std::filesystem::path &path,
                   std::span<const Signal> signals) {
  write_file_atomic(path, format_signals(signals));
}

std::string format_eigenvalues(const EigenvalueField &field) {
  std::string out = "i,omega,tau,lambda\n";
  for (std::size_t i = 0; i < field.m(); ++i)
    for (std::size_t omega = 0; omega < field.q(); ++omega)
      for (std::size_t tau = 0; tau < field.s(); ++tau)
        out += std::to_string(i + 1) + "," + std::to_string(omega) + "," +
               std::to_string(tau) + "," +
               format_double(field.at(i, omega, tau)) + "\n";
  return out;
}

void write_eigenvalues(const std::filesystem::path &path,
                       const EigenvalueField &field) {
  write_file_atomic(path, format_eigenvalues(field));
}

EigenvalueField read_eigenvalues(const std::filesystem::path &path,
                                 std::size_t m, std::size_t q, std::size_t s) {
  std::ifstream in = open_input(path);
  std::string line;
  if (!std::getline(in, line) || trim(line) != "i,omega,tau,lambda")
    throw ParseError(1, "expected header 'i,omega,tau,lambda'");
  EigenvalueField field(m, q, s);
  std::vector<std::string_view> fields;
  std::size_t line_no = 1;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty())
      continue;
    std::size_t i = 0, omega = 0, tau = 0;
    double lambda = 0.0;
    if (!split(body, 4, fields) || !parse_size(fields[0], i) ||
        !parse_size(fields[1], omega) || !parse_size(fields[2], tau) ||
        !parse_double(fields[3], lambda))
      throw ParseError(line_no, "malformed eigenvalue row");
    if (i < 1 || i > m || omega >= q || tau >= s)
      throw ParseError(line_no, "eigenvalue index out of range");
    field.at(i - 1, omega, tau) = lambda;
    ++rows;
  }
  if (rows != m * q * s)
    throw LengthMismatch("expected " + std::to_string(m * q * s) +
                         " eigenvalue rows, found " + std::to_string(rows));
  return field;
}

std::string format_error_curve(std::span<const ErrorCurvePoint> curve) {
  std::string out = "n,error\n";
  for (const auto &pt : curve)
    out += std::to_string(pt.n) + "," + format_double(pt.error) + "\n";
  return out;
}

std::string format_manifest(const ResultManifest &mf) {
  nlohmann::ordered_json j;
  j["config"] = {{"d", mf.config.d},
                 {"p", mf.config.p},
                 {"q", mf.config.q},
                 {"s", mf.config.s},
                 {"r", mf.config.r}};
  j["m"] = mf.m;
  j["n"] = mf.n;
  j["error"] = mf.error;
  j["generators_path"] = mf.generators_path;
  j["eigenvalues_path"] = mf.eigenvalues_path;
  j["seed"] = mf.seed ? nlohmann::ordered_json(*mf.seed) : nullptr;
  j["version"] = mf.version;
  return j.dump(2) + "\n";
}

void write_manifest(const std::filesystem::path &path,
                    const ResultManifest &manifest) {
  write_file_atomic(path, format_manifest(manifest));
}

ResultManifest read_manifest(const std::filesystem::path &path) {
  std::ifstream in = open_input(path);
  nlohmann::json j;
  try {
    in >> j;
    ResultManifest mf;
    const auto &c = j.at("config");
    mf.config = make_config(c.at("d").get<std::int64_t>(),
                            c.at("p").get<std::int64_t>(),
                            c.at("s").get<std::int64_t>());
    if (mf.config.q != c.at("q").get<std::size_t>() ||
        mf.config.r != c.at("r").get<std::size_t>())
      throw ConfigMismatch("manifest config is inconsistent");
    mf.m = j.at("m").get<std::size_t>();
    mf.n = j.at("n").get<std::size_t>();
    mf.error = j.at("error").get<double>();
    mf.generators_path = j.at("generators_path").get<std::string>();
    mf.eigenvalues_path = j.at("eigenvalues_path").get<std::string>();
    if (!j.at("seed").is_null())
      mf.seed = j.at("seed").get<std::uint64_t>();
    mf.version = j.at("version").get<std::string>();
    return mf;
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(1, std::string("invalid manifest: ") + e.what());
  }
}

ApproxResult load_result(const std::filesystem::path &manifest_path) {
  const ResultManifest mf = read_manifest(manifest_path);
  const std::filesystem::path base = manifest_path.parent_path();
  const SignalFile gens = read_signals(base / mf.generators_path);
  if (gens.signals.size() != mf.n)
    throw LengthMismatch("manifest records n=" + std::to_string(mf.n) +
                         " but the generator file holds " +
                         std::to_string(gens.signals.size()));
  ApproxResult result;
  result.config = mf.config;
  result.m = mf.m;
  result.n = mf.n;
  result.generators = to_dataset(gens, mf.config).signals();
  result.eigenvalues = read_eigenvalues(base / mf.eigenvalues_path, mf.m,
                                        mf.config.q, mf.config.s);
  result.error = mf.error;
  return result;
}

std::string format_reports(std::span<const OracleReport> reports) {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto &r : reports)
    list.push_back({{"case", r.case_name},
                    {"main", r.main_value},
                    {"oracle", r.oracle_value},
                    {"abs_deviation", r.abs_deviation},
                    {"rel_deviation", r.rel_deviation},
                    {"tolerance", r.tolerance},
                    {"pass", r.pass}});
  return list.dump(2);
}

void write_file_atomic(const std::filesystem::path &path,
                       const std::string &contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw InvalidArgument("cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out)
      throw InvalidArgument("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string format_error_value(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12e", value);
  std::string s = buf;
  const std::size_t e = s.find('e');
  if (e == std::string::npos)
    return s;
  std::string mantissa = s.substr(0, e);
  std::string_view exp = std::string_view(s).substr(e + 1);
  const bool negative = !exp.empty() && exp.front() == '-';
  if (!exp.empty() && (exp.front() == '-' || exp.front() == '+'))
    exp.remove_prefix(1);
  while (exp.size() > 1 && exp.front() == '0')
    exp.remove_prefix(1);
  return mantissa + "e" + (negative ? "-" : "") + std::string(exp);
}

} // namespace tfa
