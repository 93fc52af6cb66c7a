#include "ssw/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace ssw {

double RunConfig::resolved_theta(bool has_sources) const {
  if (theta) return *theta;
  if (!has_sources) return 0.0;
  return order == 2 ? 0.5 : 1.0;
}

SolverKind parse_solver(const std::string& name) {
  if (name == "hll") return SolverKind::hll;
  if (name == "hllc3") return SolverKind::hllc3;
  if (name == "hllc5") return SolverKind::hllc5;
  throw std::invalid_argument("unknown solver '" + name + "' (expected hll, hllc3 or hllc5)");
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& value, int line) {
  double out = 0.0;
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) throw ConfigError("'" + key + "': cannot parse '" + value + "' as a number", line);
  return out;
}

int to_int(const std::string& key, const std::string& value, int line) {
  int out = 0;
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end)
    throw ConfigError("'" + key + "': cannot parse '" + value + "' as an integer", line);
  return out;
}

}  // namespace

void apply_setting(RunConfig& c, const std::string& key, const std::string& value, int line) {
  if (value.empty()) throw ConfigError("'" + key + "' has an empty value", line);
  if (key == "case") {
    c.case_name = value;
  } else if (key == "solver") {
    try {
      c.solver = parse_solver(value);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what(), line);
    }
  } else if (key == "order") {
    c.order = to_int(key, value, line);
    if (c.order != 1 && c.order != 2) throw ConfigError("order must be 1 or 2, got " + value, line);
  } else if (key == "nx") {
    c.nx = to_int(key, value, line);
    if (c.nx < 1) throw ConfigError("nx must be >= 1", line);
  } else if (key == "ny") {
    c.ny = to_int(key, value, line);
    if (c.ny < 1) throw ConfigError("ny must be >= 1", line);
  } else if (key == "cfl") {
    c.cfl = to_double(key, value, line);
    if (!(c.cfl > 0.0 && c.cfl <= 1.0)) throw ConfigError("cfl must be in (0, 1], got " + value, line);
  } else if (key == "theta") {
    c.theta = to_double(key, value, line);
    if (!(*c.theta >= 0.0 && *c.theta <= 1.0)) throw ConfigError("theta must be in [0, 1], got " + value, line);
  } else if (key == "beta") {
    c.beta = to_double(key, value, line);
    if (!(c.beta >= 1.0 && c.beta <= 2.0)) throw ConfigError("beta must be in [1, 2], got " + value, line);
  } else if (key == "t_end") {
    c.t_end = to_double(key, value, line);
    if (!(*c.t_end >= 0.0)) throw ConfigError("t_end must be >= 0", line);
  } else if (key == "snapshot_every") {
    c.snapshot_every = to_double(key, value, line);
    if (!(c.snapshot_every >= 0.0)) throw ConfigError("snapshot_every must be >= 0", line);
  } else if (key == "out_dir") {
    c.out_dir = value;
  } else if (key == "levels") {
    c.levels = to_int(key, value, line);
    if (c.levels < 2) throw ConfigError("levels must be >= 2", line);
  } else if (key.rfind("params.", 0) == 0 && key.size() > 7) {
    c.overrides[key.substr(7)] = to_double(key, value, line);
  } else {
    throw ConfigError("unknown key '" + key + "'", line);
  }
}

void validate(const RunConfig& c) {
  if (c.case_name.empty()) throw ConfigError("no case given");
  const CaseInfo* info = nullptr;
  try {
    info = &find_case(c.case_name);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  for (const auto& [k, v] : c.overrides) {
    if (!info->defaults.count(k)) throw ConfigError("case '" + c.case_name + "' has no parameter '" + k + "'");
  }
  if (!info->two_dimensional && c.ny > 1) throw ConfigError("case '" + c.case_name + "' is one-dimensional; ny must be 1");
}

RunConfig parse_config(const std::string& text, bool check) {
  RunConfig c;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError("expected key=value, got '" + s + "'", line);
    const std::string key = trim(s.substr(0, eq));
    if (key.empty()) throw ConfigError("empty key", line);
    apply_setting(c, key, trim(s.substr(eq + 1)), line);
  }
  if (check) validate(c);
  return c;
}

RunConfig load_config(const std::string& path, bool check) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str(), check);
}

}  // namespace ssw
