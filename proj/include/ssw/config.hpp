#ifndef SSW_CONFIG_HPP
#define SSW_CONFIG_HPP

#include "ssw/cases.hpp"
#include "ssw/riemann.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace ssw {

/// Configuration error; line() is 0 when the error is not tied to a line.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

struct RunConfig {
  std::string case_name;
  SolverKind solver = SolverKind::hllc5;
  int order = 2;
  int nx = 0;  ///< 0 selects the case default
  int ny = 0;
  double cfl = 0.5;
  std::optional<double> theta;  ///< unset: 0 without sources, 1/2 (order 2) or 1 (order 1) with sources
  double beta = 1.0;
  std::optional<double> t_end;  ///< unset: case default
  double snapshot_every = 0.0;  ///< 0 disables intermediate snapshots
  std::string out_dir = "out";
  CaseParameters overrides;  ///< params.<name>=<value>
  int levels = 3;            ///< meshes in a convergence study

  double resolved_theta(bool has_sources) const;
};

SolverKind parse_solver(const std::string& name);

/// Applies one key=value setting; `line` is only used in error messages.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value, int line = 0);

/// Checks names and ranges; throws ConfigError.
void validate(const RunConfig& config);

/// Parses the key=value format: one pair per line, '#' starts a comment,
/// blank lines are ignored, params.<name> overrides case parameters.
/// With check == false the final validate() is skipped so that command-line
/// settings can still be layered on top.
RunConfig parse_config(const std::string& text, bool check = true);

RunConfig load_config(const std::string& path, bool check = true);

}  // namespace ssw

#endif  // SSW_CONFIG_HPP
