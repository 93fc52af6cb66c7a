#ifndef SSW_RUN_HPP
#define SSW_RUN_HPP

#include "ssw/cases.hpp"
#include "ssw/config.hpp"
#include "ssw/integrator.hpp"

#include <array>
#include <string>
#include <vector>

namespace ssw {

enum ExitCode { exit_ok = 0, exit_config = 2, exit_numerical = 3 };

/// Step controls and resolved case for a configuration.
struct PreparedRun {
  CaseSetup setup;
  StepControls controls;
  double t_end = 0.0;
};

/// Throws ConfigError for unknown names or out-of-range values.
PreparedRun prepare(const RunConfig& config);

struct RunReport {
  int status = exit_ok;
  std::string message;
  std::vector<std::string> files;
  Grid2D final_grid;
  std::vector<StepRecord> log;
};

/// Runs a case and writes its artifacts into config.out_dir:
/// snapshot_NNNN.csv (if snapshot_every > 0), final.csv, steps.csv,
/// errors.csv (cases with an exact solution), y_average.csv and
/// spectrum.csv (2-D cases). A numerical abort writes diagnostic.txt and
/// returns exit_numerical. Configuration errors throw ConfigError.
RunReport run(const RunConfig& config);

struct ConvergenceTable {
  std::vector<int> nx, ny;
  std::vector<std::array<double, 6>> errors;  ///< L1 error per primitive variable
  std::vector<std::array<double, 6>> rates;   ///< between consecutive meshes
};

/// Mesh-doubling study from (nx, ny) over config.levels meshes; the case
/// must have an exact solution. Writes convergence.csv when write is set.
ConvergenceTable run_convergence(const RunConfig& config, bool write = true);

}  // namespace ssw

#endif  // SSW_RUN_HPP
