#ifndef SSW_CASES_HPP
#define SSW_CASES_HPP

#include "ssw/grid.hpp"
#include "ssw/state.hpp"

#include <map>
#include <string>
#include <vector>

namespace ssw {

/// Parameters of the space-linear, time-nonlinear 2-D exact solution.
struct AnalyticParams {
  double h0 = 1.0;
  double lambda = 0.1;
  double gamma = 0.01;
  double rate = 1e-3;  ///< the time scale 1/rate of the solution
};

PrimitiveState exact_solution_2d(double x, double y, double t, const AnalyticParams& p);

using CaseParameters = std::map<std::string, double>;

/// Registry entry: default parameters, mesh, final time and description.
struct CaseInfo {
  std::string name;
  std::string description;
  bool two_dimensional = false;
  int default_nx = 0;
  int default_ny = 1;
  double default_t_end = 0.0;
  CaseParameters defaults;
};

/// Everything a run needs: initial grid, boundaries, physics and final time.
struct CaseSetup {
  std::string name;
  Grid2D grid;
  BoundarySpec bc;
  ModelParams params;
  double t_end = 0.0;
  ExactField exact;         ///< set for cases with a closed-form solution
  bool has_sources = false;  ///< friction, dissipation or topography active
  CaseParameters values;     ///< resolved parameters after overrides
};

const std::vector<CaseInfo>& case_registry();
const CaseInfo& find_case(const std::string& name);

/// Builds a case. nx/ny <= 0 select the registry defaults; overrides must
/// name parameters known to the case.
CaseSetup init_case(const std::string& name, int nx = 0, int ny = 0, const CaseParameters& overrides = {});

}  // namespace ssw

#endif  // SSW_CASES_HPP
