#ifndef SSW_INTEGRATOR_HPP
#define SSW_INTEGRATOR_HPP

#include "ssw/grid.hpp"
#include "ssw/riemann.hpp"
#include "ssw/state.hpp"

#include <functional>
#include <string>
#include <vector>

namespace ssw {

/// Numerical controls of a time step.
struct StepControls {
  int order = 2;
  SolverKind solver = SolverKind::hllc5;
  double theta = 0.0;  ///< source implicitness: 0 explicit, 1/2 or 1 semi-implicit
  double beta = 1.0;   ///< minmod limiter parameter in [1, 2]
  double cfl = 0.5;
  double fixed_dt = 0.0;  ///< > 0 replaces the CFL time step

  void validate() const;
};

/// Positivity failure detected while stepping; carries where it happened.
class PositivityViolation : public NonPhysicalState {
 public:
  PositivityViolation(const std::string& what, std::string component, long step, int i, int j,
                      ConservedState state)
      : NonPhysicalState(what, std::move(component)), step(step), i(i), j(j), state(std::move(state)) {}

  long step;
  int i, j;
  ConservedState state;
};

/// CFL / max over interior cells of (lambda_x / dx + lambda_y / dy).
double compute_dt(const Grid2D& grid, const ModelParams& params, double cfl);

/// Componentwise minmod(beta (q0 - qm), (qp - qm) / 2, beta (qp - q0)).
Vector6<double> minmod_slope(const Vector6<double>& q_minus, const Vector6<double>& q_0,
                             const Vector6<double>& q_plus, double beta);

/// Limited slopes, transformed to conserved variables, for interior cells
/// and the first ghost layer. The depth slope is the first component.
struct Reconstruction {
  std::vector<Vector6<double>> dUx, dUy;
};

Reconstruction reconstruct(const Grid2D& grid, double beta);

/// Half-step cell states U^{n+1/2}; face values are U^{n+1/2} +/- dU/2.
struct Prediction {
  std::vector<ConservedState> half;
};

Prediction predict(const Grid2D& grid, const Reconstruction& rec, const StepControls& controls,
                   const ModelParams& params, double dt);

/// Second-order update of the interior cells from the predicted data.
void correct(Grid2D& grid, const Reconstruction& rec, const Prediction& pred, const StepControls& controls,
             const ModelParams& params, double dt);

/// First-order path-conservative update with theta-weighted source.
void first_order_update(Grid2D& grid, const StepControls& controls, const ModelParams& params, double dt);

/// Fills ghosts at grid.time, advances the interior by dt and the clock.
void step(Grid2D& grid, const BoundarySpec& bc, const ExactField& exact, const StepControls& controls,
          const ModelParams& params, double dt);

struct StepRecord {
  long step = 0;
  double time = 0.0;
  double dt = 0.0;
  double min_h = 0.0;
  double min_P11 = 0.0;
  double min_P22 = 0.0;
};

/// Minimum depth and normal stresses over the interior; throws
/// PositivityViolation at the first (row-major) inadmissible cell.
StepRecord monitor_positivity(const Grid2D& grid, long step);

using StepObserver = std::function<void(const Grid2D&, const StepRecord&)>;

struct AdvanceResult {
  std::vector<StepRecord> log;
};

/// Marches from grid.time to t_end; the last step is shortened to land on t_end.
AdvanceResult advance(Grid2D& grid, const BoundarySpec& bc, const ExactField& exact, const StepControls& controls,
                      const ModelParams& params, double t_end, const StepObserver& observer = {},
                      long first_step = 0);

}  // namespace ssw

#endif  // SSW_INTEGRATOR_HPP
