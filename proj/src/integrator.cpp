#include "ssw/integrator.hpp"

#include "ssw/model.hpp"
#include "ssw/parallel.hpp"
#include "ssw/source_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ssw {

void StepControls::validate() const {
  if (order != 1 && order != 2) throw std::invalid_argument("StepControls: order must be 1 or 2");
  if (!(cfl > 0.0 && cfl <= 1.0)) throw std::invalid_argument("StepControls: cfl must be in (0, 1]");
  if (!(theta >= 0.0 && theta <= 1.0)) throw std::invalid_argument("StepControls: theta must be in [0, 1]");
  if (!(beta >= 1.0 && beta <= 2.0)) throw std::invalid_argument("StepControls: beta must be in [1, 2]");
  if (fixed_dt < 0.0) throw std::invalid_argument("StepControls: fixed_dt must be non-negative");
}

double compute_dt(const Grid2D& grid, const ModelParams& params, double cfl) {
  const int nx = grid.nx(), ny = grid.ny();
  const bool two_d = grid.two_dimensional();
  std::vector<double> row_max(ny, 0.0);
  parallel_for(0, ny, [&](int j) {
    double m = 0.0;
    for (int i = 0; i < nx; ++i) {
      const ConservedState& u = grid(i, j);
      double rate = max_abs_speed(u, Axis::x, params.g) / grid.dx();
      if (two_d) rate += max_abs_speed(u, Axis::y, params.g) / grid.dy();
      m = std::max(m, rate);
    }
    row_max[j] = m;
  });
  const double m = *std::max_element(row_max.begin(), row_max.end());
  if (!(m > 0.0) || !std::isfinite(m)) throw NonPhysicalState("compute_dt: no finite positive wave speed", "lambda");
  return cfl / m;
}

Vector6<double> minmod_slope(const Vector6<double>& q_minus, const Vector6<double>& q_0,
                             const Vector6<double>& q_plus, double beta) {
  Vector6<double> s;
  for (int c = 0; c < 6; ++c) {
    const double a = beta * (q_0[c] - q_minus[c]);
    const double b = 0.5 * (q_plus[c] - q_minus[c]);
    const double d = beta * (q_plus[c] - q_0[c]);
    if (a > 0.0 && b > 0.0 && d > 0.0) {
      s[c] = std::min({a, b, d});
    } else if (a < 0.0 && b < 0.0 && d < 0.0) {
      s[c] = std::max({a, b, d});
    } else {
      s[c] = 0.0;
    }
  }
  return s;
}

namespace {

// Cells touched by the reconstruction and predictor: interior plus one ghost layer.
struct Range {
  int i0, i1, j0, j1;
};

Range working_range(const Grid2D& grid) {
  const int gy = grid.two_dimensional() ? 1 : 0;
  return {-1, grid.nx() + 1, -gy, grid.ny() + gy};
}

std::string cell_message(const std::string& stage, int i, int j, const std::exception& e) {
  std::ostringstream os;
  os << stage << " at cell (" << i << ", " << j << "): " << e.what();
  return os.str();
}

template <typename Body>
void for_cells(const Range& r, Body&& body) {
  parallel_for(r.j0, r.j1, [&](int j) {
    for (int i = r.i0; i < r.i1; ++i) body(i, j);
  });
}

}  // namespace

Reconstruction reconstruct(const Grid2D& grid, double beta) {
  Reconstruction rec;
  rec.dUx.assign(grid.size(), Vector6<double>::Zero());
  rec.dUy.assign(grid.size(), Vector6<double>::Zero());
  const bool two_d = grid.two_dimensional();
  for_cells(working_range(grid), [&](int i, int j) {
    const PrimitiveState q = to_primitive_unchecked(grid(i, j));
    const Matrix6<double> J = dcons_dprim(q);
    const std::size_t k = grid.index(i, j);
    const Vector6<double> qw = to_primitive_unchecked(grid(i - 1, j));
    const Vector6<double> qe = to_primitive_unchecked(grid(i + 1, j));
    rec.dUx[k] = J * minmod_slope(qw, q, qe, beta);
    if (two_d) {
      const Vector6<double> qs = to_primitive_unchecked(grid(i, j - 1));
      const Vector6<double> qn = to_primitive_unchecked(grid(i, j + 1));
      rec.dUy[k] = J * minmod_slope(qs, q, qn, beta);
    }
  });
  return rec;
}

Prediction predict(const Grid2D& grid, const Reconstruction& rec, const StepControls& controls,
                   const ModelParams& params, double dt) {
  Prediction pred;
  pred.half = grid.cells();
  const bool two_d = grid.two_dimensional();
  const double g = params.g;
  const Topography& topo = grid.topography();
  for_cells(working_range(grid), [&](int i, int j) {
    const std::size_t k = grid.index(i, j);
    const ConservedState& u = grid(i, j);
    try {
      const Vector6<double>& dx = rec.dUx[k];
      const ConservedState east = u + 0.5 * dx, west = u - 0.5 * dx;
      Vector6<double> rhs = -(physical_flux(east, Axis::x, g) - physical_flux(west, Axis::x, g)) / grid.dx() -
                            noncons_vector(u.m1(), u.m2(), Axis::x, g) * dx[0] / grid.dx();
      if (two_d) {
        const Vector6<double>& dy = rec.dUy[k];
        const ConservedState north = u + 0.5 * dy, south = u - 0.5 * dy;
        rhs += -(physical_flux(north, Axis::y, g) - physical_flux(south, Axis::y, g)) / grid.dy() -
               noncons_vector(u.m1(), u.m2(), Axis::y, g) * dy[0] / grid.dy();
      }
      if (controls.theta == 0.0) rhs += source_terms(u, topo.dbdx[k], topo.dbdy[k], params);
      ConservedState half = u + 0.5 * dt * rhs;
      if (controls.theta > 0.0) {
        half = implicit_source_update(ImplicitUpdateInput<double>{half, topo.dbdx[k], topo.dbdy[k], 0.5 * dt, params});
      }
      check_admissible(to_primitive_unchecked(half));
      pred.half[k] = half;
    } catch (const NonPhysicalState& e) {
      throw NonPhysicalState(cell_message("predictor", i, j, e), e.component());
    }
  });
  return pred;
}

namespace {

// Fluctuations on the faces normal to one axis. Face f of row/column lies
// between cells f-1 and f along that axis.
struct FaceData {
  std::vector<Vector6<double>> minus, plus;
};

FaceData x_faces(const Grid2D& grid, const std::vector<ConservedState>& state, const std::vector<Vector6<double>>& dU,
                 SolverKind solver, double g) {
  const int nx = grid.nx(), ny = grid.ny();
  FaceData f;
  f.minus.resize(static_cast<std::size_t>(nx + 1) * ny);
  f.plus.resize(f.minus.size());
  parallel_for(0, ny, [&](int j) {
    for (int i = 0; i <= nx; ++i) {
      const std::size_t kl = grid.index(i - 1, j), kr = grid.index(i, j);
      const ConservedState uL = state[kl] + 0.5 * dU[kl];
      const ConservedState uR = state[kr] - 0.5 * dU[kr];
      try {
        const auto d = face_fluctuations(solver, uL, uR, Axis::x, g);
        const std::size_t n = static_cast<std::size_t>(j) * (nx + 1) + i;
        f.minus[n] = d.minus;
        f.plus[n] = d.plus;
      } catch (const NonPhysicalState& e) {
        throw NonPhysicalState(cell_message("x-face solve", i, j, e), e.component());
      }
    }
  });
  return f;
}

FaceData y_faces(const Grid2D& grid, const std::vector<ConservedState>& state, const std::vector<Vector6<double>>& dU,
                 SolverKind solver, double g) {
  const int nx = grid.nx(), ny = grid.ny();
  FaceData f;
  f.minus.resize(static_cast<std::size_t>(ny + 1) * nx);
  f.plus.resize(f.minus.size());
  parallel_for(0, ny + 1, [&](int j) {
    for (int i = 0; i < nx; ++i) {
      const std::size_t kl = grid.index(i, j - 1), kr = grid.index(i, j);
      const ConservedState uL = state[kl] + 0.5 * dU[kl];
      const ConservedState uR = state[kr] - 0.5 * dU[kr];
      try {
        const auto d = face_fluctuations(solver, uL, uR, Axis::y, g);
        const std::size_t n = static_cast<std::size_t>(j) * nx + i;
        f.minus[n] = d.minus;
        f.plus[n] = d.plus;
      } catch (const NonPhysicalState& e) {
        throw NonPhysicalState(cell_message("y-face solve", i, j, e), e.component());
      }
    }
  });
  return f;
}

// Flux-difference and fluctuation part of the update, without source.
// `state` holds the data the faces are built from, `dU` the face offsets.
std::vector<Vector6<double>> spatial_operator(const Grid2D& grid, const std::vector<ConservedState>& state,
                                              const Reconstruction* rec, SolverKind solver, double g) {
  const int nx = grid.nx(), ny = grid.ny();
  const bool two_d = grid.two_dimensional();
  std::vector<Vector6<double>> zeros;
  if (!rec) zeros.assign(grid.size(), Vector6<double>::Zero());
  const auto& dUx = rec ? rec->dUx : zeros;
  const auto& dUy = rec ? rec->dUy : zeros;

  const FaceData fx = x_faces(grid, state, dUx, solver, g);
  FaceData fy;
  if (two_d) fy = y_faces(grid, state, dUy, solver, g);

  std::vector<Vector6<double>> out(static_cast<std::size_t>(nx) * ny);
  parallel_for(0, ny, [&](int j) {
    for (int i = 0; i < nx; ++i) {
      const std::size_t k = grid.index(i, j);
      const ConservedState& u = state[k];
      const std::size_t w = static_cast<std::size_t>(j) * (nx + 1) + i;
      Vector6<double> r = -(fx.plus[w] + fx.minus[w + 1]) / grid.dx();
      if (rec) {
        const Vector6<double>& dx = dUx[k];
        const ConservedState east = u + 0.5 * dx, west = u - 0.5 * dx;
        r -= (physical_flux(east, Axis::x, g) - physical_flux(west, Axis::x, g)) / grid.dx() +
             noncons_vector(u.m1(), u.m2(), Axis::x, g) * dx[0] / grid.dx();
      }
      if (two_d) {
        const std::size_t s = static_cast<std::size_t>(j) * nx + i;
        const std::size_t n = static_cast<std::size_t>(j + 1) * nx + i;
        r -= (fy.plus[s] + fy.minus[n]) / grid.dy();
        if (rec) {
          const Vector6<double>& dy = dUy[k];
          const ConservedState north = u + 0.5 * dy, south = u - 0.5 * dy;
          r -= (physical_flux(north, Axis::y, g) - physical_flux(south, Axis::y, g)) / grid.dy() +
               noncons_vector(u.m1(), u.m2(), Axis::y, g) * dy[0] / grid.dy();
        }
      }
      out[static_cast<std::size_t>(j) * nx + i] = r;
    }
  });
  return out;
}

}  // namespace

void correct(Grid2D& grid, const Reconstruction& rec, const Prediction& pred, const StepControls& controls,
             const ModelParams& params, double dt) {
  const int nx = grid.nx();
  const Topography& topo = grid.topography();
  const auto L = spatial_operator(grid, pred.half, &rec, controls.solver, params.g);
  parallel_for(0, grid.ny(), [&](int j) {
    for (int i = 0; i < nx; ++i) {
      const std::size_t k = grid.index(i, j);
      try {
        const Vector6<double> s = source_terms(pred.half[k], topo.dbdx[k], topo.dbdy[k], params);
        grid(i, j) = grid(i, j) + dt * (L[static_cast<std::size_t>(j) * nx + i] + s);
      } catch (const NonPhysicalState& e) {
        throw NonPhysicalState(cell_message("corrector", i, j, e), e.component());
      }
    }
  });
}

void first_order_update(Grid2D& grid, const StepControls& controls, const ModelParams& params, double dt) {
  const int nx = grid.nx();
  const Topography& topo = grid.topography();
  const auto L = spatial_operator(grid, grid.cells(), nullptr, controls.solver, params.g);
  const double theta = controls.theta;
  std::vector<ConservedState> next(static_cast<std::size_t>(nx) * grid.ny());
  parallel_for(0, grid.ny(), [&](int j) {
    for (int i = 0; i < nx; ++i) {
      const std::size_t k = grid.index(i, j);
      const std::size_t n = static_cast<std::size_t>(j) * nx + i;
      try {
        ConservedState u = grid(i, j) + dt * L[n];
        if (theta < 1.0) u = u + (1.0 - theta) * dt * source_terms(grid(i, j), topo.dbdx[k], topo.dbdy[k], params);
        if (theta > 0.0)
          u = implicit_source_update(ImplicitUpdateInput<double>{u, topo.dbdx[k], topo.dbdy[k], theta * dt, params});
        next[n] = u;
      } catch (const NonPhysicalState& e) {
        throw NonPhysicalState(cell_message("first-order update", i, j, e), e.component());
      }
    }
  });
  for (int j = 0; j < grid.ny(); ++j)
    for (int i = 0; i < nx; ++i) grid(i, j) = next[static_cast<std::size_t>(j) * nx + i];
}

void step(Grid2D& grid, const BoundarySpec& bc, const ExactField& exact, const StepControls& controls,
          const ModelParams& params, double dt) {
  apply_bc(grid, bc, exact);
  if (controls.order == 1) {
    first_order_update(grid, controls, params, dt);
  } else {
    const Reconstruction rec = reconstruct(grid, controls.beta);
    const Prediction pred = predict(grid, rec, controls, params, dt);
    correct(grid, rec, pred, controls, params, dt);
  }
  grid.time += dt;
}

StepRecord monitor_positivity(const Grid2D& grid, long step) {
  StepRecord r;
  r.step = step;
  r.time = grid.time;
  r.min_h = r.min_P11 = r.min_P22 = std::numeric_limits<double>::infinity();
  for (int j = 0; j < grid.ny(); ++j) {
    for (int i = 0; i < grid.nx(); ++i) {
      const ConservedState& u = grid(i, j);
      const PrimitiveState q = to_primitive_unchecked(u);
      std::string bad;
      if (!(q.h() > 0.0)) {
        bad = "h > 0";
      } else if (!(q.R11() > 0.0)) {
        bad = "R11 > 0";
      } else if (!(q.R22() > 0.0)) {
        bad = "R22 > 0";
      } else if (!(q.R11() * q.R22() - q.R12() * q.R12() > 0.0)) {
        bad = "det R > 0";
      }
      if (!bad.empty()) {
        std::ostringstream os;
        os << "positivity violated (" << bad << ") at step " << step << ", t=" << grid.time << ", cell (" << i
           << ", " << j << "), U=" << detail::format_state(u);
        throw PositivityViolation(os.str(), bad, step, i, j, u);
      }
      r.min_h = std::min(r.min_h, q.h());
      r.min_P11 = std::min(r.min_P11, q.P11());
      r.min_P22 = std::min(r.min_P22, q.R22() / q.h());
    }
  }
  return r;
}

AdvanceResult advance(Grid2D& grid, const BoundarySpec& bc, const ExactField& exact, const StepControls& controls,
                      const ModelParams& params, double t_end, const StepObserver& observer, long first_step) {
  controls.validate();
  params.validate();
  AdvanceResult result;
  long n = first_step;
  // Remaining intervals shorter than this are treated as round-off.
  const double eps = 1e-12 * std::max(1.0, std::abs(t_end));
  while (t_end - grid.time > eps) {
    double dt = controls.fixed_dt > 0.0 ? controls.fixed_dt : compute_dt(grid, params, controls.cfl);
    bool last = false;
    if (grid.time + dt >= t_end - eps) {
      dt = t_end - grid.time;
      last = true;
    }
    try {
      step(grid, bc, exact, controls, params, dt);
    } catch (const PositivityViolation&) {
      throw;
    } catch (const NonPhysicalState& e) {
      std::ostringstream os;
      os << "step " << n + 1 << " (t=" << grid.time << ", dt=" << dt << "): " << e.what();
      throw NonPhysicalState(os.str(), e.component());
    }
    if (last) grid.time = t_end;
    ++n;
    StepRecord rec = monitor_positivity(grid, n);
    rec.dt = dt;
    result.log.push_back(rec);
    if (observer) observer(grid, rec);
  }
  apply_bc(grid, bc, exact);
  return result;
}

}  // namespace ssw
