#ifndef SSW_GRID_HPP
#define SSW_GRID_HPP

#include "ssw/state.hpp"

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace ssw {

/// Bottom elevation and its analytic gradient at cell centres (ghosts included).
struct Topography {
  std::vector<double> b, dbdx, dbdy;
};

/// Exact field used by Dirichlet boundaries: Q(x, y, t).
using ExactField = std::function<PrimitiveState(double x, double y, double t)>;

/// Cell-centred structured grid. A one-dimensional grid has ny == 1 and no
/// ghost layers in y; all y-direction terms are skipped for it.
class Grid2D {
 public:
  Grid2D() = default;
  Grid2D(int nx, int ny, double dx, double dy, double x0, double y0, bool two_dimensional, int ghost = 2);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int ghost() const { return ghost_; }
  int ghost_y() const { return two_d_ ? ghost_ : 0; }
  bool two_dimensional() const { return two_d_; }
  double dx() const { return dx_; }
  double dy() const { return dy_; }
  double x0() const { return x0_; }
  double y0() const { return y0_; }

  double time = 0.0;

  /// Storage extents including ghosts.
  int stride() const { return nx_ + 2 * ghost_; }
  int rows() const { return ny_ + 2 * ghost_y(); }
  std::size_t size() const { return static_cast<std::size_t>(stride()) * rows(); }

  /// Linear index of cell (i, j); i in [-ghost, nx + ghost), j in [-ghost_y, ny + ghost_y).
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j + ghost_y()) * stride() + static_cast<std::size_t>(i + ghost_);
  }

  double xc(int i) const { return x0_ + (i + 0.5) * dx_; }
  double yc(int j) const { return two_d_ ? y0_ + (j + 0.5) * dy_ : 0.0; }

  ConservedState& operator()(int i, int j = 0) { return cells_[index(i, j)]; }
  const ConservedState& operator()(int i, int j = 0) const { return cells_[index(i, j)]; }

  std::vector<ConservedState>& cells() { return cells_; }
  const std::vector<ConservedState>& cells() const { return cells_; }

  Topography& topography() { return topo_; }
  const Topography& topography() const { return topo_; }

  /// Evaluates b and its gradient at every cell centre.
  void set_topography(const std::function<std::array<double, 3>(double x, double y)>& bottom);

  /// Sets every cell (ghosts included) from a primitive field at the current time.
  void fill(const std::function<PrimitiveState(double x, double y)>& field);

 private:
  int nx_ = 0, ny_ = 0, ghost_ = 2;
  bool two_d_ = false;
  double dx_ = 1.0, dy_ = 1.0, x0_ = 0.0, y0_ = 0.0;
  std::vector<ConservedState> cells_;
  Topography topo_;
};

enum class BoundaryKind { periodic, transmissive, dirichlet_exact };

BoundaryKind parse_boundary_kind(const std::string& name);
const char* to_string(BoundaryKind kind);

/// Boundary kind per side: left/right bound x, bottom/top bound y.
struct BoundarySpec {
  BoundaryKind left = BoundaryKind::transmissive;
  BoundaryKind right = BoundaryKind::transmissive;
  BoundaryKind bottom = BoundaryKind::transmissive;
  BoundaryKind top = BoundaryKind::transmissive;

  static BoundarySpec all(BoundaryKind kind) { return {kind, kind, kind, kind}; }

  /// Throws std::invalid_argument if a periodic side is not paired.
  void validate() const;
  bool needs_exact() const;
};

/// Fills all ghost cells (corners included) of the grid at grid.time.
void apply_bc(Grid2D& grid, const BoundarySpec& spec, const ExactField& exact = {});

}  // namespace ssw

#endif  // SSW_GRID_HPP
