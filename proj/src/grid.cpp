#include "ssw/grid.hpp"

#include <stdexcept>

namespace ssw {

Grid2D::Grid2D(int nx, int ny, double dx, double dy, double x0, double y0, bool two_dimensional, int ghost)
    : nx_(nx), ny_(ny), ghost_(ghost), two_d_(two_dimensional), dx_(dx), dy_(dy), x0_(x0), y0_(y0) {
  if (nx < 1 || ny < 1) throw std::invalid_argument("Grid2D: nx and ny must be >= 1");
  if (ghost < 2) throw std::invalid_argument("Grid2D: ghost width must be >= 2");
  if (!two_dimensional && ny != 1) throw std::invalid_argument("Grid2D: a 1-D grid has ny == 1");
  if (!(dx > 0) || !(dy > 0)) throw std::invalid_argument("Grid2D: spacings must be positive");
  cells_.assign(size(), ConservedState());
  topo_.b.assign(size(), 0.0);
  topo_.dbdx.assign(size(), 0.0);
  topo_.dbdy.assign(size(), 0.0);
}

void Grid2D::set_topography(const std::function<std::array<double, 3>(double, double)>& bottom) {
  for (int j = -ghost_y(); j < ny_ + ghost_y(); ++j) {
    for (int i = -ghost_; i < nx_ + ghost_; ++i) {
      const auto [b, bx, by] = bottom(xc(i), yc(j));
      const std::size_t k = index(i, j);
      topo_.b[k] = b;
      topo_.dbdx[k] = bx;
      topo_.dbdy[k] = by;
    }
  }
}

void Grid2D::fill(const std::function<PrimitiveState(double, double)>& field) {
  for (int j = -ghost_y(); j < ny_ + ghost_y(); ++j) {
    for (int i = -ghost_; i < nx_ + ghost_; ++i) cells_[index(i, j)] = prim_to_cons(field(xc(i), yc(j)));
  }
}

BoundaryKind parse_boundary_kind(const std::string& name) {
  if (name == "periodic") return BoundaryKind::periodic;
  if (name == "transmissive") return BoundaryKind::transmissive;
  if (name == "dirichlet_exact") return BoundaryKind::dirichlet_exact;
  throw std::invalid_argument("unknown boundary kind '" + name + "'");
}

const char* to_string(BoundaryKind kind) {
  switch (kind) {
    case BoundaryKind::periodic: return "periodic";
    case BoundaryKind::transmissive: return "transmissive";
    case BoundaryKind::dirichlet_exact: return "dirichlet_exact";
  }
  return "?";
}

void BoundarySpec::validate() const {
  if ((left == BoundaryKind::periodic) != (right == BoundaryKind::periodic))
    throw std::invalid_argument("BoundarySpec: periodic x boundaries must be paired");
  if ((bottom == BoundaryKind::periodic) != (top == BoundaryKind::periodic))
    throw std::invalid_argument("BoundarySpec: periodic y boundaries must be paired");
}

bool BoundarySpec::needs_exact() const {
  return left == BoundaryKind::dirichlet_exact || right == BoundaryKind::dirichlet_exact ||
         bottom == BoundaryKind::dirichlet_exact || top == BoundaryKind::dirichlet_exact;
}

namespace {

// Maps an out-of-range index to its source; -1 flags an exact evaluation.
int source_index(int i, int n, BoundaryKind low, BoundaryKind high) {
  if (i >= 0 && i < n) return i;
  const BoundaryKind kind = i < 0 ? low : high;
  switch (kind) {
    case BoundaryKind::periodic: return ((i % n) + n) % n;
    case BoundaryKind::transmissive: return i < 0 ? 0 : n - 1;
    case BoundaryKind::dirichlet_exact: return -1;
  }
  return -1;
}

}  // namespace

void apply_bc(Grid2D& grid, const BoundarySpec& spec, const ExactField& exact) {
  spec.validate();
  if (spec.needs_exact() && !exact) throw std::invalid_argument("apply_bc: dirichlet_exact needs an exact field");
  const int nx = grid.nx(), ny = grid.ny();
  const int gx = grid.ghost(), gy = grid.ghost_y();
  for (int j = -gy; j < ny + gy; ++j) {
    for (int i = -gx; i < nx + gx; ++i) {
      if (i >= 0 && i < nx && j >= 0 && j < ny) continue;
      const int si = source_index(i, nx, spec.left, spec.right);
      const int sj = grid.two_dimensional() ? source_index(j, ny, spec.bottom, spec.top) : 0;
      if (si < 0 || sj < 0) {
        grid(i, j) = prim_to_cons(exact(grid.xc(i), grid.yc(j), grid.time));
      } else {
        grid(i, j) = grid(si, sj);
      }
    }
  }
}

}  // namespace ssw
