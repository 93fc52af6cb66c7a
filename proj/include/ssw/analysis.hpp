#ifndef SSW_ANALYSIS_HPP
#define SSW_ANALYSIS_HPP

#include "ssw/grid.hpp"

#include <array>
#include <string>
#include <vector>

namespace ssw {

/// Scalar field on an nx-by-ny uniform grid, row-major with x fastest.
struct Field2D {
  int nx = 0;
  int ny = 0;
  std::vector<double> data;

  Field2D() = default;
  Field2D(int nx, int ny, double value = 0.0) : nx(nx), ny(ny), data(static_cast<std::size_t>(nx) * ny, value) {}

  double& operator()(int i, int j) { return data[static_cast<std::size_t>(j) * nx + i]; }
  double operator()(int i, int j) const { return data[static_cast<std::size_t>(j) * nx + i]; }
};

/// Component c (0..5) of the primitive state over the interior cells.
Field2D primitive_field(const Grid2D& grid, int component);

enum class Norm { L1, L2, Linf };

Norm parse_norm(const std::string& name);
const char* to_string(Norm norm);

/// Cell-area weighted L1/L2 (sum |e| dA, sqrt(sum e^2 dA)) or max norm.
double error_norm(const std::vector<double>& numeric, const std::vector<double>& exact, double cell_area, Norm norm);

/// Error of each primitive variable against the exact field at grid.time.
std::array<double, 6> error_norms(const Grid2D& grid, const ExactField& exact, Norm norm);

/// log2(e_coarse / e_fine) for a mesh refined by a factor two.
double convergence_rate(double e_coarse, double e_fine);

struct YAverage {
  std::vector<double> mean;  ///< one value per x column
  Field2D fluctuation;
};

YAverage y_average_decompose(const Field2D& field);

struct SpectrumResult {
  std::vector<int> k;
  std::vector<double> E;
  double total = 0.0;  ///< (1/2) mean(u'^2 + v'^2)
};

/// Shell-summed kinetic energy of the fluctuation fields. The DFT is divided
/// by nx*ny, modes use signed integer indices and shell k collects
/// round(sqrt(kx^2 + ky^2)) == k; the mean mode sits in shell 0.
SpectrumResult energy_spectrum(const Field2D& u, const Field2D& v);

}  // namespace ssw

#endif  // SSW_ANALYSIS_HPP
