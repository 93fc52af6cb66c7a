#ifndef SSW_IO_HPP
#define SSW_IO_HPP

#include "ssw/analysis.hpp"
#include "ssw/grid.hpp"
#include "ssw/integrator.hpp"

#include <string>
#include <vector>

namespace ssw {

/// Writes the interior as CSV: "# t=<t> nx=<nx> ny=<ny>", then
/// "x,y,h,v1,v2,P11,P12,P22", one row per cell (x fastest), 17 digits.
void write_snapshot(const Grid2D& grid, const std::string& path);

struct Snapshot {
  double time = 0.0;
  int nx = 0;
  int ny = 0;
  std::vector<double> x, y;
  std::vector<PrimitiveState> states;
};

Snapshot read_snapshot(const std::string& path);

/// Formats a double with 17 significant digits.
std::string format_number(double v);

/// Generic numeric CSV with a header row.
void write_table(const std::string& path, const std::vector<std::string>& header,
                 const std::vector<std::vector<double>>& rows);

void write_step_log(const std::string& path, const std::vector<StepRecord>& log);
void write_spectrum(const std::string& path, const SpectrumResult& spectrum);

}  // namespace ssw

#endif  // SSW_IO_HPP
