#include "ssw/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ssw {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  return f;
}

void finish(std::ofstream& f, const std::string& path) {
  f.flush();
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace

void write_snapshot(const Grid2D& grid, const std::string& path) {
  std::ofstream f = open_out(path);
  f << "# t=" << format_number(grid.time) << " nx=" << grid.nx() << " ny=" << grid.ny() << "\n";
  f << "x,y,h,v1,v2,P11,P12,P22\n";
  for (int j = 0; j < grid.ny(); ++j) {
    for (int i = 0; i < grid.nx(); ++i) {
      const PrimitiveState q = to_primitive_unchecked(grid(i, j));
      const double h = q.h();
      f << format_number(grid.xc(i)) << ',' << format_number(grid.yc(j)) << ',' << format_number(h) << ','
        << format_number(q.v1()) << ',' << format_number(q.v2()) << ',' << format_number(q.R11() / h) << ','
        << format_number(q.R12() / h) << ',' << format_number(q.R22() / h) << '\n';
    }
  }
  finish(f, path);
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  Snapshot s;
  std::string line;
  if (!std::getline(f, line) || std::sscanf(line.c_str(), "# t=%lf nx=%d ny=%d", &s.time, &s.nx, &s.ny) != 3)
    throw std::runtime_error("'" + path + "': malformed header");
  if (!std::getline(f, line) || line != "x,y,h,v1,v2,P11,P12,P22")
    throw std::runtime_error("'" + path + "': malformed column header");
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    double v[8];
    std::istringstream row(line);
    std::string cell;
    int n = 0;
    while (std::getline(row, cell, ',')) {
      if (n == 8) break;
      v[n++] = std::stod(cell);
    }
    if (n != 8) throw std::runtime_error("'" + path + "': row with wrong column count");
    s.x.push_back(v[0]);
    s.y.push_back(v[1]);
    s.states.push_back(PrimitiveState::from_stress(v[2], v[3], v[4], v[5], v[6], v[7]));
  }
  if (s.states.size() != static_cast<std::size_t>(s.nx) * s.ny)
    throw std::runtime_error("'" + path + "': row count does not match nx*ny");
  return s;
}

void write_table(const std::string& path, const std::vector<std::string>& header,
                 const std::vector<std::vector<double>>& rows) {
  std::ofstream f = open_out(path);
  for (std::size_t c = 0; c < header.size(); ++c) f << (c ? "," : "") << header[c];
  f << '\n';
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) f << (c ? "," : "") << format_number(r[c]);
    f << '\n';
  }
  finish(f, path);
}

void write_step_log(const std::string& path, const std::vector<StepRecord>& log) {
  std::vector<std::vector<double>> rows;
  rows.reserve(log.size());
  for (const auto& r : log)
    rows.push_back({static_cast<double>(r.step), r.time, r.dt, r.min_h, r.min_P11, r.min_P22});
  write_table(path, {"step", "t", "dt", "min_h", "min_P11", "min_P22"}, rows);
}

void write_spectrum(const std::string& path, const SpectrumResult& spectrum) {
  std::vector<std::vector<double>> rows;
  for (std::size_t k = 0; k < spectrum.k.size(); ++k) rows.push_back({static_cast<double>(spectrum.k[k]), spectrum.E[k]});
  write_table(path, {"k", "E"}, rows);
}

}  // namespace ssw
