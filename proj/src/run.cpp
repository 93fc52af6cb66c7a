#include "ssw/run.hpp"

#include "ssw/analysis.hpp"
#include "ssw/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace ssw {

namespace {

const char* const kPrimitiveNames[6] = {"h", "v1", "v2", "R11", "R12", "R22"};

std::string join(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

}  // namespace

PreparedRun prepare(const RunConfig& config) {
  validate(config);
  PreparedRun p;
  try {
    p.setup = init_case(config.case_name, config.nx, config.ny, config.overrides);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  p.controls.order = config.order;
  p.controls.solver = config.solver;
  p.controls.theta = config.resolved_theta(p.setup.has_sources);
  p.controls.beta = config.beta;
  p.controls.cfl = config.cfl;
  try {
    p.controls.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  p.t_end = config.t_end ? *config.t_end : p.setup.t_end;
  return p;
}

RunReport run(const RunConfig& config) {
  PreparedRun p = prepare(config);
  RunReport report;
  std::filesystem::create_directories(config.out_dir);
  Grid2D& grid = p.setup.grid;
  const CaseSetup& setup = p.setup;

  try {
    long steps = 0;
    if (config.snapshot_every > 0.0) {
      int index = 0;
      auto snap = [&] {
        char name[32];
        std::snprintf(name, sizeof name, "snapshot_%04d.csv", index++);
        write_snapshot(grid, join(config.out_dir, name));
        report.files.push_back(join(config.out_dir, name));
      };
      snap();
      for (int n = 1; grid.time < p.t_end; ++n) {
        const double target = std::min(p.t_end, n * config.snapshot_every);
        auto r = advance(grid, setup.bc, setup.exact, p.controls, setup.params, target, {}, steps);
        steps += static_cast<long>(r.log.size());
        report.log.insert(report.log.end(), r.log.begin(), r.log.end());
        snap();
      }
    } else {
      report.log = advance(grid, setup.bc, setup.exact, p.controls, setup.params, p.t_end).log;
    }
  } catch (const NonPhysicalState& e) {
    report.status = exit_numerical;
    report.message = e.what();
  } catch (const DegenerateFace& e) {
    report.status = exit_numerical;
    report.message = e.what();
  }

  if (report.status != exit_ok) {
    const std::string diag = join(config.out_dir, "diagnostic.txt");
    std::ofstream f(diag);
    f << "case=" << config.case_name << "\nsolver=" << to_string(config.solver) << "\norder=" << config.order
      << "\nt=" << format_number(grid.time) << "\nerror=" << report.message << "\n";
    report.files.push_back(diag);
    write_step_log(join(config.out_dir, "steps.csv"), report.log);
    report.files.push_back(join(config.out_dir, "steps.csv"));
    report.final_grid = grid;
    return report;
  }

  write_snapshot(grid, join(config.out_dir, "final.csv"));
  report.files.push_back(join(config.out_dir, "final.csv"));
  write_step_log(join(config.out_dir, "steps.csv"), report.log);
  report.files.push_back(join(config.out_dir, "steps.csv"));

  if (setup.exact) {
    std::vector<std::vector<double>> rows;
    const auto l1 = error_norms(grid, setup.exact, Norm::L1);
    const auto l2 = error_norms(grid, setup.exact, Norm::L2);
    const auto li = error_norms(grid, setup.exact, Norm::Linf);
    for (int c = 0; c < 6; ++c) rows.push_back({static_cast<double>(c), l1[c], l2[c], li[c]});
    write_table(join(config.out_dir, "errors.csv"), {"variable", "L1", "L2", "Linf"}, rows);
    report.files.push_back(join(config.out_dir, "errors.csv"));
  }

  if (grid.two_dimensional()) {
    const YAverage ha = y_average_decompose(primitive_field(grid, 0));
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < grid.nx(); ++i) rows.push_back({grid.xc(i), ha.mean[i]});
    write_table(join(config.out_dir, "y_average.csv"), {"x", "h_mean"}, rows);
    report.files.push_back(join(config.out_dir, "y_average.csv"));

    const YAverage ua = y_average_decompose(primitive_field(grid, 1));
    const YAverage va = y_average_decompose(primitive_field(grid, 2));
    write_spectrum(join(config.out_dir, "spectrum.csv"), energy_spectrum(ua.fluctuation, va.fluctuation));
    report.files.push_back(join(config.out_dir, "spectrum.csv"));
  }

  report.final_grid = grid;
  return report;
}

ConvergenceTable run_convergence(const RunConfig& config, bool write) {
  PreparedRun base = prepare(config);
  if (!base.setup.exact) throw ConfigError("case '" + config.case_name + "' has no exact solution");
  ConvergenceTable table;
  int nx = base.setup.grid.nx();
  int ny = base.setup.grid.ny();
  for (int level = 0; level < config.levels; ++level) {
    RunConfig c = config;
    c.nx = nx;
    c.ny = ny;
    PreparedRun p = prepare(c);
    advance(p.setup.grid, p.setup.bc, p.setup.exact, p.controls, p.setup.params, p.t_end);
    table.nx.push_back(nx);
    table.ny.push_back(ny);
    table.errors.push_back(error_norms(p.setup.grid, p.setup.exact, Norm::L1));
    if (level > 0) {
      std::array<double, 6> r{};
      const auto& a = table.errors[level - 1];
      const auto& b = table.errors[level];
      for (int k = 0; k < 6; ++k) r[k] = (a[k] > 0.0 && b[k] > 0.0) ? convergence_rate(a[k], b[k]) : NAN;
      table.rates.push_back(r);
    }
    nx *= 2;
    if (p.setup.grid.two_dimensional()) ny *= 2;
  }

  if (write) {
    std::filesystem::create_directories(config.out_dir);
    std::vector<std::string> header{"nx", "ny"};
    for (const char* n : kPrimitiveNames) header.push_back(std::string("L1_") + n);
    for (const char* n : kPrimitiveNames) header.push_back(std::string("rate_") + n);
    std::vector<std::vector<double>> rows;
    for (std::size_t l = 0; l < table.nx.size(); ++l) {
      std::vector<double> row{static_cast<double>(table.nx[l]), static_cast<double>(table.ny[l])};
      for (double e : table.errors[l]) row.push_back(e);
      for (int k = 0; k < 6; ++k) row.push_back(l == 0 ? NAN : table.rates[l - 1][k]);
      rows.push_back(row);
    }
    write_table(join(config.out_dir, "convergence.csv"), header, rows);
  }
  return table;
}

}  // namespace ssw
