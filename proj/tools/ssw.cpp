#include "ssw/cases.hpp"
#include "ssw/config.hpp"
#include "ssw/io.hpp"
#include "ssw/parallel.hpp"
#include "ssw/run.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

// Loads the file, then applies --key=value flags on top.
ssw::RunConfig build_config(const std::string& path, const std::vector<std::string>& flags) {
  ssw::RunConfig config = ssw::load_config(path, false);
  for (const std::string& raw : flags) {
    std::string s = raw;
    if (s.rfind("--", 0) == 0) s = s.substr(2);
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ssw::ConfigError("expected --key=value, got '" + raw + "'");
    ssw::apply_setting(config, s.substr(0, eq), s.substr(eq + 1));
  }
  ssw::validate(config);
  return config;
}

int list_cases() {
  for (const auto& info : ssw::case_registry()) {
    std::cout << info.name << (info.two_dimensional ? "  [2-D]" : "  [1-D]") << "  " << info.description << "\n"
              << "    mesh " << info.default_nx;
    if (info.two_dimensional) std::cout << "x" << info.default_ny;
    std::cout << ", t_end " << ssw::format_number(info.default_t_end) << "\n   ";
    for (const auto& [k, v] : info.defaults) std::cout << " " << k << "=" << ssw::format_number(v);
    std::cout << "\n";
  }
  return ssw::exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  ssw::configure_threads_from_env();

  CLI::App app{"Shear shallow water finite-volume solver"};
  app.require_subcommand(1);

  std::string run_path;
  std::vector<std::string> run_flags;
  auto* run_cmd = app.add_subcommand("run", "run a case from a key=value config file");
  run_cmd->add_option("config", run_path, "config file")->required();
  run_cmd->allow_extras();

  app.add_subcommand("cases", "list the registered cases");

  std::string conv_path;
  auto* conv_cmd = app.add_subcommand("convergence", "mesh-doubling study against the exact solution");
  conv_cmd->add_option("config", conv_path, "config file")->required();
  conv_cmd->allow_extras();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ssw::exit_ok : ssw::exit_config;
  }

  try {
    if (app.got_subcommand("cases")) return list_cases();

    if (run_cmd->parsed()) {
      const ssw::RunConfig config = build_config(run_path, run_cmd->remaining());
      const ssw::RunReport report = ssw::run(config);
      if (report.status != ssw::exit_ok) {
        std::cerr << "ssw: numerical abort: " << report.message << "\n";
        return report.status;
      }
      for (const auto& f : report.files) std::cout << f << "\n";
      return ssw::exit_ok;
    }

    if (conv_cmd->parsed()) {
      const ssw::RunConfig config = build_config(conv_path, conv_cmd->remaining());
      ssw::ConvergenceTable t;
      try {
        t = ssw::run_convergence(config);
      } catch (const ssw::NonPhysicalState& e) {
        std::filesystem::create_directories(config.out_dir);
        std::ofstream(std::filesystem::path(config.out_dir) / "diagnostic.txt") << "error=" << e.what() << "\n";
        throw;
      }
      std::printf("%8s %8s %14s %8s\n", "nx", "ny", "L1(h)", "rate");
      for (std::size_t l = 0; l < t.nx.size(); ++l) {
        if (l == 0) {
          std::printf("%8d %8d %14.6e %8s\n", t.nx[l], t.ny[l], t.errors[l][0], "-");
        } else {
          std::printf("%8d %8d %14.6e %8.3f\n", t.nx[l], t.ny[l], t.errors[l][0], t.rates[l - 1][0]);
        }
      }
      return ssw::exit_ok;
    }
  } catch (const ssw::ConfigError& e) {
    std::cerr << "ssw: config error: " << e.what() << "\n";
    return ssw::exit_config;
  } catch (const ssw::NonPhysicalState& e) {
    std::cerr << "ssw: numerical abort: " << e.what() << "\n";
    return ssw::exit_numerical;
  } catch (const std::exception& e) {
    std::cerr << "ssw: error: " << e.what() << "\n";
    return 1;
  }
  return ssw::exit_ok;
}
