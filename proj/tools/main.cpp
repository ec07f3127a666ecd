// rabiqpt command-line front end.
//
//   rabiqpt <command> [--config FILE] [flags]
//
// The config file holds `key = value` lines (# starts a comment); keys are
// the long flag names without dashes. Flags given on the command line win.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using rabiqpt::cli::RunConfig;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Turns the config file into flag tokens. Boolean keys become a bare flag
// when true and are dropped when false.
std::vector<std::string> config_tokens(const std::string& path,
                                       const std::set<std::string>& flags) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
  std::vector<std::string> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw CLI::ValidationError("--config", path + ":" + std::to_string(number) +
                                                 ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    std::replace(key.begin(), key.end(), '_', '-');
    if (key.empty() || key == "config") {
      throw CLI::ValidationError("--config", path + ":" + std::to_string(number) + ": bad key");
    }
    if (flags.count(key)) {
      if (value == "true" || value == "1") {
        out.push_back("--" + key);
      } else if (value != "false" && value != "0") {
        throw CLI::ValidationError("--config", key + " expects true or false");
      }
      continue;
    }
    out.push_back("--" + key);
    out.push_back(value);
  }
  return out;
}

void model_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--v", cfg.v, "modulation frequency v / omega_c")->capture_default_str();
  sub->add_option("--xi", cfg.xi, "modulation amplitude xi")->capture_default_str();
  sub->add_option("--delta", cfg.delta, "detuning (omega0 - omega_c) / omega_c")
      ->capture_default_str();
  sub->add_option("--g", cfg.g, "coupling g / omega_c")->capture_default_str();
  sub->add_option("--n-max", cfg.n_max, "photon-number cutoff")->capture_default_str();
  sub->add_option("--threshold", cfg.threshold, "RWA validity ratio")->capture_default_str();
}

void xi_grid_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--xi-min", cfg.xi_min)->capture_default_str();
  sub->add_option("--xi-max", cfg.xi_max)->capture_default_str();
  sub->add_option("--xi-points", cfg.xi_points)->capture_default_str();
  sub->add_option("--prescan-step", cfg.prescan_step, "bracketing grid spacing in xi")
      ->capture_default_str();
}

bool write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return static_cast<bool>(std::cout);
  }
  std::ofstream f(path, std::ios::binary);
  f << text;
  return static_cast<bool>(f);
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = rabiqpt::cli;
  RunConfig cfg;
  std::string out_path = "-";
  std::string prefix = "phase_diagram";
  std::string config_path;

  CLI::App app{"Frequency-modulated Rabi model: effective deep-strong JC simulator"};
  app.set_version_flag("--version", cli::tool_version);
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  std::set<std::string> flag_keys{"self-check", "numeric-check", "cutoff-check"};

  auto common = [&](CLI::App* sub, bool csv_out) {
    model_options(sub, cfg);
    sub->add_option("--config", config_path, "key = value file; flags override it");
    if (csv_out) sub->add_option("--out", out_path, "output path, - for stdout");
    sub->add_flag("--cutoff-check", cfg.cutoff_check, "recompute at 2 n_max and report");
  };

  auto* params = app.add_subcommand("params", "effective parameters and RWA report (JSON)");
  common(params, true);

  auto* sweep = app.add_subcommand("sweep", "coupling ratios against xi (CSV)");
  common(sweep, true);
  xi_grid_options(sweep, cfg);
  sweep->add_option("--rwa-level", cfg.rwa_level, "|g_c| / Delta_m0 reference line")
      ->capture_default_str();

  auto* fidelity = app.add_subcommand("fidelity", "fidelity of an approximation over time (CSV)");
  common(fidelity, true);
  fidelity->add_option("--frame", cfg.frame, "first or second rotating frame")
      ->check(CLI::IsMember({"first", "second"}))
      ->capture_default_str();
  fidelity->add_option("--alpha", cfg.alpha, "coherent amplitude")->capture_default_str();
  fidelity->add_option("--t-max", cfg.t_max, "window length in 1 / omega_c");
  fidelity->add_option("--samples", cfg.samples)->capture_default_str();
  fidelity->add_option("--step", cfg.step, "base step, 0 = (2 pi / v) / 200")
      ->capture_default_str();
  fidelity->add_option("--tolerance", cfg.tolerance, "step-halving guard")->capture_default_str();
  fidelity->add_option("--max-halvings", cfg.max_halvings)->capture_default_str();
  fidelity->add_option("--bessel-cutoff", cfg.bessel_cutoff, "sideband truncation |n|");
  fidelity->add_flag("--self-check", cfg.self_check, "compare a Hamiltonian with itself");

  auto* phase = app.add_subcommand("phase-diagram", "ground-state phases over (delta, xi) (2 CSVs)");
  common(phase, false);
  xi_grid_options(phase, cfg);
  phase->add_option("--delta-min", cfg.delta_min)->capture_default_str();
  phase->add_option("--delta-max", cfg.delta_max)->capture_default_str();
  phase->add_option("--delta-points", cfg.delta_points)->capture_default_str();
  phase->add_option("--stitch-factor", cfg.stitch_factor,
                    "join boundary points of adjacent rows within this many xi spacings")
      ->capture_default_str();
  phase->add_option("--out", prefix, "writes PREFIX_cells.csv and PREFIX_boundaries.csv")
      ->capture_default_str();

  auto* ladder = app.add_subcommand("ladder", "ground-state photon number against xi (CSV)");
  common(ladder, true);
  xi_grid_options(ladder, cfg);

  auto* spectrum = app.add_subcommand("spectrum", "JC levels against g (CSV)");
  common(spectrum, true);
  spectrum->add_option("--g-min", cfg.g_min)->capture_default_str();
  spectrum->add_option("--g-max", cfg.g_max)->capture_default_str();
  spectrum->add_option("--g-points", cfg.g_points)->capture_default_str();
  spectrum->add_option("--levels", cfg.levels, "highest n written")->capture_default_str();
  spectrum->add_flag("--numeric-check", cfg.numeric_check, "compare with diagonalization");

  // Config values go in front of the command-line flags so TakeLast lets the
  // command line win.
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    const auto it = std::find(args.begin(), args.end(), "--config");
    std::string file;
    if (it != args.end() && it + 1 != args.end()) {
      file = *(it + 1);
    } else {
      for (const auto& a : args) {
        if (a.rfind("--config=", 0) == 0) file = a.substr(9);
      }
    }
    if (!file.empty() && !args.empty()) {
      const auto tokens = config_tokens(file, flag_keys);
      args.insert(args.begin() + 1, tokens.begin(), tokens.end());
    }
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::exit_config;
  }

  auto emit = [&](auto&& command) {
    return cli::run_guarded(
        [&] {
          std::ostringstream buf;
          const int rc = command(buf);
          if (!write_file(out_path, buf.str())) {
            throw rabiqpt::InvalidParams("cannot write " + out_path);
          }
          return rc;
        },
        std::cerr);
  };

  if (*params) return emit([&](std::ostream& o) { return cli::cmd_params(cfg, o); });
  if (*sweep) return emit([&](std::ostream& o) { return cli::cmd_sweep(cfg, o); });
  if (*fidelity) return emit([&](std::ostream& o) { return cli::cmd_fidelity(cfg, o); });
  if (*ladder) return emit([&](std::ostream& o) { return cli::cmd_ladder(cfg, o); });
  if (*spectrum) return emit([&](std::ostream& o) { return cli::cmd_spectrum(cfg, o); });
  return cli::run_guarded(
      [&] {
        std::ostringstream cells, bounds;
        const int rc = cli::cmd_phase_diagram(cfg, cells, bounds);
        for (const auto& [path, buf] : {std::pair{prefix + "_cells.csv", &cells},
                                        std::pair{prefix + "_boundaries.csv", &bounds}}) {
          if (!write_file(path, buf->str())) throw rabiqpt::InvalidParams("cannot write " + path);
        }
        return rc;
      },
      std::cerr);
}
