#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "rabiqpt/error.hpp"

namespace rabiqpt::cli {

inline constexpr const char* tool_version = "rabiqpt 1.0.0";

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_config = 2;
inline constexpr int exit_convergence = 3;

// Every frequency is in units of omega_c (omega_c = 1, omega0 = 1 + delta).
struct RunConfig {
  double v = 0.33;
  double xi = 0.0;
  double delta = 0.0;
  double g = 0.05;
  int n_max = 30;
  double threshold = 10.0;

  // sweep / ladder / phase-diagram
  double xi_min = 0.0;
  double xi_max = 3.0;
  int xi_points = 601;
  double delta_min = -0.1;
  double delta_max = 0.1;
  int delta_points = 201;
  double prescan_step = 1e-3;
  double rwa_level = 0.01;
  double stitch_factor = 5.0;  // boundary rows join within this many xi spacings

  // fidelity
  std::string frame = "first";
  double alpha = 0.1;
  std::optional<double> t_max;
  int samples = 2000;
  double step = 0.0;  // base step, 0 = (2 pi / v) / 200
  double tolerance = 1e-8;
  int max_halvings = 12;
  std::optional<int> bessel_cutoff;
  bool self_check = false;

  // spectrum
  double g_min = 0.0;
  double g_max = 4.0;
  int g_points = 401;
  int levels = 5;
  bool numeric_check = false;

  // Recompute at 2 n_max and flag observable shifts above 1e-8.
  bool cutoff_check = false;
};

// Each command writes its artifact(s) to `out` (CSV with '#' metadata
// preamble, or JSON for params) and returns an exit code. Library errors
// propagate as exceptions; run_guarded maps them to exit codes.
int cmd_params(const RunConfig& cfg, std::ostream& out);
int cmd_sweep(const RunConfig& cfg, std::ostream& out);
int cmd_fidelity(const RunConfig& cfg, std::ostream& out);
int cmd_phase_diagram(const RunConfig& cfg, std::ostream& cells, std::ostream& boundaries);
int cmd_ladder(const RunConfig& cfg, std::ostream& out);
int cmd_spectrum(const RunConfig& cfg, std::ostream& out);

// Runs fn, printing library errors to err: convergence failures give exit
// code 3, every other error exit code 2.
template <typename Fn>
int run_guarded(Fn&& fn, std::ostream& err) {
  try {
    return fn();
  } catch (const StepTooLarge& e) {
    err << "convergence error: " << e.what() << '\n';
    return exit_convergence;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_config;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_config;
  }
}

}  // namespace rabiqpt::cli
