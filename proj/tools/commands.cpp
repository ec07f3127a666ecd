#include "commands.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "rabiqpt/csv.hpp"
#include "rabiqpt/dynamics.hpp"
#include "rabiqpt/fockspace.hpp"
#include "rabiqpt/model.hpp"
#include "rabiqpt/modulation.hpp"
#include "rabiqpt/phases.hpp"
#include "rabiqpt/spectrum.hpp"

namespace rabiqpt::cli {

namespace {

constexpr double cutoff_flag = 1e-8;

ModelParams model_of(const RunConfig& cfg) {
  return ModelParams(1.0 + cfg.delta, 1.0, cfg.g, cfg.xi, cfg.v);
}

void require(bool ok, const char* what) {
  if (!ok) throw InvalidParams(what);
}

std::string rwa_text(const RwaCondition& c) {
  if (c.skipped) return "skipped";
  return csv::format_number(c.ratio) + (c.pass ? " pass" : " FAIL");
}

std::string labels_text(const std::vector<Boundary>& bs) {
  std::string s;
  for (const auto& b : bs) {
    if (!s.empty()) s += "; ";
    s += csv::format_number(b.xi) + " " + b.left.name() + "|" + b.right.name();
  }
  return s.empty() ? "none" : s;
}

// Metadata shared by every artifact: version, lab parameters, and the
// effective parameters with their RWA report at p.
void write_preamble(csv::Writer& w, const char* command, const RunConfig& cfg,
                    const ModelParams& p) {
  w.meta("tool", tool_version);
  w.meta("command", command);
  w.meta("units", "omega_c = 1");
  w.meta("v", p.v());
  w.meta("xi", p.xi());
  w.meta("delta", p.delta());
  w.meta("g", p.g());
  w.meta("n_max", static_cast<double>(cfg.n_max));
  const EffectiveParams eff = effective_params(p);
  w.meta("m0", static_cast<double>(eff.m0));
  if (eff.tie) w.meta("m0_tie", "two sidebands equally close; smaller |m| taken");
  w.meta("delta_m0", eff.delta_m0);
  w.meta("g_r", eff.g_r);
  w.meta("g_c", eff.g_c);
  w.meta("omega0_eff", eff.omega0_eff);
  w.meta("omega_c_eff", eff.omega_c_eff);
  w.meta("delta_eff", eff.delta_eff);
  const RwaReport r = rwa_report(p, cfg.threshold);
  w.meta("rwa_threshold", r.threshold);
  w.meta("rwa_v_over_delta", rwa_text(r.v_over_delta));
  w.meta("rwa_v_over_delta_m0", rwa_text(r.v_over_delta_m0));
  w.meta("rwa_v_over_g", rwa_text(r.v_over_g));
  w.meta("rwa_gc_over_delta_m0", rwa_text(r.gc_over_delta_m0));
  if (eff.delta_m0 <= 0.0) {
    w.meta("caveat", "delta_m0 <= 0: negative effective frequencies, outside the derived model");
  }
}

nlohmann::json rwa_json(const RwaCondition& c) {
  return {{"ratio", c.ratio}, {"pass", c.pass}, {"skipped", c.skipped}};
}

ScanOptions scan_options(const RunConfig& cfg, int n_max) {
  ScanOptions o;
  o.prescan_step = cfg.prescan_step;
  o.n_max = n_max;
  return o;
}

}  // namespace

int cmd_params(const RunConfig& cfg, std::ostream& out) {
  const ModelParams p = model_of(cfg);
  const EffectiveParams eff = effective_params(p);
  const RwaReport r = rwa_report(p, cfg.threshold);
  const CouplingRegime lab = classify_regime(p);
  const CouplingRegime effective = classify_regime(std::abs(eff.g_r), std::abs(eff.omega_c_eff));

  nlohmann::json j;
  j["tool"] = tool_version;
  j["units"] = "omega_c = 1";
  j["model"] = {{"omega0", p.omega0()}, {"omega_c", p.omega_c()}, {"g", p.g()},
                {"xi", p.xi()},         {"v", p.v()},             {"delta", p.delta()}};
  j["effective"] = {{"m0", eff.m0},
                    {"m0_tie", eff.tie},
                    {"delta_m0", eff.delta_m0},
                    {"g_r", eff.g_r},
                    {"g_c", eff.g_c},
                    {"omega0_eff", eff.omega0_eff},
                    {"omega_c_eff", eff.omega_c_eff},
                    {"delta_eff", eff.delta_eff},
                    {"gr_over_omega_c_eff", eff.gr_over_omega_c_eff()},
                    {"gr_over_omega0_eff", eff.gr_over_omega0_eff()},
                    {"gc_over_delta_m0", eff.gc_over_delta_m0()}};
  j["rwa"] = {{"threshold", r.threshold},
              {"v_over_delta", rwa_json(r.v_over_delta)},
              {"v_over_delta_m0", rwa_json(r.v_over_delta_m0)},
              {"v_over_g", rwa_json(r.v_over_g)},
              {"gc_over_delta_m0", rwa_json(r.gc_over_delta_m0)},
              {"first_frame_valid", r.first_frame_valid()},
              {"jc_valid", r.jc_valid()}};
  try {
    j["zero_point"] = zero_point(p);
  } catch (const M0Zero&) {
    j["zero_point"] = nullptr;
  }
  j["regime"] = {{"lab", std::string(to_string(lab.label))},
                 {"lab_ratio", lab.ratio},
                 {"effective", std::string(to_string(effective.label))},
                 {"effective_ratio", effective.ratio}};
  if (eff.delta_m0 <= 0.0) j["caveat"] = "delta_m0 <= 0: negative effective frequencies";

  std::ostringstream buf;
  buf << j.dump(2) << '\n';
  out << buf.str();
  return exit_ok;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  require(cfg.xi_points >= 2, "xi_points must be >= 2");
  require(cfg.xi_max > cfg.xi_min, "xi_max must exceed xi_min");
  const ModelParams base = model_of(cfg).with_xi(cfg.xi_min);
  const auto grid = linspace(cfg.xi_min, cfg.xi_max, cfg.xi_points);
  const auto crossings =
      rwa_line_crossings(base, cfg.xi_min, cfg.xi_max, cfg.rwa_level, cfg.prescan_step);

  std::ostringstream buf;
  csv::Writer w(buf);
  write_preamble(w, "sweep", cfg, base);
  w.meta("rwa_level", cfg.rwa_level);
  std::string cross;
  for (double x : crossings) cross += (cross.empty() ? "" : " ") + csv::format_number(x);
  w.meta("rwa_line_crossings", cross.empty() ? "none" : cross);
  w.header({"xi", "gr_over_omega_c_eff", "gr_over_omega0_eff", "gc_over_delta_m0"});
  for (double xi : grid) {
    const EffectiveParams eff = effective_params(base.with_xi(xi));
    w.row({xi, eff.gr_over_omega_c_eff(), eff.gr_over_omega0_eff(), eff.gc_over_delta_m0()});
  }
  out << buf.str();
  return exit_ok;
}

int cmd_fidelity(const RunConfig& cfg, std::ostream& out) {
  require(cfg.frame == "first" || cfg.frame == "second", "frame must be 'first' or 'second'");
  require(cfg.samples >= 2, "samples must be >= 2");
  require(cfg.alpha >= 0.0, "alpha must be >= 0");
  const ModelParams p = model_of(cfg);
  const EffectiveParams eff = effective_params(p);
  const bool first = cfg.frame == "first";

  double t_max = 0.0;
  std::string window;
  if (cfg.t_max) {
    t_max = *cfg.t_max;
    window = "user-supplied";
  } else if (first) {
    t_max = 50.0;
    window = "default omega_c T = 50; min F keeps falling on longer windows";
  } else {
    require(eff.g_r != 0.0, "g_r = 0: T = 2 pi / |g_r| is undefined, pass --t-max");
    t_max = 2.0 * std::numbers::pi / std::abs(eff.g_r);
    window = "default T = 2 pi / |g_r|, one effective vacuum Rabi period";
  }
  require(t_max > 0.0 && std::isfinite(t_max), "t_max must be positive");

  const auto kind_a = first ? HamiltonianKind::rot_frame_exact : HamiltonianKind::aniso_rabi;
  const auto kind_b = cfg.self_check ? kind_a
                      : first        ? HamiltonianKind::eff_first_frame
                                     : HamiltonianKind::eff_jc;
  PropagationOptions opts;
  opts.step = cfg.step;
  opts.tolerance = cfg.tolerance;
  opts.max_halvings = cfg.max_halvings;
  const auto grid = uniform_grid(t_max, cfg.samples);

  auto run = [&](int n_max, Propagation* pa, Propagation* pb) {
    const FockSpace space(n_max);
    const StateVector psi0 = superposed_coherent_state(space, cfg.alpha);
    const auto a = HamiltonianSpec::make(kind_a, p, cfg.bessel_cutoff);
    const auto b = HamiltonianSpec::make(kind_b, p, cfg.bessel_cutoff);
    *pa = propagate(a, psi0, grid, opts);
    *pb = cfg.self_check ? *pa : propagate(b, psi0, grid, opts);
    return fidelity_trace(*pa, *pb, grid);
  };
  Propagation pa, pb;
  const FidelityTrace f = run(cfg.n_max, &pa, &pb);

  std::ostringstream buf;
  csv::Writer w(buf);
  write_preamble(w, "fidelity", cfg, p);
  w.meta("frame", cfg.frame);
  w.meta("hamiltonian_a", std::string(to_string(kind_a)));
  w.meta("hamiltonian_b", std::string(to_string(kind_b)));
  w.meta("initial_state", "(|g> + |e>) |alpha> / sqrt(2)");
  w.meta("alpha", cfg.alpha);
  w.meta("t_max", t_max);
  w.meta("samples", static_cast<double>(cfg.samples));
  w.meta("window", window);
  w.meta("F_min", f.min);
  w.meta("F_final", f.final);
  w.meta("t_argmin", f.argmin);
  w.meta("step_a", pa.step);
  w.meta("halvings_a", static_cast<double>(pa.halvings));
  w.meta("guard_difference_a", pa.guard_difference);
  w.meta("step_b", pb.step);
  w.meta("halvings_b", static_cast<double>(pb.halvings));
  w.meta("guard_difference_b", pb.guard_difference);
  w.meta("norm_drift", std::max(pa.max_norm_drift, pb.max_norm_drift));
  if (cfg.cutoff_check) {
    Propagation qa, qb;
    const FidelityTrace g = run(2 * cfg.n_max, &qa, &qb);
    double shift = 0.0;
    for (std::size_t k = 0; k < f.values.size(); ++k) {
      shift = std::max(shift, std::abs(f.values[k] - g.values[k]));
    }
    w.meta("cutoff_check_max_shift", shift);
    w.meta("cutoff_check", shift > cutoff_flag ? "FLAG" : "ok");
  }
  w.header({"t", "F"});
  for (std::size_t k = 0; k < f.times.size(); ++k) w.row({f.times[k], f.values[k]});
  out << buf.str();
  return exit_ok;
}

int cmd_phase_diagram(const RunConfig& cfg, std::ostream& cells, std::ostream& boundaries) {
  require(cfg.xi_points >= 2 && cfg.delta_points >= 1, "grid sizes too small");
  require(cfg.xi_max > cfg.xi_min, "xi_max must exceed xi_min");
  require(cfg.delta_max >= cfg.delta_min, "delta_max must be >= delta_min");
  const ModelParams base = model_of(cfg).with_xi(cfg.xi_min);
  const auto xi_grid = linspace(cfg.xi_min, cfg.xi_max, cfg.xi_points);
  const auto delta_grid = cfg.delta_points == 1
                              ? std::vector<double>{cfg.delta_min}
                              : linspace(cfg.delta_min, cfg.delta_max, cfg.delta_points);
  DiagramOptions opts;
  opts.scan = scan_options(cfg, cfg.n_max);
  opts.stitch_factor = cfg.stitch_factor;
  const PhaseDiagram d = diagram(base, delta_grid, xi_grid, opts);

  std::string cutoff;
  if (cfg.cutoff_check) {
    DiagramOptions wide = opts;
    wide.scan.n_max = 2 * cfg.n_max;
    const PhaseDiagram d2 = diagram(base, delta_grid, xi_grid, wide);
    double shift = 0.0;
    for (std::size_t k = 0; k < d.cells.size(); ++k) {
      shift = std::max(shift, std::abs(d.cells[k].n_bar - d2.cells[k].n_bar));
    }
    cutoff = csv::format_number(shift) + (shift > cutoff_flag ? " FLAG" : " ok");
  }

  auto emit = [&](std::ostream& out, const char* artifact, auto&& body) {
    std::ostringstream buf;
    csv::Writer w(buf);
    write_preamble(w, "phase-diagram", cfg, base);
    w.meta("artifact", artifact);
    w.meta("xi_range", csv::format_number(cfg.xi_min) + " " + csv::format_number(cfg.xi_max));
    w.meta("delta_range",
           csv::format_number(cfg.delta_min) + " " + csv::format_number(cfg.delta_max));
    w.meta("grid", std::to_string(delta_grid.size()) + " x " + std::to_string(xi_grid.size()));
    w.meta("stitch_factor", cfg.stitch_factor);
    if (!cutoff.empty()) w.meta("cutoff_check", cutoff);
    body(w);
    out << buf.str();
  };
  emit(cells, "cells", [&](csv::Writer& w) { write_cells(w, d); });
  emit(boundaries, "boundaries", [&](csv::Writer& w) { write_boundaries(w, d); });
  return exit_ok;
}

int cmd_ladder(const RunConfig& cfg, std::ostream& out) {
  require(cfg.xi_points >= 2, "xi_points must be >= 2");
  require(cfg.xi_max > cfg.xi_min, "xi_max must exceed xi_min");
  const ModelParams base = model_of(cfg).with_xi(cfg.xi_min);
  const auto grid = linspace(cfg.xi_min, cfg.xi_max, cfg.xi_points);
  const auto ladder = photon_ladder(base, grid, cfg.n_max);
  const auto bounds = boundary_scan(base, cfg.xi_min, cfg.xi_max, scan_options(cfg, cfg.n_max));

  std::ostringstream buf;
  csv::Writer w(buf);
  write_preamble(w, "ladder", cfg, base);
  w.meta("boundaries", labels_text(bounds));
  if (cfg.cutoff_check) {
    const auto wide = photon_ladder(base, grid, 2 * cfg.n_max);
    double shift = 0.0;
    for (std::size_t k = 0; k < ladder.size(); ++k) {
      shift = std::max(shift, std::abs(ladder[k].n_bar - wide[k].n_bar));
    }
    w.meta("cutoff_check_max_shift", shift);
    w.meta("cutoff_check", shift > cutoff_flag ? "FLAG" : "ok");
  }
  write_ladder(w, ladder);
  out << buf.str();
  return exit_ok;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  require(cfg.g_points >= 2, "g_points must be >= 2");
  require(cfg.g_max > cfg.g_min && cfg.g_min >= 0.0, "need 0 <= g_min < g_max");
  require(cfg.levels >= 1, "levels must be >= 1");
  require(cfg.levels <= cfg.n_max, "levels must not exceed n_max");
  const double omega_c = 1.0;
  const double omega0 = 1.0 + cfg.delta;
  const double delta = cfg.delta;
  const auto grid = linspace(cfg.g_min, cfg.g_max, cfg.g_points);

  std::ostringstream buf;
  csv::Writer w(buf);
  w.meta("tool", tool_version);
  w.meta("command", "spectrum");
  w.meta("units", "omega_c = 1");
  w.meta("hamiltonian", "omega0 sz/2 + omega_c a^dag a + g (a^dag s- + a s+)");
  w.meta("delta", delta);
  w.meta("levels", static_cast<double>(cfg.levels));
  std::string crit;
  for (int n = 0; n < cfg.levels; ++n) {
    crit += (crit.empty() ? "" : " ");
    try {
      crit += "g" + std::to_string(n) + "=" + csv::format_number(critical_coupling(n, omega_c, delta));
    } catch (const NegativeRadicand&) {
      crit += "g" + std::to_string(n) + "=none";
    }
  }
  w.meta("critical_couplings", crit);
  if (cfg.numeric_check) {
    const FockSpace space(cfg.n_max);
    double worst = 0.0;
    for (double g : grid) {
      const auto exact = truncated_jc_spectrum(cfg.n_max, omega0, omega_c, g);
      const auto numeric = diagonalize(jc_hamiltonian(space, omega0, omega_c, g));
      for (std::size_t k = 0; k < exact.size(); ++k) {
        worst = std::max(worst, std::abs(exact[k] - numeric.values(static_cast<Eigen::Index>(k))));
      }
    }
    w.meta("numeric_check_max_deviation", worst);
  }
  w.header({"g_over_wc", "level_id", "E_over_wc"});
  for (double g : grid) {
    const std::string gs = csv::format_number(g);
    w.row_text({gs, "g0", csv::format_number(-0.5 * omega0)});
    for (int n = 1; n <= cfg.levels; ++n) {
      for (auto b : {Branch::minus, Branch::plus}) {
        const std::string id = std::to_string(n) + (b == Branch::minus ? "-" : "+");
        w.row_text({gs, id, csv::format_number(jc_eigenenergy(n, b, omega_c, delta, g))});
      }
    }
  }
  out << buf.str();
  return exit_ok;
}

}  // namespace rabiqpt::cli
