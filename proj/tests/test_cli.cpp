#include "doctest.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "commands.hpp"
#include "json.hpp"
#include "rabiqpt/csv.hpp"
#include "rabiqpt/modulation.hpp"

using namespace rabiqpt;
using cli::RunConfig;

namespace {

template <typename Fn>
std::string capture(Fn&& fn) {
  std::ostringstream s;
  REQUIRE(fn(s) == cli::exit_ok);
  return s.str();
}

csv::Table parse(const std::string& text) {
  std::istringstream in(text);
  return csv::read(in);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("params report") {
    RunConfig cfg;
    cfg.v = 0.33;
    auto j = nlohmann::json::parse(capture([&](auto& o) { return cli::cmd_params(cfg, o); }));
    CHECK(j["effective"]["m0"] == -6);
    CHECK(j["effective"]["gr_over_omega_c_eff"].get<double>() == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(j["tool"] == cli::tool_version);
    CHECK(j["zero_point"].get<double>() == doctest::Approx(1.0 / 3.0));
    CHECK(j["regime"]["effective"] == "deep-strong");
    CHECK(j["rwa"]["v_over_delta"]["skipped"] == true);

    cfg.v = 0.49;
    j = nlohmann::json::parse(capture([&](auto& o) { return cli::cmd_params(cfg, o); }));
    CHECK(j["effective"]["gr_over_omega_c_eff"].get<double>() == doctest::Approx(2.5).epsilon(1e-12));

    cfg.g = 0.0;
    cfg.xi = 1.3;
    j = nlohmann::json::parse(capture([&](auto& o) { return cli::cmd_params(cfg, o); }));
    CHECK(j["effective"]["g_r"] == 0.0);
    CHECK(j["effective"]["g_c"] == 0.0);

    cfg.v = 5.0;
    j = nlohmann::json::parse(capture([&](auto& o) { return cli::cmd_params(cfg, o); }));
    CHECK(j["zero_point"].is_null());
  }

  TEST_CASE("sweep schema, endpoints and crossings") {
    RunConfig cfg;
    cfg.v = 0.33;
    const auto text = capture([&](auto& o) { return cli::cmd_sweep(cfg, o); });
    const auto t = parse(text);
    CHECK(t.header == std::vector<std::string>{"xi", "gr_over_omega_c_eff", "gr_over_omega0_eff",
                                               "gc_over_delta_m0"});
    CHECK(t.rows.size() == 601);
    CHECK(t.number(0, "gr_over_omega_c_eff") == doctest::Approx(5.0).epsilon(1e-11));
    CHECK(t.number(600, "gr_over_omega_c_eff") == doctest::Approx(-1.30026).epsilon(1e-5));
    CHECK(std::stod(t.meta_value("rwa_line_crossings")) == doctest::Approx(2.47549).epsilon(1e-5));
    CHECK(t.meta_value("m0") == "-6");
    CHECK(t.meta_value("tool") == cli::tool_version);
    CHECK(text == capture([&](auto& o) { return cli::cmd_sweep(cfg, o); }));

    cfg.g = 0.0;
    const auto zero = parse(capture([&](auto& o) { return cli::cmd_sweep(cfg, o); }));
    for (std::size_t r = 0; r < zero.rows.size(); ++r) {
      CHECK(zero.number(r, "gr_over_omega_c_eff") == 0.0);
      CHECK(zero.number(r, "gr_over_omega0_eff") == 0.0);
      CHECK(zero.number(r, "gc_over_delta_m0") == 0.0);
    }
  }

  TEST_CASE("fidelity artifact") {
    RunConfig cfg;
    cfg.frame = "second";
    cfg.v = 0.49;
    cfg.xi = 1.36;
    cfg.samples = 201;
    const auto text = capture([&](auto& o) { return cli::cmd_fidelity(cfg, o); });
    const auto t = parse(text);
    CHECK(t.header == std::vector<std::string>{"t", "F"});
    CHECK(t.rows.size() == 201);
    const double g_r = effective_params(ModelParams::resonant(1.36, 0.49)).g_r;
    CHECK(std::stod(t.meta_value("t_max")) ==
          doctest::Approx(2 * std::numbers::pi / std::abs(g_r)).epsilon(1e-11));
    CHECK(t.meta_value("window").find("2 pi / |g_r|") != std::string::npos);
    CHECK(std::stod(t.meta_value("F_min")) >= 0.99);
    CHECK(t.meta_value("hamiltonian_b") == "eff_jc");
    CHECK(text == capture([&](auto& o) { return cli::cmd_fidelity(cfg, o); }));

    cfg.self_check = true;
    const auto self = parse(capture([&](auto& o) { return cli::cmd_fidelity(cfg, o); }));
    for (std::size_t r = 0; r < self.rows.size(); ++r) CHECK(self.number(r, "F") == doctest::Approx(1.0).epsilon(1e-13));

    RunConfig first;
    first.frame = "first";
    first.xi = 2.48;
    first.samples = 51;
    first.t_max = 5.0;
    const auto f = parse(capture([&](auto& o) { return cli::cmd_fidelity(first, o); }));
    CHECK(f.meta_value("window") == "user-supplied");
    CHECK(f.meta_value("hamiltonian_a") == "rot_frame_exact");
    first.t_max.reset();
    first.samples = 11;
    first.xi = 1.0;
    const auto d = parse(capture([&](auto& o) { return cli::cmd_fidelity(first, o); }));
    CHECK(d.meta_value("t_max") == "50");
    CHECK(d.meta_value("window").find("longer windows") != std::string::npos);

    RunConfig bad;
    bad.frame = "third";
    std::ostringstream sink;
    CHECK(cli::run_guarded([&] { return cli::cmd_fidelity(bad, sink); }, sink) == cli::exit_config);
  }

  TEST_CASE("guard failure maps to exit code 3") {
    RunConfig cfg;
    cfg.xi = 2.48;
    cfg.t_max = 5.0;
    cfg.samples = 11;
    cfg.step = 2.0;
    cfg.max_halvings = 1;
    std::ostringstream out, err;
    CHECK(cli::run_guarded([&] { return cli::cmd_fidelity(cfg, out); }, err) == cli::exit_convergence);
    CHECK(err.str().find("convergence") != std::string::npos);
  }

  TEST_CASE("phase diagram artifacts") {
    RunConfig cfg;
    cfg.v = 0.49;
    cfg.delta_min = -0.01;
    cfg.delta_max = 0.01;
    cfg.delta_points = 3;
    cfg.xi_points = 31;
    std::ostringstream cells, bounds;
    REQUIRE(cli::cmd_phase_diagram(cfg, cells, bounds) == cli::exit_ok);
    const auto c = parse(cells.str());
    const auto b = parse(bounds.str());
    CHECK(c.header.size() == 5);
    CHECK(c.rows.size() == 93);
    CHECK(c.meta_value("artifact") == "cells");
    CHECK(b.meta_value("artifact") == "boundaries");
    CHECK(b.header[0] == "curve_id");
    CHECK(b.rows.size() == 6);
  }

  TEST_CASE("ladder artifact") {
    RunConfig cfg;
    cfg.v = 0.49;
    cfg.xi_points = 301;
    cfg.cutoff_check = true;
    const auto t = parse(capture([&](auto& o) { return cli::cmd_ladder(cfg, o); }));
    CHECK(t.header == std::vector<std::string>{"xi", "n_bar"});
    CHECK(t.number(0, "n_bar") == 1.5);
    CHECK(t.meta_value("boundaries").find("2-|1-") != std::string::npos);
    CHECK(t.meta_value("cutoff_check") == "ok");
  }

  TEST_CASE("spectrum artifact") {
    RunConfig cfg;
    cfg.g_points = 41;
    cfg.numeric_check = true;
    const auto t = parse(capture([&](auto& o) { return cli::cmd_spectrum(cfg, o); }));
    CHECK(t.header == std::vector<std::string>{"g_over_wc", "level_id", "E_over_wc"});
    CHECK(t.rows.size() == 41 * 11);
    CHECK(std::stod(t.meta_value("numeric_check_max_deviation")) <= 1e-9);
    CHECK(t.meta_value("critical_couplings").find("g0=1 g1=2.41421356237 g2=3.14626436994") == 0);
    // g = 0: E_{n,+/-} = n - 1/2 at resonance, |g,0> at -1/2.
    CHECK(t.rows[0][1] == "g0");
    CHECK(t.number(0, "E_over_wc") == -0.5);
    for (std::size_t r = 1; r < 11; ++r) {
      const int n = std::stoi(t.rows[r][1]);
      CHECK(t.number(r, "E_over_wc") == n - 0.5);
    }
  }

  TEST_CASE("invalid configuration maps to exit code 2") {
    RunConfig cfg;
    cfg.g = -1.0;
    std::ostringstream out, err;
    CHECK(cli::run_guarded([&] { return cli::cmd_params(cfg, out); }, err) == cli::exit_config);
    RunConfig grid;
    grid.xi_points = 1;
    CHECK(cli::run_guarded([&] { return cli::cmd_sweep(grid, out); }, err) == cli::exit_config);
  }
}
