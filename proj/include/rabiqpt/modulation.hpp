#pragma once

#include <vector>

#include "rabiqpt/model.hpp"

namespace rabiqpt {

// Bessel function of the first kind, integer order.
//
// Accuracy envelope: |n| <= 200 and 0 <= x <= 50, relative error <= 1e-12
// (absolute 1e-14 near zeros). Values that underflow a double return 0.
// Throws OutOfEnvelope outside the envelope.
double bessel_j(int n, double x);

// J_0(x) .. J_n_max(x) from a single backward recurrence. Same envelope.
std::vector<double> bessel_j_orders(int n_max, double x);

struct SidebandChoice {
  int m0 = 0;
  // Two sidebands were equally close (within 1e-12 relative); the one with
  // smaller |m| was taken.
  bool tie = false;
};

// Integer m minimizing |omega0 + omega_c + m v|.
SidebandChoice select_sideband(const ModelParams& p);
int select_m0(const ModelParams& p);

// Detuning of the m-th counter-rotating sideband, omega0 + omega_c + m v.
double sideband_detuning(const ModelParams& p, int m);

// Parameters of the effective anisotropic Rabi / JC model obtained after
// discarding the fast sidebands.
struct EffectiveParams {
  int m0 = 0;
  bool tie = false;
  double delta_m0 = 0.0;    // omega0 + omega_c + m0 v
  double g_r = 0.0;         // g J_0(xi), rotating coupling
  double g_c = 0.0;         // g J_m0(xi), counter-rotating coupling
  double omega0_eff = 0.0;  // (delta_m0 + delta) / 2
  double omega_c_eff = 0.0; // (delta_m0 - delta) / 2
  double delta_eff = 0.0;   // equals the lab-frame detuning

  // Ratios plotted against xi when scanning the modulation amplitude.
  double gr_over_omega_c_eff() const { return g_r / omega_c_eff; }
  double gr_over_omega0_eff() const { return g_r / omega0_eff; }
  double gc_over_delta_m0() const;  // |g_c| / |delta_m0|
};

EffectiveParams effective_params(const ModelParams& p);

// Modulation frequency -(omega0 + omega_c) / m0 at which the current
// sideband is exactly resonant. Throws M0Zero when m0 == 0.
double zero_point(const ModelParams& p);
double zero_point(double omega0, double omega_c, int m0);

struct RwaCondition {
  double ratio = 0.0;
  bool pass = false;
  bool skipped = false;
};

// Validity diagnostics for the two successive rotating-wave approximations.
// The first three conditions require ratio >= threshold, the last one
// requires |g_c| / |delta_m0| <= 1 / (10 threshold).
struct RwaReport {
  double threshold = 10.0;
  RwaCondition v_over_delta;     // skipped when delta == 0
  RwaCondition v_over_delta_m0;
  RwaCondition v_over_g;         // also covers v >> g |J_n(xi)|, since |J_n| <= 1
  RwaCondition gc_over_delta_m0;

  bool first_frame_valid() const {
    return v_over_delta.pass && v_over_delta_m0.pass && v_over_g.pass;
  }
  bool jc_valid() const { return gc_over_delta_m0.pass; }
};

RwaReport rwa_report(const ModelParams& p, double threshold = 10.0);

// Values of xi in [xi_lo, xi_hi] where |g_c| / |delta_m0| crosses `level`,
// bracketed on a grid of spacing `step` and refined by bisection to 1e-12.
std::vector<double> rwa_line_crossings(const ModelParams& base, double xi_lo, double xi_hi,
                                       double level = 0.01, double step = 1e-3);

}  // namespace rabiqpt
