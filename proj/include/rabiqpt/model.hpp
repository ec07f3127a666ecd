#pragma once

#include <string_view>

namespace rabiqpt {

// Lab-frame parameters of the frequency-modulated Rabi model.
//
// Units: hbar = 1, every frequency in rad/time. The CLI works in units of
// the cavity frequency, so omega_c = 1 there. The atomic frequency is
// modulated as omega0 + xi * v * cos(v t).
class ModelParams {
 public:
  // Throws InvalidParams unless omega_c > 0, v > 0, g >= 0, xi >= 0 and all
  // values are finite.
  ModelParams(double omega0, double omega_c, double g, double xi, double v);

  // Resonant parameters (omega0 = omega_c = 1) with coupling g = 0.05.
  static ModelParams resonant(double xi, double v, double g = 0.05);

  double omega0() const { return omega0_; }
  double omega_c() const { return omega_c_; }
  double g() const { return g_; }
  double xi() const { return xi_; }
  double v() const { return v_; }

  // Atom-cavity detuning omega0 - omega_c.
  double delta() const { return omega0_ - omega_c_; }

  ModelParams with_xi(double xi) const;
  ModelParams with_g(double g) const;
  ModelParams with_v(double v) const;
  // Keeps omega_c and moves omega0 so that delta() == delta.
  ModelParams with_delta(double delta) const;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;

 private:
  double omega0_;
  double omega_c_;
  double g_;
  double xi_;
  double v_;
};

enum class Regime { strong, ultrastrong, deep_strong };

std::string_view to_string(Regime r);

struct CouplingRegime {
  Regime label;
  double ratio;  // g / omega_c
};

// strong: ratio < 0.1, ultrastrong: 0.1 <= ratio < 1, deep-strong: ratio >= 1.
CouplingRegime classify_regime(const ModelParams& p);
CouplingRegime classify_regime(double g, double omega_c);

}  // namespace rabiqpt
