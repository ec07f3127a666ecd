#include "rabiqpt/model.hpp"

#include <cmath>
#include <string>

#include "rabiqpt/error.hpp"

namespace rabiqpt {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParams("invalid model parameters: " + what);
}

}  // namespace

ModelParams::ModelParams(double omega0, double omega_c, double g, double xi,
                         double v)
    : omega0_(omega0), omega_c_(omega_c), g_(g), xi_(xi), v_(v) {
  require(std::isfinite(omega0) && std::isfinite(omega_c) &&
              std::isfinite(g) && std::isfinite(xi) && std::isfinite(v),
          "non-finite value");
  require(omega_c > 0.0, "omega_c must be > 0");
  require(v > 0.0, "v must be > 0");
  require(g >= 0.0, "g must be >= 0");
  require(xi >= 0.0, "xi must be >= 0");
}

ModelParams ModelParams::resonant(double xi, double v, double g) {
  return ModelParams(1.0, 1.0, g, xi, v);
}

ModelParams ModelParams::with_xi(double xi) const {
  return ModelParams(omega0_, omega_c_, g_, xi, v_);
}

ModelParams ModelParams::with_g(double g) const {
  return ModelParams(omega0_, omega_c_, g, xi_, v_);
}

ModelParams ModelParams::with_v(double v) const {
  return ModelParams(omega0_, omega_c_, g_, xi_, v);
}

ModelParams ModelParams::with_delta(double delta) const {
  return ModelParams(omega_c_ + delta, omega_c_, g_, xi_, v_);
}

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::strong:
      return "strong";
    case Regime::ultrastrong:
      return "ultrastrong";
    case Regime::deep_strong:
      return "deep-strong";
  }
  return "unknown";
}

CouplingRegime classify_regime(double g, double omega_c) {
  const double ratio = g / omega_c;
  // Boundary values belong to the stronger regime.
  if (ratio >= 1.0) return {Regime::deep_strong, ratio};
  if (ratio >= 0.1) return {Regime::ultrastrong, ratio};
  return {Regime::strong, ratio};
}

CouplingRegime classify_regime(const ModelParams& p) {
  return classify_regime(p.g(), p.omega_c());
}

}  // namespace rabiqpt
