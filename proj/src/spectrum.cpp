#include "rabiqpt/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rabiqpt/error.hpp"

namespace rabiqpt {

namespace {

constexpr double degeneracy_tolerance = 1e-12;

}  // namespace

double rabi_frequency(int n, double delta, double g) {
  return std::sqrt(4.0 * g * g * n + delta * delta);
}

double jc_eigenenergy(int n, Branch branch, double omega_c, double delta, double g) {
  if (n < 1) throw InvalidParams("jc_eigenenergy: n must be >= 1");
  const double half_split = 0.5 * rabi_frequency(n, delta, g);
  const double center = (n - 0.5) * omega_c;
  return branch == Branch::plus ? center + half_split : center - half_split;
}

double mixing_angle(int n, double delta, double g) {
  return 0.5 * std::atan2(2.0 * std::abs(g) * std::sqrt(static_cast<double>(n)), delta);
}

double critical_coupling(int n, double omega_c, double delta) {
  if (n < 0) throw InvalidParams("critical_coupling: n must be >= 0");
  if (omega_c == 0.0) throw InvalidParams("critical_coupling: omega_c must be nonzero");
  if (n == 0) {
    const double radicand = (omega_c + delta) * omega_c;
    if (radicand < 0.0) {
      throw NegativeRadicand("critical_coupling: (omega_c + delta) omega_c < 0");
    }
    return std::sqrt(radicand);
  }
  const double wc2 = omega_c * omega_c;
  const double inner = std::sqrt(4.0 * n * wc2 * wc2 * (n + 1) + delta * delta * wc2);
  return std::sqrt(wc2 * (2 * n + 1) + inner);
}

std::vector<double> critical_couplings(double omega_c, double delta,
                                       std::span<const int> n_list) {
  std::vector<double> out;
  out.reserve(n_list.size());
  for (int n : n_list) out.push_back(critical_coupling(n, omega_c, delta));
  return out;
}

std::string GroundLabel::name() const {
  return is_normal() ? std::string("g0") : std::to_string(n) + "-";
}

double candidate_energy(const GroundLabel& label, double omega_c, double omega0,
                        double g) {
  if (label.is_normal()) return -0.5 * omega0;
  return jc_eigenenergy(label.n, Branch::minus, omega_c, omega0 - omega_c, g);
}

GroundLabel ground_state(double omega_c, double omega0, double g, int n_max) {
  if (n_max < 1) throw InvalidParams("ground_state: n_max must be >= 1");
  const double delta = omega0 - omega_c;
  const double tol = degeneracy_tolerance * std::abs(omega_c);

  GroundLabel best = GroundLabel::normal(-0.5 * omega0);
  bool tie = false;
  for (int n = 1; n <= n_max; ++n) {
    const double e = jc_eigenenergy(n, Branch::minus, omega_c, delta, g);
    if (e < best.energy - tol) {
      // A tie with the previous best does not carry over if the new one
      // is clearly lower.
      tie = false;
      best = GroundLabel::superradiant(n, e);
    } else if (std::abs(e - best.energy) <= tol) {
      tie = true;
    }
  }
  best.degenerate = tie;
  if (!best.is_normal() && best.n == n_max) {
    throw CutoffSuspect("ground_state: minimizer at the cutoff n = " +
                        std::to_string(n_max) + "; raise n_max");
  }
  return best;
}

std::vector<double> truncated_jc_spectrum(int n_max, double omega0, double omega_c, double g) {
  const double delta = omega0 - omega_c;
  std::vector<double> out;
  out.reserve(2 * (static_cast<std::size_t>(n_max) + 1));
  out.push_back(-0.5 * omega0);
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(jc_eigenenergy(n, Branch::minus, omega_c, delta, g));
    out.push_back(jc_eigenenergy(n, Branch::plus, omega_c, delta, g));
  }
  out.push_back(0.5 * omega0 + n_max * omega_c);
  std::sort(out.begin(), out.end());
  return out;
}

double order_parameter(const GroundLabel& label, double delta, double g) {
  if (label.is_normal()) return 0.0;
  const double omega = rabi_frequency(label.n, delta, g);
  // Omega == 0 only when delta == g == 0; the doublet is then degenerate and
  // the symmetric mixture is used.
  const double shift = omega == 0.0 ? 0.0 : delta / (2.0 * omega);
  return label.n - 0.5 + shift;
}

EffectiveSpectrum effective_eigensystem(const EffectiveParams& eff, int n_max) {
  EffectiveSpectrum s;
  s.e_g0 = -0.5 * eff.omega0_eff;
  s.negative_frequency = eff.delta_m0 <= 0.0;
  s.levels.reserve(2 * static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    const double theta = mixing_angle(n, eff.delta_eff, eff.g_r);
    for (auto b : {Branch::minus, Branch::plus}) {
      s.levels.push_back(
          {n, b, jc_eigenenergy(n, b, eff.omega_c_eff, eff.delta_eff, eff.g_r), theta});
    }
  }
  s.ground = ground_state(eff.omega_c_eff, eff.omega0_eff, eff.g_r, n_max);
  return s;
}

}  // namespace rabiqpt
