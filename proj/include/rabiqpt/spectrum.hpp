#pragma once

#include <span>
#include <string>
#include <vector>

#include "rabiqpt/modulation.hpp"

namespace rabiqpt {

enum class Branch { minus, plus };

// Dressed JC level |n,+/->, n >= 1.
struct DressedLevel {
  int n = 1;
  Branch branch = Branch::minus;
  double energy = 0.0;
  // Mixing angle in [0, pi/2]: sin(2 theta) = 2|g| sqrt(n) / Omega_n,
  // cos(2 theta) = delta / Omega_n.
  double theta = 0.0;
};

// Closed-form JC energy (n - 1/2) omega_c +/- sqrt(4 g^2 n + delta^2) / 2.
// Evaluated as written for any sign of omega_c and delta.
double jc_eigenenergy(int n, Branch branch, double omega_c, double delta, double g);

// Generalized Rabi frequency sqrt(4 g^2 n + delta^2).
double rabi_frequency(int n, double delta, double g);

double mixing_angle(int n, double delta, double g);

// Coupling at which |n,-> meets |n+1,-> (n >= 1), or |g,0> meets |1,->
// (n == 0). Throws NegativeRadicand for n == 0 when (omega_c + delta)
// omega_c < 0, InvalidParams when omega_c == 0.
double critical_coupling(int n, double omega_c, double delta);
std::vector<double> critical_couplings(double omega_c, double delta,
                                       std::span<const int> n_list);

struct GroundLabel {
  enum class Kind { normal_g0, superradiant };

  Kind kind = Kind::normal_g0;
  int n = 0;  // excitation number; 0 for |g,0>
  double energy = 0.0;
  // Another candidate lies within 1e-12 |omega_c|; the lower-n label won.
  bool degenerate = false;

  static GroundLabel normal(double energy) { return {Kind::normal_g0, 0, energy, false}; }
  static GroundLabel superradiant(int n, double energy) {
    return {Kind::superradiant, n, energy, false};
  }

  bool is_normal() const { return kind == Kind::normal_g0; }
  // "g0" or "n-" style label, e.g. "3-".
  std::string name() const;

  friend bool operator==(const GroundLabel& a, const GroundLabel& b) {
    return a.kind == b.kind && a.n == b.n;
  }
};

// Energy of the candidate ground state `label` at the given parameters.
double candidate_energy(const GroundLabel& label, double omega_c, double omega0, double g);

// Minimizes over {-omega0/2} and {E_{n,-} : 1 <= n <= n_max}. Ties within
// 1e-12 |omega_c| go to the lower n. Throws CutoffSuspect when the minimizer
// is n == n_max.
GroundLabel ground_state(double omega_c, double omega0, double g, int n_max);

// Mean photon number of the ground state: 0 for |g,0>, otherwise
// n - 1/2 + delta / (2 Omega_n).
double order_parameter(const GroundLabel& label, double delta, double g);

// All 2 (n_max + 1) eigenvalues of the JC matrix on the truncated space,
// ascending: -omega0/2, E_{n,+/-} for 1 <= n <= n_max, and the uncoupled
// top state |e,n_max> at omega0/2 + n_max omega_c.
std::vector<double> truncated_jc_spectrum(int n_max, double omega0, double omega_c, double g);

struct EffectiveSpectrum {
  double e_g0 = 0.0;                // -omega0_eff / 2
  std::vector<DressedLevel> levels; // n = 1..n_max, minus then plus
  GroundLabel ground;
  // delta_m0 <= 0: frequencies are negative, a regime left unanalyzed by the
  // effective-model derivation.
  bool negative_frequency = false;
};

EffectiveSpectrum effective_eigensystem(const EffectiveParams& eff, int n_max = 30);

}  // namespace rabiqpt
