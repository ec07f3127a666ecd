#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rabiqpt/fockspace.hpp"
#include "rabiqpt/modulation.hpp"

namespace rabiqpt {

// Which Hamiltonian of the modulated Rabi model to simulate.
//
//   lab             H(t) = [omega0 + xi v cos(v t)] sz/2 + omega_c a^dag a
//                          + g (a^dag + a)(s+ + s-)
//   rot_frame_exact H(t) in the frame of U1, full Jacobi-Anger sideband sum
//                   truncated at |n| <= bessel_cutoff
//   eff_first_frame g_r e^{i delta t} a s+ + g_c e^{i Delta_m0 t} a^dag s+ + h.c.
//   aniso_rabi      omega0~ sz/2 + omega_c~ a^dag a + g_r (a^dag s- + a s+)
//                   + g_c (a^dag s+ + a s-)
//   eff_jc          aniso_rabi without the g_c term
enum class HamiltonianKind { lab, rot_frame_exact, eff_first_frame, aniso_rabi, eff_jc };

std::string_view to_string(HamiltonianKind kind);

struct HamiltonianSpec {
  HamiltonianKind kind;
  ModelParams params;
  EffectiveParams eff;
  int bessel_cutoff = 0;

  // Default cutoff is |m0| + 15, raised until g |J_cutoff(xi)| < 1e-12. An
  // explicit cutoff must be >= |m0| + 5 (InvalidParams otherwise).
  static HamiltonianSpec make(HamiltonianKind kind, const ModelParams& params,
                              std::optional<int> bessel_cutoff = std::nullopt);

  bool time_dependent() const {
    return kind == HamiltonianKind::lab || kind == HamiltonianKind::rot_frame_exact ||
           kind == HamiltonianKind::eff_first_frame;
  }
};

// Dense Hermitian matrix of the requested model at time t. Time-independent
// kinds ignore t.
OperatorMatrix build_hamiltonian(const HamiltonianSpec& spec, double t,
                                 const FockSpace& space);

// Lab frame -> first rotating frame: psi_rot = U1(t)^dagger psi_lab, where
// U1(t) = exp(-i [phi(t) sz / 2 + omega_c t a^dag a]) and
// phi(t) = omega0 t + xi sin(v t). The generator is diagonal, so the
// time-ordered exponential is the plain exponential of its integral.
StateVector frame_transform_u1(const StateVector& state, double t, const ModelParams& p);

// First -> second rotating frame: psi_2 = U2(t)^dagger psi_1 with
// U2(t) = exp[i (omega_c~ a^dag a + omega0~ sz / 2) t].
StateVector frame_transform_u2(const StateVector& state, double t,
                               const EffectiveParams& eff);

// (|g> + |e>) |alpha> / sqrt(2).
StateVector superposed_coherent_state(const FockSpace& space, cplx alpha);

// n points from 0 to t_max inclusive.
std::vector<double> uniform_grid(double t_max, int n);

struct PropagationOptions {
  // Base step; 0 selects (2 pi / v) / 200.
  double step = 0.0;
  // Convergence guard: halving the step must change no reported amplitude
  // by more than this.
  double tolerance = 1e-8;
  int max_halvings = 12;
  bool check_convergence = true;
};

struct Propagation {
  std::vector<StateVector> states;  // one per grid time
  double step = 0.0;                // largest substep actually used
  int halvings = 0;
  double guard_difference = 0.0;    // last amplitude change seen by the guard
  double max_norm_drift = 0.0;
};

// Time-independent kinds: exact exponential from one diagonalization.
// Time-dependent kinds: exponential of the midpoint Hamiltonian over each
// substep, step halved until the guard passes (StepTooLarge otherwise).
// t_grid must start at 0 and be ascending.
Propagation propagate(const HamiltonianSpec& spec, const StateVector& psi0,
                      std::span<const double> t_grid,
                      const PropagationOptions& options = {});

// Exact propagation under a fixed Hermitian matrix.
Propagation propagate(const OperatorMatrix& h, const StateVector& psi0,
                      std::span<const double> t_grid);

struct FidelityTrace {
  std::vector<double> times;
  std::vector<double> values;  // |<psi_A(t)|psi_B(t)>|^2
  double min = 1.0;
  double final = 1.0;
  double argmin = 0.0;
};

FidelityTrace fidelity_trace(const Propagation& a, const Propagation& b,
                             std::span<const double> t_grid);
FidelityTrace fidelity_trace(const HamiltonianSpec& a, const HamiltonianSpec& b,
                             const StateVector& psi0, std::span<const double> t_grid,
                             const PropagationOptions& options = {});

}  // namespace rabiqpt
