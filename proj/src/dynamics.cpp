#include "rabiqpt/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rabiqpt/error.hpp"

namespace rabiqpt {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr int default_steps_per_period = 200;
constexpr int default_cutoff_margin = 15;
constexpr int min_cutoff_margin = 5;
constexpr double tail_coupling = 1e-12;
constexpr int max_bessel_order = 200;

const cplx I(0.0, 1.0);

// H(t) = atom sz + photon a^dag a + c_r a s+ + c_c a^dag s+ + h.c.
struct Coefficients {
  double atom = 0.0;
  double photon = 0.0;
  cplx c_r = 0.0;
  cplx c_c = 0.0;
};

class Generator {
 public:
  Generator(const HamiltonianSpec& spec, const FockSpace& space)
      : spec_(spec), space_(space) {
    if (spec.kind == HamiltonianKind::rot_frame_exact) {
      bessel_ = bessel_j_orders(spec.bessel_cutoff, spec.params.xi());
    }
    sqrt_.resize(space_.n_max() + 2);
    for (std::size_t i = 0; i < sqrt_.size(); ++i) sqrt_[i] = std::sqrt(static_cast<double>(i));
  }

  Coefficients at(double t) const {
    const auto& p = spec_.params;
    const auto& e = spec_.eff;
    Coefficients c;
    switch (spec_.kind) {
      case HamiltonianKind::lab:
        c.atom = 0.5 * (p.omega0() + p.xi() * p.v() * std::cos(p.v() * t));
        c.photon = p.omega_c();
        c.c_r = p.g();
        c.c_c = p.g();
        break;
      case HamiltonianKind::rot_frame_exact: {
        const int cut = spec_.bessel_cutoff;
        cplx rot = 0.0;
        cplx counter = 0.0;
        for (int n = -cut; n <= cut; ++n) {
          const double j = bessel(n);
          if (j == 0.0) continue;
          rot += j * std::exp(I * ((p.delta() + n * p.v()) * t));
          counter += j * std::exp(I * (sideband_detuning(p, n) * t));
        }
        c.c_r = p.g() * rot;
        c.c_c = p.g() * counter;
        break;
      }
      case HamiltonianKind::eff_first_frame:
        c.c_r = e.g_r * std::exp(I * (e.delta_eff * t));
        c.c_c = e.g_c * std::exp(I * (e.delta_m0 * t));
        break;
      case HamiltonianKind::aniso_rabi:
        c.atom = 0.5 * e.omega0_eff;
        c.photon = e.omega_c_eff;
        c.c_r = e.g_r;
        c.c_c = e.g_c;
        break;
      case HamiltonianKind::eff_jc:
        c.atom = 0.5 * e.omega0_eff;
        c.photon = e.omega_c_eff;
        c.c_r = e.g_r;
        break;
    }
    return c;
  }

  Eigen::MatrixXcd dense(const Coefficients& c) const {
    const Eigen::Index d = space_.dim();
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(d, d);
    const int n_max = space_.n_max();
    for (int n = 0; n <= n_max; ++n) {
      const auto g = space_.index(n, AtomLevel::ground);
      const auto e = space_.index(n, AtomLevel::excited);
      h(g, g) = -c.atom + c.photon * n;
      h(e, e) = c.atom + c.photon * n;
      if (n >= 1) {
        // a s+ |g,n> = sqrt(n) |e,n-1>
        const auto e_lo = space_.index(n - 1, AtomLevel::excited);
        const double s = std::sqrt(static_cast<double>(n));
        h(e_lo, g) += c.c_r * s;
        h(g, e_lo) += std::conj(c.c_r) * s;
      }
      if (n + 1 <= n_max) {
        // a^dag s+ |g,n> = sqrt(n+1) |e,n+1>
        const auto e_hi = space_.index(n + 1, AtomLevel::excited);
        const double s = std::sqrt(static_cast<double>(n + 1));
        h(e_hi, g) += c.c_c * s;
        h(g, e_hi) += std::conj(c.c_c) * s;
      }
    }
    return h;
  }

  // out = H in, using the fixed coupling pattern instead of a dense product.
  void apply(const Coefficients& c, const Eigen::VectorXcd& in,
             Eigen::VectorXcd& out) const {
    const int n_max = space_.n_max();
    for (int n = 0; n <= n_max; ++n) {
      const auto g = space_.index(n, AtomLevel::ground);
      const auto e = space_.index(n, AtomLevel::excited);
      cplx og = (-c.atom + c.photon * n) * in(g);
      cplx oe = (c.atom + c.photon * n) * in(e);
      if (n >= 1) {
        og += std::conj(c.c_r) * sqrt_[n] * in(space_.index(n - 1, AtomLevel::excited));
      }
      if (n + 1 <= n_max) {
        og += std::conj(c.c_c) * sqrt_[n + 1] *
              in(space_.index(n + 1, AtomLevel::excited));
        oe += c.c_r * sqrt_[n + 1] * in(space_.index(n + 1, AtomLevel::ground));
      }
      if (n >= 1) {
        oe += c.c_c * sqrt_[n] * in(space_.index(n - 1, AtomLevel::ground));
      }
      out(g) = og;
      out(e) = oe;
    }
  }

  // Upper bound on the spectral norm (max absolute row sum).
  double norm_bound(const Coefficients& c) const {
    const double n_max = space_.n_max();
    return std::abs(c.atom) + std::abs(c.photon) * n_max +
           2.0 * (std::abs(c.c_r) + std::abs(c.c_c)) * std::sqrt(n_max + 1.0);
  }

 private:
  double bessel(int n) const {
    const int k = std::abs(n);
    const double j = bessel_[k];
    return (n < 0 && k % 2 == 1) ? -j : j;
  }

  const HamiltonianSpec& spec_;
  FockSpace space_;
  std::vector<double> bessel_;
  std::vector<double> sqrt_;
};

// psi <- exp(-i H h) psi by a Taylor series on the vector, split into
// sub-exponentials so that |H| h stays below 1/2 for each of them.
class TaylorStepper {
 public:
  explicit TaylorStepper(Eigen::Index dim) : term_(dim), next_(dim), sum_(dim) {}

  void step(const Generator& gen, const Coefficients& c, double h, Eigen::VectorXcd& psi) {
    const double scale = gen.norm_bound(c) * std::abs(h);
    const int pieces = std::max(1, static_cast<int>(std::ceil(scale / 0.5)));
    const double dt = h / pieces;
    for (int p = 0; p < pieces; ++p) {
      term_ = psi;
      sum_ = psi;
      for (int k = 1; k < 60; ++k) {
        gen.apply(c, term_, next_);
        term_ = next_ * (-I * (dt / k));
        sum_ += term_;
        if (term_.norm() <= 1e-17 * sum_.norm()) break;
      }
      psi = sum_;
    }
  }

 private:
  Eigen::VectorXcd term_, next_, sum_;
};

void check_grid(std::span<const double> t_grid) {
  if (t_grid.empty() || t_grid.front() != 0.0) {
    throw InvalidParams("propagate: time grid must start at 0");
  }
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > t_grid[i - 1])) {
      throw InvalidParams("propagate: time grid must be strictly ascending");
    }
  }
}

// One full pass over the grid with substeps_per_interval[i] * factor steps
// in interval i.
std::vector<Eigen::VectorXcd> midpoint_pass(const Generator& gen, const Eigen::VectorXcd& psi0,
                                            std::span<const double> t_grid,
                                            const std::vector<int>& substeps,
                                            int factor) {
  std::vector<Eigen::VectorXcd> out;
  out.reserve(t_grid.size());
  out.push_back(psi0);
  Eigen::VectorXcd psi = psi0;
  TaylorStepper stepper(psi0.size());
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    const double t0 = t_grid[i - 1];
    const int count = substeps[i - 1] * factor;
    const double h = (t_grid[i] - t0) / count;
    for (int k = 0; k < count; ++k) {
      const double mid = t0 + (k + 0.5) * h;
      stepper.step(gen, gen.at(mid), h, psi);
    }
    out.push_back(psi);
  }
  return out;
}

double max_difference(const std::vector<Eigen::VectorXcd>& a,
                      const std::vector<Eigen::VectorXcd>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d = std::max(d, (a[i] - b[i]).cwiseAbs().maxCoeff());
  }
  return d;
}

Propagation finish(const FockSpace& space, std::vector<Eigen::VectorXcd> raw) {
  Propagation out;
  out.states.reserve(raw.size());
  for (auto& v : raw) {
    out.max_norm_drift = std::max(out.max_norm_drift, std::abs(v.norm() - 1.0));
    out.states.emplace_back(space, std::move(v));
  }
  return out;
}

}  // namespace

std::string_view to_string(HamiltonianKind kind) {
  switch (kind) {
    case HamiltonianKind::lab:
      return "lab";
    case HamiltonianKind::rot_frame_exact:
      return "rot_frame_exact";
    case HamiltonianKind::eff_first_frame:
      return "eff_first_frame";
    case HamiltonianKind::aniso_rabi:
      return "aniso_rabi";
    case HamiltonianKind::eff_jc:
      return "eff_jc";
  }
  return "unknown";
}

HamiltonianSpec HamiltonianSpec::make(HamiltonianKind kind, const ModelParams& params,
                                      std::optional<int> bessel_cutoff) {
  HamiltonianSpec spec{kind, params, effective_params(params), 0};
  const int m0 = std::abs(spec.eff.m0);
  if (bessel_cutoff) {
    if (*bessel_cutoff < m0 + min_cutoff_margin) {
      throw InvalidParams("bessel_cutoff must be >= |m0| + 5 = " +
                          std::to_string(m0 + min_cutoff_margin));
    }
    spec.bessel_cutoff = *bessel_cutoff;
  } else {
    int cut = m0 + default_cutoff_margin;
    while (cut < max_bessel_order &&
           params.g() * std::abs(bessel_j(cut, params.xi())) >= tail_coupling) {
      ++cut;
    }
    spec.bessel_cutoff = cut;
  }
  return spec;
}

OperatorMatrix build_hamiltonian(const HamiltonianSpec& spec, double t,
                                 const FockSpace& space) {
  Generator gen(spec, space);
  return OperatorMatrix::hermitian(space, gen.dense(gen.at(t)));
}

StateVector frame_transform_u1(const StateVector& state, double t, const ModelParams& p) {
  const auto& sp = state.space();
  const double phi = p.omega0() * t + p.xi() * std::sin(p.v() * t);
  Eigen::VectorXcd v = state.amplitudes();
  for (Eigen::Index i = 0; i < sp.dim(); ++i) {
    const double sz = sp.atom_level(i) == AtomLevel::excited ? 1.0 : -1.0;
    const double phase = 0.5 * phi * sz + p.omega_c() * t * sp.photon_number(i);
    v(i) *= std::exp(I * phase);
  }
  return StateVector(sp, std::move(v));
}

StateVector frame_transform_u2(const StateVector& state, double t,
                               const EffectiveParams& eff) {
  const auto& sp = state.space();
  Eigen::VectorXcd v = state.amplitudes();
  for (Eigen::Index i = 0; i < sp.dim(); ++i) {
    const double sz = sp.atom_level(i) == AtomLevel::excited ? 1.0 : -1.0;
    const double energy = eff.omega_c_eff * sp.photon_number(i) + 0.5 * eff.omega0_eff * sz;
    v(i) *= std::exp(-I * (energy * t));
  }
  return StateVector(sp, std::move(v));
}

StateVector superposed_coherent_state(const FockSpace& space, cplx alpha) {
  const auto cavity = coherent_state(alpha, space.n_max());
  const double r = 1.0 / std::sqrt(2.0);
  return product_state(space, {r, r}, cavity.amplitudes);
}

std::vector<double> uniform_grid(double t_max, int n) {
  if (n < 2 || !(t_max > 0.0)) throw InvalidParams("uniform_grid: need n >= 2, t_max > 0");
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = t_max * i / (n - 1);
  g.back() = t_max;
  return g;
}

Propagation propagate(const OperatorMatrix& h, const StateVector& psi0,
                      std::span<const double> t_grid) {
  check_grid(t_grid);
  if (!(h.space() == psi0.space())) throw DimensionMismatch("propagate: spaces differ");
  const Eigensystem es = diagonalize(h);
  const Eigen::VectorXcd coeffs = es.vectors.adjoint() * psi0.amplitudes();
  std::vector<Eigen::VectorXcd> raw;
  raw.reserve(t_grid.size());
  for (double t : t_grid) {
    Eigen::VectorXcd phased(coeffs.size());
    for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
      phased(k) = coeffs(k) * std::exp(-I * (es.values(k) * t));
    }
    raw.push_back(es.vectors * phased);
  }
  return finish(psi0.space(), std::move(raw));
}

Propagation propagate(const HamiltonianSpec& spec, const StateVector& psi0,
                      std::span<const double> t_grid, const PropagationOptions& options) {
  if (!spec.time_dependent()) {
    return propagate(build_hamiltonian(spec, 0.0, psi0.space()), psi0, t_grid);
  }
  check_grid(t_grid);

  Generator gen(spec, psi0.space());
  const double base = options.step > 0.0
                          ? options.step
                          : (two_pi / spec.params.v()) / default_steps_per_period;
  std::vector<int> substeps(t_grid.size() > 1 ? t_grid.size() - 1 : 0);
  for (std::size_t i = 0; i + 1 < t_grid.size(); ++i) {
    const double dt = t_grid[i + 1] - t_grid[i];
    substeps[i] = std::max(1, static_cast<int>(std::ceil(dt / base - 1e-9)));
  }
  auto largest_step = [&](int factor) {
    double h = 0.0;
    for (std::size_t i = 0; i < substeps.size(); ++i) {
      h = std::max(h, (t_grid[i + 1] - t_grid[i]) / (substeps[i] * factor));
    }
    return h;
  };

  int factor = 1;
  auto coarse = midpoint_pass(gen, psi0.amplitudes(), t_grid, substeps, factor);
  if (!options.check_convergence) {
    Propagation out = finish(psi0.space(), std::move(coarse));
    out.step = largest_step(factor);
    return out;
  }

  double diff = 0.0;
  for (int halvings = 1; halvings <= options.max_halvings; ++halvings) {
    factor *= 2;
    auto fine = midpoint_pass(gen, psi0.amplitudes(), t_grid, substeps, factor);
    diff = max_difference(coarse, fine);
    if (diff <= options.tolerance) {
      Propagation out = finish(psi0.space(), std::move(fine));
      out.step = largest_step(factor);
      out.halvings = halvings;
      out.guard_difference = diff;
      return out;
    }
    coarse = std::move(fine);
  }
  throw StepTooLarge("propagate: amplitudes still change by " + std::to_string(diff) +
                     " after " + std::to_string(options.max_halvings) +
                     " step halvings (" + std::string(to_string(spec.kind)) + ")");
}

FidelityTrace fidelity_trace(const Propagation& a, const Propagation& b,
                             std::span<const double> t_grid) {
  if (a.states.size() != t_grid.size() || b.states.size() != t_grid.size()) {
    throw DimensionMismatch("fidelity_trace: propagation lengths differ from grid");
  }
  FidelityTrace tr;
  tr.times.assign(t_grid.begin(), t_grid.end());
  tr.values.reserve(t_grid.size());
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    tr.values.push_back(std::norm(a.states[i].overlap(b.states[i])));
  }
  const auto it = std::min_element(tr.values.begin(), tr.values.end());
  tr.min = *it;
  tr.argmin = tr.times[static_cast<std::size_t>(it - tr.values.begin())];
  tr.final = tr.values.back();
  return tr;
}

FidelityTrace fidelity_trace(const HamiltonianSpec& a, const HamiltonianSpec& b,
                             const StateVector& psi0, std::span<const double> t_grid,
                             const PropagationOptions& options) {
  const Propagation pa = propagate(a, psi0, t_grid, options);
  const Propagation pb = propagate(b, psi0, t_grid, options);
  return fidelity_trace(pa, pb, t_grid);
}

}  // namespace rabiqpt
