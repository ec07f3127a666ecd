#include "rabiqpt/phases.hpp"

#include <cmath>
#include <limits>

#include "rabiqpt/error.hpp"
#include "rabiqpt/parallel.hpp"

namespace rabiqpt {

namespace {

constexpr int max_bisections = 200;

// Ground-energy difference E_a - E_b of two candidate states at xi.
double energy_gap(const ModelParams& base, double xi, const GroundLabel& a,
                  const GroundLabel& b) {
  const EffectiveParams e = effective_params(base.with_xi(xi));
  return candidate_energy(a, e.omega_c_eff, e.omega0_eff, e.g_r) -
         candidate_energy(b, e.omega_c_eff, e.omega0_eff, e.g_r);
}

void resolve(const ModelParams& base, double a, const GroundLabel& la, double b,
             const GroundLabel& lb, const ScanOptions& opt, std::vector<Boundary>& out) {
  for (int it = 0; it < max_bisections; ++it) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const GroundLabel lm = phase_at(base.with_xi(m), opt.n_max).label;
    if (!(lm == la) && !(lm == lb)) {
      // A phase narrower than the prescan step hides inside the bracket.
      resolve(base, a, la, m, lm, opt, out);
      resolve(base, m, lm, b, lb, opt, out);
      return;
    }
    if (energy_gap(base, m, la, lb) <= 0.0) {
      a = m;
    } else {
      b = m;
    }
    // Keep going past xi_tolerance until the two energies agree to round-off.
    if (b - a <= opt.xi_tolerance && b - a <= 1e-12 * std::max(1.0, std::abs(m))) break;
  }
  out.push_back({0.5 * (a + b), la, lb});
}

}  // namespace

PhasePoint phase_at(const ModelParams& p, int n_max) {
  const EffectiveParams eff = effective_params(p);
  const EffectiveSpectrum spec = effective_eigensystem(eff, n_max);
  return {spec.ground, order_parameter(spec.ground, eff.delta_eff, eff.g_r)};
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 1) throw InvalidParams("linspace: n must be >= 1");
  if (n == 1) return {lo};
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * i / (n - 1);
  out.back() = hi;
  return out;
}

std::vector<Boundary> boundary_scan(const ModelParams& base, double xi_lo, double xi_hi,
                                    const ScanOptions& options) {
  if (!std::isfinite(xi_lo) || !std::isfinite(xi_hi) || !(xi_hi > xi_lo)) {
    throw InvalidParams("boundary_scan: need finite xi_lo < xi_hi");
  }
  if (!(options.prescan_step > 0.0)) throw InvalidParams("boundary_scan: prescan_step must be > 0");
  const int intervals =
      std::max(1, static_cast<int>(std::ceil((xi_hi - xi_lo) / options.prescan_step - 1e-9)));
  const auto xs = linspace(xi_lo, xi_hi, intervals + 1);

  std::vector<Boundary> out;
  GroundLabel prev = phase_at(base.with_xi(xs[0]), options.n_max).label;
  for (std::size_t k = 1; k < xs.size(); ++k) {
    const GroundLabel cur = phase_at(base.with_xi(xs[k]), options.n_max).label;
    if (!(cur == prev)) resolve(base, xs[k - 1], prev, xs[k], cur, options, out);
    prev = cur;
  }
  return out;
}

PhaseDiagram diagram(const ModelParams& base, std::span<const double> delta_grid,
                     std::span<const double> xi_grid, const DiagramOptions& options) {
  if (delta_grid.empty() || xi_grid.size() < 2) {
    throw InvalidParams("diagram: need a nonempty delta grid and at least two xi values");
  }
  for (std::size_t i = 1; i < delta_grid.size(); ++i) {
    if (!(delta_grid[i] > delta_grid[i - 1])) throw InvalidParams("diagram: delta grid not ascending");
  }
  for (std::size_t i = 1; i < xi_grid.size(); ++i) {
    if (!(xi_grid[i] > xi_grid[i - 1])) throw InvalidParams("diagram: xi grid not ascending");
  }

  PhaseDiagram d;
  d.v = base.v();
  d.delta_grid.assign(delta_grid.begin(), delta_grid.end());
  d.xi_grid.assign(xi_grid.begin(), xi_grid.end());
  d.cells.resize(delta_grid.size() * xi_grid.size());
  std::vector<std::vector<Boundary>> rows(delta_grid.size());

  parallel_for(delta_grid.size(), [&](std::size_t i) {
    const ModelParams row = base.with_delta(delta_grid[i]);
    for (std::size_t j = 0; j < xi_grid.size(); ++j) {
      const PhasePoint pt = phase_at(row.with_xi(xi_grid[j]), options.scan.n_max);
      d.cells[i * xi_grid.size() + j] = {delta_grid[i], xi_grid[j], pt.label, pt.n_bar};
    }
    rows[i] = boundary_scan(row, xi_grid.front(), xi_grid.back(), options.scan);
  });

  // Stitch row boundaries into curves by nearest-neighbour continuation.
  const double resolution = (xi_grid.back() - xi_grid.front()) / (xi_grid.size() - 1);
  const double join_tol = options.stitch_factor * resolution;
  std::vector<std::size_t> open;  // curves continued in the previous row
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<std::size_t> now_open;
    std::vector<bool> claimed(open.size(), false);
    for (const Boundary& b : rows[i]) {
      std::size_t best = open.size();
      double best_dist = std::numeric_limits<double>::infinity();
      bool best_labels_match = false;
      for (std::size_t c = 0; c < open.size(); ++c) {
        if (claimed[c]) continue;
        const BoundaryPoint& last = d.boundaries[open[c]].points.back();
        const double dist = std::abs(last.xi - b.xi);
        if (dist >= join_tol) continue;
        const bool match = last.left == b.left && last.right == b.right;
        // Prefer curves separating the same pair of phases.
        if ((match && !best_labels_match) || (match == best_labels_match && dist < best_dist)) {
          best = c;
          best_dist = dist;
          best_labels_match = match;
        }
      }
      const BoundaryPoint pt{delta_grid[i], b.xi, b.left, b.right};
      if (best < open.size()) {
        claimed[best] = true;
        d.boundaries[open[best]].points.push_back(pt);
        now_open.push_back(open[best]);
      } else {
        d.boundaries.push_back({static_cast<int>(d.boundaries.size()), {pt}});
        now_open.push_back(d.boundaries.size() - 1);
      }
    }
    open = std::move(now_open);
  }
  return d;
}

std::vector<LadderPoint> photon_ladder(const ModelParams& base, std::span<const double> xi_grid,
                                       int n_max) {
  std::vector<LadderPoint> out;
  out.reserve(xi_grid.size());
  for (double xi : xi_grid) {
    const PhasePoint pt = phase_at(base.with_xi(xi), n_max);
    out.push_back({xi, pt.label, pt.n_bar});
  }
  return out;
}

void write_cells(csv::Writer& w, const PhaseDiagram& d) {
  w.header({"delta", "xi", "phase_label", "n_excitation", "n_bar"});
  for (const auto& c : d.cells) {
    w.row_text({csv::format_number(c.delta), csv::format_number(c.xi), c.label.name(),
                std::to_string(c.label.n), csv::format_number(c.n_bar)});
  }
}

void write_boundaries(csv::Writer& w, const PhaseDiagram& d) {
  w.header({"curve_id", "delta", "xi", "left_label", "right_label"});
  for (const auto& curve : d.boundaries) {
    for (const auto& p : curve.points) {
      w.row_text({std::to_string(curve.id), csv::format_number(p.delta),
                  csv::format_number(p.xi), p.left.name(), p.right.name()});
    }
  }
}

void write_ladder(csv::Writer& w, const std::vector<LadderPoint>& ladder) {
  w.header({"xi", "n_bar"});
  for (const auto& p : ladder) w.row({p.xi, p.n_bar});
}

}  // namespace rabiqpt
