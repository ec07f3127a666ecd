#pragma once

#include <span>
#include <vector>

#include "rabiqpt/csv.hpp"
#include "rabiqpt/spectrum.hpp"

namespace rabiqpt {

struct PhasePoint {
  GroundLabel label;
  double n_bar = 0.0;
};

// Ground state and mean photon number of the effective JC model at p.
PhasePoint phase_at(const ModelParams& p, int n_max = 30);

struct ScanOptions {
  double prescan_step = 1e-3;
  double xi_tolerance = 1e-6;
  int n_max = 30;
};

struct Boundary {
  double xi = 0.0;
  GroundLabel left;   // phase just below xi
  GroundLabel right;  // phase just above xi
};

// Every ground-state change for xi in [xi_lo, xi_hi] at the v, delta, g of
// `base`, located by bisection on the energy difference of the two
// competing states. Ascending in xi.
std::vector<Boundary> boundary_scan(const ModelParams& base, double xi_lo, double xi_hi,
                                    const ScanOptions& options = {});

struct PhaseCell {
  double delta = 0.0;
  double xi = 0.0;
  GroundLabel label;
  double n_bar = 0.0;
};

struct BoundaryPoint {
  double delta = 0.0;
  double xi = 0.0;
  GroundLabel left;
  GroundLabel right;
};

struct BoundaryCurve {
  int id = 0;
  std::vector<BoundaryPoint> points;  // ascending delta
};

struct PhaseDiagram {
  double v = 0.0;
  std::vector<double> delta_grid;
  std::vector<double> xi_grid;
  std::vector<PhaseCell> cells;  // delta-major: cells[i * xi_grid.size() + j]
  std::vector<BoundaryCurve> boundaries;

  const PhaseCell& cell(std::size_t i_delta, std::size_t j_xi) const {
    return cells[i_delta * xi_grid.size() + j_xi];
  }
};

struct DiagramOptions {
  ScanOptions scan;
  // Boundary points in adjacent rows join one curve when their xi differ by
  // less than this many xi-grid spacings.
  double stitch_factor = 5.0;
};

// base supplies omega_c, g and v; each row sets delta, each column xi.
PhaseDiagram diagram(const ModelParams& base, std::span<const double> delta_grid,
                     std::span<const double> xi_grid, const DiagramOptions& options = {});

struct LadderPoint {
  double xi = 0.0;
  GroundLabel label;
  double n_bar = 0.0;
};

std::vector<LadderPoint> photon_ladder(const ModelParams& base, std::span<const double> xi_grid,
                                       int n_max = 30);

// n points from lo to hi inclusive.
std::vector<double> linspace(double lo, double hi, int n);

// Column layouts read by the plotting scripts.
void write_cells(csv::Writer& w, const PhaseDiagram& d);       // delta,xi,phase_label,n_excitation,n_bar
void write_boundaries(csv::Writer& w, const PhaseDiagram& d);  // curve_id,delta,xi,left_label,right_label
void write_ladder(csv::Writer& w, const std::vector<LadderPoint>& ladder);  // xi,n_bar

}  // namespace rabiqpt
