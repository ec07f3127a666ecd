#include "rabiqpt/modulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rabiqpt/error.hpp"

namespace rabiqpt {

namespace {

constexpr double tie_tolerance = 1e-12;
constexpr double max_sideband = 1e6;

}  // namespace

double sideband_detuning(const ModelParams& p, int m) {
  return std::fma(static_cast<double>(m), p.v(), p.omega0() + p.omega_c());
}

SidebandChoice select_sideband(const ModelParams& p) {
  const double sum = p.omega0() + p.omega_c();
  const double target = -sum / p.v();
  if (!(std::abs(target) < max_sideband)) {
    throw InvalidParams("select_m0: sideband index beyond 1e6; v too small");
  }
  const int lo = static_cast<int>(std::floor(target));
  const int hi = static_cast<int>(std::ceil(target));
  const double d_lo = std::abs(sideband_detuning(p, lo));
  const double d_hi = std::abs(sideband_detuning(p, hi));

  SidebandChoice choice;
  if (lo == hi) {
    choice.m0 = lo;
    return choice;
  }
  const double tol = tie_tolerance * (std::abs(sum) + p.v());
  if (std::abs(d_lo - d_hi) <= tol) {
    choice.tie = true;
    choice.m0 = std::abs(lo) <= std::abs(hi) ? lo : hi;
  } else {
    choice.m0 = d_lo < d_hi ? lo : hi;
  }
  return choice;
}

int select_m0(const ModelParams& p) { return select_sideband(p).m0; }

double EffectiveParams::gc_over_delta_m0() const {
  if (delta_m0 == 0.0) {
    return g_c == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return std::abs(g_c) / std::abs(delta_m0);
}

EffectiveParams effective_params(const ModelParams& p) {
  const SidebandChoice side = select_sideband(p);
  EffectiveParams e;
  e.m0 = side.m0;
  e.tie = side.tie;
  e.delta_m0 = sideband_detuning(p, side.m0);
  e.g_r = p.g() * bessel_j(0, p.xi());
  e.g_c = p.g() * bessel_j(side.m0, p.xi());
  const double delta = p.delta();
  e.omega0_eff = 0.5 * (e.delta_m0 + delta);
  e.omega_c_eff = 0.5 * (e.delta_m0 - delta);
  e.delta_eff = delta;
  return e;
}

double zero_point(double omega0, double omega_c, int m0) {
  if (m0 == 0) throw M0Zero("zero_point: m0 == 0 has no resonant modulation frequency");
  return -(omega0 + omega_c) / m0;
}

double zero_point(const ModelParams& p) {
  return zero_point(p.omega0(), p.omega_c(), select_m0(p));
}

RwaReport rwa_report(const ModelParams& p, double threshold) {
  if (!(threshold > 0.0)) throw InvalidParams("rwa_report: threshold must be > 0");
  const EffectiveParams e = effective_params(p);
  const double inf = std::numeric_limits<double>::infinity();
  auto ratio = [&](double num, double den) {
    return den == 0.0 ? inf : num / std::abs(den);
  };

  RwaReport r;
  r.threshold = threshold;
  if (p.delta() == 0.0) {
    r.v_over_delta = {inf, true, true};
  } else {
    const double q = ratio(p.v(), p.delta());
    r.v_over_delta = {q, q >= threshold, false};
  }
  const double q_dm = ratio(p.v(), e.delta_m0);
  r.v_over_delta_m0 = {q_dm, q_dm >= threshold, false};
  const double q_g = ratio(p.v(), p.g());
  r.v_over_g = {q_g, q_g >= threshold, false};
  const double q_c = e.gc_over_delta_m0();
  r.gc_over_delta_m0 = {q_c, q_c <= 1.0 / (10.0 * threshold), false};
  return r;
}

std::vector<double> rwa_line_crossings(const ModelParams& base, double xi_lo, double xi_hi,
                                       double level, double step) {
  if (!(xi_hi > xi_lo) || !(step > 0.0)) {
    throw InvalidParams("rwa_line_crossings: need xi_lo < xi_hi and step > 0");
  }
  auto f = [&](double xi) {
    return effective_params(base.with_xi(xi)).gc_over_delta_m0() - level;
  };
  std::vector<double> out;
  const int n = std::max(1, static_cast<int>(std::ceil((xi_hi - xi_lo) / step - 1e-9)));
  double a = xi_lo;
  double fa = f(a);
  for (int k = 1; k <= n; ++k) {
    const double b = k == n ? xi_hi : xi_lo + (xi_hi - xi_lo) * k / n;
    const double fb = f(b);
    if (fa == 0.0) {
      out.push_back(a);
    } else if ((fa < 0.0) != (fb < 0.0) && fb != 0.0) {
      double lo = a, hi = b, flo = fa;
      while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      out.push_back(0.5 * (lo + hi));
    }
    a = b;
    fa = fb;
  }
  if (fa == 0.0) out.push_back(a);
  return out;
}

}  // namespace rabiqpt
