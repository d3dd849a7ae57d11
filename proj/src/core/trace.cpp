#include "core/trace.hpp"

#include <cmath>

#include "core/chars.hpp"

namespace geozeta {

namespace {

double identity_term(double dim_vol, int p, double t) {
  const double sqrt_pi = std::sqrt(kPi);
  if (p == 0) return dim_vol / (4.0 * kPi * kPi) * (0.5 * sqrt_pi) * std::pow(t, -1.5);
  return dim_vol / (2.0 * kPi * kPi) * sqrt_pi * (0.5 * std::pow(t, -1.5) + std::pow(t, -0.5));
}

}  // namespace

HeatTraceResult heat_trace_geometric(const LengthSpectrum& spec, const ManifoldInvariants& inv,
                                     int m, int p, double t, const EvalParams& params) {
  if (!(t > 0.0) || !std::isfinite(t)) throw Error(ErrorKind::argument, "t must be positive");
  if (p != 0 && p != 1) throw Error(ErrorKind::argument, "p must be 0 or 1");
  if (m < 0) throw Error(ErrorKind::argument, "m must be nonnegative");
  HeatTraceResult r;
  r.t = t;
  r.m = m;
  r.p = p;
  r.identity_term = identity_term((m + 1) * inv.volume, p, t);
  const double gauss_norm = 1.0 / std::sqrt(4.0 * kPi * t);
  CompensatedSum acc;
  for (const auto& pw : powers_up_to(spec, params.l_cut)) {
    const auto h = holonomy(pw);
    cplx term = pw.base_length * trace_rho(h, m) / discriminant(h);
    if (p == 1) term *= 2.0 * std::cos(h.angle);
    term *= gauss_norm * std::exp(-pw.length * pw.length / (4.0 * t));
    acc.add(static_cast<double>(pw.multiplicity) * term);
  }
  r.hyperbolic_term = acc.value();
  r.total = r.identity_term + r.hyperbolic_term;
  r.truncated = params.l_cut > spec.l_max() ||
                std::exp(-params.l_cut * params.l_cut / (4.0 * t)) > 1e-12;
  return r;
}

SmallTimeFit small_time_fit(const LengthSpectrum& spec, const ManifoldInvariants& inv, int m, int p,
                            const std::vector<double>& t_grid, const EvalParams& params) {
  if (t_grid.size() < 4) throw Error(ErrorKind::argument, "fit grid needs at least 4 points");
  for (const double t : t_grid)
    if (!(t > 0.0 && t <= 0.5)) throw Error(ErrorKind::argument, "fit grid points must lie in (0, 0.5]");
  const double scale = 4.0 * kPi * kPi / ((m + 1) * inv.volume);
  // Rows scaled by t^{3/2}: y = a1 + a2·t.
  double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const double t : t_grid) {
    const auto h0 = heat_trace_geometric(spec, inv, m, 0, t, params);
    double f = std::exp(-t) * h0.total.real();
    if (p == 1) f += heat_trace_geometric(spec, inv, m, 1, t, params).total.real();
    const double y = std::pow(t, 1.5) * f * scale;
    n += 1;
    sx += t;
    sy += y;
    sxx += t * t;
    sxy += t * y;
  }
  const double det = n * sxx - sx * sx;
  if (!(det > 1e-12 * n * sxx))
    throw Error(ErrorKind::argument, "degenerate fit grid");
  SmallTimeFit fit;
  fit.a2 = (n * sxy - sx * sy) / det;
  fit.a1 = (sy - fit.a2 * sx) / n;
  fit.t_grid = t_grid;
  return fit;
}

std::vector<double> default_fit_grid() {
  std::vector<double> g;
  for (int i = 1; i <= 10; ++i) g.push_back(0.001 * i);
  return g;
}

}  // namespace geozeta
