#pragma once

#include <vector>

#include "core/continuation.hpp"
#include "core/zeta.hpp"

namespace geozeta {

// Geometric sides of the heat-trace formulas for ρ_m. The spectral sides need
// eigenvalue data that the inputs do not carry and are not computed.

struct HeatTraceResult {
  double t = 0.0;
  int m = 0;
  int p = 0;
  double identity_term = 0.0;
  cplx hyperbolic_term;
  cplx total;
  /// The cutoff may have dropped non-negligible terms (e^{−l_cut²/4t} > 1e-12) or
  /// l_cut exceeds the completeness bound.
  bool truncated = false;
};

/// p = 0: Tr e^{−t(Δ₀−1)}. p = 1: the difference Tr e^{−tΔ₁} − Tr e^{−tΔ₀}.
HeatTraceResult heat_trace_geometric(const LengthSpectrum& spec, const ManifoldInvariants& inv,
                                     int m, int p, double t, const EvalParams& params);

struct SmallTimeFit {
  double a1 = 0.0;  ///< coefficient of t^{−3/2}
  double a2 = 0.0;  ///< coefficient of t^{−1/2}
  std::vector<double> t_grid;
};

/// Least-squares fit of the normalized Tr e^{−tΔ_p} (e^{−t} shift applied for
/// p = 0, Δ₀ trace added back for p = 1) against a1·t^{−3/2} + a2·t^{−1/2}.
SmallTimeFit small_time_fit(const LengthSpectrum& spec, const ManifoldInvariants& inv, int m, int p,
                            const std::vector<double>& t_grid, const EvalParams& params);

/// Ten equally spaced points from 0.001 to 0.01.
std::vector<double> default_fit_grid();

}  // namespace geozeta
