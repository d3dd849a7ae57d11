#pragma once

#include <map>
#include <string>
#include <string_view>

#include "core/zeta.hpp"

namespace geozeta {

/// Externally supplied volume, Chern-Simons invariant and eta invariants
/// η(D(σ_k)) for k ≥ 1. η for k ≤ 0 follows from η(σ_0) = 0 and
/// η(σ_{−k}) = −η(σ_k).
struct ManifoldInvariants {
  double volume = 1.0;
  double cs = 0.0;
  std::map<int, double> eta;
  std::string label;
};

/// Vol + i·2π²·CS, defined modulo iπ²ℤ.
struct ComplexVolume {
  double re = 0.0;
  double im = 0.0;

  cplx value() const { return {re, im}; }
  /// Same real part and imaginary parts differing by an integer multiple of π² (to 1e-9).
  bool equivalent(const ComplexVolume& other) const;
};

ComplexVolume complex_volume(const ManifoldInvariants& inv);

ManifoldInvariants parse_invariants(std::string_view json_text);
std::string serialize_invariants(const ManifoldInvariants& inv);

/// η(D(σ_k)); throws Error(missing_eta) naming k when |k| is not supplied.
double eta_lookup(const ManifoldInvariants& inv, int k);

/// log of the factor in Z(σ_k, 1+s) = factor · Z(σ_{−k}, 1−s):
/// iπη(σ_k) + (Vol/π)(s³/3 − k²s/4).
cplx reflection_log_factor(const ManifoldInvariants& inv, int k, cplx s);

/// Given Z(σ_{−k}, 1−s), returns Z(σ_k, 1+s).
cplx reflect_selberg(const ManifoldInvariants& inv, int k, cplx s, cplx value_at_reflected);

/// Z(σ_k, s) for Re s > 2 (direct) or Re s < 0 (one reflection). The strip
/// 0 ≤ Re s ≤ 2 raises Error(strip).
ZetaValue selberg_anywhere(const LengthSpectrum& spec, const ManifoldInvariants& inv, int k,
                           cplx s, const EvalParams& p);

/// R_{ρ_m}(s) as the quotient Z(σ_m, s−m/2)Z(σ_{−m}, s+m/2+2) /
/// (Z(σ_{m+2}, s−m/2+1) Z(σ_{−(m+2)}, s+m/2+1)) with every factor taken from
/// selberg_anywhere.
ZetaValue ruelle_rho_continued(const LengthSpectrum& spec, const ManifoldInvariants& inv, int m,
                               cplx s, const EvalParams& p);

}  // namespace geozeta
