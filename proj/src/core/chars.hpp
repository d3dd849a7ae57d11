#pragma once

#include "core/numeric.hpp"
#include "core/spectrum.hpp"

namespace geozeta {

/// Conjugacy data (a_γ, m_γ) of a hyperbolic element: a_γ = exp(ℓH) and
/// m_γ = diag(e^{iθ/2}, e^{−iθ/2}) up to the spin sign.
struct HolonomyClass {
  double length = 0.0;
  double angle = 0.0;
  int spin_sign = 1;
};

HolonomyClass holonomy(const GeodesicPower& p);
HolonomyClass holonomy(const GeodesicEntry& e);

/// σ_k(m_γ) = spin^k·e^{ikθ/2}. k may be negative.
cplx sigma_char(const HolonomyClass& h, int k);

/// tr ρ_m(γ) = Σ_{j=0}^{m} (spin·e^{(ℓ+iθ)/2})^{m−2j}.
cplx trace_rho(const HolonomyClass& h, int m);

/// D(γ) = e^{ℓ}·|1 − e^{−(ℓ+iθ)}|².
double discriminant(const HolonomyClass& h);

/// e^{−(ℓ+iθ)}: the weight of one p-step in the Selberg double product.
cplx inverse_complex_exp(const HolonomyClass& h);

}  // namespace geozeta
