#pragma once

#include "core/zeta.hpp"

namespace geozeta {

// Evaluators built straight from the Euler-product definitions with a
// representation χ, independent of the σ_k factorizations in zeta.hpp. The
// identities module uses them as the "direct" side of each check.

/// tr ρ_m(γ) via the Clebsch-Gordan recurrence
/// tr ρ_m = tr ρ_1 · tr ρ_{m−1} − tr ρ_{m−2}.
cplx trace_rho_recurrence(const HolonomyClass& h, int m);

/// R_{ρ_m}(s) = ∏_γ det(Id − ρ_m(γ) e^{−sℓ}) expanded as −Σ tr ρ_m(γ^j) e^{−sjℓ}/j.
ZetaValue ruelle_rho_direct(const LengthSpectrum& spec, int m, cplx s, const EvalParams& p);

/// Z_{ρ_m}(σ_k, s) from its double-product definition, (p,q) sums in closed form.
ZetaValue selberg_rho_direct(const LengthSpectrum& spec, int m, int k, cplx s,
                             const EvalParams& p);

}  // namespace geozeta
