#pragma once

#include <span>

#include "core/chars.hpp"
#include "core/numeric.hpp"
#include "core/spectrum.hpp"

namespace geozeta {

/// Result of a truncated Euler-product evaluation.
///
/// `value == exp(log_value)`; `log_error_bound` bounds |Δ log_value| from the
/// omitted terms and `abs_error_bound = |value|·expm1(log_error_bound)`.
/// Outside the convergence half-plane the value is a formal truncation with
/// `in_convergence_domain == false` and infinite bounds.
struct ZetaValue {
  cplx value{1.0, 0.0};
  cplx log_value{0.0, 0.0};
  double log_error_bound = 0.0;
  double abs_error_bound = 0.0;
  bool heuristic_bound = true;
  bool in_convergence_domain = true;
  bool reflected = false;
  double l_cut = 0.0;
};

struct EvalParams {
  double l_cut = 0.0;
  double tol = 1e-8;
  GrowthModel growth;
  /// Upper limit on the factor index of the direct Zograf product.
  int zograf_k_max = 4000;
};

/// l_cut = l_max, growth fitted from the spectrum.
EvalParams default_params(const LengthSpectrum& spec);

/// Builds a value from an accumulated log and a log-error bound.
ZetaValue make_value(cplx log_value, double log_error_bound, bool heuristic, bool in_domain,
                     double l_cut);

/// Σ exponent_i·log(v_i) with errors added and flags merged.
struct Factor {
  const ZetaValue* value;
  int exponent;
};
ZetaValue combine(std::span<const Factor> factors);

/// R(σ_k, s) = ∏ (1 − σ_k(m_γ)·e^{−sℓ_γ}).
ZetaValue ruelle_sigma(const LengthSpectrum& spec, int k, cplx s, const EvalParams& p);

/// Z(σ_k, s) = ∏_γ ∏_{p,q≥0} (1 − σ_k(m_γ) e^{−p(ℓ+iθ)} e^{−q(ℓ−iθ)} e^{−sℓ}).
ZetaValue selberg_sigma(const LengthSpectrum& spec, int k, cplx s, const EvalParams& p);

/// R_{ρ_m}(s) = ∏_{l=0}^{m} R(σ_{m−2l}, s − m/2 + l).
ZetaValue ruelle_rho(const LengthSpectrum& spec, int m, cplx s, const EvalParams& p);

/// Z_{ρ_m}(σ_k, s) = ∏_{l=0}^{m} Z(σ_{m−2l+k}, s − m/2 + l).
ZetaValue selberg_rho(const LengthSpectrum& spec, int m, int k, cplx s, const EvalParams& p);

/// F_n(s) = ∏_{k≥n} R(σ_{−2k}, s+k). Uses the Selberg ratio inside Re s > 2−n and
/// the direct product elsewhere.
ZetaValue zograf_F(const LengthSpectrum& spec, int n, cplx s, const EvalParams& p);
ZetaValue zograf_F_direct(const LengthSpectrum& spec, int n, cplx s, const EvalParams& p);
ZetaValue zograf_F_ratio(const LengthSpectrum& spec, int n, cplx s, const EvalParams& p);

/// G_n(s) = ∏_{k≥n} R(σ_{−(2k+1)}, s+k+½), domain Re s > 3/2 − n.
ZetaValue zograf_G(const LengthSpectrum& spec, int n, cplx s, const EvalParams& p);
ZetaValue zograf_G_direct(const LengthSpectrum& spec, int n, cplx s, const EvalParams& p);
ZetaValue zograf_G_ratio(const LengthSpectrum& spec, int n, cplx s, const EvalParams& p);

}  // namespace geozeta
