#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/continuation.hpp"
#include "core/zeta.hpp"

namespace geozeta {

enum class IdentityId {
  ruelle_decomposition,
  selberg_rho_decomposition,
  four_selberg_quotient,
  rho_selberg_quotient,
  zograf_ratio,
  corollary_fg,
  ruelle_functional_equation,
  det_chain,
  reflect_involution,
  main_theorem,
  exact_oracle,
};

enum class Parity { even, odd };

/// CLI name, e.g. "four-selberg".
std::string_view identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(std::string_view name);
std::string_view parity_name(Parity p);

/// Which instance of an identity to check.
struct IdentityRequest {
  IdentityId id = IdentityId::ruelle_decomposition;
  int m = 0;
  int k = 0;
  int n = 3;
  Parity parity = Parity::even;
};

struct GridPoint {
  cplx s;
  double residual = 0.0;  ///< NaN when the point was excluded or failed
  std::vector<std::string> flags;
  bool excluded = false;
  bool error = false;
};

struct IdentityReport {
  IdentityId id = IdentityId::ruelle_decomposition;
  IdentityRequest request;
  double tolerance = 1e-8;
  std::vector<GridPoint> points;
  double max_residual = 0.0;
  bool passed = false;
  std::vector<std::string> notes;
};

struct VerifyOptions {
  double tol = 1e-8;
  std::optional<std::vector<cplx>> grid;
  int jobs = 1;
  /// Torsion-side (𝒯₀/𝒯)^4 for main-theorem; when absent R_ρ(0) is rebuilt by reflection.
  std::optional<cplx> observed_ratio4;
  /// Volume used inside the determinant expressions of det-chain.
  std::optional<double> det_volume;
};

/// Lower bound on Re s for the identity (strict).
double domain_threshold(const IdentityRequest& req);
/// 8 points on Im s = 1/2 from threshold+1/4 to threshold+2 (identity specific for a few).
std::vector<cplx> default_grid(const IdentityRequest& req);

IdentityReport verify_ruelle_decomposition(const LengthSpectrum& spec, int m,
                                           const EvalParams& p, const VerifyOptions& o);
IdentityReport verify_selberg_rho_decomposition(const LengthSpectrum& spec, int m, int k,
                                                const EvalParams& p, const VerifyOptions& o);
IdentityReport verify_four_selberg_quotient(const LengthSpectrum& spec, int m,
                                            const EvalParams& p, const VerifyOptions& o);
IdentityReport verify_rho_selberg_quotient(const LengthSpectrum& spec, int m,
                                           const EvalParams& p, const VerifyOptions& o);
IdentityReport verify_zograf_ratio(const LengthSpectrum& spec, int n, Parity parity,
                                   const EvalParams& p, const VerifyOptions& o);
IdentityReport verify_corollary_FG(const LengthSpectrum& spec, int n, Parity parity,
                                   const EvalParams& p, const VerifyOptions& o);
IdentityReport verify_ruelle_functional_equation(const LengthSpectrum& spec,
                                                 const ManifoldInvariants& inv, int m,
                                                 const EvalParams& p, const VerifyOptions& o);
IdentityReport verify_det_chain(const LengthSpectrum& spec, const ManifoldInvariants& inv, int m,
                                const EvalParams& p, const VerifyOptions& o);
IdentityReport verify_reflect_involution(const ManifoldInvariants& inv, const VerifyOptions& o);
IdentityReport main_theorem_residual(const LengthSpectrum& spec, const ManifoldInvariants& inv,
                                     int n, Parity parity, const EvalParams& p,
                                     const VerifyOptions& o);
/// Built-in exact battery, one point per (identity instance, s).
IdentityReport verify_exact_oracle(const VerifyOptions& o);

/// Dispatch on req.id. `inv` is required by the identities that consume invariants.
IdentityReport verify(const LengthSpectrum& spec, const ManifoldInvariants* inv,
                      const IdentityRequest& req, const EvalParams& p, const VerifyOptions& o);

/// Instances run by `verify --identity all`.
std::vector<IdentityRequest> default_battery(bool with_invariants);

double theta_even(const ManifoldInvariants& inv, int n);
double theta_odd(const ManifoldInvariants& inv, int n);

struct TorsionPrediction {
  int n = 0;
  Parity parity = Parity::even;
  int exponent = 12;  ///< 12 for even, 4 for odd
  cplx value;         ///< (𝒯₀/𝒯)^exponent
  /// Even only: (𝒯₀/𝒯)^4 from the η(2n)−η(2n−2) form.
  std::optional<cplx> value4;
  /// Even only: whether value4³ reproduces value (holds when 2CS ≡ 3η(2) mod 1).
  std::optional<bool> aps_consistent;
  double theta = 0.0;
  cplx f_or_g;
  ZetaValue zograf;
  ComplexVolume complex_volume;
};

/// Even: n ≥ 3, odd: n ≥ 2. Below that throws Error(domain).
TorsionPrediction predict_torsion_ratio(const LengthSpectrum& spec, const ManifoldInvariants& inv,
                                        int n, Parity parity, const EvalParams& p);

enum class SpecialCase { f1_even, g0_odd };

/// F_1² R_{ρ_0}|_{s=0} = −exp(−(Vol + 3iπ²η(2))/(3π)) and
/// G_0⁴|_{s=0} = exp((Vol − 12iπ²η(1))/(3π)).
cplx special_case_low_n(const ManifoldInvariants& inv, SpecialCase which);

}  // namespace geozeta
