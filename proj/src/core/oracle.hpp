#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "core/spectrum.hpp"

namespace geozeta {

/// a + bi with a, b ∈ ℚ.
struct GaussianRational {
  mpq_class re{0};
  mpq_class im{0};

  GaussianRational() = default;
  GaussianRational(mpq_class a, mpq_class b = 0);

  GaussianRational operator+(const GaussianRational& o) const;
  GaussianRational operator-(const GaussianRational& o) const;
  GaussianRational operator-() const;
  GaussianRational operator*(const GaussianRational& o) const;
  GaussianRational operator/(const GaussianRational& o) const;
  GaussianRational& operator+=(const GaussianRational& o);
  bool operator==(const GaussianRational& o) const;

  GaussianRational conj() const;
  mpq_class norm() const;  ///< a² + b²
  bool is_zero() const;
  std::string str() const;
};

/// x^e for any integer e (x ≠ 0 when e < 0).
GaussianRational pow(const GaussianRational& x, long e);

/// Exact model of one primitive class: q = e^{−ℓ}, u = e^{iθ}, u_half = spin·e^{iθ/2}.
class ExactClass {
 public:
  /// Throws Error(validation) unless 0 < q < 1 is a rational square, |u| = 1 and
  /// u_half² = u.
  ExactClass(mpq_class q, GaussianRational u, std::optional<GaussianRational> u_half);
  /// u = u_half².
  static ExactClass from_half(mpq_class q, GaussianRational u_half);

  const mpq_class& q() const { return q_; }
  const mpq_class& root_q() const { return r_; }
  const GaussianRational& u() const { return u_; }
  const std::optional<GaussianRational>& u_half() const { return h_; }

  /// Floating image: ℓ = −ln q, θ = arg u, spin from u_half (or +1).
  GeodesicEntry to_entry() const;

 private:
  mpq_class q_, r_;
  GaussianRational u_;
  std::optional<GaussianRational> h_;
};

/// s ∈ ½ℤ stored as 2s.
struct HalfInt {
  long twice = 0;
  static HalfInt from_double(double s);  ///< throws Error(argument) unless 2s ∈ ℤ
  double value() const { return 0.5 * static_cast<double>(twice); }
};

enum class ExactKind {
  ruelle,        ///< R(σ_k, s)
  selberg,       ///< Z(σ_k, s)
  ruelle_rho,    ///< R_{ρ_M}(s) from the trace of ρ_M
  selberg_rho,   ///< Z_{ρ_M}(σ_k, s) from the trace of ρ_M
  zograf_f,      ///< F_n(s) summed in closed form over k ≥ n
  zograf_g,      ///< G_n(s) likewise
};

/// ± one zeta object at s + shift_twice/2.
struct ExactFactor {
  ExactKind kind = ExactKind::ruelle;
  int k = 0;
  int M = 0;  ///< representation index for the ρ kinds, n for the Zograf kinds
  long shift_twice = 0;
  int sign = 1;
};

enum class ExactIdentity {
  ruelle_decomposition,
  selberg_rho_decomposition,
  four_selberg_quotient,
  rho_selberg_quotient,
  zograf_ratio_f,
  zograf_ratio_g,
  corollary_f,
  corollary_g,
};

struct ExactCase {
  ExactIdentity id = ExactIdentity::ruelle_decomposition;
  int M = 0;  ///< ρ index, or n for the Zograf and corollary identities
  int k = 0;
  HalfInt s;
};

std::string exact_case_name(const ExactCase& c);

/// Both sides of an identity as signed factor lists.
struct ExactSides {
  std::vector<ExactFactor> lhs;
  std::vector<ExactFactor> rhs;
};
ExactSides exact_sides(const ExactCase& c);

/// Per-(class, power) log-series contributions of both sides.
struct ExactTerm {
  GaussianRational lhs;
  GaussianRational rhs;
};
using ExactTermLedger = std::map<std::pair<std::size_t, int>, ExactTerm>;

struct ExactCheckResult {
  bool passed = true;
  std::size_t terms_checked = 0;
  /// Lowest (class, power) whose two sides differ.
  std::optional<std::pair<std::size_t, int>> first_failure;
  std::optional<ExactTerm> failing_term;
  ExactTermLedger ledger;
};

/// Exact equality of Σ lhs and Σ rhs at every (class, power m ≤ max_power).
ExactCheckResult exact_check(const std::vector<ExactClass>& classes, const ExactSides& sides,
                             HalfInt s, int max_power);
ExactCheckResult exact_identity_check(const std::vector<ExactClass>& classes, const ExactCase& c,
                                      int max_power);

/// Three classes built from Pythagorean triples, one with spin −1.
std::vector<ExactClass> exact_fixture_classes();
/// Identity instances of the built-in exact battery.
std::vector<ExactCase> exact_battery();

}  // namespace geozeta
