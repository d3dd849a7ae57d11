#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace geozeta {

/// One primitive closed geodesic (or several sharing the same data).
struct GeodesicEntry {
  double length = 0.0;  ///< translation length, > 0
  double angle = 0.0;   ///< holonomy rotation in [0, 2π)
  int spin_sign = 1;    ///< SL(2,C) lift: m_γ has eigenvalue spin_sign·e^{iθ/2}
  int multiplicity = 1;

  bool operator==(const GeodesicEntry&) const = default;
};

/// Constant of the counting model N(L) ≲ C·e^{exponent·L} used for tail bounds.
struct GrowthModel {
  double constant = 1.0;
  double exponent = 2.0;
  bool rigorous = false;
};

/// Validated, length-sorted primitive spectrum. Immutable once constructed.
///
/// When `oriented()` is false every entry stands for the pair {γ, γ⁻¹}; the
/// iteration helpers add the mirror class with the conjugate holonomy
/// eigenvalue (angle 2π−θ, spin flipped unless θ = 0).
class LengthSpectrum {
 public:
  LengthSpectrum() = default;
  /// Validates and normalizes. Throws Error(validation) on bad input.
  LengthSpectrum(std::vector<GeodesicEntry> entries, double l_max, bool oriented,
                 std::string label = {});

  std::span<const GeodesicEntry> entries() const { return entries_; }
  double l_max() const { return l_max_; }
  bool oriented() const { return oriented_; }
  const std::string& label() const { return label_; }
  bool empty() const { return entries_.empty(); }
  /// Shortest length, or +inf for an empty spectrum.
  double min_length() const;
  /// Number of primitive classes counted with multiplicity and mirrors.
  long class_count() const;

  bool operator==(const LengthSpectrum&) const = default;

 private:
  std::vector<GeodesicEntry> entries_;
  double l_max_ = 1.0;
  bool oriented_ = true;
  std::string label_;
};

/// A class γ = γ₀^m where γ₀ is an entry (or its mirror).
struct GeodesicPower {
  std::size_t base = 0;  ///< index into LengthSpectrum::entries()
  bool mirror = false;   ///< γ₀ is the mirror of the entry
  int m = 1;
  double base_length = 0.0;
  double base_angle = 0.0;
  int base_spin = 1;
  double length = 0.0;  ///< m·base_length
  double angle = 0.0;   ///< m·base_angle reduced to [0, 2π)
  int spin_sign = 1;    ///< chosen so spin·e^{i·angle/2} = (base_spin·e^{i·base_angle/2})^m
  int multiplicity = 1;
};

/// Data of the mirror class (conjugate eigenvalue).
GeodesicEntry mirror_of(const GeodesicEntry& e);

/// Every power with m·ℓ₀ ≤ l_cut, ordered by total length, then base index,
/// then mirror flag, then m.
std::vector<GeodesicPower> powers_up_to(const LengthSpectrum& spec, double l_cut);

/// Heuristic (or rigorous, given a rigorous model) bound on the omitted
/// log-series tail: C·e^{−(σ−2)·l_cut}/(σ−2). Throws Error(domain) for σ ≤ 2.
double tail_bound(const LengthSpectrum& spec, double re_s_effective, double l_cut,
                  const GrowthModel& growth);

/// Least-squares fit of log N(L) − 2L over the spectrum. See GrowthModel.
GrowthModel fit_growth(const LengthSpectrum& spec);

LengthSpectrum parse_spectrum(std::string_view json_text);
/// CSV with header `length,angle,spin_sign,multiplicity`; l_max comes from the caller.
LengthSpectrum parse_spectrum_csv(std::string_view csv_text, double l_max, bool oriented,
                                  std::string label = {});
std::string serialize_spectrum(const LengthSpectrum& spec);

}  // namespace geozeta
