#include "core/zeta.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace geozeta {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool heuristic_for(const LengthSpectrum& spec, const EvalParams& p) {
  return !p.growth.rigorous || p.l_cut > spec.l_max();
}

/// Bound on Σ over omitted powers for a series whose m-th term is at most
/// `scale·e^{−σ·mℓ}`; infinite when σ ≤ 2.
double series_tail(const LengthSpectrum& spec, double sigma, double scale, const EvalParams& p) {
  if (!(sigma > p.growth.exponent)) return kInf;
  return scale * tail_bound(spec, sigma, p.l_cut, p.growth);
}

/// 1/(1−e^{−ℓ_min})², the largest Selberg denominator weight.
double selberg_scale(const LengthSpectrum& spec) {
  if (spec.empty()) return 1.0;
  const double d = -std::expm1(-spec.min_length());
  return 1.0 / (d * d);
}

cplx selberg_weight(const HolonomyClass& h) {
  const cplx w = cplx(1.0, 0.0) - inverse_complex_exp(h);
  return 1.0 / std::norm(w);
}

ZetaValue ruelle_sigma_on(const LengthSpectrum& spec, std::span<const GeodesicPower> powers, int k,
                          cplx s, const EvalParams& p) {
  CompensatedSum acc;
  for (const auto& pw : powers) {
    const auto h = holonomy(pw);
    const cplx term = sigma_char(h, k) * std::exp(-s * pw.length);
    acc.add(-static_cast<double>(pw.multiplicity) / pw.m * term);
  }
  const bool in_domain = s.real() > 2.0;
  const double tail = in_domain ? series_tail(spec, s.real(), 1.0, p) : kInf;
  return make_value(acc.value(), tail, heuristic_for(spec, p), in_domain, p.l_cut);
}

ZetaValue selberg_sigma_on(const LengthSpectrum& spec, std::span<const GeodesicPower> powers,
                           int k, cplx s, const EvalParams& p) {
  CompensatedSum acc;
  for (const auto& pw : powers) {
    const auto h = holonomy(pw);
    const cplx term = sigma_char(h, k) * std::exp(-s * pw.length) * selberg_weight(h);
    acc.add(-static_cast<double>(pw.multiplicity) / pw.m * term);
  }
  const bool in_domain = s.real() > 2.0;
  const double tail = in_domain ? series_tail(spec, s.real(), selberg_scale(spec), p) : kInf;
  return make_value(acc.value(), tail, heuristic_for(spec, p), in_domain, p.l_cut);
}

/// Direct Zograf product: Σ_{k=n}^{K} log R(σ_{−(2k+odd)}, s + k + odd/2).
ZetaValue zograf_direct(const LengthSpectrum& spec, int n, cplx s, const EvalParams& p, int odd) {
  const auto powers = powers_up_to(spec, p.l_cut);
  const double shift = 0.5 * odd;
  int k_last = n;
  if (!spec.empty()) {
    // e^{−(k+1)ℓ_min} < 1e-18 makes the omitted factors negligible.
    const double need = 41.5 / spec.min_length();
    k_last = n + static_cast<int>(std::ceil(need));
  }
  if (k_last > p.zograf_k_max) k_last = p.zograf_k_max;

  CompensatedSum acc;
  double k_tail = 0.0;
  for (const auto& pw : powers) {
    const auto h = holonomy(pw);
    const double weight = static_cast<double>(pw.multiplicity) / pw.m;
    for (int k = n; k <= k_last; ++k) {
      const cplx term = sigma_char(h, -(2 * k + odd)) * std::exp(-(s + (k + shift)) * pw.length);
      acc.add(-weight * term);
    }
    // Geometric remainder over k > k_last.
    const double first = std::exp(-(s.real() + k_last + 1 + shift) * pw.length);
    k_tail += weight * first / -std::expm1(-pw.length);
  }

  const double threshold = odd ? 1.5 - n : 2.0 - n;
  const bool in_domain = s.real() > threshold;
  double tail = kInf;
  if (in_domain) {
    tail = k_tail;
    for (int k = n; k <= k_last; ++k) tail += series_tail(spec, s.real() + k + shift, 1.0, p);
  }
  return make_value(acc.value(), tail, heuristic_for(spec, p), in_domain, p.l_cut);
}

}  // namespace

EvalParams default_params(const LengthSpectrum& spec) {
  EvalParams p;
  p.l_cut = spec.l_max();
  p.growth = fit_growth(spec);
  return p;
}

ZetaValue make_value(cplx log_value, double log_error_bound, bool heuristic, bool in_domain,
                     double l_cut) {
  ZetaValue v;
  v.log_value = log_value;
  v.value = std::exp(log_value);
  v.log_error_bound = log_error_bound;
  v.abs_error_bound =
      std::isinf(log_error_bound) ? kInf : std::abs(v.value) * std::expm1(log_error_bound);
  v.heuristic_bound = heuristic;
  v.in_convergence_domain = in_domain;
  v.l_cut = l_cut;
  return v;
}

ZetaValue combine(std::span<const Factor> factors) {
  CompensatedSum acc;
  double err = 0.0;
  bool heuristic = false, in_domain = true, reflected = false;
  double l_cut = 0.0;
  for (const auto& f : factors) {
    acc.add(static_cast<double>(f.exponent) * f.value->log_value);
    err += std::abs(f.exponent) * f.value->log_error_bound;
    heuristic = heuristic || f.value->heuristic_bound;
    in_domain = in_domain && f.value->in_convergence_domain;
    reflected = reflected || f.value->reflected;
    l_cut = f.value->l_cut;
  }
  auto out = make_value(acc.value(), err, heuristic, in_domain, l_cut);
  out.reflected = reflected;
  return out;
}

ZetaValue ruelle_sigma(const LengthSpectrum& spec, int k, cplx s, const EvalParams& p) {
  const auto powers = powers_up_to(spec, p.l_cut);
  return ruelle_sigma_on(spec, powers, k, s, p);
}

ZetaValue selberg_sigma(const LengthSpectrum& spec, int k, cplx s, const EvalParams& p) {
  const auto powers = powers_up_to(spec, p.l_cut);
  return selberg_sigma_on(spec, powers, k, s, p);
}

ZetaValue ruelle_rho(const LengthSpectrum& spec, int m, cplx s, const EvalParams& p) {
  if (m < 0) throw Error(ErrorKind::argument, "ruelle_rho: m must be nonnegative");
  const auto powers = powers_up_to(spec, p.l_cut);
  std::vector<ZetaValue> parts;
  parts.reserve(m + 1);
  for (int l = 0; l <= m; ++l)
    parts.push_back(ruelle_sigma_on(spec, powers, m - 2 * l, s - 0.5 * m + static_cast<double>(l), p));
  std::vector<Factor> fs;
  for (const auto& v : parts) fs.push_back({&v, 1});
  return combine(fs);
}

ZetaValue selberg_rho(const LengthSpectrum& spec, int m, int k, cplx s, const EvalParams& p) {
  if (m < 0) throw Error(ErrorKind::argument, "selberg_rho: m must be nonnegative");
  const auto powers = powers_up_to(spec, p.l_cut);
  std::vector<ZetaValue> parts;
  parts.reserve(m + 1);
  for (int l = 0; l <= m; ++l)
    parts.push_back(
        selberg_sigma_on(spec, powers, m - 2 * l + k, s - 0.5 * m + static_cast<double>(l), p));
  std::vector<Factor> fs;
  for (const auto& v : parts) fs.push_back({&v, 1});
  return combine(fs);
}

ZetaValue zograf_F_direct(const LengthSpectrum& spec, int n, cplx s, const EvalParams& p) {
  if (n < 1) throw Error(ErrorKind::argument, "F_n requires n >= 1");
  return zograf_direct(spec, n, s, p, 0);
}

ZetaValue zograf_F_ratio(const LengthSpectrum& spec, int n, cplx s, const EvalParams& p) {
  if (n < 1) throw Error(ErrorKind::argument, "F_n requires n >= 1");
  const auto powers = powers_up_to(spec, p.l_cut);
  const auto num = selberg_sigma_on(spec, powers, -2 * n, s + static_cast<double>(n), p);
  const auto den = selberg_sigma_on(spec, powers, -2 * (n - 1), s + static_cast<double>(n + 1), p);
  const Factor fs[] = {{&num, 1}, {&den, -1}};
  return combine(fs);
}

ZetaValue zograf_F(const LengthSpectrum& spec, int n, cplx s, const EvalParams& p) {
  if (s.real() > 2.0 - n) return zograf_F_ratio(spec, n, s, p);
  return zograf_F_direct(spec, n, s, p);
}

ZetaValue zograf_G_direct(const LengthSpectrum& spec, int n, cplx s, const EvalParams& p) {
  if (n < 0) throw Error(ErrorKind::argument, "G_n requires n >= 0");
  return zograf_direct(spec, n, s, p, 1);
}

ZetaValue zograf_G_ratio(const LengthSpectrum& spec, int n, cplx s, const EvalParams& p) {
  if (n < 0) throw Error(ErrorKind::argument, "G_n requires n >= 0");
  const auto powers = powers_up_to(spec, p.l_cut);
  const auto num = selberg_sigma_on(spec, powers, -(2 * n + 1), s + (n + 0.5), p);
  const auto den = selberg_sigma_on(spec, powers, -(2 * n - 1), s + (n + 1.5), p);
  const Factor fs[] = {{&num, 1}, {&den, -1}};
  return combine(fs);
}

ZetaValue zograf_G(const LengthSpectrum& spec, int n, cplx s, const EvalParams& p) {
  if (s.real() > 1.5 - n) return zograf_G_ratio(spec, n, s, p);
  return zograf_G_direct(spec, n, s, p);
}

}  // namespace geozeta
