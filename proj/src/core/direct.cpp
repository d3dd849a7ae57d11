#include "core/direct.hpp"

#include <cmath>
#include <limits>

namespace geozeta {

cplx trace_rho_recurrence(const HolonomyClass& h, int m) {
  if (m == 0) return {1.0, 0.0};
  const double sign = h.spin_sign < 0 ? -1.0 : 1.0;
  const cplx lambda = sign * std::exp(0.5 * cplx(h.length, h.angle));
  const cplx t1 = lambda + 1.0 / lambda;
  cplx prev(1.0, 0.0), cur = t1;
  for (int j = 2; j <= m; ++j) {
    const cplx next = t1 * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double tail_or_inf(const LengthSpectrum& spec, double sigma, double scale, const EvalParams& p) {
  if (!(sigma > p.growth.exponent)) return kInf;
  return scale * tail_bound(spec, sigma, p.l_cut, p.growth);
}

}  // namespace

ZetaValue ruelle_rho_direct(const LengthSpectrum& spec, int m, cplx s, const EvalParams& p) {
  CompensatedSum acc;
  for (const auto& pw : powers_up_to(spec, p.l_cut)) {
    const auto h = holonomy(pw);
    const cplx term = trace_rho_recurrence(h, m) * std::exp(-s * pw.length);
    acc.add(-static_cast<double>(pw.multiplicity) / pw.m * term);
  }
  const double sigma = s.real() - 0.5 * m;
  const bool in_domain = sigma > 2.0;
  const double tail = in_domain ? (m + 1) * tail_or_inf(spec, sigma, 1.0, p) : kInf;
  return make_value(acc.value(), tail, !p.growth.rigorous || p.l_cut > spec.l_max(), in_domain,
                    p.l_cut);
}

ZetaValue selberg_rho_direct(const LengthSpectrum& spec, int m, int k, cplx s,
                             const EvalParams& p) {
  CompensatedSum acc;
  double lmin_scale = 1.0;
  if (!spec.empty()) {
    const double d = -std::expm1(-spec.min_length());
    lmin_scale = 1.0 / (d * d);
  }
  for (const auto& pw : powers_up_to(spec, p.l_cut)) {
    const auto h = holonomy(pw);
    const cplx z = inverse_complex_exp(h);
    const cplx denom = (1.0 - z) * (1.0 - std::conj(z));
    const cplx term =
        trace_rho_recurrence(h, m) * sigma_char(h, k) * std::exp(-s * pw.length) / denom;
    acc.add(-static_cast<double>(pw.multiplicity) / pw.m * term);
  }
  const double sigma = s.real() - 0.5 * m;
  const bool in_domain = sigma > 2.0;
  const double tail = in_domain ? (m + 1) * tail_or_inf(spec, sigma, lmin_scale, p) : kInf;
  return make_value(acc.value(), tail, !p.growth.rigorous || p.l_cut > spec.l_max(), in_domain,
                    p.l_cut);
}

}  // namespace geozeta
