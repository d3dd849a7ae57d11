#include "core/chars.hpp"

#include <cmath>

namespace geozeta {

HolonomyClass holonomy(const GeodesicPower& p) { return {p.length, p.angle, p.spin_sign}; }

HolonomyClass holonomy(const GeodesicEntry& e) { return {e.length, e.angle, e.spin_sign}; }

cplx sigma_char(const HolonomyClass& h, int k) {
  const double sign = (h.spin_sign < 0 && (k % 2 != 0)) ? -1.0 : 1.0;
  return sign * std::polar(1.0, 0.5 * k * h.angle);
}

cplx trace_rho(const HolonomyClass& h, int m) {
  const cplx c(h.length, h.angle);
  const double sign = (h.spin_sign < 0 && (m % 2 != 0)) ? -1.0 : 1.0;
  CompensatedSum acc;
  for (int j = 0; j <= m; ++j) acc.add(std::exp((0.5 * m - j) * c));
  return sign * acc.value();
}

double discriminant(const HolonomyClass& h) {
  const cplx w = cplx(1.0, 0.0) - inverse_complex_exp(h);
  return std::exp(h.length) * std::norm(w);
}

cplx inverse_complex_exp(const HolonomyClass& h) {
  return std::polar(std::exp(-h.length), -h.angle);
}

}  // namespace geozeta
