#include "core/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace geozeta {

cplx log1m(cplx x) {
  const double ax = std::abs(x);
  if (ax == 0.0) return {0.0, 0.0};
  if (ax < 0.5) {
    // -sum x^j / j; 0.5^60/60 is below double epsilon.
    CompensatedSum acc;
    cplx power = x;
    for (int j = 1; j <= 64; ++j) {
      const cplx term = power / static_cast<double>(j);
      acc.add(-term);
      if (std::abs(term) < 1e-18 * ax) break;
      power *= x;
    }
    return acc.value();
  }
  return std::log(cplx(1.0, 0.0) - x);
}

double relative_residual(cplx a, cplx b) {
  const double denom = std::max({std::abs(a), std::abs(b), 1e-14});
  return std::abs(a - b) / denom;
}

double reduce_angle(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

}  // namespace geozeta
