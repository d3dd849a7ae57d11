#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "core/continuation.hpp"
#include "core/spectrum.hpp"
#include "core/zeta.hpp"

namespace testing {

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(GEOZETA_FIXTURE_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline geozeta::LengthSpectrum fixture_spectrum(const std::string& name) {
  return geozeta::parse_spectrum(read_fixture(name));
}

inline geozeta::ManifoldInvariants fixture_invariants() {
  return geozeta::parse_invariants(read_fixture("invariants.json"));
}

inline geozeta::LengthSpectrum single(double length, double angle, int spin = 1,
                                      double l_max = 1e6) {
  return geozeta::LengthSpectrum({{length, angle, spin, 1}}, l_max, true);
}

/// Three oriented classes, small enough for brute-force products.
inline geozeta::LengthSpectrum small_spectrum() {
  return geozeta::LengthSpectrum(
      {{1.1, 0.4, 1, 1}, {1.45, 2.2, -1, 1}, {1.8, 5.1, 1, 2}}, 2.5, true, "small");
}

/// Parameters that keep powers up to `l_cut` even beyond l_max.
inline geozeta::EvalParams params(const geozeta::LengthSpectrum& spec, double l_cut) {
  auto p = geozeta::default_params(spec);
  p.l_cut = l_cut;
  return p;
}

inline double rel(geozeta::cplx a, geozeta::cplx b) { return geozeta::relative_residual(a, b); }

}  // namespace testing
