#include <doctest.h>

#include <random>

#include "core/chars.hpp"
#include "core/direct.hpp"
#include "helpers.hpp"

using namespace geozeta;
using testing::params;
using testing::rel;

namespace {

/// ∏_γ ∏_{p,q ≤ P} ∏_{eigenvalues μ of χ(γ)} (1 − μ σ_k e^{−p(ℓ+iθ)} e^{−q(ℓ−iθ)} e^{−sℓ})
/// with χ = ρ_m, over primitive classes only.
cplx brute_selberg(const LengthSpectrum& spec, int m, int k, cplx s, int P = 60) {
  cplx prod = 1.0;
  for (const auto& e : spec.entries()) {
    std::vector<GeodesicEntry> classes{e};
    if (!spec.oriented()) classes.push_back(mirror_of(e));
    for (const auto& c : classes) {
      const HolonomyClass h = holonomy(c);
      const cplx lambda = static_cast<double>(c.spin_sign) * std::exp(0.5 * cplx(c.length, c.angle));
      const cplx w = inverse_complex_exp(h);
      cplx f = 1.0;
      for (int p = 0; p <= P; ++p)
        for (int q = 0; q <= P; ++q)
          for (int j = 0; j <= m; ++j)
            f *= 1.0 - std::pow(lambda, m - 2 * j) * sigma_char(h, k) * std::pow(w, p) *
                           std::pow(std::conj(w), q) * std::exp(-s * c.length);
      for (int r = 0; r < c.multiplicity; ++r) prod *= f;
    }
  }
  return prod;
}

/// ∏_γ det(Id − ρ_m(γ) e^{−sℓ}) from the eigenvalues, primitive classes only.
cplx brute_ruelle_rho(const LengthSpectrum& spec, int m, cplx s) {
  cplx prod = 1.0;
  for (const auto& e : spec.entries()) {
    std::vector<GeodesicEntry> classes{e};
    if (!spec.oriented()) classes.push_back(mirror_of(e));
    for (const auto& c : classes) {
      const cplx lambda = static_cast<double>(c.spin_sign) * std::exp(0.5 * cplx(c.length, c.angle));
      for (int j = 0; j <= m; ++j)
        prod *= std::pow(1.0 - std::pow(lambda, m - 2 * j) * std::exp(-s * c.length),
                         static_cast<double>(c.multiplicity));
    }
  }
  return prod;
}

}  // namespace

TEST_CASE("empty spectrum: every object is 1 with zero bound") {
  const LengthSpectrum s({}, 1.0, true);
  const auto p = default_params(s);
  const cplx at(4.0, 0.4);
  for (const auto& v : {ruelle_sigma(s, 3, at, p), selberg_sigma(s, -2, at, p), ruelle_rho(s, 2, at, p),
                        selberg_rho(s, 2, 1, at, p), zograf_F(s, 3, 0.0, p), zograf_G(s, 2, 0.0, p)}) {
    CHECK(v.value == cplx(1.0, 0.0));
    CHECK(v.abs_error_bound == 0.0);
  }
}

TEST_CASE("ruelle_sigma: single-class closed forms") {
  const auto one = testing::single(1.0, 0.9);
  CHECK(rel(ruelle_sigma(one, 0, 3.0, params(one, 60.0)).value, 1.0 - std::exp(-3.0)) < 1e-13);
  CHECK(std::abs(ruelle_sigma(one, 0, 3.0, params(one, 60.0)).value.real() - 0.9502129) < 1e-7);
  const auto quarter = testing::single(1.0, kPi / 2.0);
  CHECK(rel(ruelle_sigma(quarter, 2, 3.0, params(quarter, 60.0)).value,
            1.0 - cplx(0.0, 1.0) * std::exp(-3.0)) < 1e-13);
}

TEST_CASE("value and log_value agree") {
  const auto s = testing::fixture_spectrum("synthetic25.json");
  const auto v = selberg_rho(s, 2, 1, cplx(3.5, 1.0), default_params(s));
  CHECK(std::abs(v.value - std::exp(v.log_value)) <= 1e-12 * std::abs(v.value));
  CHECK(v.abs_error_bound >= 0.0);
  CHECK(v.heuristic_bound);
}

TEST_CASE("outside the half-plane values are formal truncations") {
  const auto s = testing::small_spectrum();
  const auto v = ruelle_sigma(s, 0, cplx(1.5, 0.0), default_params(s));
  CHECK_FALSE(v.in_convergence_domain);
  CHECK(std::isinf(v.abs_error_bound));
  CHECK_FALSE(zograf_F(s, 3, cplx(-1.5, 0.0), default_params(s)).in_convergence_domain);
}

TEST_CASE("selberg_sigma matches the brute-force double product") {
  const auto one = testing::single(1.3, 2.1, -1);
  const auto small = testing::small_spectrum();
  for (const int k : {-3, -2, 0, 1, 2}) {
    for (const cplx s : {cplx(3.0, 0.0), cplx(2.5, 1.5), cplx(4.0, -0.7)}) {
      CHECK(rel(selberg_sigma(one, k, s, params(one, 60.0)).value, brute_selberg(one, 0, k, s)) <
            1e-10);
      CHECK(rel(selberg_sigma(small, k, s, params(small, 60.0)).value,
                brute_selberg(small, 0, k, s)) < 1e-10);
    }
  }
}

TEST_CASE("selberg_sigma: even k ignores the spin sign") {
  const auto a = testing::single(1.1, 0.8, 1);
  const auto b = testing::single(1.1, 0.8, -1);
  for (const int k : {-4, 0, 2})
    CHECK(selberg_sigma(a, k, 3.2, params(a, 30.0)).value ==
          selberg_sigma(b, k, 3.2, params(b, 30.0)).value);
}

TEST_CASE("ruelle_rho: m = 0 and single-class closed form") {
  const auto s = testing::small_spectrum();
  const auto p = default_params(s);
  CHECK(ruelle_rho(s, 0, 3.3, p).value == ruelle_sigma(s, 0, 3.3, p).value);
  const double l = 0.9, th = 1.2;
  const auto one = testing::single(l, th);
  const cplx c(l, th);
  for (const cplx at : {cplx(4.0, 0.0), cplx(4.5, 2.0)}) {
    const cplx e = std::exp(-at * l);
    const cplx closed = (1.0 - std::exp(c) * e) * (1.0 - e) * (1.0 - std::exp(-c) * e);
    CHECK(rel(ruelle_rho(one, 2, at, params(one, 80.0)).value, closed) < 1e-12);
  }
}

TEST_CASE("ruelle_rho matches the eigenvalue determinant product") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi), len(0.8, 2.0);
  std::vector<GeodesicEntry> es;
  for (int i = 0; i < 4; ++i) es.push_back({len(rng), ang(rng), i % 2 ? -1 : 1, 1});
  const LengthSpectrum s(es, 2.0, true);
  for (int m = 0; m <= 3; ++m) {
    const cplx at(4.0 + 0.5 * m, 0.3);
    CHECK(rel(ruelle_rho(s, m, at, params(s, 80.0)).value, brute_ruelle_rho(s, m, at)) < 1e-10);
    CHECK(rel(ruelle_rho_direct(s, m, at, params(s, 80.0)).value, brute_ruelle_rho(s, m, at)) <
          1e-10);
  }
}

TEST_CASE("ruelle_rho: single class equals its explicit factor product") {
  const auto one = testing::single(1.05, 4.4, -1);
  const auto p = params(one, 70.0);
  for (int m = 0; m <= 4; ++m) {
    for (double im = -2.0; im <= 2.0; im += 1.0) {
      const cplx at(3.0 + 0.5 * m, im);
      cplx prod = 1.0;
      for (int l = 0; l <= m; ++l) prod *= ruelle_sigma(one, m - 2 * l, at - 0.5 * m + double(l), p).value;
      CHECK(rel(ruelle_rho(one, m, at, p).value, prod) < 1e-12);
      CHECK(rel(ruelle_rho(one, m, at, p).value, brute_ruelle_rho(one, m, at)) < 1e-12);
    }
  }
}

TEST_CASE("selberg_rho: m = 0 and brute force with 2x2 determinants") {
  const auto s = testing::small_spectrum();
  const auto p = params(s, 60.0);
  CHECK(selberg_rho(s, 0, 1, 3.1, p).value == selberg_sigma(s, 1, 3.1, p).value);
  const auto one = testing::single(1.2, 0.6, -1);
  for (const int k : {0, 1, -2}) {
    const cplx at(3.5, 0.5);
    CHECK(rel(selberg_rho(one, 1, k, at, params(one, 60.0)).value, brute_selberg(one, 1, k, at)) <
          1e-10);
    CHECK(rel(selberg_rho_direct(one, 1, k, at, params(one, 60.0)).value,
              brute_selberg(one, 1, k, at)) < 1e-10);
  }
}

TEST_CASE("unoriented spectra: conjugate symmetry at real s") {
  const auto s = testing::fixture_spectrum("synthetic25.json");
  const auto p = default_params(s);
  for (int k = 0; k <= 5; ++k) {
    CHECK(rel(ruelle_sigma(s, k, 3.0, p).value, std::conj(ruelle_sigma(s, -k, 3.0, p).value)) < 1e-12);
    CHECK(rel(selberg_sigma(s, k, 3.0, p).value, std::conj(selberg_sigma(s, -k, 3.0, p).value)) <
          1e-12);
  }
}

TEST_CASE("Zograf products: ratio and direct paths agree at s = 0") {
  for (const char* name : {"synthetic3.json", "synthetic25.json"}) {
    const auto s = testing::fixture_spectrum(name);
    const auto p = default_params(s);
    CHECK(rel(zograf_F_direct(s, 3, 0.0, p).value, zograf_F_ratio(s, 3, 0.0, p).value) < 1e-10);
    CHECK(rel(zograf_G_direct(s, 2, 0.0, p).value, zograf_G_ratio(s, 2, 0.0, p).value) < 1e-10);
  }
  const auto small = testing::small_spectrum();
  const auto p = default_params(small);
  CHECK(rel(zograf_F_direct(small, 3, 0.0, p).value, zograf_F_ratio(small, 3, 0.0, p).value) < 1e-10);
}

TEST_CASE("Zograf F: single class equals the q-Pochhammer-style product") {
  const double l = 0.9, th = 2.6;
  const auto one = testing::single(l, th);
  const auto p = params(one, 100.0);
  cplx prod = 1.0;
  for (int k = 3; k < 200; ++k) prod *= 1.0 - std::exp(-double(k) * cplx(l, th));
  CHECK(rel(zograf_F(one, 3, 0.0, p).value, prod) < 1e-12);
  CHECK(rel(zograf_F_direct(one, 3, 0.0, p).value, prod) < 1e-12);
}

TEST_CASE("Zograf: index checks and spin sensitivity") {
  const auto s = testing::small_spectrum();
  const auto p = default_params(s);
  CHECK_THROWS_AS(zograf_F(s, 0, 0.0, p), Error);
  CHECK_THROWS_AS(zograf_G(s, -1, 0.0, p), Error);
  std::vector<GeodesicEntry> flipped;
  for (auto e : s.entries()) {
    e.spin_sign = -e.spin_sign;
    flipped.push_back(e);
  }
  const LengthSpectrum f(flipped, s.l_max(), true);
  CHECK(zograf_F(s, 3, 0.0, p).value == zograf_F(f, 3, 0.0, p).value);
  CHECK(rel(zograf_G(s, 2, 0.0, p).value, zograf_G(f, 2, 0.0, p).value) > 1e-6);
}

TEST_CASE("raising l_cut moves values by less than the reported bound") {
  std::vector<GeodesicEntry> es;
  for (int i = 0; i < 40; ++i) {
    const double l = 0.6 + 0.1 * i;
    es.push_back({l, 0.91 * i, i % 3 ? 1 : -1,
                  std::max(1, static_cast<int>(std::lround(std::exp(2.0 * l) / l * 0.1)))});
  }
  const LengthSpectrum s(es, 4.6, true);
  auto low = default_params(s);
  low.l_cut = 3.0;
  const auto high = default_params(s);
  for (const cplx at : {cplx(3.0, 0.0), cplx(4.0, 1.0)}) {
    const auto a = ruelle_sigma(s, 1, at, low);
    const auto b = ruelle_sigma(s, 1, at, high);
    CHECK(std::abs(a.value - b.value) <= a.abs_error_bound);
    const auto c = selberg_sigma(s, 2, at, low);
    const auto d = selberg_sigma(s, 2, at, high);
    CHECK(std::abs(c.value - d.value) <= c.abs_error_bound);
  }
}

TEST_CASE("evaluation is deterministic") {
  const auto s = testing::fixture_spectrum("synthetic25.json");
  const auto p = default_params(s);
  const auto a = selberg_rho(s, 3, -1, cplx(4.1, 2.2), p);
  const auto b = selberg_rho(s, 3, -1, cplx(4.1, 2.2), p);
  CHECK(a.value == b.value);
  CHECK(a.abs_error_bound == b.abs_error_bound);
}
