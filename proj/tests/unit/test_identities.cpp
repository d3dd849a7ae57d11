#include <doctest.h>

#include "core/identities.hpp"
#include "core/report.hpp"
#include "helpers.hpp"

using namespace geozeta;
using testing::rel;

namespace {

LengthSpectrum flip_spins(const LengthSpectrum& s) {
  std::vector<GeodesicEntry> es;
  for (auto e : s.entries()) {
    e.spin_sign = -e.spin_sign;
    es.push_back(e);
  }
  return LengthSpectrum(es, s.l_max(), s.oriented(), s.label());
}

LengthSpectrum empty() { return LengthSpectrum({}, 1.0, true); }

VerifyOptions opts(double tol = 1e-8) {
  VerifyOptions o;
  o.tol = tol;
  return o;
}

}  // namespace

TEST_CASE("Ruelle decomposition") {
  const auto s3 = testing::fixture_spectrum("synthetic3.json");
  const auto p = default_params(s3);
  const auto r0 = verify_ruelle_decomposition(s3, 0, p, opts());
  CHECK(r0.passed);
  CHECK(r0.max_residual == 0.0);
  VerifyOptions at4 = opts(1e-10);
  at4.grid = std::vector<cplx>{cplx(4.0, 0.0), cplx(4.0, 1.0), cplx(4.0, -2.0)};
  CHECK(verify_ruelle_decomposition(s3, 2, p, at4).max_residual < 1e-10);
  CHECK(verify_ruelle_decomposition(s3, 1, p, opts()).passed);
  CHECK(verify_ruelle_decomposition(flip_spins(s3), 1, p, opts()).passed);
}

TEST_CASE("Selberg decomposition for rho_m") {
  const auto s3 = testing::fixture_spectrum("synthetic3.json");
  const auto p = default_params(s3);
  CHECK(verify_selberg_rho_decomposition(s3, 0, 0, p, opts()).max_residual < 1e-14);
  for (int m = 1; m <= 2; ++m)
    for (const int k : {-2, -1, 0, 1, 2}) {
      CHECK(verify_selberg_rho_decomposition(s3, m, k, p, opts(1e-10)).passed);
      CHECK(verify_selberg_rho_decomposition(flip_spins(s3), m, k, p, opts(1e-10)).passed);
    }
}

TEST_CASE("quotient forms of R_rho") {
  const auto s3 = testing::fixture_spectrum("synthetic3.json");
  const auto p = default_params(s3);
  const auto e = empty();
  CHECK(verify_four_selberg_quotient(e, 2, default_params(e), opts()).max_residual == 0.0);
  CHECK(verify_rho_selberg_quotient(e, 2, default_params(e), opts()).max_residual == 0.0);
  for (int m = 0; m <= 3; ++m) {
    CHECK(verify_four_selberg_quotient(s3, m, p, opts(1e-10)).passed);
    CHECK(verify_rho_selberg_quotient(s3, m, p, opts(1e-10)).passed);
  }
}

TEST_CASE("the two quotient forms share a factor ratio") {
  const auto s = testing::fixture_spectrum("synthetic25.json");
  const auto p = default_params(s);
  for (int m = 0; m <= 3; ++m) {
    const cplx at(3.0 + 0.5 * m, 0.4);
    const double h = 0.5 * m;
    const cplx lhs = selberg_rho(s, m, 0, at, p).value / selberg_rho(s, m, -2, at + 1.0, p).value;
    const cplx rhs =
        selberg_sigma(s, m, at - h, p).value / selberg_sigma(s, -(m + 2), at + h + 1.0, p).value;
    CHECK(rel(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("Zograf ratio and corollary") {
  const auto s3 = testing::fixture_spectrum("synthetic3.json");
  const auto p = default_params(s3);
  const auto e = empty();
  CHECK(verify_zograf_ratio(e, 3, Parity::even, default_params(e), opts()).max_residual == 0.0);
  VerifyOptions at0 = opts(1e-10);
  at0.grid = std::vector<cplx>{cplx(0.0, 0.0)};
  CHECK(verify_zograf_ratio(s3, 3, Parity::even, p, at0).passed);
  CHECK(verify_zograf_ratio(s3, 2, Parity::odd, p, at0).passed);
  CHECK(verify_corollary_FG(e, 3, Parity::even, default_params(e), opts()).max_residual == 0.0);
  CHECK(verify_corollary_FG(s3, 3, Parity::even, p, opts(1e-10)).passed);
  CHECK(verify_corollary_FG(s3, 2, Parity::odd, p, opts(1e-10)).passed);
}

TEST_CASE("grid points outside the domain are excluded and noted") {
  const auto s3 = testing::fixture_spectrum("synthetic3.json");
  VerifyOptions o = opts();
  o.grid = std::vector<cplx>{cplx(1.0, 0.0), cplx(4.0, 0.0)};
  const auto r = verify_four_selberg_quotient(s3, 0, default_params(s3), o);
  REQUIRE(r.points.size() == 2);
  CHECK(r.points[0].excluded);
  CHECK(r.points[0].flags.front().find("excluded") != std::string::npos);
  CHECK_FALSE(r.points[1].excluded);
  CHECK(r.passed);
}

TEST_CASE("Ruelle functional equation") {
  const auto s = testing::fixture_spectrum("synthetic25.json");
  const auto inv = testing::fixture_invariants();
  const auto p = default_params(s);
  for (int m = 0; m <= 2; ++m) CHECK(verify_ruelle_functional_equation(s, inv, m, p, opts()).passed);
  VerifyOptions at4 = opts();
  at4.grid = std::vector<cplx>{cplx(4.0, 0.0), cplx(4.0, 0.7)};
  CHECK(verify_ruelle_functional_equation(s, inv, 0, p, at4).max_residual < 1e-8);

  // η enters only through phases that cancel pairwise.
  auto no_eta = inv;
  for (auto& [k, v] : no_eta.eta) v = 0.0;
  for (const int m : {0, 2}) {
    const cplx at(-(3.0 + 0.5 * m), 0.3);
    CHECK(rel(ruelle_rho_continued(s, inv, m, at, p).value,
              ruelle_rho_continued(s, no_eta, m, at, p).value) < 1e-12);
  }

  auto missing = inv;
  missing.eta.erase(4);
  CHECK_THROWS_AS(verify_ruelle_functional_equation(s, missing, 2, p, opts()), Error);
}

TEST_CASE("Ruelle functional equation: slope scales with dim") {
  const auto s = testing::fixture_spectrum("synthetic3.json");
  const auto inv = testing::fixture_invariants();
  const auto p = default_params(s);
  auto slope = [&](int m) {
    auto g = [&](double x) {
      return (ruelle_rho(s, m, x, p).log_value - ruelle_rho_continued(s, inv, m, -x, p).log_value).real();
    };
    const double x = 4.0, h = 1e-3;
    return (g(x + h) - g(x - h)) / (2.0 * h);
  };
  const double s0 = slope(0), s1 = slope(1);
  CHECK(s0 == doctest::Approx(4.0 * inv.volume / kPi).epsilon(1e-6));
  CHECK(s1 / s0 == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("determinant chain") {
  const auto s = testing::fixture_spectrum("synthetic3.json");
  const auto inv = testing::fixture_invariants();
  const auto e = empty();
  CHECK(verify_det_chain(e, inv, 1, default_params(e), opts()).max_residual < 1e-12);
  const auto p = default_params(s);
  for (int m = 0; m <= 2; ++m) CHECK(verify_det_chain(s, inv, m, p, opts(1e-9)).passed);

  VerifyOptions wrong = opts();
  wrong.det_volume = inv.volume + 1.0;
  wrong.grid = std::vector<cplx>{cplx(3.5, 0.25)};
  const int m = 0;
  const auto r = verify_det_chain(s, inv, m, p, wrong);
  CHECK_FALSE(r.passed);
  const cplx growth = std::exp(-2.0 * cplx(3.5, 0.25) * (m + 1.0) / kPi);
  CHECK(r.max_residual == doctest::Approx(std::abs(1.0 - growth) / std::max(1.0, std::abs(growth))).epsilon(1e-6));
}

TEST_CASE("reflect involution report") {
  const auto r = verify_reflect_involution(testing::fixture_invariants(), opts(1e-12));
  CHECK(r.passed);
  CHECK(r.points.size() == 8);
}

TEST_CASE("theta combinations") {
  ManifoldInvariants inv;
  inv.eta = {{2, 0.3}, {4, 0.7}, {1, 0.11}, {3, -0.4}};
  CHECK(theta_even(inv, 1) == 0.0);
  CHECK(theta_even(inv, 2) == doctest::Approx(0.7 - 14.0 * 0.3));
  CHECK(theta_odd(inv, 1) == doctest::Approx(-0.4 - 0.11 - 5.5 * 0.11));
}

TEST_CASE("torsion prediction: empty spectrum collapses to the exponential") {
  const auto e = empty();
  auto inv = testing::fixture_invariants();
  inv.cs = 0.0;
  const auto t = predict_torsion_ratio(e, inv, 3, Parity::even, default_params(e));
  const double th = theta_even(inv, 3);
  const cplx expected = std::polar(1.0, 6.0 * kPi * th) * std::exp((2.0 / kPi) * 37.0 * inv.volume);
  CHECK(rel(t.value, expected) < 1e-12);
  CHECK(t.f_or_g == cplx(1.0, 0.0));

  const auto o = predict_torsion_ratio(e, inv, 2, Parity::odd, default_params(e));
  const cplx vol(inv.volume, 3.0 * kPi * kPi * inv.eta.at(1));
  const cplx expected_odd =
      std::polar(1.0, kTwoPi * theta_odd(inv, 2)) * std::exp((2.0 / kPi) * (8.0 - 1.0 / 6.0) * vol);
  CHECK(rel(o.value, expected_odd) < 1e-12);
}

TEST_CASE("torsion prediction: thresholds") {
  const auto e = empty();
  const auto inv = testing::fixture_invariants();
  CHECK_THROWS_AS(predict_torsion_ratio(e, inv, 2, Parity::even, default_params(e)), Error);
  CHECK_THROWS_AS(predict_torsion_ratio(e, inv, 1, Parity::odd, default_params(e)), Error);
}

TEST_CASE("torsion prediction: invariances") {
  const auto s = testing::fixture_spectrum("synthetic25.json");
  const auto inv = testing::fixture_invariants();
  const auto p = default_params(s);
  for (const auto& [n, par] : {std::pair{3, Parity::even}, {4, Parity::even}, {2, Parity::odd}, {3, Parity::odd}}) {
    const auto base = predict_torsion_ratio(s, inv, n, par, p);
    auto cs = inv;
    cs.cs += 0.5;
    CHECK(rel(predict_torsion_ratio(s, cs, n, par, p).value, base.value) < 1e-10);
    for (const auto& [k, v] : inv.eta) {
      auto shifted = inv;
      shifted.eta[k] = v + 2.0;
      CHECK(rel(predict_torsion_ratio(s, shifted, n, par, p).value, base.value) < 1e-10);
    }
    auto bare = inv;
    bare.cs = 0.0;
    for (auto& [k, v] : bare.eta) v = 0.0;
    const auto b = predict_torsion_ratio(s, bare, n, par, p);
    CHECK(std::abs(b.value) == doctest::Approx(std::abs(base.value)).epsilon(1e-12));
  }
}

TEST_CASE("special low-n cases") {
  ManifoldInvariants inv;
  inv.volume = 3.0 * kPi;
  inv.eta = {{1, 0.0}, {2, 0.0}};
  CHECK(rel(special_case_low_n(inv, SpecialCase::f1_even), -std::exp(-1.0)) < 1e-15);
  CHECK(rel(special_case_low_n(inv, SpecialCase::g0_odd), std::exp(1.0)) < 1e-15);
  inv.volume = 1.7;
  const cplx f1 = special_case_low_n(inv, SpecialCase::f1_even);
  CHECK(f1.real() < 0.0);
  CHECK(std::abs(f1.imag()) < 1e-15);
}

TEST_CASE("main theorem residual") {
  const auto inv = testing::fixture_invariants();
  const auto e = empty();
  CHECK(main_theorem_residual(e, inv, 3, Parity::even, default_params(e), opts()).max_residual < 1e-14);
  for (const char* name : {"synthetic3.json", "synthetic25.json"}) {
    const auto s = testing::fixture_spectrum(name);
    const auto p = default_params(s);
    CHECK(main_theorem_residual(s, inv, 3, Parity::even, p, opts(1e-9)).passed);
    CHECK(main_theorem_residual(s, inv, 2, Parity::odd, p, opts(1e-9)).passed);
  }
  CHECK_THROWS_AS(main_theorem_residual(e, inv, 2, Parity::even, default_params(e), opts()), Error);
}

TEST_CASE("main theorem: an eta perturbation shows up as the predicted phase") {
  const auto s = testing::fixture_spectrum("synthetic25.json");
  const auto inv = testing::fixture_invariants();
  const auto p = default_params(s);
  const int n = 3;
  // Observed (T0/T)^4 frozen from the clean inputs.
  const auto clean = predict_torsion_ratio(s, inv, n, Parity::even, p);
  VerifyOptions o = opts(1e-9);
  o.observed_ratio4 = *clean.value4;
  CHECK(main_theorem_residual(s, inv, n, Parity::even, p, o).passed);
  auto bumped = inv;
  bumped.eta[2 * n] += 0.1;
  const auto r = main_theorem_residual(s, bumped, n, Parity::even, p, o);
  CHECK_FALSE(r.passed);
  CHECK(r.max_residual == doctest::Approx(std::abs(std::polar(1.0, -0.2 * kPi) - 1.0)).epsilon(1e-9));
}

TEST_CASE("main theorem: even parity ignores a uniform spin flip") {
  const auto s = testing::fixture_spectrum("synthetic3.json");
  const auto inv = testing::fixture_invariants();
  const auto p = default_params(s);
  const auto a = main_theorem_residual(s, inv, 3, Parity::even, p, opts());
  const auto b = main_theorem_residual(flip_spins(s), inv, 3, Parity::even, p, opts());
  CHECK(a.max_residual == b.max_residual);
}

TEST_CASE("reports do not depend on the job count") {
  const auto s = testing::fixture_spectrum("synthetic25.json");
  const auto inv = testing::fixture_invariants();
  const auto p = default_params(s);
  for (const auto& req : default_battery(true)) {
    if (req.id == IdentityId::exact_oracle) continue;
    VerifyOptions one = opts(), many = opts();
    many.jobs = 5;
    CHECK(dump(to_json(verify(s, &inv, req, p, one))) == dump(to_json(verify(s, &inv, req, p, many))));
  }
}

TEST_CASE("identity names round-trip") {
  for (const auto& req : default_battery(true)) {
    const auto name = identity_name(req.id);
    REQUIRE(identity_from_name(name).has_value());
    CHECK(*identity_from_name(name) == req.id);
  }
  CHECK_FALSE(identity_from_name("nonsense").has_value());
}

TEST_CASE("verify requires invariants where they are consumed") {
  const auto s = testing::small_spectrum();
  IdentityRequest req{IdentityId::ruelle_functional_equation, 0};
  CHECK_THROWS_AS(verify(s, nullptr, req, default_params(s), opts()), Error);
}
