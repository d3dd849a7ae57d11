#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "helpers.hpp"

using namespace geozeta;
using testing::single;

TEST_CASE("parse: empty entries give an empty spectrum") {
  const auto s = parse_spectrum(R"({"l_max": 1.0, "entries": []})");
  CHECK(s.empty());
  CHECK(s.l_max() == 1.0);
  CHECK(s.oriented());
}

TEST_CASE("parse: single entry round-trips its fields") {
  const auto s = parse_spectrum(
      R"({"l_max": 2, "entries": [{"length": 0.5, "angle": 1.0, "spin_sign": 1, "multiplicity": 1}]})");
  REQUIRE(s.entries().size() == 1);
  CHECK(s.entries()[0] == GeodesicEntry{0.5, 1.0, 1, 1});
}

TEST_CASE("parse: entries are sorted by length") {
  const auto s = parse_spectrum(R"({"l_max": 3, "entries": [
      {"length": 2.0, "angle": 0.1}, {"length": 0.7, "angle": 0.2}, {"length": 1.5, "angle": 0.3}]})");
  REQUIRE(s.entries().size() == 3);
  CHECK(s.entries()[0].length == 0.7);
  CHECK(s.entries()[1].length == 1.5);
  CHECK(s.entries()[2].length == 2.0);
}

TEST_CASE("parse: angles are reduced to [0, 2pi)") {
  const auto s = parse_spectrum(R"({"l_max": 3, "entries": [{"length": 1.0, "angle": 7.0}]})");
  CHECK(s.entries()[0].angle == doctest::Approx(7.0 - kTwoPi).epsilon(1e-15));
}

TEST_CASE("parse: rejects invalid documents") {
  auto kind_of = [](const char* text) {
    try {
      (void)parse_spectrum(text);
    } catch (const Error& e) {
      return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::argument;
  };
  CHECK(kind_of("{not json") == ErrorKind::parse);
  CHECK(kind_of(R"({"entries": []})") == ErrorKind::parse);
  CHECK(kind_of(R"({"l_max": 1, "entries": [{"length": -1, "angle": 0}]})") == ErrorKind::validation);
  CHECK(kind_of(R"({"l_max": 1, "entries": [{"length": 0.5, "angle": 0, "multiplicity": 0}]})") ==
        ErrorKind::validation);
  CHECK(kind_of(R"({"l_max": 1, "entries": [{"length": 1.5, "angle": 0}]})") == ErrorKind::validation);
  CHECK(kind_of(R"({"l_max": 1, "entries": [{"length": 0.5, "angle": 0, "spin_sign": 3}]})") ==
        ErrorKind::validation);
  CHECK(kind_of(R"({"l_max": 1, "entries": [{"length": 0.5, "angle": 0.2},
                                            {"length": 0.5, "angle": 0.2}]})") ==
        ErrorKind::validation);
}

TEST_CASE("parse: error messages name the offending entry") {
  try {
    (void)parse_spectrum(R"({"l_max": 1, "entries": [{"length": 0.5, "angle": 0}, {"length": -2, "angle": 0}]})");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("entries[1]") != std::string::npos);
  }
}

TEST_CASE("parse: unoriented angles above pi become the mirror representative") {
  const auto s = LengthSpectrum({{1.0, 4.0, 1, 1}}, 2.0, false);
  CHECK(s.entries()[0].angle == doctest::Approx(kTwoPi - 4.0));
  CHECK(s.entries()[0].spin_sign == -1);
}

TEST_CASE("serialize then parse gives an equal spectrum") {
  const auto s = testing::fixture_spectrum("synthetic25.json");
  CHECK(parse_spectrum(serialize_spectrum(s)) == s);
  const auto t = testing::small_spectrum();
  CHECK(parse_spectrum(serialize_spectrum(t)) == t);
}

TEST_CASE("CSV import") {
  const auto s = parse_spectrum_csv("length,angle,spin_sign,multiplicity\n1.2,0.5,-1,2\n0.9,0.1,1,1\n",
                                    2.0, true, "csv");
  REQUIRE(s.entries().size() == 2);
  CHECK(s.entries()[0].length == 0.9);
  CHECK(s.entries()[1].multiplicity == 2);
  try {
    (void)parse_spectrum_csv("length,angle,spin_sign,multiplicity\n1.2,0.5,-1,2\n-3,0,1,1\n", 2.0,
                             true);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_spectrum_csv("length,angle\n1,2\n", 2.0, true), Error);
}

TEST_CASE("powers_up_to: single entry") {
  const auto p = powers_up_to(single(1.0, 0.3), 3.5);
  REQUIRE(p.size() == 3);
  CHECK(p[0].m == 1);
  CHECK(p[1].m == 2);
  CHECK(p[2].m == 3);
  CHECK(powers_up_to(LengthSpectrum({}, 1.0, true), 10.0).empty());
}

TEST_CASE("powers_up_to: two entries interleave by total length") {
  const LengthSpectrum s({{1.0, 0.1, 1, 1}, {1.6, 0.2, 1, 1}}, 2.0, true);
  const auto p = powers_up_to(s, 3.3);
  const double expected[] = {1.0, 1.6, 2.0, 3.0, 3.2};
  REQUIRE(p.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(p[i].length == doctest::Approx(expected[i]));
}

TEST_CASE("powers_up_to: prefix consistency") {
  const auto s = testing::fixture_spectrum("synthetic25.json");
  const auto small = powers_up_to(s, 5.0);
  const auto large = powers_up_to(s, 9.0);
  std::vector<GeodesicPower> prefix;
  for (const auto& p : large)
    if (p.length <= 5.0) prefix.push_back(p);
  REQUIRE(prefix.size() == small.size());
  for (std::size_t i = 0; i < small.size(); ++i) {
    CHECK(prefix[i].base == small[i].base);
    CHECK(prefix[i].m == small[i].m);
    CHECK(prefix[i].mirror == small[i].mirror);
  }
}

TEST_CASE("powers_up_to: spin and angle stay consistent with the base eigenvalue") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  std::vector<GeodesicEntry> es;
  for (int i = 0; i < 12; ++i) es.push_back({0.3 + 0.1 * i, ang(rng), (i % 3 == 0) ? -1 : 1, 1});
  for (const bool oriented : {true, false}) {
    const LengthSpectrum s(es, 2.0, oriented);
    for (const auto& p : powers_up_to(s, 6.0)) {
      const cplx base = static_cast<double>(p.base_spin) * std::polar(1.0, 0.5 * p.base_angle);
      const cplx lhs = static_cast<double>(p.spin_sign) * std::polar(1.0, 0.5 * p.angle);
      CHECK(std::abs(lhs - std::pow(base, p.m)) <= 1e-12);
      CHECK(p.length == doctest::Approx(p.m * p.base_length).epsilon(1e-15));
    }
  }
}

TEST_CASE("mirror classes carry the conjugate eigenvalue") {
  const GeodesicEntry e{1.0, 1.3, -1, 1};
  const auto m = mirror_of(e);
  const cplx a = static_cast<double>(e.spin_sign) * std::polar(1.0, 0.5 * e.angle);
  const cplx b = static_cast<double>(m.spin_sign) * std::polar(1.0, 0.5 * m.angle);
  CHECK(std::abs(b - std::conj(a)) < 1e-14);
  CHECK(mirror_of({1.0, 0.0, -1, 1}).spin_sign == -1);
}

TEST_CASE("tail_bound: closed form and limits") {
  const auto s = LengthSpectrum({}, 1.0, true);
  GrowthModel g{1.0, 2.0, false};
  CHECK(tail_bound(s, 4.0, 10.0, g) == doctest::Approx(std::exp(-20.0) / 2.0));
  CHECK(tail_bound(s, 4.0, std::numeric_limits<double>::infinity(), g) == 0.0);
  CHECK_THROWS_AS(tail_bound(s, 2.0, 10.0, g), Error);
  CHECK_THROWS_AS(tail_bound(s, 1.5, 10.0, g), Error);
}

TEST_CASE("tail_bound: monotone in l_cut and in Re s") {
  const auto s = LengthSpectrum({}, 1.0, true);
  GrowthModel g{3.0, 2.0, false};
  double prev = tail_bound(s, 3.0, 1.0, g);
  for (double l = 1.5; l < 20.0; l += 0.5) {
    const double b = tail_bound(s, 3.0, l, g);
    CHECK(b <= prev);
    prev = b;
  }
  prev = tail_bound(s, 2.1, 5.0, g);
  for (double sigma = 2.2; sigma < 8.0; sigma += 0.1) {
    const double b = tail_bound(s, sigma, 5.0, g);
    CHECK(b <= prev);
    prev = b;
  }
}

TEST_CASE("tail_bound: fitted constant covers the actual omitted tail") {
  // Counts follow N(L) ~ e^{2L}/L; only the part below 3 is "known".
  std::vector<GeodesicEntry> all;
  for (int i = 0; i < 60; ++i) {
    const double l = 0.5 + 0.1 * i;
    const double density = std::exp(2.0 * l) / l * 0.1;
    all.push_back({l, 0.37 * i, 1, std::max(1, static_cast<int>(std::lround(density)))});
  }
  std::vector<GeodesicEntry> known;
  for (const auto& e : all)
    if (e.length <= 3.0) known.push_back(e);
  const LengthSpectrum full(all, 7.0, true);
  const LengthSpectrum partial(known, 3.0, true);
  const auto g = fit_growth(partial);
  for (const double sigma : {3.0, 4.0, 5.0}) {
    double actual = 0.0;
    for (const auto& p : powers_up_to(full, 40.0))
      if (p.length > 3.0) actual += p.multiplicity * std::exp(-sigma * p.length) / p.m;
    CHECK(tail_bound(partial, sigma, 3.0, g) >= actual);
  }
}

TEST_CASE("fit_growth: empty spectrum has zero constant") {
  const auto g = fit_growth(LengthSpectrum({}, 1.0, true));
  CHECK(g.constant == 0.0);
  CHECK_FALSE(g.rigorous);
}
