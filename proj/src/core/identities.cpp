#include "core/identities.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include "core/direct.hpp"
#include "core/oracle.hpp"

namespace geozeta {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct NameEntry {
  IdentityId id;
  std::string_view name;
};

constexpr std::array<NameEntry, 11> kNames{{
    {IdentityId::ruelle_decomposition, "prop-ruelle-dec"},
    {IdentityId::selberg_rho_decomposition, "selberg-rho-dec"},
    {IdentityId::four_selberg_quotient, "four-selberg"},
    {IdentityId::rho_selberg_quotient, "rho-selberg"},
    {IdentityId::zograf_ratio, "zograf-ratio"},
    {IdentityId::corollary_fg, "corollary-FG"},
    {IdentityId::ruelle_functional_equation, "ruelle-feq"},
    {IdentityId::det_chain, "det-chain"},
    {IdentityId::reflect_involution, "reflect-involution"},
    {IdentityId::main_theorem, "main-theorem"},
    {IdentityId::exact_oracle, "exact-oracle"},
}};

using PointFn = std::function<void(GridPoint&)>;

/// Evaluates every grid point, `jobs` at a time. Each point writes only its own
/// slot, so the report does not depend on the schedule.
std::vector<GridPoint> eval_grid(const std::vector<cplx>& grid, double threshold, int jobs,
                                 const PointFn& fn) {
  std::vector<GridPoint> points(grid.size());
  auto run = [&](std::size_t i) {
    GridPoint& pt = points[i];
    pt.s = grid[i];
    if (!(pt.s.real() > threshold)) {
      pt.excluded = true;
      pt.residual = kNaN;
      std::ostringstream os;
      os.precision(17);
      os << "excluded: outside domain Re(s) > " << threshold;
      pt.flags.push_back(os.str());
      return;
    }
    try {
      fn(pt);
    } catch (const std::exception& e) {
      pt.error = true;
      pt.residual = kNaN;
      pt.flags.push_back(std::string("error: ") + e.what());
    }
  };
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), grid.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) run(i);
    return points;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < grid.size(); i += workers) run(i);
    });
  pool.clear();
  return points;
}

void note_value(GridPoint& pt, const ZetaValue& v) {
  auto add = [&](const char* f) {
    if (std::find(pt.flags.begin(), pt.flags.end(), f) == pt.flags.end()) pt.flags.push_back(f);
  };
  if (v.heuristic_bound) add("heuristic-bound");
  if (v.reflected) add("reflected");
  if (!v.in_convergence_domain) add("formal-truncation");
}

void compare(GridPoint& pt, const ZetaValue& lhs, const ZetaValue& rhs) {
  pt.residual = relative_residual(lhs.value, rhs.value);
  note_value(pt, lhs);
  note_value(pt, rhs);
}

IdentityReport finish(const IdentityRequest& req, const VerifyOptions& o,
                      std::vector<GridPoint> points) {
  if (!(o.tol > 0.0)) throw Error(ErrorKind::argument, "tolerance must be positive");
  IdentityReport r;
  r.id = req.id;
  r.request = req;
  r.tolerance = o.tol;
  r.points = std::move(points);
  bool any_error = false;
  std::size_t evaluated = 0;
  r.max_residual = 0.0;
  for (const auto& pt : r.points) {
    if (pt.error) any_error = true;
    if (pt.excluded || pt.error) continue;
    ++evaluated;
    if (std::isnan(pt.residual) || pt.residual > r.max_residual) r.max_residual = pt.residual;
  }
  r.passed = !any_error && evaluated > 0 && r.max_residual <= o.tol;
  if (evaluated == 0) r.notes.push_back("no grid point evaluated");
  return r;
}

std::vector<cplx> grid_for(const IdentityRequest& req, const VerifyOptions& o) {
  return o.grid ? *o.grid : default_grid(req);
}

void require_eta(const ManifoldInvariants& inv, std::initializer_list<int> ks) {
  for (const int k : ks) (void)eta_lookup(inv, k);
}

}  // namespace

std::string_view identity_name(IdentityId id) {
  for (const auto& e : kNames)
    if (e.id == id) return e.name;
  return "unknown";
}

std::optional<IdentityId> identity_from_name(std::string_view name) {
  for (const auto& e : kNames)
    if (e.name == name) return e.id;
  return std::nullopt;
}

std::string_view parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

double domain_threshold(const IdentityRequest& req) {
  const double h = 0.5 * req.m;
  const bool odd = req.parity == Parity::odd;
  switch (req.id) {
    case IdentityId::ruelle_decomposition:
    case IdentityId::selberg_rho_decomposition:
    case IdentityId::four_selberg_quotient:
    case IdentityId::rho_selberg_quotient:
    case IdentityId::ruelle_functional_equation:
      return 2.0 + h;
    case IdentityId::zograf_ratio:
      return odd ? 1.5 - req.n : 2.0 - req.n;
    case IdentityId::corollary_fg:
      return odd ? req.n + 1.5 : req.n + 1.0;
    case IdentityId::det_chain:
      return 3.0 + h;
    case IdentityId::reflect_involution:
    case IdentityId::main_theorem:
    case IdentityId::exact_oracle:
      return -std::numeric_limits<double>::infinity();
  }
  return 0.0;
}

std::vector<cplx> default_grid(const IdentityRequest& req) {
  std::vector<cplx> g;
  constexpr int kPoints = 8;
  switch (req.id) {
    case IdentityId::main_theorem:
      return {cplx(0.0, 0.0)};
    case IdentityId::exact_oracle:
      return {};
    case IdentityId::reflect_involution:
      for (int i = 0; i < kPoints; ++i) g.emplace_back(-3.0 + 6.0 * i / (kPoints - 1), 0.7);
      return g;
    default:
      break;
  }
  const double lo = domain_threshold(req) + 0.25;
  const double hi = domain_threshold(req) + 2.0;
  for (int i = 0; i < kPoints; ++i) g.emplace_back(lo + (hi - lo) * i / (kPoints - 1), 0.5);
  return g;
}

IdentityReport verify_ruelle_decomposition(const LengthSpectrum& spec, int m,
                                           const EvalParams& p, const VerifyOptions& o) {
  if (m < 0) throw Error(ErrorKind::argument, "m must be nonnegative");
  IdentityRequest req{IdentityId::ruelle_decomposition, m};
  auto pts = eval_grid(grid_for(req, o), domain_threshold(req), o.jobs, [&](GridPoint& pt) {
    compare(pt, ruelle_rho_direct(spec, m, pt.s, p), ruelle_rho(spec, m, pt.s, p));
  });
  return finish(req, o, std::move(pts));
}

IdentityReport verify_selberg_rho_decomposition(const LengthSpectrum& spec, int m, int k,
                                                const EvalParams& p, const VerifyOptions& o) {
  if (m < 0) throw Error(ErrorKind::argument, "m must be nonnegative");
  IdentityRequest req{IdentityId::selberg_rho_decomposition, m, k};
  auto pts = eval_grid(grid_for(req, o), domain_threshold(req), o.jobs, [&](GridPoint& pt) {
    compare(pt, selberg_rho_direct(spec, m, k, pt.s, p), selberg_rho(spec, m, k, pt.s, p));
  });
  return finish(req, o, std::move(pts));
}

IdentityReport verify_four_selberg_quotient(const LengthSpectrum& spec, int m,
                                            const EvalParams& p, const VerifyOptions& o) {
  if (m < 0) throw Error(ErrorKind::argument, "m must be nonnegative");
  IdentityRequest req{IdentityId::four_selberg_quotient, m};
  const double h = 0.5 * m;
  auto pts = eval_grid(grid_for(req, o), domain_threshold(req), o.jobs, [&](GridPoint& pt) {
    const cplx s = pt.s;
    const auto lhs = ruelle_rho(spec, m, s, p);
    const auto a = selberg_sigma(spec, m, s - h, p);
    const auto b = selberg_sigma(spec, -m, s + h + 2.0, p);
    const auto c = selberg_sigma(spec, m + 2, s - h + 1.0, p);
    const auto d = selberg_sigma(spec, -(m + 2), s + h + 1.0, p);
    const Factor fs[] = {{&a, 1}, {&b, 1}, {&c, -1}, {&d, -1}};
    compare(pt, lhs, combine(fs));
  });
  return finish(req, o, std::move(pts));
}

IdentityReport verify_rho_selberg_quotient(const LengthSpectrum& spec, int m,
                                           const EvalParams& p, const VerifyOptions& o) {
  if (m < 0) throw Error(ErrorKind::argument, "m must be nonnegative");
  IdentityRequest req{IdentityId::rho_selberg_quotient, m};
  auto pts = eval_grid(grid_for(req, o), domain_threshold(req), o.jobs, [&](GridPoint& pt) {
    const cplx s = pt.s;
    const auto lhs = ruelle_rho(spec, m, s, p);
    const auto a = selberg_rho_direct(spec, m, 0, s, p);
    const auto b = selberg_rho_direct(spec, m, 0, s + 2.0, p);
    const auto c = selberg_rho_direct(spec, m, 2, s + 1.0, p);
    const auto d = selberg_rho_direct(spec, m, -2, s + 1.0, p);
    const Factor fs[] = {{&a, 1}, {&b, 1}, {&c, -1}, {&d, -1}};
    compare(pt, lhs, combine(fs));
  });
  return finish(req, o, std::move(pts));
}

IdentityReport verify_zograf_ratio(const LengthSpectrum& spec, int n, Parity parity,
                                   const EvalParams& p, const VerifyOptions& o) {
  const bool odd = parity == Parity::odd;
  if (n < (odd ? 0 : 1)) throw Error(ErrorKind::argument, odd ? "G_n needs n >= 0" : "F_n needs n >= 1");
  IdentityRequest req{IdentityId::zograf_ratio, 0, 0, n, parity};
  auto pts = eval_grid(grid_for(req, o), domain_threshold(req), o.jobs, [&](GridPoint& pt) {
    if (odd)
      compare(pt, zograf_G_direct(spec, n, pt.s, p), zograf_G_ratio(spec, n, pt.s, p));
    else
      compare(pt, zograf_F_direct(spec, n, pt.s, p), zograf_F_ratio(spec, n, pt.s, p));
  });
  return finish(req, o, std::move(pts));
}

IdentityReport verify_corollary_FG(const LengthSpectrum& spec, int n, Parity parity,
                                   const EvalParams& p, const VerifyOptions& o) {
  if (n < 1) throw Error(ErrorKind::argument, "corollary needs n >= 1");
  const bool odd = parity == Parity::odd;
  IdentityRequest req{IdentityId::corollary_fg, 0, 0, n, parity};
  auto pts = eval_grid(grid_for(req, o), domain_threshold(req), o.jobs, [&](GridPoint& pt) {
    const cplx s = pt.s;
    const double dn = n;
    if (!odd) {
      const auto f = zograf_F_direct(spec, n, s, p);
      const auto r = ruelle_rho(spec, 2 * (n - 1), s, p);
      const Factor ls[] = {{&f, 2}, {&r, 1}};
      const auto a = selberg_sigma(spec, 2 * (n - 1), s - dn + 1.0, p);
      const auto b = selberg_sigma(spec, -2 * n, s + dn, p);
      const auto c = selberg_sigma(spec, -2 * (n - 1), s + dn + 1.0, p);
      const auto d = selberg_sigma(spec, 2 * n, s - dn + 2.0, p);
      const Factor rs[] = {{&a, 1}, {&b, 1}, {&c, -1}, {&d, -1}};
      compare(pt, combine(ls), combine(rs));
    } else {
      const auto g = zograf_G_direct(spec, n, s, p);
      const auto r = ruelle_rho(spec, 2 * n - 1, s, p);
      const Factor ls[] = {{&g, 2}, {&r, 1}};
      const auto a = selberg_sigma(spec, 2 * n - 1, s - dn + 0.5, p);
      const auto b = selberg_sigma(spec, -(2 * n + 1), s + dn + 0.5, p);
      const auto c = selberg_sigma(spec, 2 * n + 1, s - dn + 1.5, p);
      const auto d = selberg_sigma(spec, -(2 * n - 1), s + dn + 1.5, p);
      const Factor rs[] = {{&a, 1}, {&b, 1}, {&c, -1}, {&d, -1}};
      compare(pt, combine(ls), combine(rs));
    }
  });
  return finish(req, o, std::move(pts));
}

IdentityReport verify_ruelle_functional_equation(const LengthSpectrum& spec,
                                                 const ManifoldInvariants& inv, int m,
                                                 const EvalParams& p, const VerifyOptions& o) {
  if (m < 0) throw Error(ErrorKind::argument, "m must be nonnegative");
  require_eta(inv, {m, m + 2});
  IdentityRequest req{IdentityId::ruelle_functional_equation, m};
  const double dim = m + 1;
  auto pts = eval_grid(grid_for(req, o), domain_threshold(req), o.jobs, [&](GridPoint& pt) {
    const cplx s = pt.s;
    const auto lhs = ruelle_rho(spec, m, s, p);
    auto rhs = ruelle_rho_continued(spec, inv, m, -s, p);
    rhs = make_value(rhs.log_value + (4.0 * dim * inv.volume / kPi) * s, rhs.log_error_bound,
                     rhs.heuristic_bound, rhs.in_convergence_domain, rhs.l_cut);
    rhs.reflected = true;
    compare(pt, lhs, rhs);
  });
  return finish(req, o, std::move(pts));
}

IdentityReport verify_det_chain(const LengthSpectrum& spec, const ManifoldInvariants& inv, int m,
                                const EvalParams& p, const VerifyOptions& o) {
  if (m < 0) throw Error(ErrorKind::argument, "m must be nonnegative");
  IdentityRequest req{IdentityId::det_chain, m};
  const double dim = m + 1;
  const double vol_det = o.det_volume.value_or(inv.volume);
  auto pts = eval_grid(grid_for(req, o), domain_threshold(req), o.jobs, [&](GridPoint& pt) {
    const cplx s = pt.s;
    // log det(Δ₀ − 1 + x²) and log of the Δ₁/Δ₀ determinant ratio.
    auto log_a = [&](cplx x) {
      const auto z = selberg_rho(spec, m, 0, x + 1.0, p);
      return z.log_value - dim * vol_det * x * x * x / (6.0 * kPi);
    };
    const auto zp = selberg_rho(spec, m, 2, s + 1.0, p);
    const auto zm = selberg_rho(spec, m, -2, s + 1.0, p);
    const cplx log_b =
        zp.log_value + zm.log_value + dim * vol_det * (s - s * s * s / 3.0) / kPi;
    const cplx log_r =
        log_a(s - 1.0) + log_a(s + 1.0) - log_b + 2.0 * s * dim * inv.volume / kPi;
    const auto lhs = ruelle_rho(spec, m, s, p);
    const auto rhs = make_value(log_r, 4.0 * zp.log_error_bound, zp.heuristic_bound,
                                zp.in_convergence_domain, zp.l_cut);
    compare(pt, lhs, rhs);
  });
  auto report = finish(req, o, std::move(pts));
  if (o.det_volume) report.notes.push_back("determinant-side volume overridden");
  return report;
}

IdentityReport verify_reflect_involution(const ManifoldInvariants& inv, const VerifyOptions& o) {
  IdentityRequest req{IdentityId::reflect_involution};
  std::vector<int> ks{0};
  for (const auto& [k, eta] : inv.eta) {
    ks.push_back(k);
    ks.push_back(-k);
  }
  auto pts = eval_grid(grid_for(req, o), domain_threshold(req), o.jobs, [&](GridPoint& pt) {
    // Sample values seeded by the point itself, so the schedule cannot matter.
    std::seed_seq seq{std::hash<double>{}(pt.s.real()), std::hash<double>{}(pt.s.imag())};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    double worst = 0.0;
    for (const int k : ks) {
      const cplx v(u(rng), u(rng));
      const cplx once = reflect_selberg(inv, k, pt.s, v);
      const cplx back = reflect_selberg(inv, -k, -pt.s, once);
      worst = std::max(worst, relative_residual(back, v));
    }
    pt.residual = worst;
  });
  return finish(req, o, std::move(pts));
}

IdentityReport main_theorem_residual(const LengthSpectrum& spec, const ManifoldInvariants& inv,
                                     int n, Parity parity, const EvalParams& p,
                                     const VerifyOptions& o) {
  const bool odd = parity == Parity::odd;
  if (n < (odd ? 2 : 3))
    throw Error(ErrorKind::domain,
                "s=0 outside convergence domain; use special-case evaluator");
  const int m = odd ? 2 * n - 1 : 2 * (n - 1);
  const int k_hi = odd ? 2 * n + 1 : 2 * n;
  const int k_lo = odd ? 2 * n - 1 : 2 * n - 2;
  require_eta(inv, {k_hi, k_lo});
  IdentityRequest req{IdentityId::main_theorem, m, 0, n, parity};
  VerifyOptions at_zero = o;
  at_zero.grid = std::vector<cplx>{cplx(0.0, 0.0)};
  const double nn = n;
  const double c = odd ? 2.0 * nn * nn - 1.0 / 6.0 : 2.0 * nn * nn - 2.0 * nn + 1.0 / 3.0;
  auto pts = eval_grid(*at_zero.grid, domain_threshold(req), 1, [&](GridPoint& pt) {
    const auto zograf = odd ? zograf_G(spec, n, pt.s, p) : zograf_F(spec, n, pt.s, p);
    cplx log_lhs = 4.0 * zograf.log_value;
    note_value(pt, zograf);
    if (o.observed_ratio4) {
      if (*o.observed_ratio4 == cplx(0.0, 0.0))
        throw Error(ErrorKind::argument, "observed torsion ratio must be nonzero");
      log_lhs -= std::log(*o.observed_ratio4);
      pt.flags.push_back("observed torsion ratio");
    } else {
      const auto r0 = ruelle_rho_continued(spec, inv, m, pt.s, p);
      log_lhs += 2.0 * r0.log_value;
      note_value(pt, r0);
      pt.flags.push_back("circular: R_rho(0) rebuilt by reflection");
    }
    pt.flags.push_back("same-argument quotients at s=0 taken as 1");
    const double deta = eta_lookup(inv, k_hi) - eta_lookup(inv, k_lo);
    const cplx log_rhs = -(2.0 / kPi) * c * inv.volume - cplx(0.0, kTwoPi * deta);
    pt.residual = relative_residual(std::exp(log_lhs), std::exp(log_rhs));
  });
  return finish(req, at_zero, std::move(pts));
}

IdentityReport verify_exact_oracle(const VerifyOptions& o) {
  IdentityRequest req{IdentityId::exact_oracle};
  constexpr int kMaxPower = 12;
  const auto classes = exact_fixture_classes();
  const auto cases = exact_battery();
  std::vector<cplx> grid;
  for (const auto& c : cases) grid.emplace_back(c.s.value(), 0.0);
  std::vector<GridPoint> pts(cases.size());
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(std::max(o.jobs, 1)), cases.size());
  auto run = [&](std::size_t i) {
    auto& pt = pts[i];
    pt.s = grid[i];
    pt.flags.push_back(exact_case_name(cases[i]));
    try {
      const auto res = exact_identity_check(classes, cases[i], kMaxPower);
      pt.residual = res.passed ? 0.0 : 1.0;
      if (!res.passed) {
        std::ostringstream os;
        os << "first failing term: class " << res.first_failure->first << ", m "
           << res.first_failure->second;
        pt.flags.push_back(os.str());
      }
    } catch (const std::exception& e) {
      pt.error = true;
      pt.residual = kNaN;
      pt.flags.push_back(std::string("error: ") + e.what());
    }
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < cases.size(); i += workers) run(i);
      });
  }
  VerifyOptions exact = o;
  exact.tol = std::min(o.tol, 0.5);
  auto report = finish(req, exact, std::move(pts));
  report.tolerance = 0.0;
  report.passed = report.passed && report.max_residual == 0.0;
  report.notes.push_back("exact Gaussian-rational comparison per (class, power), max power 12");
  return report;
}

IdentityReport verify(const LengthSpectrum& spec, const ManifoldInvariants* inv,
                      const IdentityRequest& req, const EvalParams& p, const VerifyOptions& o) {
  auto need_inv = [&]() -> const ManifoldInvariants& {
    if (!inv)
      throw Error(ErrorKind::argument,
                  std::string(identity_name(req.id)) + " requires an invariants document");
    return *inv;
  };
  switch (req.id) {
    case IdentityId::ruelle_decomposition: return verify_ruelle_decomposition(spec, req.m, p, o);
    case IdentityId::selberg_rho_decomposition:
      return verify_selberg_rho_decomposition(spec, req.m, req.k, p, o);
    case IdentityId::four_selberg_quotient: return verify_four_selberg_quotient(spec, req.m, p, o);
    case IdentityId::rho_selberg_quotient: return verify_rho_selberg_quotient(spec, req.m, p, o);
    case IdentityId::zograf_ratio: return verify_zograf_ratio(spec, req.n, req.parity, p, o);
    case IdentityId::corollary_fg: return verify_corollary_FG(spec, req.n, req.parity, p, o);
    case IdentityId::ruelle_functional_equation:
      return verify_ruelle_functional_equation(spec, need_inv(), req.m, p, o);
    case IdentityId::det_chain: return verify_det_chain(spec, need_inv(), req.m, p, o);
    case IdentityId::reflect_involution: return verify_reflect_involution(need_inv(), o);
    case IdentityId::main_theorem:
      return main_theorem_residual(spec, need_inv(), req.n, req.parity, p, o);
    case IdentityId::exact_oracle: return verify_exact_oracle(o);
  }
  throw Error(ErrorKind::argument, "unknown identity");
}

std::vector<IdentityRequest> default_battery(bool with_invariants) {
  using I = IdentityId;
  std::vector<IdentityRequest> out;
  for (int m = 0; m <= 3; ++m) out.push_back({I::ruelle_decomposition, m});
  for (int m = 0; m <= 2; ++m)
    for (const int k : {-2, 0, 1, 2}) out.push_back({I::selberg_rho_decomposition, m, k});
  for (int m = 0; m <= 3; ++m) out.push_back({I::four_selberg_quotient, m});
  for (int m = 0; m <= 3; ++m) out.push_back({I::rho_selberg_quotient, m});
  for (int n = 1; n <= 5; ++n) out.push_back({I::zograf_ratio, 0, 0, n, Parity::even});
  for (int n = 0; n <= 4; ++n) out.push_back({I::zograf_ratio, 0, 0, n, Parity::odd});
  for (int n = 1; n <= 4; ++n) {
    out.push_back({I::corollary_fg, 0, 0, n, Parity::even});
    out.push_back({I::corollary_fg, 0, 0, n, Parity::odd});
  }
  if (with_invariants) {
    for (int m = 0; m <= 2; ++m) out.push_back({I::ruelle_functional_equation, m});
    for (int m = 0; m <= 2; ++m) out.push_back({I::det_chain, m});
    out.push_back({I::reflect_involution});
    for (const int n : {3, 4}) out.push_back({I::main_theorem, 0, 0, n, Parity::even});
    for (const int n : {2, 3}) out.push_back({I::main_theorem, 0, 0, n, Parity::odd});
  }
  out.push_back({I::exact_oracle});
  return out;
}

double theta_even(const ManifoldInvariants& inv, int n) {
  const double c = 6.0 * n * n - 6.0 * n + 1.0;
  return eta_lookup(inv, 2 * n) - eta_lookup(inv, 2 * (n - 1)) - c * eta_lookup(inv, 2);
}

double theta_odd(const ManifoldInvariants& inv, int n) {
  const double c = 6.0 * n * n - 0.5;
  return eta_lookup(inv, 2 * n + 1) - eta_lookup(inv, 2 * n - 1) - c * eta_lookup(inv, 1);
}

TorsionPrediction predict_torsion_ratio(const LengthSpectrum& spec, const ManifoldInvariants& inv,
                                        int n, Parity parity, const EvalParams& p) {
  const bool odd = parity == Parity::odd;
  if (n < (odd ? 2 : 3))
    throw Error(ErrorKind::domain,
                "s=0 outside convergence domain; use special-case evaluator (n below threshold)");
  TorsionPrediction t;
  t.n = n;
  t.parity = parity;
  t.complex_volume = complex_volume(inv);
  const double nn = n;
  const cplx zero(0.0, 0.0);
  if (!odd) {
    t.exponent = 12;
    t.theta = theta_even(inv, n);
    t.zograf = zograf_F(spec, n, zero, p);
    const double c = 6.0 * nn * nn - 6.0 * nn + 1.0;
    const cplx log_v = cplx(0.0, 6.0 * kPi * t.theta) + (2.0 / kPi) * c * t.complex_volume.value() +
                       12.0 * t.zograf.log_value;
    t.value = std::exp(log_v);
    const double deta = eta_lookup(inv, 2 * n) - eta_lookup(inv, 2 * (n - 1));
    const cplx log_v4 = cplx(0.0, kTwoPi * deta) +
                        (2.0 / kPi) * (2.0 * nn * nn - 2.0 * nn + 1.0 / 3.0) * inv.volume +
                        4.0 * t.zograf.log_value;
    t.value4 = std::exp(log_v4);
    t.aps_consistent = relative_residual(std::exp(3.0 * log_v4), t.value) <= 1e-9;
  } else {
    t.exponent = 4;
    t.theta = theta_odd(inv, n);
    t.zograf = zograf_G(spec, n, zero, p);
    const double c = 2.0 * nn * nn - 1.0 / 6.0;
    const cplx vol_odd(inv.volume, 3.0 * kPi * kPi * eta_lookup(inv, 1));
    const cplx log_v =
        cplx(0.0, kTwoPi * t.theta) + (2.0 / kPi) * c * vol_odd + 4.0 * t.zograf.log_value;
    t.value = std::exp(log_v);
  }
  t.f_or_g = t.zograf.value;
  return t;
}

cplx special_case_low_n(const ManifoldInvariants& inv, SpecialCase which) {
  if (which == SpecialCase::f1_even) {
    const cplx v(inv.volume, 3.0 * kPi * kPi * eta_lookup(inv, 2));
    return -std::exp(-v / (3.0 * kPi));
  }
  const cplx v(inv.volume, -12.0 * kPi * kPi * eta_lookup(inv, 1));
  return std::exp(v / (3.0 * kPi));
}

}  // namespace geozeta
