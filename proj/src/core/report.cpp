#include "core/report.hpp"

namespace geozeta {

ojson to_json(cplx z) { return ojson::array({z.real(), z.imag()}); }

ojson to_json(const IdentityReport& r) {
  ojson j;
  j["identity_id"] = identity_name(r.id);
  ojson params;
  switch (r.id) {
    case IdentityId::ruelle_decomposition:
    case IdentityId::four_selberg_quotient:
    case IdentityId::rho_selberg_quotient:
    case IdentityId::ruelle_functional_equation:
    case IdentityId::det_chain:
      params["m"] = r.request.m;
      break;
    case IdentityId::selberg_rho_decomposition:
      params["m"] = r.request.m;
      params["k"] = r.request.k;
      break;
    case IdentityId::zograf_ratio:
    case IdentityId::corollary_fg:
    case IdentityId::main_theorem:
      params["n"] = r.request.n;
      params["parity"] = parity_name(r.request.parity);
      break;
    case IdentityId::reflect_involution:
    case IdentityId::exact_oracle:
      params = ojson::object();
      break;
  }
  j["parameters"] = params;
  j["tolerance"] = r.tolerance;
  j["passed"] = r.passed;
  j["max_residual"] = r.max_residual;
  ojson pts = ojson::array();
  for (const auto& pt : r.points) {
    ojson p;
    p["s"] = to_json(pt.s);
    p["residual"] = pt.residual;
    p["flags"] = pt.flags;
    pts.push_back(std::move(p));
  }
  j["points"] = std::move(pts);
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

ojson to_json(cplx s, const ZetaValue& v) {
  ojson j;
  j["s"] = to_json(s);
  j["value"] = to_json(v.value);
  j["abs_error_bound"] = v.abs_error_bound;
  j["in_convergence_domain"] = v.in_convergence_domain;
  ojson flags = ojson::array();
  if (v.heuristic_bound) flags.push_back("heuristic-bound");
  if (v.reflected) flags.push_back("reflected");
  if (!v.in_convergence_domain) flags.push_back("formal-truncation");
  j["flags"] = std::move(flags);
  return j;
}

ojson to_json(const TorsionPrediction& t) {
  ojson j;
  j["n"] = t.n;
  j["parity"] = parity_name(t.parity);
  j["exponent"] = t.exponent;
  j["value"] = to_json(t.value);
  if (t.value4) j["value_exponent4"] = to_json(*t.value4);
  if (t.aps_consistent) j["aps_consistent"] = *t.aps_consistent;
  j["theta"] = t.theta;
  j[t.parity == Parity::even ? "F_n" : "G_n"] = to_json(t.f_or_g);
  j["zograf_abs_error_bound"] = t.zograf.abs_error_bound;
  j["complex_volume"] = ojson{{"re", t.complex_volume.re},
                              {"im", t.complex_volume.im},
                              {"modulo", "i*pi^2*Z"}};
  return j;
}

ojson to_json(const HeatTraceResult& h) {
  ojson j;
  j["t"] = h.t;
  j["m"] = h.m;
  j["p"] = h.p;
  j["identity_term"] = h.identity_term;
  j["hyperbolic_term"] = to_json(h.hyperbolic_term);
  j["total"] = to_json(h.total);
  j["truncated"] = h.truncated;
  return j;
}

ojson to_json(const SmallTimeFit& f) {
  ojson j;
  j["a1"] = f.a1;
  j["a2"] = f.a2;
  j["t_grid"] = f.t_grid;
  return j;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

}  // namespace geozeta
