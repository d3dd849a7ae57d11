#include "core/continuation.hpp"

#include <cmath>

#include <json.hpp>

namespace geozeta {

bool ComplexVolume::equivalent(const ComplexVolume& other) const {
  if (re != other.re) return false;
  const double ratio = (im - other.im) / (kPi * kPi);
  return std::abs(ratio - std::round(ratio)) <= 1e-9;
}

ComplexVolume complex_volume(const ManifoldInvariants& inv) {
  return {inv.volume, 2.0 * kPi * kPi * inv.cs};
}

ManifoldInvariants parse_invariants(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("malformed invariants document: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::parse, "invariants document must be a JSON object");
  ManifoldInvariants inv;
  inv.label = doc.value("label", std::string{});
  if (!doc.contains("volume") || !doc["volume"].is_number())
    throw Error(ErrorKind::parse, "missing numeric field \"volume\"");
  inv.volume = doc["volume"].get<double>();
  if (!std::isfinite(inv.volume) || inv.volume <= 0.0)
    throw Error(ErrorKind::validation, "volume must be positive");
  if (doc.contains("cs")) {
    if (!doc["cs"].is_number()) throw Error(ErrorKind::parse, "\"cs\" must be a number");
    inv.cs = doc["cs"].get<double>();
  }
  if (doc.contains("eta")) {
    if (!doc["eta"].is_object()) throw Error(ErrorKind::parse, "\"eta\" must be an object");
    for (const auto& [key, val] : doc["eta"].items()) {
      int k = 0;
      std::size_t used = 0;
      try {
        k = std::stoi(key, &used);
      } catch (const std::logic_error&) {
        used = 0;
      }
      if (used != key.size() || k < 1)
        throw Error(ErrorKind::validation, "eta key \"" + key + "\" is not a positive integer");
      if (!val.is_number()) throw Error(ErrorKind::parse, "eta[" + key + "] must be a number");
      inv.eta[k] = val.get<double>();
    }
  }
  return inv;
}

std::string serialize_invariants(const ManifoldInvariants& inv) {
  nlohmann::ordered_json doc;
  doc["label"] = inv.label;
  doc["volume"] = inv.volume;
  doc["cs"] = inv.cs;
  nlohmann::ordered_json eta = nlohmann::ordered_json::object();
  for (const auto& [k, v] : inv.eta) eta[std::to_string(k)] = v;
  doc["eta"] = eta;
  return doc.dump(2);
}

double eta_lookup(const ManifoldInvariants& inv, int k) {
  if (k == 0) return 0.0;
  const auto it = inv.eta.find(std::abs(k));
  if (it == inv.eta.end())
    throw Error(ErrorKind::missing_eta, "eta not supplied for k=" + std::to_string(k));
  return k > 0 ? it->second : -it->second;
}

cplx reflection_log_factor(const ManifoldInvariants& inv, int k, cplx s) {
  const double eta = eta_lookup(inv, k);
  const cplx poly = s * s * s / 3.0 - (0.25 * k * k) * s;
  return cplx(0.0, kPi * eta) + (inv.volume / kPi) * poly;
}

cplx reflect_selberg(const ManifoldInvariants& inv, int k, cplx s, cplx value_at_reflected) {
  return std::exp(reflection_log_factor(inv, k, s)) * value_at_reflected;
}

ZetaValue selberg_anywhere(const LengthSpectrum& spec, const ManifoldInvariants& inv, int k,
                           cplx s, const EvalParams& p) {
  if (s.real() > 2.0) return selberg_sigma(spec, k, s, p);
  if (!(s.real() < 0.0))
    throw Error(ErrorKind::strip, "strip not reachable by one reflection (0 <= Re s <= 2)");
  // Z(σ_k, 1+t) with t = s−1 reflects onto Z(σ_{−k}, 1−t) = Z(σ_{−k}, 2−s).
  const cplx t = s - 1.0;
  const cplx log_factor = reflection_log_factor(inv, k, t);
  const auto base = selberg_sigma(spec, -k, 2.0 - s, p);
  auto out = make_value(log_factor + base.log_value, base.log_error_bound, base.heuristic_bound,
                        base.in_convergence_domain, base.l_cut);
  out.reflected = true;
  return out;
}

ZetaValue ruelle_rho_continued(const LengthSpectrum& spec, const ManifoldInvariants& inv, int m,
                               cplx s, const EvalParams& p) {
  const double h = 0.5 * m;
  const auto a = selberg_anywhere(spec, inv, m, s - h, p);
  const auto b = selberg_anywhere(spec, inv, -m, s + h + 2.0, p);
  const auto c = selberg_anywhere(spec, inv, m + 2, s - h + 1.0, p);
  const auto d = selberg_anywhere(spec, inv, -(m + 2), s + h + 1.0, p);
  const Factor fs[] = {{&a, 1}, {&b, 1}, {&c, -1}, {&d, -1}};
  return combine(fs);
}

}  // namespace geozeta
