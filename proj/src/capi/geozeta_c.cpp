#include "geozeta/geozeta.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "core/continuation.hpp"
#include "core/identities.hpp"
#include "core/report.hpp"
#include "core/spectrum.hpp"
#include "core/trace.hpp"
#include "core/zeta.hpp"

struct gz_spectrum {
  geozeta::LengthSpectrum spec;
};

struct gz_invariants {
  geozeta::ManifoldInvariants inv;
};

namespace {

thread_local std::string g_last_error;

gz_status status_of(geozeta::ErrorKind k) {
  using geozeta::ErrorKind;
  switch (k) {
    case ErrorKind::parse: return GZ_ERR_PARSE;
    case ErrorKind::validation: return GZ_ERR_VALIDATION;
    case ErrorKind::domain: return GZ_ERR_DOMAIN;
    case ErrorKind::missing_eta: return GZ_ERR_MISSING_ETA;
    case ErrorKind::strip: return GZ_ERR_STRIP;
    case ErrorKind::argument: return GZ_ERR_ARGUMENT;
  }
  return GZ_ERR_INTERNAL;
}

template <class F>
gz_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return GZ_OK;
  } catch (const geozeta::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GZ_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return GZ_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw geozeta::Error(geozeta::ErrorKind::argument, what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

geozeta::EvalParams params_for(const geozeta::LengthSpectrum& spec, const gz_options* opts) {
  auto p = geozeta::default_params(spec);
  if (opts && opts->l_cut > 0.0) {
    if (opts->l_cut > spec.l_max() && !opts->allow_incomplete)
      throw geozeta::Error(geozeta::ErrorKind::validation,
                           "l_cut exceeds l_max (pass allow_incomplete to override)");
    p.l_cut = opts->l_cut;
  }
  return p;
}

int jobs_of(const gz_options* opts) { return opts && opts->jobs > 0 ? opts->jobs : 1; }

geozeta::ZetaValue evaluate(const geozeta::LengthSpectrum& spec, const gz_invariants* inv,
                            gz_kind kind, int index, int k, geozeta::cplx s,
                            const geozeta::EvalParams& p) {
  using namespace geozeta;
  switch (kind) {
    case GZ_RUELLE_SIGMA: return ruelle_sigma(spec, index, s, p);
    case GZ_SELBERG_SIGMA: return selberg_sigma(spec, index, s, p);
    case GZ_RUELLE_RHO: return ruelle_rho(spec, index, s, p);
    case GZ_SELBERG_RHO: return selberg_rho(spec, index, k, s, p);
    case GZ_ZOGRAF_F: return zograf_F(spec, index, s, p);
    case GZ_ZOGRAF_G: return zograf_G(spec, index, s, p);
    case GZ_SELBERG_CONTINUED:
      require(inv != nullptr, "continued evaluation needs invariants");
      return selberg_anywhere(spec, inv->inv, index, s, p);
    case GZ_RUELLE_RHO_CONTINUED:
      require(inv != nullptr, "continued evaluation needs invariants");
      return ruelle_rho_continued(spec, inv->inv, index, s, p);
  }
  throw Error(ErrorKind::argument, "unknown zeta kind");
}

}  // namespace

extern "C" {

const char* gz_version(void) { return "0.1.0"; }

const char* gz_last_error(void) { return g_last_error.c_str(); }

void gz_string_free(char* s) { std::free(s); }

void gz_options_init(gz_options* opts) {
  if (!opts) return;
  opts->l_cut = 0.0;
  opts->allow_incomplete = 0;
  opts->jobs = 1;
  opts->tol = 1e-8;
}

gz_status gz_spectrum_from_json(const char* text, gz_spectrum** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new gz_spectrum{geozeta::parse_spectrum(text)};
  });
}

gz_status gz_spectrum_from_csv(const char* text, double l_max, int oriented, const char* label,
                               gz_spectrum** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new gz_spectrum{
        geozeta::parse_spectrum_csv(text, l_max, oriented != 0, label ? label : "")};
  });
}

void gz_spectrum_free(gz_spectrum* spec) { delete spec; }

size_t gz_spectrum_size(const gz_spectrum* spec) {
  return spec ? spec->spec.entries().size() : 0;
}

double gz_spectrum_l_max(const gz_spectrum* spec) { return spec ? spec->spec.l_max() : 0.0; }

gz_status gz_spectrum_to_json(const gz_spectrum* spec, char** out) {
  return guarded([&] {
    require(spec && out, "null argument");
    *out = copy_string(geozeta::serialize_spectrum(spec->spec) + "\n");
  });
}

gz_status gz_invariants_from_json(const char* text, gz_invariants** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new gz_invariants{geozeta::parse_invariants(text)};
  });
}

void gz_invariants_free(gz_invariants* inv) { delete inv; }

gz_status gz_invariants_eta(const gz_invariants* inv, int k, double* out) {
  return guarded([&] {
    require(inv && out, "null argument");
    *out = geozeta::eta_lookup(inv->inv, k);
  });
}

gz_status gz_eval(const gz_spectrum* spec, const gz_invariants* inv, gz_kind kind, int index,
                  int k, double s_re, double s_im, const gz_options* opts, gz_value* out) {
  return guarded([&] {
    require(spec && out, "null argument");
    const auto p = params_for(spec->spec, opts);
    const auto v = evaluate(spec->spec, inv, kind, index, k, {s_re, s_im}, p);
    *out = {v.value.real(),       v.value.imag(),     v.abs_error_bound,
            v.in_convergence_domain, v.heuristic_bound, v.reflected};
  });
}

gz_status gz_eval_grid_json(const gz_spectrum* spec, const gz_invariants* inv, gz_kind kind,
                            int index, int k, const double* s_re, const double* s_im,
                            size_t count, const gz_options* opts, char** out) {
  return guarded([&] {
    require(spec && out && (count == 0 || (s_re && s_im)), "null argument");
    const auto p = params_for(spec->spec, opts);
    std::vector<geozeta::ZetaValue> values(count);
    std::vector<std::exception_ptr> errors(count);
    const std::size_t workers = std::min<std::size_t>(jobs_of(opts), count);
    auto run = [&](std::size_t i) {
      try {
        values[i] = evaluate(spec->spec, inv, kind, index, k, {s_re[i], s_im[i]}, p);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    };
    if (workers <= 1) {
      for (std::size_t i = 0; i < count; ++i) run(i);
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
          for (std::size_t i = w; i < count; i += workers) run(i);
        });
    }
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
    geozeta::ojson arr = geozeta::ojson::array();
    for (std::size_t i = 0; i < count; ++i)
      arr.push_back(geozeta::to_json({s_re[i], s_im[i]}, values[i]));
    *out = copy_string(geozeta::dump(arr));
  });
}

gz_status gz_verify(const gz_spectrum* spec, const gz_invariants* inv, const gz_verify_request* req,
                    const gz_options* opts, int* passed, char** report_json) {
  return guarded([&] {
    require(spec && req && req->identity && passed && report_json, "null argument");
    const auto p = params_for(spec->spec, opts);
    geozeta::VerifyOptions o;
    o.tol = opts ? opts->tol : 1e-8;
    o.jobs = jobs_of(opts);
    const geozeta::ManifoldInvariants* invp = inv ? &inv->inv : nullptr;
    const std::string name = req->identity;
    if (name == "all") {
      geozeta::ojson reports = geozeta::ojson::array();
      bool all_ok = true;
      for (const auto& r : geozeta::default_battery(invp != nullptr)) {
        const auto rep = geozeta::verify(spec->spec, invp, r, p, o);
        all_ok = all_ok && rep.passed;
        reports.push_back(geozeta::to_json(rep));
      }
      geozeta::ojson doc;
      doc["passed"] = all_ok;
      doc["reports"] = std::move(reports);
      *passed = all_ok ? 1 : 0;
      *report_json = copy_string(geozeta::dump(doc));
      return;
    }
    const auto id = geozeta::identity_from_name(name);
    if (!id) throw geozeta::Error(geozeta::ErrorKind::argument, "unknown identity: " + name);
    if (req->grid_count > 0) {
      require(req->grid_re && req->grid_im, "null grid");
      std::vector<geozeta::cplx> g;
      for (size_t i = 0; i < req->grid_count; ++i) g.emplace_back(req->grid_re[i], req->grid_im[i]);
      o.grid = std::move(g);
    }
    if (req->has_observed_ratio4) o.observed_ratio4 = geozeta::cplx(req->observed_re, req->observed_im);
    if (req->has_det_volume) o.det_volume = req->det_volume;
    geozeta::IdentityRequest r{*id, req->m, req->k, req->n,
                               req->parity == GZ_ODD ? geozeta::Parity::odd : geozeta::Parity::even};
    const auto rep = geozeta::verify(spec->spec, invp, r, p, o);
    *passed = rep.passed ? 1 : 0;
    *report_json = copy_string(geozeta::dump(geozeta::to_json(rep)));
  });
}

gz_status gz_predict_torsion(const gz_spectrum* spec, const gz_invariants* inv, int n,
                             gz_parity parity, const gz_options* opts, char** json) {
  return guarded([&] {
    require(spec && inv && json, "null argument");
    const auto p = params_for(spec->spec, opts);
    const auto t = geozeta::predict_torsion_ratio(
        spec->spec, inv->inv, n, parity == GZ_ODD ? geozeta::Parity::odd : geozeta::Parity::even, p);
    *json = copy_string(geozeta::dump(geozeta::to_json(t)));
  });
}

gz_status gz_special_case(const gz_invariants* inv, int which, double* re, double* im) {
  return guarded([&] {
    require(inv && re && im, "null argument");
    require(which == 0 || which == 1, "which must be 0 or 1");
    const auto v = geozeta::special_case_low_n(
        inv->inv, which == 0 ? geozeta::SpecialCase::f1_even : geozeta::SpecialCase::g0_odd);
    *re = v.real();
    *im = v.imag();
  });
}

gz_status gz_heat_trace_json(const gz_spectrum* spec, const gz_invariants* inv, int m, int p,
                             const double* t, size_t count, const gz_options* opts, char** json) {
  return guarded([&] {
    require(spec && inv && json && (count == 0 || t), "null argument");
    const auto params = params_for(spec->spec, opts);
    geozeta::ojson arr = geozeta::ojson::array();
    for (size_t i = 0; i < count; ++i)
      arr.push_back(geozeta::to_json(
          geozeta::heat_trace_geometric(spec->spec, inv->inv, m, p, t[i], params)));
    *json = copy_string(geozeta::dump(arr));
  });
}

gz_status gz_small_time_fit(const gz_spectrum* spec, const gz_invariants* inv, int m, int p,
                            const double* t, size_t count, const gz_options* opts, double* a1,
                            double* a2, char** json) {
  return guarded([&] {
    require(spec && inv && (count == 0 || t), "null argument");
    const auto params = params_for(spec->spec, opts);
    const auto grid = count == 0 ? geozeta::default_fit_grid() : std::vector<double>(t, t + count);
    const auto fit = geozeta::small_time_fit(spec->spec, inv->inv, m, p, grid, params);
    if (a1) *a1 = fit.a1;
    if (a2) *a2 = fit.a2;
    if (json) *json = copy_string(geozeta::dump(geozeta::to_json(fit)));
  });
}

}  // extern "C"
