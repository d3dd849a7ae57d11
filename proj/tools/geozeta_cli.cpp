// geozeta command-line front end. Talks to the library only through the C API.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "geozeta/geozeta.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string spectrum_path;
  std::string invariants_path;
  std::string output_path;
  double l_cut = 0.0;
  bool allow_incomplete = false;
  int jobs = 1;
  double csv_l_max = 0.0;
  bool unoriented = false;
};

using SpecPtr = std::unique_ptr<gz_spectrum, decltype(&gz_spectrum_free)>;
using InvPtr = std::unique_ptr<gz_invariants, decltype(&gz_invariants_free)>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check(gz_status st, const std::string& context) {
  if (st != GZ_OK) throw InputError(context + ": " + gz_last_error());
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

SpecPtr load_spectrum(const Common& c) {
  if (c.spectrum_path.empty()) throw InputError("--spectrum is required");
  const std::string text = read_file(c.spectrum_path);
  gz_spectrum* raw = nullptr;
  if (ends_with(c.spectrum_path, ".csv")) {
    if (!(c.csv_l_max > 0.0)) throw InputError("CSV spectra need --l-max");
    check(gz_spectrum_from_csv(text.c_str(), c.csv_l_max, c.unoriented ? 0 : 1, "", &raw),
          c.spectrum_path);
  } else {
    check(gz_spectrum_from_json(text.c_str(), &raw), c.spectrum_path);
  }
  return SpecPtr(raw, &gz_spectrum_free);
}

InvPtr load_invariants(const Common& c, bool required) {
  if (c.invariants_path.empty()) {
    if (required) throw InputError("--invariants is required");
    return InvPtr(nullptr, &gz_invariants_free);
  }
  const std::string text = read_file(c.invariants_path);
  gz_invariants* raw = nullptr;
  check(gz_invariants_from_json(text.c_str(), &raw), c.invariants_path);
  return InvPtr(raw, &gz_invariants_free);
}

gz_options options_for(const Common& c) {
  gz_options o;
  gz_options_init(&o);
  o.l_cut = c.l_cut;
  o.allow_incomplete = c.allow_incomplete ? 1 : 0;
  o.jobs = c.jobs;
  return o;
}

void emit(const Common& c, const std::string& text) {
  if (c.output_path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(c.output_path, std::ios::binary);
  if (!out) throw InputError("cannot write " + c.output_path);
  out << text;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  gz_string_free(s);
  return out;
}

std::vector<double> split_numbers(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError(std::string("bad number in ") + what + ": '" + item + "'");
    }
  }
  return out;
}

void add_common(CLI::App* cmd, Common& c, bool spectrum_required) {
  auto* spec = cmd->add_option("--spectrum", c.spectrum_path, "spectrum document (JSON, or CSV by extension)");
  if (spectrum_required) spec->required();
  cmd->add_option("--invariants", c.invariants_path, "invariants document (JSON)");
  cmd->add_option("--output,-o", c.output_path, "write the report here instead of stdout");
  cmd->add_option("--l-cut", c.l_cut, "truncation length (default: the spectrum's l_max)");
  cmd->add_flag("--allow-incomplete", c.allow_incomplete, "permit --l-cut beyond l_max");
  cmd->add_option("--jobs,-j", c.jobs, "worker threads")->envname("GEOZETA_JOBS")->check(CLI::PositiveNumber);
  cmd->add_option("--l-max", c.csv_l_max, "completeness cutoff for CSV spectra");
  cmd->add_flag("--unoriented", c.unoriented, "CSV entries denote unoriented pairs");
}

int cmd_validate(const Common& c, const std::string& require_eta) {
  auto spec = load_spectrum(c);
  auto inv = load_invariants(c, !require_eta.empty());
  if (!require_eta.empty()) {
    for (const double k : split_numbers(require_eta, "--require-eta")) {
      double eta = 0.0;
      check(gz_invariants_eta(inv.get(), static_cast<int>(k), &eta), c.invariants_path);
    }
  }
  std::ostringstream os;
  os << "{\n  \"valid\": true,\n  \"entries\": " << gz_spectrum_size(spec.get()) << "\n}\n";
  emit(c, os.str());
  return kExitOk;
}

struct EvalArgs {
  std::string kind;
  int k = 0;
  std::optional<int> m, n;
  std::string s, grid;
  bool csv = false;
};

int cmd_eval(const Common& c, const EvalArgs& a) {
  auto spec = load_spectrum(c);
  auto inv = load_invariants(c, false);
  gz_kind kind;
  int index = 0;
  if (a.kind == "ruelle-sigma" || a.kind == "selberg-sigma" || a.kind == "selberg-continued") {
    kind = a.kind == "ruelle-sigma"   ? GZ_RUELLE_SIGMA
           : a.kind == "selberg-sigma" ? GZ_SELBERG_SIGMA
                                       : GZ_SELBERG_CONTINUED;
    index = a.k;
  } else if (a.kind == "ruelle-rho" || a.kind == "selberg-rho" || a.kind == "ruelle-rho-continued") {
    if (!a.m) throw InputError("--m is required for " + a.kind);
    kind = a.kind == "ruelle-rho"    ? GZ_RUELLE_RHO
           : a.kind == "selberg-rho" ? GZ_SELBERG_RHO
                                     : GZ_RUELLE_RHO_CONTINUED;
    index = *a.m;
  } else if (a.kind == "F" || a.kind == "G") {
    if (!a.n) throw InputError("--n is required for " + a.kind);
    kind = a.kind == "F" ? GZ_ZOGRAF_F : GZ_ZOGRAF_G;
    index = *a.n;
  } else {
    throw InputError("unknown --kind " + a.kind);
  }

  std::vector<double> re, im;
  if (!a.grid.empty()) {
    const auto g = split_numbers(a.grid, "--grid");
    if (g.size() != 4 || g[2] < 1 || g[2] != std::floor(g[2]))
      throw InputError("--grid expects re0,re1,n-points,im");
    const int n = static_cast<int>(g[2]);
    for (int i = 0; i < n; ++i) {
      re.push_back(n == 1 ? g[0] : g[0] + (g[1] - g[0]) * i / (n - 1));
      im.push_back(g[3]);
    }
  } else if (!a.s.empty()) {
    const auto s = split_numbers(a.s, "--s");
    if (s.size() != 2) throw InputError("--s expects re,im");
    re.push_back(s[0]);
    im.push_back(s[1]);
  } else {
    throw InputError("one of --s or --grid is required");
  }

  const gz_options o = options_for(c);
  if (a.csv) {
    std::ostringstream os;
    os << "s_re,s_im,value_re,value_im,abs_error_bound,in_convergence_domain\n";
    char buf[256];
    for (std::size_t i = 0; i < re.size(); ++i) {
      gz_value v;
      check(gz_eval(spec.get(), inv.get(), kind, index, a.k, re[i], im[i], &o, &v), "eval");
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%d\n", re[i], im[i], v.re,
                    v.im, v.abs_error_bound, v.in_convergence_domain);
      os << buf;
    }
    emit(c, os.str());
    return kExitOk;
  }
  char* json = nullptr;
  check(gz_eval_grid_json(spec.get(), inv.get(), kind, index, a.k, re.data(), im.data(), re.size(),
                          &o, &json),
        "eval");
  emit(c, take(json));
  return kExitOk;
}

struct VerifyArgs {
  std::string identity;
  int m = 0, k = 0, n = 3;
  std::string parity = "even";
  double tol = 1e-8;
  std::string grid, observed;
  std::optional<double> det_volume;
};

int cmd_verify(const Common& c, const VerifyArgs& a) {
  const bool exact_only = a.identity == "exact-oracle";
  SpecPtr spec(nullptr, &gz_spectrum_free);
  if (exact_only && c.spectrum_path.empty()) {
    gz_spectrum* raw = nullptr;
    check(gz_spectrum_from_json(R"({"l_max": 1.0, "entries": []})", &raw), "spectrum");
    spec.reset(raw);
  } else {
    spec = load_spectrum(c);
  }
  auto inv = load_invariants(c, false);
  if (a.parity != "even" && a.parity != "odd") throw InputError("--parity must be even or odd");

  gz_verify_request req{};
  req.identity = a.identity.c_str();
  req.m = a.m;
  req.k = a.k;
  req.n = a.n;
  req.parity = a.parity == "odd" ? GZ_ODD : GZ_EVEN;
  std::vector<double> re, im;
  if (!a.grid.empty()) {
    const auto g = split_numbers(a.grid, "--grid");
    if (g.size() != 4 || g[2] < 1 || g[2] != std::floor(g[2]))
      throw InputError("--grid expects re0,re1,n-points,im");
    const int n = static_cast<int>(g[2]);
    for (int i = 0; i < n; ++i) {
      re.push_back(n == 1 ? g[0] : g[0] + (g[1] - g[0]) * i / (n - 1));
      im.push_back(g[3]);
    }
    req.grid_re = re.data();
    req.grid_im = im.data();
    req.grid_count = re.size();
  }
  if (!a.observed.empty()) {
    const auto v = split_numbers(a.observed, "--observed-ratio4");
    if (v.size() != 2) throw InputError("--observed-ratio4 expects re,im");
    req.has_observed_ratio4 = 1;
    req.observed_re = v[0];
    req.observed_im = v[1];
  }
  if (a.det_volume) {
    req.has_det_volume = 1;
    req.det_volume = *a.det_volume;
  }
  gz_options o = options_for(c);
  o.tol = a.tol;
  int passed = 0;
  char* json = nullptr;
  check(gz_verify(spec.get(), inv.get(), &req, &o, &passed, &json), "verify");
  emit(c, take(json));
  return passed ? kExitOk : kExitFailed;
}

int cmd_predict(const Common& c, int n, const std::string& parity) {
  if (parity != "even" && parity != "odd") throw InputError("--parity must be even or odd");
  auto spec = load_spectrum(c);
  auto inv = load_invariants(c, true);
  const gz_options o = options_for(c);
  char* json = nullptr;
  const gz_status st =
      gz_predict_torsion(spec.get(), inv.get(), n, parity == "odd" ? GZ_ODD : GZ_EVEN, &o, &json);
  if (st == GZ_ERR_DOMAIN)
    throw InputError(std::string("below threshold: ") + gz_last_error());
  check(st, "predict-torsion");
  emit(c, take(json));
  return kExitOk;
}

int cmd_heat(const Common& c, int m, int p, const std::string& t_list, bool fit) {
  auto spec = load_spectrum(c);
  auto inv = load_invariants(c, true);
  const gz_options o = options_for(c);
  std::vector<double> ts;
  if (!t_list.empty()) ts = split_numbers(t_list, "--t");
  char* json = nullptr;
  if (fit) {
    check(gz_small_time_fit(spec.get(), inv.get(), m, p, ts.empty() ? nullptr : ts.data(),
                            ts.size(), &o, nullptr, nullptr, &json),
          "heat-trace");
  } else {
    if (ts.empty()) throw InputError("--t is required unless --fit is given");
    check(gz_heat_trace_json(spec.get(), inv.get(), m, p, ts.data(), ts.size(), &o, &json),
          "heat-trace");
  }
  emit(c, take(json));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geodesic zeta functions of closed hyperbolic 3-manifolds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gz_version()));

  Common common;

  auto* validate = app.add_subcommand("validate", "parse and validate input documents");
  add_common(validate, common, true);
  std::string require_eta;
  validate->add_option("--require-eta", require_eta, "comma-separated k that must have eta values");

  auto* eval = app.add_subcommand("eval", "evaluate a zeta function at points");
  add_common(eval, common, true);
  EvalArgs ea;
  eval->add_option("--kind", ea.kind,
                   "ruelle-sigma|selberg-sigma|ruelle-rho|selberg-rho|F|G|selberg-continued|ruelle-rho-continued")
      ->required();
  eval->add_option("--k", ea.k, "character index (twist for selberg-rho)");
  eval->add_option("--m", ea.m, "representation index");
  eval->add_option("--n", ea.n, "Zograf index");
  eval->add_option("--s", ea.s, "single point re,im");
  eval->add_option("--grid", ea.grid, "re0,re1,n-points,im");
  eval->add_flag("--csv", ea.csv, "CSV instead of JSON (lossy)");

  auto* verify = app.add_subcommand("verify", "check an identity and write its report");
  add_common(verify, common, false);
  VerifyArgs va;
  verify->add_option("--identity", va.identity,
                     "prop-ruelle-dec|selberg-rho-dec|four-selberg|rho-selberg|zograf-ratio|"
                     "corollary-FG|ruelle-feq|det-chain|reflect-involution|main-theorem|"
                     "exact-oracle|all")
      ->required();
  verify->add_option("--m", va.m, "representation index");
  verify->add_option("--k", va.k, "character twist");
  verify->add_option("--n", va.n, "Zograf index");
  verify->add_option("--parity", va.parity, "even|odd");
  verify->add_option("--tol", va.tol, "tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--grid", va.grid, "re0,re1,n-points,im");
  verify->add_option("--observed-ratio4", va.observed, "torsion-side (T0/T)^4 as re,im");
  verify->add_option("--det-volume", va.det_volume, "determinant-side volume for det-chain");

  auto* predict = app.add_subcommand("predict-torsion", "predict the torsion ratio power");
  add_common(predict, common, true);
  int pn = 3;
  std::string pparity = "even";
  predict->add_option("--n", pn, "index n")->required();
  predict->add_option("--parity", pparity, "even|odd");

  auto* heat = app.add_subcommand("heat-trace", "geometric side of the heat trace");
  add_common(heat, common, true);
  int hm = 0, hp = 0;
  std::string ht;
  bool hfit = false;
  heat->add_option("--m", hm, "representation index");
  heat->add_option("--p", hp, "form degree, 0 or 1");
  heat->add_option("--t", ht, "comma-separated times");
  heat->add_flag("--fit", hfit, "fit the small-time coefficients instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (validate->parsed()) return cmd_validate(common, require_eta);
    if (eval->parsed()) return cmd_eval(common, ea);
    if (verify->parsed()) return cmd_verify(common, va);
    if (predict->parsed()) return cmd_predict(common, pn, pparity);
    if (heat->parsed()) return cmd_heat(common, hm, hp, ht, hfit);
  } catch (const InputError& e) {
    std::cerr << "geozeta: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "geozeta: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
