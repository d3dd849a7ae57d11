#include "core/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "core/numeric.hpp"

namespace geozeta {

namespace {

std::string entry_tag(std::size_t i) { return "entries[" + std::to_string(i) + "]"; }

void validate_entry(const GeodesicEntry& e, double l_max, const std::string& where) {
  if (!std::isfinite(e.length)) throw Error(ErrorKind::validation, where + ": length is not finite");
  if (e.length <= 0.0) throw Error(ErrorKind::validation, where + ": negative length (must be > 0)");
  if (e.length > l_max)
    throw Error(ErrorKind::validation, where + ": length exceeds l_max");
  if (!std::isfinite(e.angle)) throw Error(ErrorKind::validation, where + ": angle is not finite");
  if (e.spin_sign != 1 && e.spin_sign != -1)
    throw Error(ErrorKind::validation, where + ": spin_sign must be 1 or -1");
  if (e.multiplicity < 1) throw Error(ErrorKind::validation, where + ": multiplicity < 1");
}

}  // namespace

GeodesicEntry mirror_of(const GeodesicEntry& e) {
  GeodesicEntry m = e;
  if (e.angle != 0.0) {
    m.angle = reduce_angle(kTwoPi - e.angle);
    m.spin_sign = -e.spin_sign;
  }
  return m;
}

LengthSpectrum::LengthSpectrum(std::vector<GeodesicEntry> entries, double l_max, bool oriented,
                               std::string label)
    : entries_(std::move(entries)), l_max_(l_max), oriented_(oriented), label_(std::move(label)) {
  if (!std::isfinite(l_max_) || l_max_ <= 0.0)
    throw Error(ErrorKind::validation, "l_max must be a positive finite number");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    auto& e = entries_[i];
    validate_entry(e, l_max_, entry_tag(i));
    e.angle = reduce_angle(e.angle);
    if (!oriented_ && e.angle > kPi) e = mirror_of(e);
  }
  std::stable_sort(entries_.begin(), entries_.end(), [](const auto& a, const auto& b) {
    return std::tie(a.length, a.angle, a.spin_sign) < std::tie(b.length, b.angle, b.spin_sign);
  });
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    const auto& a = entries_[i - 1];
    const auto& b = entries_[i];
    if (a.length == b.length && a.angle == b.angle && a.spin_sign == b.spin_sign) {
      std::ostringstream os;
      os.precision(17);
      os << "duplicate entry (length=" << a.length << ", angle=" << a.angle
         << ", spin_sign=" << a.spin_sign << "); merge it via multiplicity";
      throw Error(ErrorKind::validation, os.str());
    }
  }
}

double LengthSpectrum::min_length() const {
  return entries_.empty() ? std::numeric_limits<double>::infinity() : entries_.front().length;
}

long LengthSpectrum::class_count() const {
  long n = 0;
  for (const auto& e : entries_) n += e.multiplicity;
  return oriented_ ? n : 2 * n;
}

std::vector<GeodesicPower> powers_up_to(const LengthSpectrum& spec, double l_cut) {
  std::vector<GeodesicPower> out;
  const auto entries = spec.entries();
  auto emit = [&](std::size_t idx, bool mirror, const GeodesicEntry& e) {
    for (int m = 1;; ++m) {
      const double len = m * e.length;
      if (!(len <= l_cut)) break;
      GeodesicPower p;
      p.base = idx;
      p.mirror = mirror;
      p.m = m;
      p.base_length = e.length;
      p.base_angle = e.angle;
      p.base_spin = e.spin_sign;
      p.length = len;
      const double total = m * e.angle;
      const double wraps = std::floor(total / kTwoPi);
      p.angle = reduce_angle(total - wraps * kTwoPi);
      const int base_sign = (e.spin_sign < 0 && (m % 2 != 0)) ? -1 : 1;
      const int wrap_sign = (static_cast<long long>(wraps) % 2 != 0) ? -1 : 1;
      p.spin_sign = base_sign * wrap_sign;
      p.multiplicity = e.multiplicity;
      out.push_back(p);
    }
  };
  for (std::size_t i = 0; i < entries.size(); ++i) {
    emit(i, false, entries[i]);
    if (!spec.oriented()) emit(i, true, mirror_of(entries[i]));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.length, a.base, a.mirror, a.m) < std::tie(b.length, b.base, b.mirror, b.m);
  });
  return out;
}

double tail_bound(const LengthSpectrum&, double re_s_effective, double l_cut,
                  const GrowthModel& growth) {
  const double gap = re_s_effective - growth.exponent;
  if (!(gap > 0.0))
    throw Error(ErrorKind::domain, "outside convergence half-plane (Re s must exceed " +
                                       std::to_string(growth.exponent) + ")");
  if (growth.constant == 0.0 || std::isinf(l_cut)) return 0.0;
  return growth.constant * std::exp(-gap * l_cut) / gap;
}

GrowthModel fit_growth(const LengthSpectrum& spec) {
  GrowthModel g;
  g.exponent = 2.0;
  g.rigorous = false;
  const auto entries = spec.entries();
  if (entries.empty()) {
    g.constant = 0.0;
    return g;
  }
  const double weight = spec.oriented() ? 1.0 : 2.0;
  double cumulative = 0.0;
  double acc = 0.0;
  int points = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    cumulative += weight * entries[i].multiplicity;
    if (i + 1 < entries.size() && entries[i + 1].length == entries[i].length) continue;
    acc += std::log(cumulative) - g.exponent * entries[i].length;
    ++points;
  }
  g.constant = 4.0 * std::exp(acc / points);
  return g;
}

LengthSpectrum parse_spectrum(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("malformed spectrum document: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::parse, "spectrum document must be a JSON object");
  try {
    const std::string label = doc.value("label", std::string{});
    const bool oriented = doc.value("oriented", true);
    if (!doc.contains("l_max") || !doc["l_max"].is_number())
      throw Error(ErrorKind::parse, "missing numeric field \"l_max\"");
    const double l_max = doc["l_max"].get<double>();
    if (!doc.contains("entries") || !doc["entries"].is_array())
      throw Error(ErrorKind::parse, "missing array field \"entries\"");
    std::vector<GeodesicEntry> entries;
    const auto& arr = doc["entries"];
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto& item = arr[i];
      const std::string where = entry_tag(i);
      if (!item.is_object()) throw Error(ErrorKind::parse, where + ": not an object");
      if (!item.contains("length") || !item["length"].is_number())
        throw Error(ErrorKind::parse, where + ": missing numeric \"length\"");
      if (!item.contains("angle") || !item["angle"].is_number())
        throw Error(ErrorKind::parse, where + ": missing numeric \"angle\"");
      GeodesicEntry e;
      e.length = item["length"].get<double>();
      e.angle = item["angle"].get<double>();
      if (item.contains("spin_sign")) {
        if (!item["spin_sign"].is_number_integer())
          throw Error(ErrorKind::parse, where + ": spin_sign must be 1 or -1");
        e.spin_sign = item["spin_sign"].get<int>();
      }
      if (item.contains("multiplicity")) {
        if (!item["multiplicity"].is_number_integer())
          throw Error(ErrorKind::parse, where + ": multiplicity must be an integer");
        e.multiplicity = item["multiplicity"].get<int>();
      }
      entries.push_back(e);
    }
    return LengthSpectrum(std::move(entries), l_max, oriented, label);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("malformed spectrum document: ") + e.what());
  }
}

LengthSpectrum parse_spectrum_csv(std::string_view csv_text, double l_max, bool oriented,
                                  std::string label) {
  std::istringstream in{std::string(csv_text)};
  std::string line;
  int line_no = 0;
  int col[4] = {-1, -1, -1, -1};
  bool have_header = false;
  std::vector<GeodesicEntry> entries;
  static const char* names[4] = {"length", "angle", "spin_sign", "multiplicity"};
  auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(s);
    while (std::getline(ls, cell, ',')) {
      const auto b = cell.find_first_not_of(" \t\r");
      const auto e = cell.find_last_not_of(" \t\r");
      cells.push_back(b == std::string::npos ? std::string{} : cell.substr(b, e - b + 1));
    }
    return cells;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    const auto cells = split(line);
    const std::string where = "line " + std::to_string(line_no);
    if (!have_header) {
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (int k = 0; k < 4; ++k)
          if (cells[c] == names[k]) col[k] = static_cast<int>(c);
      for (int k = 0; k < 4; ++k)
        if (col[k] < 0) throw Error(ErrorKind::parse, where + ": header lacks column " + names[k]);
      have_header = true;
      continue;
    }
    GeodesicEntry e;
    try {
      auto cell = [&](int k) -> const std::string& {
        if (col[k] >= static_cast<int>(cells.size()))
          throw Error(ErrorKind::parse, where + ": missing column " + names[k]);
        return cells[col[k]];
      };
      e.length = std::stod(cell(0));
      e.angle = std::stod(cell(1));
      e.spin_sign = std::stoi(cell(2));
      e.multiplicity = std::stoi(cell(3));
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::parse, where + ": malformed number");
    }
    validate_entry(e, l_max, where);
    entries.push_back(e);
  }
  if (!have_header) throw Error(ErrorKind::parse, "CSV spectrum lacks a header line");
  return LengthSpectrum(std::move(entries), l_max, oriented, std::move(label));
}

std::string serialize_spectrum(const LengthSpectrum& spec) {
  nlohmann::ordered_json doc;
  doc["label"] = spec.label();
  doc["oriented"] = spec.oriented();
  doc["l_max"] = spec.l_max();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : spec.entries()) {
    nlohmann::ordered_json item;
    item["length"] = e.length;
    item["angle"] = e.angle;
    item["spin_sign"] = e.spin_sign;
    item["multiplicity"] = e.multiplicity;
    arr.push_back(item);
  }
  doc["entries"] = arr;
  return doc.dump(2);
}

}  // namespace geozeta
