#include "core/config.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "core/errors.hpp"

namespace omit {
namespace {

struct UnitDef {
  double factor;
  const char* dimension;
};

// Factors map a printed value to internal units. Frequencies are ingested as
// angular unless the key carries _over_2pi (then multiplied by 2*pi here, so
// e.g. "kappa_over_2pi: 50 MHz" -> 2*pi*0.05 rad/ns, while "omega_m: 1.4 GHz"
// -> 1.4 rad/ns).
const std::map<std::string, UnitDef>& unit_table() {
  static const std::map<std::string, UnitDef> table = {
      {"Hz", {1e-9, "frequency"}},
      {"kHz", {1e-6, "frequency"}},
      {"MHz", {1e-3, "frequency"}},
      {"GHz", {1.0, "frequency"}},
      {"rad/ns", {1.0, "frequency"}},
      {"GHz/nm", {1e-3, "coupling"}},
      {"MHz/nm", {1e-6, "coupling"}},
      {"GHz/pm", {1.0, "coupling"}},
      {"rad/ns/pm", {1.0, "coupling"}},
      {"rad/ns/nm", {1e-3, "coupling"}},
      {"nm", {1e3, "length"}},
      {"pm", {1.0, "length"}},
      {"pg", {1.0, "mass"}},
      {"fg", {1e-3, "mass"}},
      {"uW", {1e3, "power"}},
      {"nW", {1.0, "power"}},
      {"W", {1e9, "power"}},
      {"ns", {1.0, "time"}},
      {"us", {1e3, "time"}},
  };
  return table;
}

bool parse_number(const std::string& tok, double& out) {
  char* end = nullptr;
  out = std::strtod(tok.c_str(), &end);
  return end && *end == '\0' && end != tok.c_str();
}

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

} // namespace

ConfigDocument ConfigDocument::parse(const std::string& text) {
  ConfigDocument doc;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = strip(line);
    if (line.empty()) continue;

    auto sep = line.find_first_of(":=");
    if (sep == std::string::npos)
      throw config_error("", "line " + std::to_string(lineno) +
                                 ": expected 'key: value unit'");
    std::string key = strip(line.substr(0, sep));
    std::string rest = strip(line.substr(sep + 1));
    if (key.empty() || rest.empty())
      throw config_error(key, "line " + std::to_string(lineno) + ": empty key or value");
    if (doc.entries_.count(key))
      throw config_error(key, "duplicate key");

    std::istringstream toks(rest);
    std::vector<std::string> tokens;
    std::string t;
    while (toks >> t) tokens.push_back(t);

    Entry entry;
    entry.dimension = "none";
    double factor = 1.0;
    // trailing token that is not a number is the unit
    double tmp;
    if (!tokens.empty() && !parse_number(tokens.back(), tmp)) {
      entry.unit = tokens.back();
      tokens.pop_back();
      auto it = unit_table().find(entry.unit);
      if (it == unit_table().end())
        throw config_error(key, "unknown unit '" + entry.unit + "'");
      factor = it->second.factor;
      entry.dimension = it->second.dimension;
    }
    if (tokens.empty())
      throw config_error(key, "missing numeric value");

    const bool ordinary = key.size() > 9 &&
        key.compare(key.size() - 9, 9, "_over_2pi") == 0;
    if (ordinary && entry.dimension != "frequency" && entry.dimension != "coupling")
      throw config_error(key, "_over_2pi applies only to frequency-like values");

    for (const auto& tok : tokens) {
      double v;
      if (!parse_number(tok, v))
        throw config_error(key, "bad number '" + tok + "'");
      v *= factor;
      if (ordinary) v *= k_two_pi;
      entry.values.push_back(v);
    }
    doc.entries_.emplace(std::move(key), std::move(entry));
  }
  return doc;
}

ConfigDocument ConfigDocument::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("", "cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

namespace {

const ConfigDocument::Entry* find_entry(
    const std::map<std::string, ConfigDocument::Entry>& entries,
    const std::string& key, std::string* actual) {
  auto it = entries.find(key);
  if (it == entries.end()) {
    it = entries.find(key + "_over_2pi");
    if (it == entries.end()) return nullptr;
    if (actual) *actual = key + "_over_2pi";
    return &it->second;
  }
  if (actual) *actual = key;
  return &it->second;
}

} // namespace

double ConfigDocument::get(const std::string& key,
                           const std::string& dimension) const {
  std::string actual;
  const Entry* e = find_entry(entries_, key, &actual);
  if (!e) throw config_error(key, "missing key");
  if (e->dimension != dimension)
    throw config_error(actual, "expected a " + dimension + " value, got '" +
                                   (e->unit.empty() ? "<bare>" : e->unit) + "'");
  if (e->values.size() != 1)
    throw config_error(actual, "expected a single value");
  return e->values[0];
}

double ConfigDocument::get_or(const std::string& key,
                              const std::string& dimension,
                              double fallback) const {
  if (!find_entry(entries_, key, nullptr)) return fallback;
  return get(key, dimension);
}

std::vector<double> ConfigDocument::get_list(const std::string& key,
                                             const std::string& dimension) const {
  std::string actual;
  const Entry* e = find_entry(entries_, key, &actual);
  if (!e) throw config_error(key, "missing key");
  if (e->dimension != dimension)
    throw config_error(actual, "expected " + dimension + " values, got '" +
                                   (e->unit.empty() ? "<bare>" : e->unit) + "'");
  if (e->values.empty()) throw config_error(actual, "empty list");
  return e->values;
}

long ConfigDocument::get_count(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) throw config_error(key, "missing key");
  if (it->second.dimension != "none")
    throw config_error(key, "expected a bare integer");
  if (it->second.values.size() != 1)
    throw config_error(key, "expected a single value");
  double v = it->second.values[0];
  long n = static_cast<long>(v);
  if (v != static_cast<double>(n) || n < 0)
    throw config_error(key, "expected a non-negative integer");
  return n;
}

long ConfigDocument::get_count_or(const std::string& key, long fallback) const {
  return entries_.count(key) ? get_count(key) : fallback;
}

double ConfigDocument::get_bare(const std::string& key, double fallback) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  if (it->second.dimension != "none")
    throw config_error(key, "expected a bare number");
  if (it->second.values.size() != 1)
    throw config_error(key, "expected a single value");
  return it->second.values[0];
}

void ConfigDocument::restrict_keys(const std::vector<std::string>& allowed) const {
  for (const auto& [key, entry] : entries_) {
    std::string base = key;
    if (base.size() > 9 && base.compare(base.size() - 9, 9, "_over_2pi") == 0)
      base.resize(base.size() - 9);
    if (std::find(allowed.begin(), allowed.end(), base) == allowed.end())
      throw config_error(key, "unknown key");
  }
}

const std::vector<std::string>& param_keys() {
  static const std::vector<std::string> keys = {
      "m_eff", "omega_m", "gamma_m", "kappa", "kappa_ex", "g_coupling",
      "pump_wavelength", "pump_power", "probe_power", "detuning_bar_target"};
  return keys;
}

SystemParams build_params(const ConfigDocument& config) {
  SystemParams p;
  p.m_eff = config.get("m_eff", "mass");
  p.omega_m = config.get("omega_m", "frequency");
  p.gamma_m = config.get("gamma_m", "frequency");
  p.kappa = config.get("kappa", "frequency");
  p.kappa_ex = config.get("kappa_ex", "frequency");
  p.g_coupling = config.get("g_coupling", "coupling");
  p.pump_wavelength = config.get("pump_wavelength", "length");
  p.pump_power = config.get("pump_power", "power");
  p.probe_power = config.get("probe_power", "power");
  p.detuning_bar_target = config.get_or("detuning_bar_target", "frequency",
                                        -p.omega_m);
  p.validate();
  return p;
}

std::string serialize_params(const SystemParams& p) {
  char buf[1024];
  std::snprintf(buf, sizeof buf,
                "m_eff: %.17g pg\n"
                "omega_m: %.17g rad/ns\n"
                "gamma_m: %.17g rad/ns\n"
                "kappa: %.17g rad/ns\n"
                "kappa_ex: %.17g rad/ns\n"
                "g_coupling: %.17g rad/ns/pm\n"
                "pump_wavelength: %.17g pm\n"
                "pump_power: %.17g nW\n"
                "probe_power: %.17g nW\n"
                "detuning_bar_target: %.17g rad/ns\n",
                p.m_eff, p.omega_m, p.gamma_m, p.kappa, p.kappa_ex,
                p.g_coupling, p.pump_wavelength, p.pump_power, p.probe_power,
                p.detuning_bar_target);
  return buf;
}

} // namespace omit
