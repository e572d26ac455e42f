#pragma once

#include <map>
#include <string>
#include <vector>

#include "core/params.hpp"

namespace omit {

/// Flat key-value document. One entry per line, "key: value [value...] unit",
/// '#' starts a comment. A "_over_2pi" suffix on a key marks an ordinary
/// frequency that is multiplied by 2*pi on ingest.
class ConfigDocument {
public:
  struct Entry {
    std::vector<double> values;  // converted to internal units
    std::string unit;            // unit token as written ("" when bare)
    std::string dimension;       // "frequency", "mass", ... or "none"
  };

  static ConfigDocument parse(const std::string& text);
  static ConfigDocument parse_file(const std::string& path);

  bool has(const std::string& key) const { return entries_.count(key) != 0; }

  /// Scalar accessors; throw config_error on missing key, wrong dimension,
  /// or non-scalar entry.
  double get(const std::string& key, const std::string& dimension) const;
  double get_or(const std::string& key, const std::string& dimension,
                double fallback) const;
  std::vector<double> get_list(const std::string& key,
                               const std::string& dimension) const;
  long get_count(const std::string& key) const;
  long get_count_or(const std::string& key, long fallback) const;
  double get_bare(const std::string& key, double fallback) const;

  /// Rejects any key outside `allowed`.
  void restrict_keys(const std::vector<std::string>& allowed) const;

  const std::map<std::string, Entry>& entries() const { return entries_; }

private:
  std::map<std::string, Entry> entries_;
};

/// Keys accepted for SystemParams (base names; frequency-like keys also
/// accept the _over_2pi form).
const std::vector<std::string>& param_keys();

SystemParams build_params(const ConfigDocument& config);

/// Round-trip serialization in identity units (rad/ns, pm, pg, nW).
std::string serialize_params(const SystemParams& params);

} // namespace omit
