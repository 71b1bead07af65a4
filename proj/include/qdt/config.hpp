#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <gmpxx.h>

#include "qdt/dim_vector.hpp"
#include "qdt/quiver.hpp"

namespace qdt {

enum class ConfigFormat { toml, json };

struct ArrowSpec {
  std::string src;
  std::string dst;
  int multiplicity = 1;
};

// Job description shared by all commands. Absent theta means trivial
// stability.
struct JobConfig {
  std::vector<std::string> vertices;
  std::vector<ArrowSpec> arrows;
  std::optional<std::vector<int>> box;
  std::optional<std::map<std::string, int>> theta;
  std::optional<mpq_class> mu;
  std::optional<std::map<std::string, int>> framing;
  bool normalized = false;
  // Pairing matrix of the simple factors for `local`.
  std::optional<std::vector<std::vector<int>>> gram;
  // Target dimension vector for betti / nullcone / oracle.
  std::optional<std::vector<int>> d;
  int q = 2;
  // Moduli dimension override for betti.
  std::optional<long> dim;

  Quiver quiver() const;
  std::optional<StabilityWeights> stability() const;
  DimVector box_vector() const;
  DimVector target() const;
  DimVector framing_vector() const;
};

// Throws ConfigError with a path-qualified message ("arrows[1][0]: ...").
JobConfig parse_config(std::string_view text, ConfigFormat format);
// Format chosen by extension: .json is JSON, everything else TOML.
JobConfig load_config(const std::string& path);

// Command-specific requirements (e.g. a slope when theta is set on `dt`).
void validate_for(const std::string& command, const JobConfig& cfg);

}  // namespace qdt
