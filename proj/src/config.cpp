#include "qdt/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>
#include <toml.hpp>

#include "qdt/errors.hpp"

namespace qdt {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError(path.empty() ? what : path + ": " + what);
}

Json toml_to_json(const toml::node& n, const std::string& path) {
  if (const auto* t = n.as_table()) {
    Json j = Json::object();
    for (const auto& [k, v] : *t) {
      const std::string key(k.str());
      j[key] = toml_to_json(v, path.empty() ? key : path + "." + key);
    }
    return j;
  }
  if (const auto* a = n.as_array()) {
    Json j = Json::array();
    for (std::size_t i = 0; i < a->size(); ++i) j.push_back(toml_to_json(*a->get(i), path + "[" + std::to_string(i) + "]"));
    return j;
  }
  if (const auto* s = n.as_string()) return Json(s->get());
  if (const auto* i = n.as_integer()) return Json(i->get());
  if (const auto* b = n.as_boolean()) return Json(b->get());
  fail(path, "unsupported value type (expected string, integer, boolean, array or table)");
}

int as_int(const Json& j, const std::string& path, int min = std::numeric_limits<int>::min()) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  const auto v = j.get<long long>();
  if (v < min || v > std::numeric_limits<int>::max()) {
    fail(path, min == 0 ? "expected a non-negative integer" : "integer out of range");
  }
  return static_cast<int>(v);
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

std::vector<int> as_naturals(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of non-negative integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], path + "[" + std::to_string(i) + "]", 0));
  return out;
}

std::map<std::string, int> as_vertex_map(const Json& j, const std::string& path, const std::vector<std::string>& vertices,
                                         int min) {
  if (!j.is_object()) fail(path, "expected a table from vertex names to integers");
  std::map<std::string, int> out;
  for (const auto& [k, v] : j.items()) {
    if (std::find(vertices.begin(), vertices.end(), k) == vertices.end()) fail(path + "." + k, "unknown vertex '" + k + "'");
    out[k] = as_int(v, path + "." + k, min);
  }
  return out;
}

mpq_class as_rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  const std::string s = as_string(j, path);
  mpq_class r;
  try {
    r = mpq_class(s);
  } catch (const std::invalid_argument&) {
    fail(path, "'" + s + "' is not a rational number of the form p/q");
  }
  if (r.get_den() == 0) fail(path, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string arrow_text(const Json& a) { return a.dump(); }

JobConfig from_json(const Json& root) {
  if (!root.is_object()) fail("", "configuration must be a table");
  static const std::set<std::string> known{"vertices", "arrows", "box",   "theta", "mu", "framing",
                                           "normalized", "gram",  "d",     "q",     "dim"};
  for (const auto& [k, v] : root.items()) {
    if (!known.count(k)) fail(k, "unknown key '" + k + "'");
  }
  JobConfig c;
  if (root.contains("gram")) {
    const Json& g = root["gram"];
    if (!g.is_array() || g.empty()) fail("gram", "expected a non-empty square matrix of integers");
    std::vector<std::vector<int>> m;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::string p = "gram[" + std::to_string(i) + "]";
      if (!g[i].is_array() || g[i].size() != g.size()) fail(p, "expected a row of length " + std::to_string(g.size()));
      std::vector<int> row;
      for (std::size_t j = 0; j < g[i].size(); ++j) row.push_back(as_int(g[i][j], p + "[" + std::to_string(j) + "]"));
      m.push_back(std::move(row));
    }
    c.gram = std::move(m);
  }
  if (root.contains("vertices")) {
    const Json& v = root["vertices"];
    if (!v.is_array() || v.empty()) fail("vertices", "expected a non-empty array of vertex names");
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::string name = as_string(v[i], "vertices[" + std::to_string(i) + "]");
      if (std::find(c.vertices.begin(), c.vertices.end(), name) != c.vertices.end()) {
        fail("vertices[" + std::to_string(i) + "]", "duplicate vertex '" + name + "'");
      }
      c.vertices.push_back(name);
    }
  } else if (c.gram) {
    for (std::size_t i = 0; i < c.gram->size(); ++i) c.vertices.push_back(std::to_string(i + 1));
  } else {
    fail("vertices", "missing required key");
  }
  if (c.gram && c.gram->size() != c.vertices.size()) fail("gram", "size must match the number of vertices");
  if (root.contains("arrows")) {
    const Json& a = root["arrows"];
    if (!a.is_array()) fail("arrows", "expected an array of [src, dst, multiplicity]");
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::string p = "arrows[" + std::to_string(i) + "]";
      if (!a[i].is_array() || a[i].size() < 2 || a[i].size() > 3) {
        fail(p, "expected [src, dst] or [src, dst, multiplicity], got " + arrow_text(a[i]));
      }
      ArrowSpec s;
      s.src = as_string(a[i][0], p + "[0]");
      s.dst = as_string(a[i][1], p + "[1]");
      if (a[i].size() == 3) s.multiplicity = as_int(a[i][2], p + "[2]", 0);
      for (const auto& name : {s.src, s.dst}) {
        if (std::find(c.vertices.begin(), c.vertices.end(), name) == c.vertices.end()) {
          fail(p, "arrow " + arrow_text(a[i]) + " references undeclared vertex '" + name + "'");
        }
      }
      c.arrows.push_back(std::move(s));
    }
  }
  const auto sized = [&](const char* key) {
    auto v = as_naturals(root[key], key);
    if (v.size() != c.vertices.size()) {
      fail(key, "length " + std::to_string(v.size()) + " does not match the " + std::to_string(c.vertices.size()) +
                    " vertices");
    }
    return v;
  };
  if (root.contains("box")) c.box = sized("box");
  if (root.contains("d")) c.d = sized("d");
  if (root.contains("theta")) c.theta = as_vertex_map(root["theta"], "theta", c.vertices, std::numeric_limits<int>::min());
  if (root.contains("framing")) c.framing = as_vertex_map(root["framing"], "framing", c.vertices, 0);
  if (root.contains("mu")) c.mu = as_rational(root["mu"], "mu");
  if (root.contains("normalized")) {
    if (!root["normalized"].is_boolean()) fail("normalized", "expected a boolean");
    c.normalized = root["normalized"].get<bool>();
  }
  if (root.contains("q")) {
    c.q = as_int(root["q"], "q");
    if (c.q < 2 || c.q > 4) fail("q", "field size must be 2, 3 or 4");
  }
  if (root.contains("dim")) c.dim = as_int(root["dim"], "dim");
  return c;
}

}  // namespace

Quiver JobConfig::quiver() const {
  std::vector<std::vector<int>> a(vertices.size(), std::vector<int>(vertices.size(), 0));
  auto idx = [&](const std::string& s) {
    return static_cast<std::size_t>(std::find(vertices.begin(), vertices.end(), s) - vertices.begin());
  };
  for (const auto& s : arrows) a[idx(s.src)][idx(s.dst)] += s.multiplicity;
  return Quiver(vertices, std::move(a));
}

std::optional<StabilityWeights> JobConfig::stability() const {
  if (!theta) return std::nullopt;
  StabilityWeights w{std::vector<int>(vertices.size(), 0)};
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (auto it = theta->find(vertices[i]); it != theta->end()) w.theta[i] = it->second;
  }
  return w;
}

DimVector JobConfig::box_vector() const {
  if (!box) fail("box", "missing required key");
  return DimVector(*box);
}

DimVector JobConfig::target() const {
  if (!d) fail("d", "missing required key");
  return DimVector(*d);
}

DimVector JobConfig::framing_vector() const {
  if (!framing) fail("framing", "missing required key");
  std::vector<int> f(vertices.size(), 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (auto it = framing->find(vertices[i]); it != framing->end()) f[i] = it->second;
  }
  return DimVector(std::move(f));
}

JobConfig parse_config(std::string_view text, ConfigFormat format) {
  Json root;
  if (format == ConfigFormat::json) {
    try {
      root = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      fail("", std::string("malformed JSON: ") + e.what());
    }
  } else {
    try {
      const toml::table t = toml::parse(text);
      root = toml_to_json(t, "");
    } catch (const toml::parse_error& e) {
      std::ostringstream os;
      os << "malformed TOML at line " << e.source().begin.line << ": " << e.description();
      fail("", os.str());
    }
  }
  return from_json(root);
}

JobConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const bool json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
  return parse_config(buf.str(), json ? ConfigFormat::json : ConfigFormat::toml);
}

void validate_for(const std::string& command, const JobConfig& cfg) {
  static const std::set<std::string> commands{"dt", "framed", "local", "betti", "nullcone", "oracle", "check"};
  if (!commands.count(command)) fail("", "unknown command '" + command + "'");
  if (command == "dt" || command == "framed" || command == "check") {
    if (cfg.theta && !cfg.mu) fail("mu", "slope required with stability");
    if (cfg.mu && !cfg.theta) fail("mu", "slope given without stability weights theta");
  }
  if (command == "dt" || command == "framed" || command == "check" || command == "local") cfg.box_vector();
  if (command == "framed") cfg.framing_vector();
  if (command == "local" && !cfg.gram) fail("gram", "missing required key");
  if (command == "betti" && cfg.mu && !cfg.theta) fail("mu", "slope given without stability weights theta");
  if (command == "betti" || command == "nullcone" || command == "oracle") cfg.target();
}

}  // namespace qdt
