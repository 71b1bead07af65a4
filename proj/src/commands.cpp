#include "qdt/commands.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qdt/dt.hpp"
#include "qdt/errors.hpp"
#include "qdt/json_io.hpp"
#include "qdt/oracle_ff.hpp"

namespace qdt {

namespace {

using Row = std::vector<std::string>;

// Rendered forms of one command result.
struct Report {
  Json json;
  std::vector<std::pair<std::string, std::string>> preface;
  Row header;
  std::vector<Row> rows;
  std::vector<std::string> footer;
  Row csv_header;
  std::vector<Row> csv_rows;
  int exit_code = exit_codes::ok;
  std::string diagnostics;
};

std::string render_table(const Report& r) {
  std::ostringstream os;
  for (const auto& [k, v] : r.preface) os << k << ": " << v << "\n";
  if (!r.header.empty()) {
    std::vector<std::size_t> width(r.header.size(), 0);
    auto widen = [&](const Row& row) {
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    };
    widen(r.header);
    for (const auto& row : r.rows) widen(row);
    auto line = [&](const Row& row) {
      std::string s;
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) s += " | ";
        s += row[i];
        if (i + 1 < row.size()) s += std::string(width[i] - row[i].size(), ' ');
      }
      os << s << "\n";
    };
    line(r.header);
    std::string rule;
    for (std::size_t i = 0; i < width.size(); ++i) {
      if (i) rule += "-+-";
      rule += std::string(width[i], '-');
    }
    os << rule << "\n";
    for (const auto& row : r.rows) line(row);
  }
  for (const auto& f : r.footer) os << f << "\n";
  return os.str();
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const Report& r) {
  std::ostringstream os;
  auto line = [&](const Row& row) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
    os << "\n";
  };
  line(r.csv_header);
  for (const auto& row : r.csv_rows) line(row);
  return os.str();
}

Row d_columns(const DimVector& d) {
  Row r;
  for (int x : d.entries()) r.push_back(std::to_string(x));
  return r;
}

Row d_header(const Quiver& q) {
  Row r;
  for (const auto& l : q.labels()) r.push_back("d_" + l);
  return r;
}

// One CSV row per (d, part, exponent) so polynomials stay plot-ready.
void motive_csv_rows(Report& rep, const DimVector& d, const RationalMotive& x) {
  auto emit = [&](const char* part, const LaurentPoly& p) {
    for (const auto& [e, c] : p.terms()) {
      Row row = d_columns(d);
      row.push_back(part);
      row.push_back(std::to_string(e));
      row.push_back(c.get_str());
      rep.csv_rows.push_back(std::move(row));
    }
  };
  emit("num", x.numerator());
  if (!x.is_laurent()) emit("den", x.denominator());
}

void motive_csv_header(Report& rep, const Quiver& q) {
  rep.csv_header = d_header(q);
  rep.csv_header.insert(rep.csv_header.end(), {"part", "exponent", "coefficient"});
}

std::string betti_text(const std::map<int, mpz_class>& b) {
  std::string s;
  for (const auto& [k, v] : b) s += (s.empty() ? "" : " ") + ("b" + std::to_string(k) + "=" + v.get_str());
  return s.empty() ? "-" : s;
}

// No oriented cycles, loops included.
bool is_acyclic(const Quiver& q) {
  const std::size_t n = q.size();
  std::vector<int> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) indegree[j] += q.arrows(i, j) > 0 ? 1 : 0;
  }
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push_back(i);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    const std::size_t i = ready.back();
    ready.pop_back();
    ++seen;
    for (std::size_t j = 0; j < n; ++j) {
      if (q.arrows(i, j) > 0 && --indegree[j] == 0) ready.push_back(j);
    }
  }
  return seen == n;
}

std::string d_list(const std::vector<DimVector>& ds) {
  std::string s;
  for (const auto& d : ds) s += (s.empty() ? "" : " ") + d.to_string();
  return s;
}

Report dt_report(const JobConfig& cfg, const RunOptions& opts) {
  const Quiver q = cfg.quiver();
  const DTResult r = dt_series(q, cfg.stability(), cfg.mu, cfg.box_vector(), opts.exec);
  Report rep;
  rep.json = to_json(r);

  const IntegralityReport integ = check_integrality(r);
  Json audits = Json::object();
  audits["integrality"] = {{"ok", integ.ok()}, {"violations", Json::array()}};
  for (const auto& d : integ.violations) audits["integrality"]["violations"].push_back(to_json(d));
  bool positive = true;
  if (integ.ok()) {
    const PositivityReport pos = check_positivity(r);
    positive = pos.ok();
    Json pj = {{"ok", pos.ok()}, {"entries", Json::array()}};
    for (const auto& e : pos.entries) {
      pj["entries"].push_back({{"d", to_json(e.d)}, {"nonnegative", e.nonnegative}, {"parity", to_string(e.parity)}});
    }
    audits["positivity"] = std::move(pj);
  } else {
    audits["positivity"] = nullptr;
  }
  rep.json["audits"] = std::move(audits);

  rep.preface.emplace_back("quiver", std::to_string(q.size()) + " vertices");
  if (r.stability) rep.preface.emplace_back("slope", r.slope->get_str());
  rep.preface.emplace_back("box", r.box.to_string());
  rep.header = {"d", "omega", "integral", "betti"};
  for (const auto& [d, w] : r.omega) {
    std::string betti = "-";
    if (w.is_integral() && !w.is_zero()) {
      try {
        betti = betti_text(ic_betti(w, moduli_dimension(q, d)));
      } catch (const ParityViolation&) {
      }
    }
    rep.rows.push_back({d.to_string(), w.to_string(), r.integral.at(d) ? "yes" : "no", betti});
  }
  rep.footer.push_back(std::string("integrality: ") + (integ.ok() ? "ok" : "FAILED at " + d_list(integ.violations)));
  rep.footer.push_back(std::string("positivity: ") + (!integ.ok() ? "skipped" : positive ? "ok" : "FAILED"));

  motive_csv_header(rep, q);
  for (const auto& [d, w] : r.omega) motive_csv_rows(rep, d, w);

  if (!integ.ok() || !positive) {
    rep.diagnostics = !integ.ok() ? "integrality audit failed at " + d_list(integ.violations) : "positivity audit failed";
    if (opts.strict) rep.exit_code = exit_codes::audit;
  }
  return rep;
}

Report series_report(const Quiver& q, const TruncatedSeries& s, const std::string& what) {
  Report rep;
  rep.json = to_json(s);
  rep.preface.emplace_back("series", what);
  rep.preface.emplace_back("box", s.box().to_string());
  rep.header = {"d", "coefficient"};
  motive_csv_header(rep, q);
  for (const auto& [d, c] : s.nonzero_terms()) {
    rep.rows.push_back({d.to_string(), c.to_string()});
    motive_csv_rows(rep, d, c);
  }
  return rep;
}

Report framed_report(const JobConfig& cfg, const RunOptions& opts) {
  const Quiver q = cfg.quiver();
  const bool normalized = opts.normalized || cfg.normalized;
  const DimVector f = cfg.framing_vector();
  const TruncatedSeries s = framed_series(q, cfg.stability(), cfg.mu, f, cfg.box_vector(), normalized, opts.exec);
  return series_report(q, s, std::string(normalized ? "normalized " : "") + "framed, f = " + f.to_string());
}

Report local_report(const JobConfig& cfg, const RunOptions& opts) {
  ExtQuiverSpec spec{*cfg.gram, cfg.d ? cfg.target() : cfg.box_vector(), std::nullopt};
  if (cfg.framing) spec.framing_dims = cfg.framing_vector();
  const TruncatedSeries s = local_dt(spec, cfg.box_vector(), opts.exec);
  Report rep = series_report(ext_quiver(spec), s, "local DT");
  return rep;
}

Report betti_report(const JobConfig& cfg, const RunOptions& opts) {
  const Quiver q = cfg.quiver();
  const DimVector d = cfg.target();
  const auto stab = cfg.stability();
  std::optional<mpq_class> mu = cfg.mu;
  if (stab && !mu) mu = slope(*stab, d);
  if (stab && slope(*stab, d) != *mu) {
    throw InvalidInput("d = " + d.to_string() + " has slope " + slope(*stab, d).get_str() + ", not " + mu->get_str());
  }
  const DTResult r = dt_series(q, stab, mu, d, opts.exec);
  const RationalMotive& w = r.omega.at(d);
  const long dim = cfg.dim ? *cfg.dim : moduli_dimension(q, d);
  const auto betti = ic_betti(w, dim);
  const mpz_class euler = euler_specialization(w);

  Report rep;
  rep.json = Json::object();
  rep.json["d"] = to_json(d);
  rep.json["dim"] = dim;
  rep.json["omega"] = to_json(w);
  rep.json["stable_points"] = !w.is_zero();
  rep.json["betti"] = to_json(betti);
  rep.json["euler"] = euler.get_str();
  rep.preface.emplace_back("d", d.to_string());
  rep.preface.emplace_back("dim", std::to_string(dim));
  rep.preface.emplace_back("omega", w.to_string());
  rep.preface.emplace_back("euler", euler.get_str());
  if (w.is_zero()) rep.footer.push_back("no stable points");
  rep.header = {"k", "b_k"};
  rep.csv_header = {"k", "b_k"};
  for (const auto& [k, b] : betti) {
    rep.rows.push_back({std::to_string(k), b.get_str()});
    rep.csv_rows.push_back({std::to_string(k), b.get_str()});
  }
  return rep;
}

Report nullcone_report(const JobConfig& cfg, const RunOptions& opts) {
  const Quiver q = cfg.quiver();
  const DimVector d = cfg.target();
  const mpq_class bound = nullcone_bound(q, d);
  std::map<mpq_class, std::size_t> values;
  std::size_t count = 0;
  for (const auto& parts : thin_decompositions(d)) {
    ++values[thin_decomposition_value(q, d, parts)];
    ++count;
  }
  const bool attained = values.size() == 1 && values.begin()->first == bound;

  Report rep;
  rep.json = Json::object();
  rep.json["d"] = to_json(d);
  rep.json["bound"] = bound.get_str();
  rep.json["thin_decompositions"] = count;
  Json vals = Json::object();
  for (const auto& [v, n] : values) vals[v.get_str()] = n;
  rep.json["values"] = std::move(vals);
  rep.json["match"] = attained;
  rep.preface.emplace_back("d", d.to_string());
  rep.preface.emplace_back("bound", bound.get_str());
  rep.preface.emplace_back("thin decompositions", std::to_string(count));
  rep.header = {"value", "count"};
  rep.csv_header = {"value", "count"};
  for (const auto& [v, n] : values) {
    rep.rows.push_back({v.get_str(), std::to_string(n)});
    rep.csv_rows.push_back({v.get_str(), std::to_string(n)});
  }
  rep.footer.push_back(std::string("match: ") + (attained ? "yes" : "no"));
  if (!attained) {
    rep.diagnostics = "thin decomposition values differ from the bound";
    if (opts.strict) rep.exit_code = exit_codes::audit;
  }
  return rep;
}

Json comparison_json(const OracleComparison& c) {
  return {{"count", std::to_string(c.count)}, {"motive_eval", c.motive_eval.get_str()}, {"match", c.match}};
}

Report oracle_report(const JobConfig& cfg, const RunOptions&) {
  const Quiver q = cfg.quiver();
  const DimVector d = cfg.target();
  FFConfig ff;
  ff.q = cfg.q;
  const StabilityWeights theta = cfg.stability().value_or(StabilityWeights{std::vector<int>(q.size(), 0)});
  const auto ss = compare_semistable(q, theta, d, ff);
  const auto reps = compare_reps(q, d, ff);
  const auto gl = compare_gl(d, ff);

  Report rep;
  rep.json = comparison_json(ss);
  rep.json["reps"] = comparison_json(reps);
  rep.json["gl"] = comparison_json(gl);
  rep.preface.emplace_back("d", d.to_string());
  rep.preface.emplace_back("q", std::to_string(cfg.q));
  rep.header = {"quantity", "count", "motive_eval", "match"};
  rep.csv_header = rep.header;
  const std::pair<const char*, const OracleComparison*> items[] = {{"semistable", &ss}, {"reps", &reps}, {"gl", &gl}};
  bool all = true;
  for (const auto& [name, c] : items) {
    Row row{name, std::to_string(c->count), c->motive_eval.get_str(), c->match ? "yes" : "no"};
    rep.rows.push_back(row);
    rep.csv_rows.push_back(row);
    all = all && c->match;
  }
  if (!all) {
    rep.exit_code = exit_codes::audit;
    rep.diagnostics = "point count disagrees with the motive evaluation";
  }
  return rep;
}

Report check_report(const JobConfig& cfg, const RunOptions& opts) {
  const Quiver q = cfg.quiver();
  const auto stab = cfg.stability();
  const DimVector box = cfg.box_vector();
  const DTResult r = dt_series(q, stab, cfg.mu, box, opts.exec);

  std::vector<std::pair<std::string, bool>> checks;
  // Exp(Omega / (v - v^-1)) against the stack series.
  checks.emplace_back("reconstruction", sym_reconstruction(r, opts.exec) == stack_series(q, stab, cfg.mu, box, opts.exec));
  const IntegralityReport integ = check_integrality(r);
  checks.emplace_back("integrality", integ.ok());
  if (integ.ok()) {
    checks.emplace_back("positivity", check_positivity(r).ok());
    // Hard Lefschetz needs compact moduli, i.e. an acyclic quiver.
    if (is_acyclic(q)) checks.emplace_back("unimodality", check_unimodular(r).ok());
  }

  Report rep;
  rep.json = Json::object();
  rep.json["box"] = to_json(box);
  rep.json["checks"] = Json::array();
  rep.header = {"check", "result"};
  rep.csv_header = rep.header;
  bool all = true;
  for (const auto& [name, ok] : checks) {
    rep.json["checks"].push_back({{"name", name}, {"ok", ok}});
    rep.rows.push_back({name, ok ? "ok" : "FAILED"});
    rep.csv_rows.push_back({name, ok ? "ok" : "FAILED"});
    all = all && ok;
  }
  rep.json["ok"] = all;
  if (!all) {
    rep.exit_code = exit_codes::audit;
    rep.diagnostics = "one or more checks failed";
  }
  return rep;
}

}  // namespace

OutputFormat parse_output_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "table") return OutputFormat::table;
  throw ConfigError("unknown output format '" + s + "' (expected json, csv or table)");
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const SymmetryViolation*>(&e)) return "SymmetryViolation";
  if (dynamic_cast<const GenericityViolation*>(&e)) return "GenericityViolation";
  if (dynamic_cast<const EmptySlopeClass*>(&e)) return "EmptySlopeClass";
  if (dynamic_cast<const FramingViolation*>(&e)) return "FramingViolation";
  if (dynamic_cast<const PreconditionViolation*>(&e)) return "PreconditionViolation";
  if (dynamic_cast<const NonIntegralError*>(&e)) return "NonIntegralError";
  if (dynamic_cast<const ParityViolation*>(&e)) return "ParityViolation";
  if (dynamic_cast<const PoleError*>(&e)) return "PoleError";
  if (dynamic_cast<const OddParityEvaluation*>(&e)) return "OddParityEvaluation";
  if (dynamic_cast<const GuardExceeded*>(&e)) return "GuardExceeded";
  if (dynamic_cast<const ConfigError*>(&e)) return "ConfigError";
  if (dynamic_cast<const InvalidInput*>(&e)) return "InvalidInput";
  if (dynamic_cast<const Error*>(&e)) return "Error";
  return "InternalError";
}

RunResult run(const std::string& command, const JobConfig& cfg, const RunOptions& opts) {
  RunResult out;
  try {
    validate_for(command, cfg);
    Report rep;
    if (command == "dt") rep = dt_report(cfg, opts);
    else if (command == "framed") rep = framed_report(cfg, opts);
    else if (command == "local") rep = local_report(cfg, opts);
    else if (command == "betti") rep = betti_report(cfg, opts);
    else if (command == "nullcone") rep = nullcone_report(cfg, opts);
    else if (command == "oracle") rep = oracle_report(cfg, opts);
    else rep = check_report(cfg, opts);
    switch (opts.format) {
      case OutputFormat::json: out.output = rep.json.dump(2) + "\n"; break;
      case OutputFormat::csv: out.output = render_csv(rep); break;
      case OutputFormat::table: out.output = render_table(rep); break;
    }
    out.exit_code = rep.exit_code;
    out.diagnostics = rep.diagnostics;
  } catch (const PreconditionViolation& e) {
    out.exit_code = exit_codes::precondition;
    out.diagnostics = error_kind(e) + ": " + e.what();
  } catch (const NonIntegralError& e) {
    out.exit_code = exit_codes::audit;
    out.diagnostics = error_kind(e) + ": " + e.what();
  } catch (const ParityViolation& e) {
    out.exit_code = exit_codes::audit;
    out.diagnostics = error_kind(e) + ": " + e.what();
  } catch (const std::exception& e) {
    out.exit_code = exit_codes::usage;
    out.diagnostics = error_kind(e) + ": " + e.what();
  }
  return out;
}

}  // namespace qdt
