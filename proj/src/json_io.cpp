#include "qdt/json_io.hpp"

#include "qdt/errors.hpp"

namespace qdt {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InvalidInput("json: " + what); }

mpq_class parse_rational(const Json& j, const std::string& where) {
  if (!j.is_string()) bad(where + " must be a decimal string");
  try {
    mpq_class c(j.get<std::string>());
    c.canonicalize();
    return c;
  } catch (const std::invalid_argument&) {
    bad(where + ": '" + j.get<std::string>() + "' is not a rational number");
  }
}

int parse_exponent(const std::string& s) {
  std::size_t used = 0;
  int e = 0;
  try {
    e = std::stoi(s, &used);
  } catch (const std::exception&) {
    bad("exponent '" + s + "' is not an integer");
  }
  if (used != s.size()) bad("exponent '" + s + "' is not an integer");
  return e;
}

}  // namespace

Json to_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.get_str();
  return j;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_object()) bad("Laurent polynomial must be an object");
  std::map<int, mpq_class> terms;
  for (const auto& [k, c] : j.items()) terms[parse_exponent(k)] += parse_rational(c, "coefficient of v^" + k);
  return LaurentPoly::from_terms(terms);
}

Json to_json(const RationalMotive& x) {
  Json j = Json::object();
  j["num"] = to_json(x.numerator());
  j["den"] = to_json(x.denominator());
  return j;
}

RationalMotive motive_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) bad("motive must have \"num\" and \"den\"");
  const LaurentPoly num = laurent_from_json(j.at("num"));
  const LaurentPoly den = laurent_from_json(j.at("den"));
  if (den == LaurentPoly(1)) return RationalMotive(num);
  return RationalMotive::fraction(num, den);
}

Json to_json(const DimVector& d) { return Json(d.entries()); }

DimVector dim_vector_from_json(const Json& j) {
  if (!j.is_array()) bad("dimension vector must be an array");
  std::vector<int> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) bad("dimension vector entries must be integers");
    v.push_back(x.get<int>());
  }
  return DimVector(std::move(v));
}

Json to_json(const Quiver& q) {
  Json arrows = Json::array();
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (q.arrows(i, j) > 0) arrows.push_back(Json::array({q.labels()[i], q.labels()[j], q.arrows(i, j)}));
    }
  }
  Json j = Json::object();
  j["vertices"] = q.labels();
  j["arrows"] = std::move(arrows);
  return j;
}

Quiver quiver_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows")) bad("quiver needs vertices and arrows");
  const auto labels = j.at("vertices").get<std::vector<std::string>>();
  std::vector<std::vector<int>> a(labels.size(), std::vector<int>(labels.size(), 0));
  auto find = [&](const std::string& s) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == s) return i;
    }
    bad("arrow references unknown vertex '" + s + "'");
  };
  for (const auto& arr : j.at("arrows")) {
    if (!arr.is_array() || arr.size() != 3) bad("arrow must be [src, dst, multiplicity]");
    a[find(arr[0].get<std::string>())][find(arr[1].get<std::string>())] += arr[2].get<int>();
  }
  return Quiver(labels, std::move(a));
}

Json to_json(const TruncatedSeries& s) {
  Json coeffs = Json::array();
  for (const auto& [d, c] : s.nonzero_terms()) {
    Json t = Json::object();
    t["d"] = to_json(d);
    t["value"] = to_json(c);
    coeffs.push_back(std::move(t));
  }
  Json j = Json::object();
  j["box"] = to_json(s.box());
  j["coeffs"] = std::move(coeffs);
  return j;
}

TruncatedSeries series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("box") || !j.contains("coeffs")) bad("series needs box and coeffs");
  TruncatedSeries s(dim_vector_from_json(j.at("box")));
  for (const auto& t : j.at("coeffs")) s.set(dim_vector_from_json(t.at("d")), motive_from_json(t.at("value")));
  return s;
}

Json to_json(const std::map<int, mpz_class>& betti) {
  Json j = Json::object();
  for (const auto& [k, b] : betti) j[std::to_string(k)] = b.get_str();
  return j;
}

Json to_json(const DTResult& r) {
  Json j = Json::object();
  j["quiver"] = to_json(r.quiver);
  if (r.stability) {
    Json theta = Json::object();
    for (std::size_t i = 0; i < r.quiver.size(); ++i) theta[r.quiver.labels()[i]] = r.stability->theta[i];
    j["theta"] = std::move(theta);
  } else {
    j["theta"] = nullptr;
  }
  j["mu"] = r.slope ? Json(r.slope->get_str()) : Json(nullptr);
  j["box"] = to_json(r.box);
  Json dt = Json::array();
  for (const auto& [d, w] : r.omega) {
    Json e = Json::object();
    e["d"] = to_json(d);
    e["omega"] = to_json(w);
    e["integral"] = r.integral.at(d);
    e["betti"] = nullptr;
    if (w.is_integral() && !w.is_zero()) {
      try {
        e["betti"] = to_json(ic_betti(w, moduli_dimension(r.quiver, d)));
      } catch (const ParityViolation&) {
      }
    }
    dt.push_back(std::move(e));
  }
  j["dt"] = std::move(dt);
  return j;
}

DTResult dt_result_from_json(const Json& j) {
  for (const char* k : {"quiver", "theta", "mu", "box", "dt"}) {
    if (!j.contains(k)) bad(std::string("DT result is missing \"") + k + "\"");
  }
  DTResult r;
  r.quiver = quiver_from_json(j.at("quiver"));
  if (!j.at("theta").is_null()) {
    StabilityWeights w{std::vector<int>(r.quiver.size(), 0)};
    for (const auto& [k, v] : j.at("theta").items()) {
      const auto i = r.quiver.index_of(k);
      if (!i) bad("theta names unknown vertex '" + k + "'");
      w.theta[*i] = v.get<int>();
    }
    r.stability = std::move(w);
  }
  if (!j.at("mu").is_null()) r.slope = parse_rational(j.at("mu"), "mu");
  r.box = dim_vector_from_json(j.at("box"));
  for (const auto& e : j.at("dt")) {
    const DimVector d = dim_vector_from_json(e.at("d"));
    r.omega.emplace(d, motive_from_json(e.at("omega")));
    r.integral[d] = e.at("integral").get<bool>();
  }
  return r;
}

}  // namespace qdt
