#include "orbitq/serialize.hpp"

#include "orbitq/error.hpp"

namespace orbitq {

namespace {

[[noreturn]] void parse_fail(const std::string& path, const std::string& msg) {
  throw Error(ErrorCode::ParseError, (path.empty() ? std::string("/") : path) + ": " + msg, path.empty() ? "/" : path);
}

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) parse_fail(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) parse_fail(path + "/" + key, "missing field");
  return *it;
}

std::int64_t int_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) parse_fail(path, "expected an integer");
  return j.get<std::int64_t>();
}

Json terms_to_json(const std::map<Weight, std::int64_t>& terms) {
  Json arr = Json::array();
  for (const auto& [w, c] : terms) {
    Json t;
    t["weight"] = to_json(w);
    t["coeff"] = c;
    arr.push_back(std::move(t));
  }
  return arr;
}

std::map<Weight, std::int64_t> terms_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) parse_fail(path, "expected an array of {weight, coeff}");
  std::map<Weight, std::int64_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto p = path + "/" + std::to_string(i);
    const Weight w = weight_from_json(member(j[i], "weight", p), p + "/weight");
    const auto c = int_from_json(member(j[i], "coeff", p), p + "/coeff");
    if (!out.empty() && out.begin()->first.rank() != w.rank()) parse_fail(p + "/weight", "inconsistent rank");
    out[w] += c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

Json to_json(const Weight& w) {
  Json arr = Json::array();
  for (auto c : w.coords()) arr.push_back(c);
  return arr;
}

Weight weight_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) parse_fail(path, "expected an integer array");
  std::vector<Weight::value_type> coords;
  for (std::size_t i = 0; i < j.size(); ++i) coords.push_back(int_from_json(j[i], path + "/" + std::to_string(i)));
  if (coords.empty()) parse_fail(path, "weight must be nonempty");
  return Weight(std::move(coords));
}

Json to_json(const RepRingElement& x) { return terms_to_json(x.terms()); }

RepRingElement rep_ring_from_json(const RootDatum& rd, const Json& j, const std::string& path) {
  auto terms = terms_from_json(j, path);
  std::size_t i = 0;
  for (const auto& [w, c] : terms) {
    const auto p = path + "/" + std::to_string(i++) + "/weight";
    if (w.rank() != rd.rank()) throw Error(ErrorCode::DimensionMismatch, p + ": wrong rank for " + rd.kind().to_string(), p);
    if (!is_dominant(rd, w)) throw Error(ErrorCode::NotDominant, p + ": " + w.to_string() + " is not dominant", p);
  }
  return RepRingElement(rd, std::move(terms));
}

Json to_json(const FormalCharacter& chi) {
  Json arr = Json::array();
  for (const auto& [w, m] : chi.mults) {
    Json t;
    t["weight"] = to_json(w);
    t["mult"] = m;
    arr.push_back(std::move(t));
  }
  return arr;
}

Json to_json(const KTheoryClass& y) {
  Json j;
  j["degree"] = y.degree();
  j["terms"] = terms_to_json(y.terms());
  return j;
}

KTheoryClass ktheory_class_from_json(const Json& j, const std::string& path) {
  const auto degree = int_from_json(member(j, "degree", path), path + "/degree");
  if (degree != 0 && degree != 1) parse_fail(path + "/degree", "degree must be 0 or 1");
  return KTheoryClass(static_cast<int>(degree), terms_from_json(member(j, "terms", path), path + "/terms"));
}

Json to_json(const SeriesLabel& label) {
  Json j;
  j["series"] = label.series == SeriesLabel::Series::Principal ? "principal" : "discrete";
  j["parameter"] = to_json(label.parameter);
  j["sign"] = label.sign;
  return j;
}

SeriesLabel series_label_from_json(const Json& j, const std::string& path) {
  const Json& s = member(j, "series", path);
  if (!s.is_string()) parse_fail(path + "/series", "expected a string");
  SeriesLabel out{};
  if (s == "principal") {
    out.series = SeriesLabel::Series::Principal;
  } else if (s == "discrete") {
    out.series = SeriesLabel::Series::Discrete;
  } else {
    parse_fail(path + "/series", "expected \"principal\" or \"discrete\"");
  }
  out.parameter = weight_from_json(member(j, "parameter", path), path + "/parameter");
  const auto sign = int_from_json(member(j, "sign", path), path + "/sign");
  if (sign != 1 && sign != -1) parse_fail(path + "/sign", "sign must be +1 or -1");
  out.sign = static_cast<int>(sign);
  return out;
}

Json to_json(const OrbitProductManifold& n) {
  Json j;
  j["cartan"] = n.root_datum().kind().to_string();
  Json factors = Json::array();
  for (const auto& f : n.factors()) factors.push_back(to_json(f));
  j["factors"] = std::move(factors);
  return j;
}

OrbitProductManifold orbit_product_from_json(const Json& j, const std::string& path) {
  const Json& c = member(j, "cartan", path);
  if (!c.is_string()) parse_fail(path + "/cartan", "expected a string");
  RootDatum rd = [&] {
    try {
      return build_root_datum(c.get<std::string>());
    } catch (const Error& e) {
      throw Error(e.code(), e.what(), path + "/cartan");
    }
  }();
  const Json& f = member(j, "factors", path);
  if (!f.is_array()) parse_fail(path + "/factors", "expected an array of weights");
  std::vector<Weight> factors;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto p = path + "/factors/" + std::to_string(i);
    Weight w = weight_from_json(f[i], p);
    if (w.rank() != rd.rank()) throw Error(ErrorCode::DimensionMismatch, p + ": wrong rank for " + rd.kind().to_string(), p);
    factors.push_back(std::move(w));
  }
  return OrbitProductManifold(std::move(rd), std::move(factors));
}

Json to_json(const RootDatum& rd) {
  Json j;
  j["cartan"] = rd.kind().to_string();
  j["rank"] = rd.rank();
  Json roots = Json::array();
  for (const auto& r : rd.positive_roots()) roots.push_back(to_json(r.coords));
  j["positive_roots"] = std::move(roots);
  j["cartan_matrix"] = rd.cartan_matrix();
  j["rho_c"] = to_json(rd.rho_c());
  j["weyl_order"] = rd.weyl_order();
  Json form = Json::array();
  for (const auto& row : rd.bilinear_form()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x.to_string());
    form.push_back(std::move(r));
  }
  j["bilinear_form"] = std::move(form);
  return j;
}

Json to_json(const GroupDescriptor& g) {
  Json j;
  j["name"] = g.name();
  j["kind"] = std::string(to_string(g.kind()));
  j["d"] = g.d();
  j["degree"] = g.degree();
  j["k_datum"] = to_json(g.k_datum());
  if (g.g_rho()) j["g_rho"] = to_json(*g.g_rho());
  if (!g.noncompact_coroots().empty()) {
    Json nc = Json::array();
    for (const auto& f : g.noncompact_coroots()) nc.push_back(to_json(f));
    j["noncompact_coroots"] = std::move(nc);
  }
  return j;
}

Json to_json(const PullbackReport& r) {
  Json j;
  j["algebra"] = r.algebra;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["max_abs_error"] = r.max_abs_error;
  return j;
}

Json to_json(const DegeneracyReport& r) {
  Json j;
  j["kernel_dim"] = r.kernel_dim;
  j["fibre_dim"] = r.fibre_dim;
  j["orbit_kernel_dim"] = r.orbit_kernel_dim;
  j["dim_g_xi"] = r.dim_g_xi;
  j["dim_k_xi"] = r.dim_k_xi;
  return j;
}

}  // namespace orbitq
