#include "cli/command.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "orbitq/orbitq.hpp"

namespace orbitq::cli {

namespace {

enum class FieldType { String, Integer, Count, Number, WeightArray, Factors };

struct FieldSpec {
  FieldType type;
  bool required = false;
};

using Schema = std::map<std::string, FieldSpec>;

const Schema& group_fields() {
  static const Schema s{
      {"cartan", {FieldType::String}},
      {"group", {FieldType::String}},
      {"group-kind", {FieldType::String}},
      {"d", {FieldType::Count}},
  };
  return s;
}

Schema with_group(Schema extra) {
  Schema s = group_fields();
  s.merge(extra);
  return s;
}

const std::map<std::string, Schema>& schemas() {
  static const std::map<std::string, Schema> s{
      {"describe", with_group({})},
      {"quantize", with_group({{"factors", {FieldType::Factors, true}}})},
      {"induce", with_group({{"factors", {FieldType::Factors, true}}})},
      {"reduce", with_group({{"factors", {FieldType::Factors, true}}, {"lambda", {FieldType::WeightArray, true}}})},
      {"orbit-method", with_group({{"lambda", {FieldType::WeightArray, true}}})},
      {"label", with_group({{"lambda", {FieldType::WeightArray}},
                            {"mu", {FieldType::WeightArray}},
                            {"series", {FieldType::String}}})},
      {"verify-geometry", {{"algebra", {FieldType::String}},
                           {"samples", {FieldType::Count}},
                           {"seed", {FieldType::Count}},
                           {"seeds", {FieldType::Count}},
                           {"lambda", {FieldType::WeightArray}},
                           {"xi", {FieldType::Number}}}},
      {"verify-qr", with_group({{"bound", {FieldType::Count}},
                                {"max-factors", {FieldType::Count}},
                                {"lambda-bound", {FieldType::Count}}})},
  };
  return s;
}

[[noreturn]] void invalid(const std::string& field, const std::string& msg,
                          ErrorCode code = ErrorCode::ParseError) {
  throw Error(code, field + ": " + msg, field);
}

void check_weight_array(const Json& v, const std::string& field) {
  if (!v.is_array() || v.empty()) invalid(field, "expected a nonempty integer array");
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_number_integer()) invalid(field + "/" + std::to_string(i), "expected an integer");
}

void check_field(const std::string& name, const FieldSpec& spec, const Json& v) {
  const std::string field = "/" + name;
  switch (spec.type) {
    case FieldType::String:
      if (!v.is_string()) invalid(field, "expected a string");
      break;
    case FieldType::Integer:
      if (!v.is_number_integer()) invalid(field, "expected an integer");
      break;
    case FieldType::Count:
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0) invalid(field, "expected a nonnegative integer");
      break;
    case FieldType::Number:
      if (!v.is_number() || !std::isfinite(v.get<double>())) invalid(field, "expected a finite number");
      break;
    case FieldType::WeightArray:
      check_weight_array(v, field);
      break;
    case FieldType::Factors:
      if (!v.is_array() || v.empty()) invalid(field, "expected a nonempty array of weights");
      for (std::size_t i = 0; i < v.size(); ++i) check_weight_array(v[i], field + "/" + std::to_string(i));
      break;
  }
}

template <class T>
std::optional<T> opt(const Json& p, const char* key) {
  const auto it = p.find(key);
  if (it == p.end()) return std::nullopt;
  return it->template get<T>();
}

// ---------------------------------------------------------------------------
// Parameter resolution

RootDatum datum_from(const std::string& cartan) {
  try {
    return build_root_datum(cartan);
  } catch (const Error& e) {
    throw Error(e.code(), e.what(), "/cartan");
  }
}

std::optional<GroupDescriptor> resolve_group(const Json& p) {
  const auto group = opt<std::string>(p, "group");
  const auto kind = opt<std::string>(p, "group-kind");
  const auto cartan = opt<std::string>(p, "cartan");
  const auto d = opt<int>(p, "d");
  if (group) {
    if (kind) invalid("/group-kind", "cannot be combined with a group preset", ErrorCode::InvalidArgument);
    if (d) invalid("/d", "cannot be combined with a group preset", ErrorCode::InvalidArgument);
    GroupDescriptor g = GroupDescriptor::preset(*group);
    if (cartan && !(datum_from(*cartan) == g.k_datum()))
      invalid("/cartan", "preset " + g.name() + " has K of type " + g.k_datum().kind().to_string(),
              ErrorCode::DatumMismatch);
    return g;
  }
  if (!kind) {
    if (d) invalid("/d", "needs --group-kind", ErrorCode::InvalidArgument);
    return std::nullopt;
  }
  if (!cartan) invalid("/cartan", "required with --group-kind", ErrorCode::InvalidArgument);
  RootDatum rd = datum_from(*cartan);
  switch (parse_real_form_kind(*kind)) {
    case RealFormKind::Complex: return GroupDescriptor::complex(std::move(rd), d);
    case RealFormKind::EqualRankDiscreteSeries:
      if (!d) invalid("/d", "required for discrete-series descriptors", ErrorCode::InvalidArgument);
      return GroupDescriptor::discrete_series(std::move(rd), *d);
    case RealFormKind::Generic:
      if (!d) invalid("/d", "required for generic descriptors", ErrorCode::InvalidArgument);
      return GroupDescriptor::generic(std::move(rd), *d);
  }
  return std::nullopt;
}

RootDatum resolve_datum(const Json& p, const std::optional<GroupDescriptor>& g) {
  if (g) return g->k_datum();
  const auto cartan = opt<std::string>(p, "cartan");
  if (!cartan) invalid("/cartan", "required (or give --group)", ErrorCode::InvalidArgument);
  return datum_from(*cartan);
}

GroupDescriptor require_group(const std::optional<GroupDescriptor>& g) {
  if (!g) invalid("/group", "a group is required (--group or --cartan with --group-kind)", ErrorCode::InvalidArgument);
  return *g;
}

Weight weight_param(const Json& p, const char* key, const RootDatum& rd) {
  const std::string field = std::string("/") + key;
  Weight w = weight_from_json(p.at(key), field);
  if (w.rank() != rd.rank())
    invalid(field, "has " + std::to_string(w.rank()) + " coordinates, expected " + std::to_string(rd.rank()),
            ErrorCode::DimensionMismatch);
  return w;
}

OrbitProductManifold manifold_param(const Json& p, const RootDatum& rd) {
  Json j = Json::object();
  j["cartan"] = rd.kind().to_string();
  j["factors"] = p.at("factors");
  return orbit_product_from_json(j);
}

// ---------------------------------------------------------------------------
// Verbs

struct Outcome {
  Json body;
  bool verified = true;
};

Outcome do_describe(const Json& p) {
  const auto g = resolve_group(p);
  Json out;
  out["root_datum"] = to_json(resolve_datum(p, g));
  if (g) out["group"] = to_json(*g);
  return {out};
}

Outcome do_quantize(const Json& p) {
  const auto g = resolve_group(p);
  const auto n = manifold_param(p, resolve_datum(p, g));
  Json out = to_json(n);
  out["dimension"] = n.dimension();
  out["terms"] = to_json(quantize_compact(n));
  if (misses_open_chamber(n)) out["warning"] = "momentum image misses the open positive chamber";
  return {out};
}

Outcome do_induce(const Json& p) {
  const auto g = require_group(resolve_group(p));
  const auto n = manifold_param(p, g.k_datum());
  Json out = to_json(quantize_induced(g, n));
  if (misses_open_chamber(n)) out["warning"] = "momentum image misses the open positive chamber";
  return {out};
}

Outcome do_reduce(const Json& p) {
  const auto g = resolve_group(p);
  const auto rd = resolve_datum(p, g);
  const auto n = manifold_param(p, rd);
  const Weight lambda = weight_param(p, "lambda", rd);
  const auto red = reduce_quantization(n, lambda);
  Json out;
  out["lambda"] = to_json(lambda);
  out["multiplicity"] = red.multiplicity;
  out["chamber_warning"] = red.chamber_warning;
  if (g) {
    out["group"] = g->name();
    out["reduce_rg"] = reduce_rg(*g, quantize_induced(*g, n), lambda);
  }
  return {out};
}

Outcome do_orbit_method(const Json& p) {
  const auto g = require_group(resolve_group(p));
  return {to_json(orbit_method_class(g, weight_param(p, "lambda", g.k_datum())))};
}

Outcome do_label(const Json& p) {
  const auto g = require_group(resolve_group(p));
  std::string series = opt<std::string>(p, "series").value_or("");
  if (series.empty()) series = p.contains("mu") ? "discrete" : "principal";
  if (series == "principal") {
    if (!p.contains("lambda")) invalid("/lambda", "required for principal series", ErrorCode::InvalidArgument);
    const Weight lambda = weight_param(p, "lambda", g.k_datum());
    Json out = to_json(principal_series_label(g, lambda));
    out["class"] = to_json(KTheoryClass::generator(g.degree(), lambda));
    return {out};
  }
  if (series == "discrete") {
    if (!p.contains("mu")) invalid("/mu", "required for discrete series", ErrorCode::InvalidArgument);
    const auto ds = discrete_series_label(g, weight_param(p, "mu", g.k_datum()));
    Json out = to_json(ds.label);
    out["class"] = to_json(ds.cls);
    return {out};
  }
  invalid("/series", "expected \"principal\" or \"discrete\"");
}

Outcome do_verify_geometry(const Json& p) {
  std::vector<std::string> algebras;
  if (const auto a = opt<std::string>(p, "algebra")) {
    algebras.push_back(*a);
  } else {
    algebras = {"sl2r", "sl2c_real"};
  }
  const int samples = opt<int>(p, "samples").value_or(1000);
  const auto seed = opt<std::uint64_t>(p, "seed").value_or(0);
  const int seeds = std::max(1, opt<int>(p, "seeds").value_or(1));
  std::int64_t lambda = 1;
  if (p.contains("lambda")) {
    const auto& l = p.at("lambda");
    if (l.size() != 1) invalid("/lambda", "expected a single coordinate", ErrorCode::DimensionMismatch);
    lambda = l[0].get<std::int64_t>();
    if (lambda < 0) invalid("/lambda", "must be dominant (>= 0)", ErrorCode::NotDominant);
  }

  Json reports = Json::array();
  bool passed = true;
  for (const auto& name : algebras) {
    const NumericLieAlgebra alg = [&] {
      try {
        return build_numeric_algebra(name);
      } catch (const Error& e) {
        throw Error(e.code(), e.what(), "/algebra");
      }
    }();
    const double xi_value =
        p.contains("xi") ? p.at("xi").get<double>() : static_cast<double>(lambda) + alg.rho_c();
    const auto degeneracy = degeneracy_rank(alg, coadjoint_point(alg, xi_value));
    const double structure = structure_residuals(alg).max();
    for (int s = 0; s < seeds; ++s) {
      const auto report = verify_pullback_identity(alg, xi_value, samples, seed + static_cast<std::uint64_t>(s));
      Json r = to_json(report);
      r["kernel_dim"] = degeneracy.kernel_dim;
      r["fibre_dim"] = degeneracy.fibre_dim;
      r["orbit_kernel_dim"] = degeneracy.orbit_kernel_dim;
      r["xi"] = xi_value;
      r["structure_residual"] = structure;
      const bool ok = report.max_abs_error < tolerance::kSampled && degeneracy.kernel_dim == degeneracy.fibre_dim &&
                      degeneracy.orbit_kernel_dim == 0 && structure < tolerance::kStructure;
      r["passed"] = ok;
      passed = passed && ok;
      reports.push_back(std::move(r));
    }
  }
  Json out;
  out["reports"] = std::move(reports);
  out["passed"] = passed;
  return {out, passed};
}

/// Dominant weights with simple coordinates in [0, bound] and torus
/// coordinates in [-bound, bound].
std::vector<Weight> dominant_box(const RootDatum& rd, std::int64_t bound) {
  std::vector<Weight> out;
  Weight w(rd.rank());
  const auto lo = [&](std::size_t i) { return rd.is_simple_index(i) ? std::int64_t{0} : -bound; };
  for (std::size_t i = 0; i < rd.rank(); ++i) w[i] = lo(i);
  for (;;) {
    out.push_back(w);
    std::size_t i = 0;
    while (i < rd.rank() && w[i] == bound) {
      w[i] = lo(i);
      ++i;
    }
    if (i == rd.rank()) break;
    ++w[i];
  }
  return out;
}

Outcome do_verify_qr(const Json& p) {
  const auto g = require_group(resolve_group(p));
  const auto& rd = g.k_datum();
  const auto bound = opt<std::int64_t>(p, "bound").value_or(2);
  const auto max_factors = opt<std::int64_t>(p, "max-factors").value_or(3);
  const auto lambda_bound = opt<std::int64_t>(p, "lambda-bound").value_or(bound * max_factors);
  if (max_factors < 1) invalid("/max-factors", "must be at least 1", ErrorCode::InvalidArgument);

  const auto weights = dominant_box(rd, bound);
  const auto targets = dominant_box(rd, lambda_bound);
  std::vector<FormalCharacter> characters;
  std::vector<std::int64_t> dims;
  for (const auto& w : weights) {
    characters.push_back(irreducible_character(rd, w));
    dims.push_back(weyl_dimension(rd, w));
  }

  std::int64_t instances = 0;
  std::int64_t checks = 0;
  Json failures = Json::array();
  const auto fail = [&](const OrbitProductManifold& n, const std::string& what) {
    if (failures.size() < 20) {
      Json f = to_json(n);
      f["check"] = what;
      failures.push_back(std::move(f));
    }
  };

  // Nondecreasing index tuples enumerate each multiset of factors once.
  std::vector<std::size_t> idx;
  const std::function<void(std::size_t)> sweep = [&](std::size_t start) {
    if (!idx.empty()) {
      ++instances;
      std::vector<Weight> factors;
      FormalCharacter chi = characters[idx.front()];
      std::int64_t dim_product = 1;
      for (std::size_t k = 0; k < idx.size(); ++k) {
        factors.push_back(weights[idx[k]]);
        dim_product *= dims[idx[k]];
        if (k > 0) chi = character_product(chi, characters[idx[k]]);
      }
      const OrbitProductManifold n(rd, factors);
      const RepRingElement qk = quantize_compact(n);
      const KTheoryClass qg = quantize_induced(g, n);
      const RepRingElement by_characters = decompose_character(rd, chi);

      ++checks;
      if (!(qg == dirac_induct(g, qk))) fail(n, "Q_G == DInd(Q_K)");
      ++checks;
      if (dimension(rd, qk) != dim_product) fail(n, "dimension identity");
      for (const auto& lambda : targets) {
        ++checks;
        const auto m = reduce_rg(g, qg, lambda);
        if (m != multiplicity_rk(rd, qk, lambda) || m != by_characters.coeff(lambda) || m < 0)
          fail(n, "R_G^lambda at " + lambda.to_string());
        if (g.kind() == RealFormKind::EqualRankDiscreteSeries) {
          const Weight mu = lambda + rd.rho_c();
          std::int64_t ds = 0;
          try {
            ds = discrete_series_multiplicity(g, qg, mu);
          } catch (const Error& e) {
            if (e.code() != ErrorCode::NotRegular) throw;
            continue;
          }
          ++checks;
          const int sign = (g.d() / 2) % 2 == 0 ? 1 : -1;
          if (ds != sign * m) fail(n, "discrete-series multiplicity at " + mu.to_string());
        }
      }
    }
    if (static_cast<std::int64_t>(idx.size()) == max_factors) return;
    for (std::size_t i = start; i < weights.size(); ++i) {
      idx.push_back(i);
      sweep(i);
      idx.pop_back();
    }
  };
  sweep(0);

  Json out;
  out["group"] = g.name();
  out["bound"] = bound;
  out["max_factors"] = max_factors;
  out["lambda_bound"] = lambda_bound;
  out["instances"] = instances;
  out["checks"] = checks;
  out["failures"] = failures;
  out["passed"] = failures.empty();
  return {out, failures.empty()};
}

using Handler = Outcome (*)(const Json&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h{
      {"describe", do_describe},       {"quantize", do_quantize},
      {"induce", do_induce},           {"reduce", do_reduce},
      {"orbit-method", do_orbit_method}, {"label", do_label},
      {"verify-geometry", do_verify_geometry}, {"verify-qr", do_verify_qr},
  };
  return h;
}

// ---------------------------------------------------------------------------
// Table rendering

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_record_array(const Json& v) {
  return v.is_array() && !v.empty() &&
         std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_object(); });
}

void render_records(std::ostringstream& os, const Json& arr, const std::string& indent) {
  std::vector<std::string> cols;
  for (const auto& rec : arr)
    for (const auto& [k, _] : rec.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
  for (const auto& rec : arr) {
    std::vector<std::string> row;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto it = rec.find(cols[c]);
      row.push_back(it == rec.end() ? "" : scalar_text(*it));
      width[c] = std::max(width[c], row.back().size());
    }
    rows.push_back(std::move(row));
  }
  const auto line = [&](const std::vector<std::string>& cells) {
    os << indent;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      os << cells[c];
      if (c + 1 < cells.size()) os << std::string(width[c] - cells[c].size() + 2, ' ');
    }
    os << '\n';
  };
  line(cols);
  for (const auto& r : rows) line(r);
}

void render_object(std::ostringstream& os, const Json& obj, const std::string& indent) {
  for (const auto& [k, v] : obj.items()) {
    if (v.is_object()) {
      os << indent << k << ":\n";
      render_object(os, v, indent + "  ");
    } else if (is_record_array(v)) {
      os << indent << k << ":\n";
      render_records(os, v, indent + "  ");
    } else if (v.is_array() && v.empty()) {
      os << indent << k << ": (none)\n";
    } else {
      os << indent << k << ": " << scalar_text(v) << '\n';
    }
  }
}

}  // namespace

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> v = [] {
    std::vector<std::string> out;
    for (const auto& [k, _] : schemas()) out.push_back(k);
    return out;
  }();
  return v;
}

void validate(const CommandRequest& req) {
  const auto it = schemas().find(req.verb);
  if (it == schemas().end()) invalid("/verb", "unknown verb '" + req.verb + "'");
  if (req.output_format != "json" && req.output_format != "table")
    invalid("/format", "expected \"json\" or \"table\"");
  if (!req.params.is_object()) invalid("/", "parameters must be a JSON object");
  const Schema& schema = it->second;
  for (const auto& [key, value] : req.params.items()) {
    const auto f = schema.find(key);
    if (f == schema.end()) invalid("/" + key, "not a parameter of '" + req.verb + "'");
    check_field(key, f->second, value);
  }
  for (const auto& [key, spec] : schema)
    if (spec.required && !req.params.contains(key)) invalid("/" + key, "missing required parameter");
}

CommandResult run(const CommandRequest& req) {
  CommandResult result;
  const auto error_json = [](std::string_view code, const std::string& message, const std::string& field) {
    Json e;
    e["error"] = code;
    e["message"] = message;
    if (!field.empty()) e["field"] = field;
    return e.dump() + "\n";
  };
  try {
    validate(req);
    const Outcome o = handlers().at(req.verb)(req.params);
    result.out = req.output_format == "table" ? render_table(o.body) : o.body.dump() + "\n";
    result.exit_code = o.verified ? kExitOk : kExitVerificationFailed;
  } catch (const Error& e) {
    result.exit_code = kExitInvalid;
    result.err = error_json(to_string(e.code()), e.what(), e.field());
  } catch (const nlohmann::json::exception& e) {
    result.exit_code = kExitInvalid;
    result.err = error_json("ParseError", e.what(), "");
  } catch (const std::exception& e) {
    result.exit_code = kExitInvalid;
    result.err = error_json("InternalError", e.what(), "");
  }
  return result;
}

std::string render_table(const Json& j) {
  std::ostringstream os;
  if (j.is_object()) {
    render_object(os, j, "");
  } else if (is_record_array(j)) {
    render_records(os, j, "");
  } else {
    os << scalar_text(j) << '\n';
  }
  return os.str();
}

namespace {

std::int64_t parse_int(std::string_view tok, const std::string& field) {
  std::string s(tok);
  s.erase(0, s.find_first_not_of(" \t"));
  s.erase(s.find_last_not_of(" \t") + 1);
  if (s.empty()) invalid(field, "empty coordinate");
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    invalid(field, "'" + s + "' is not an integer");
  }
  if (used != s.size()) invalid(field, "'" + s + "' is not an integer");
  return v;
}

Json parse_json_text(std::string_view text, const std::string& field) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception&) {
    invalid(field, "malformed JSON '" + std::string(text) + "'");
  }
}

}  // namespace

Json parse_weight_text(std::string_view text, const std::string& field) {
  if (!text.empty() && text.front() == '[') return parse_json_text(text, field);
  Json arr = Json::array();
  std::size_t pos = 0;
  for (;;) {
    const auto next = text.find(',', pos);
    arr.push_back(parse_int(text.substr(pos, next == std::string_view::npos ? text.npos : next - pos), field));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return arr;
}

Json parse_factors_text(std::string_view text, const std::string& field) {
  if (!text.empty() && text.front() == '[') return parse_json_text(text, field);
  Json arr = Json::array();
  std::size_t pos = 0;
  for (std::size_t i = 0;; ++i) {
    const auto next = text.find(';', pos);
    arr.push_back(parse_weight_text(text.substr(pos, next == std::string_view::npos ? text.npos : next - pos),
                                    field + "/" + std::to_string(i)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return arr;
}

}  // namespace orbitq::cli
