#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "cli/command.hpp"
#include "orbitq/error.hpp"

namespace {

using orbitq::Json;
using orbitq::cli::CommandRequest;

enum class Kind { Text, Integer, Number, Weight, Factors };

struct Flag {
  const char* name;
  Kind kind;
  const char* help;
};

constexpr Flag kFlags[] = {
    {"cartan", Kind::Text, "Cartan type of K, e.g. A1, A2, B2, A1xT1"},
    {"group", Kind::Text, "group preset: SL2C, SL3C, SL2R, SU21"},
    {"group-kind", Kind::Text, "complex | discrete | generic (with --cartan)"},
    {"d", Kind::Integer, "dim G/K"},
    {"factors", Kind::Factors, "orbit factors: \"2;3\", \"1,0;0,1\" or JSON"},
    {"lambda", Kind::Weight, "dominant weight: \"3\", \"1,1\" or JSON"},
    {"mu", Kind::Weight, "discrete-series parameter"},
    {"series", Kind::Text, "principal | discrete"},
    {"bound", Kind::Integer, "factor coordinate bound for verify-qr"},
    {"max-factors", Kind::Integer, "largest number of orbit factors for verify-qr"},
    {"lambda-bound", Kind::Integer, "coordinate bound on lambda for verify-qr"},
    {"seed", Kind::Integer, "RNG seed (default $ORBITQ_SEED or 0)"},
    {"seeds", Kind::Integer, "number of consecutive seeds for verify-geometry"},
    {"samples", Kind::Integer, "samples per seed for verify-geometry"},
    {"algebra", Kind::Text, "su2 | sl2r | sl2c_real"},
    {"xi", Kind::Number, "torus coordinate of xi (overrides --lambda)"},
};

int fail(orbitq::ErrorCode code, const std::string& message, const std::string& field) {
  Json e;
  e["error"] = orbitq::to_string(code);
  e["message"] = message;
  if (!field.empty()) e["field"] = field;
  std::cerr << e.dump() << '\n';
  return orbitq::cli::kExitInvalid;
}

std::int64_t parse_integer(const std::string& text, const std::string& field) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size())
    throw orbitq::Error(orbitq::ErrorCode::ParseError, field + ": '" + text + "' is not an integer", field);
  return v;
}

double parse_number(const std::string& text, const std::string& field) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size())
    throw orbitq::Error(orbitq::ErrorCode::ParseError, field + ": '" + text + "' is not a number", field);
  return v;
}

Json flag_value(const Flag& f, const std::string& text) {
  const std::string field = std::string("/") + f.name;
  switch (f.kind) {
    case Kind::Text: return text;
    case Kind::Integer: return parse_integer(text, field);
    case Kind::Number: return parse_number(text, field);
    case Kind::Weight: return orbitq::cli::parse_weight_text(text, field);
    case Kind::Factors: return orbitq::cli::parse_factors_text(text, field);
  }
  return text;
}

Json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw orbitq::Error(orbitq::ErrorCode::InvalidArgument, "cannot open config file '" + path + "'", "/config");
  try {
    Json j = Json::parse(in);
    if (!j.is_object()) throw orbitq::Error(orbitq::ErrorCode::ParseError, "config must be a JSON object", "/config");
    return j;
  } catch (const nlohmann::json::parse_error& e) {
    throw orbitq::Error(orbitq::ErrorCode::ParseError, std::string("config: ") + e.what(), "/config");
  }
}

bool verb_takes_seed(const std::string& verb) { return verb == "verify-geometry"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantisation of induced manifolds, Dirac induction and orbit-method checks"};
  app.require_subcommand(1);

  std::map<std::string, std::string> given;
  for (const auto& f : kFlags) app.add_option(std::string("--") + f.name, given[f.name], f.help);
  std::string format;
  std::string config;
  app.add_option("--format", format, "json (default) | table");
  app.add_option("--config", config, "JSON file of parameters; flags override it");

  const std::map<std::string, std::string> descriptions{
      {"describe", "root datum and group descriptor summary"},
      {"quantize", "Q_K of a product of coadjoint orbits"},
      {"induce", "Q_G of the induced manifold in K_d(C*_r G)"},
      {"reduce", "multiplicity of lambda in Q_K, and R_G^lambda with a group"},
      {"orbit-method", "K-theory class of the induced coadjoint orbit"},
      {"label", "principal-series or discrete-series label"},
      {"verify-geometry", "pullback identity and presymplectic degeneracy checks"},
      {"verify-qr", "sweep of the quantisation-reduction identities"},
  };
  for (const auto& verb : orbitq::cli::verbs()) app.add_subcommand(verb, descriptions.at(verb))->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(orbitq::ErrorCode::ParseError, e.what(), "");
  }

  CommandRequest req;
  req.verb = app.get_subcommands().front()->get_name();
  try {
    Json params = config.empty() ? Json::object() : load_config(config);
    if (const auto it = params.find("format"); it != params.end()) {
      if (!it->is_string()) throw orbitq::Error(orbitq::ErrorCode::ParseError, "format must be a string", "/format");
      req.output_format = it->get<std::string>();
      params.erase(it);
    }
    if (!format.empty()) req.output_format = format;
    for (const auto& f : kFlags)
      if (app.count(std::string("--") + f.name) > 0) params[f.name] = flag_value(f, given[f.name]);
    if (verb_takes_seed(req.verb) && !params.contains("seed")) {
      if (const char* env = std::getenv("ORBITQ_SEED"); env != nullptr && *env != '\0')
        params["seed"] = parse_integer(env, "/seed");
    }
    req.params = std::move(params);
  } catch (const orbitq::Error& e) {
    return fail(e.code(), e.what(), e.field());
  }

  const auto result = orbitq::cli::run(req);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
