#include <doctest.h>

#include "cli/command.hpp"
#include "orbitq/orbitq.hpp"

using namespace orbitq;
using cli::CommandRequest;

namespace {

cli::CommandResult run(const std::string& verb, Json params, const std::string& format = "json") {
  return cli::run(CommandRequest{verb, std::move(params), format});
}

Json parse_out(const cli::CommandResult& r) { return Json::parse(r.out); }

}  // namespace

TEST_CASE("orbit-method on SL(2,C)") {
  const auto r = run("orbit-method", {{"group", "SL2C"}, {"lambda", {3}}});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"degree\":1,\"terms\":[{\"weight\":[3],\"coeff\":1}]}\n");
  CHECK(r.err.empty());
  const auto same = run("orbit-method", {{"cartan", "A1"}, {"group-kind", "complex"}, {"d", 3}, {"lambda", {3}}});
  CHECK(same.out == r.out);
}

TEST_CASE("quantize on A1 with factors (2),(3)") {
  const auto r = run("quantize", {{"cartan", "A1"}, {"factors", {{2}, {3}}}});
  REQUIRE(r.exit_code == 0);
  const Json j = parse_out(r);
  const auto rd = build_root_datum("A1");
  CHECK(rep_ring_from_json(rd, j.at("terms")) == RepRingElement(rd, {{Weight{1}, 1}, {Weight{3}, 1}, {Weight{5}, 1}}));
  // The manifold part of the output re-parses as an input.
  const auto n = orbit_product_from_json(j);
  CHECK(n.factors() == std::vector<Weight>{Weight{2}, Weight{3}});
}

TEST_CASE("label rejects principal series on non-complex groups") {
  for (const char* g : {"SL2R", "SU21"}) {
    Json params{{"group", g}, {"series", "principal"}, {"lambda", g == std::string("SL2R") ? Json{0} : Json{0, 0}}};
    const auto r = run("label", params);
    CHECK(r.exit_code == 1);
    const Json e = Json::parse(r.err);
    CHECK(e.at("error") == "WrongRealForm");
    CHECK(e.at("field") == "/group-kind");
    CHECK(r.out.empty());
  }
}

TEST_CASE("label outputs") {
  auto r = run("label", {{"group", "SL2C"}, {"lambda", {3}}});
  REQUIRE(r.exit_code == 0);
  Json j = parse_out(r);
  CHECK(series_label_from_json(j) == SeriesLabel{SeriesLabel::Series::Principal, Weight{4}, 1});
  CHECK(ktheory_class_from_json(j.at("class")) == KTheoryClass::generator(1, Weight{3}));

  r = run("label", {{"group", "SL2R"}, {"mu", {2}}});
  REQUIRE(r.exit_code == 0);
  j = parse_out(r);
  CHECK(series_label_from_json(j) == SeriesLabel{SeriesLabel::Series::Discrete, Weight{2}, -1});
  CHECK(ktheory_class_from_json(j.at("class")) == -1 * KTheoryClass::generator(0, Weight{2}));

  r = run("label", {{"group", "SL2R"}, {"mu", {0}}});
  CHECK(r.exit_code == 1);
  CHECK(Json::parse(r.err).at("error") == "NotRegular");
}

TEST_CASE("induce, reduce and describe") {
  auto r = run("induce", {{"group", "SL2C"}, {"factors", {{2}, {3}}}});
  REQUIRE(r.exit_code == 0);
  CHECK(ktheory_class_from_json(parse_out(r)) == KTheoryClass(1, {{Weight{1}, 1}, {Weight{3}, 1}, {Weight{5}, 1}}));

  r = run("reduce", {{"cartan", "A1"}, {"factors", {{2}, {3}}}, {"lambda", {5}}});
  REQUIRE(r.exit_code == 0);
  CHECK(parse_out(r).at("multiplicity") == 1);
  CHECK(parse_out(r).at("chamber_warning") == false);
  CHECK_FALSE(parse_out(r).contains("reduce_rg"));

  r = run("reduce", {{"group", "SL2C"}, {"factors", {{2}, {3}}}, {"lambda", {2}}});
  REQUIRE(r.exit_code == 0);
  CHECK(parse_out(r).at("multiplicity") == 0);
  CHECK(parse_out(r).at("reduce_rg") == 0);

  r = run("describe", {{"group", "SU21"}});
  REQUIRE(r.exit_code == 0);
  const Json d = parse_out(r);
  CHECK(d.at("group").at("d") == 4);
  CHECK(d.at("root_datum").at("weyl_order") == 2);
  CHECK(d.at("root_datum").at("cartan") == "A1xT1");
}

TEST_CASE("schema violations carry field paths") {
  struct Case {
    std::string verb;
    Json params;
    std::string field;
  };
  const std::vector<Case> cases{
      {"quantize", {{"cartan", "A1"}}, "/factors"},
      {"quantize", {{"cartan", "A1"}, {"factors", {{2}, {"x"}}}}, "/factors/1/0"},
      {"quantize", {{"cartan", "A1"}, {"factors", {{-2}}}}, "/factors/0"},
      {"quantize", {{"cartan", "A1"}, {"factors", {{2}}}, {"mu", {1}}}, "/mu"},
      {"quantize", {{"cartan", "Q7"}, {"factors", {{2}}}}, "/cartan"},
      {"quantize", {{"cartan", 3}, {"factors", {{2}}}}, "/cartan"},
      {"reduce", {{"cartan", "A2"}, {"factors", {{1, 0}}}, {"lambda", {1}}}, "/lambda"},
      {"orbit-method", {{"group", "SL2C"}}, "/lambda"},
      {"orbit-method", {{"group", "SL9C"}, {"lambda", {1}}}, "/group"},
      {"verify-geometry", {{"algebra", "so3"}}, "/algebra"},
      {"verify-geometry", {{"samples", -1}}, "/samples"},
      {"verify-qr", {{"group", "SL2C"}, {"bound", "big"}}, "/bound"},
      {"nonsense", Json::object(), "/verb"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.verb);
    CAPTURE(c.params.dump());
    const auto r = run(c.verb, c.params);
    CHECK(r.exit_code == 1);
    REQUIRE_FALSE(r.err.empty());
    CHECK(Json::parse(r.err).at("field") == c.field);
  }
  CHECK(run("describe", {{"cartan", "A1"}}, "xml").exit_code == 1);
  CHECK(run("describe", Json::array()).exit_code == 1);
}

TEST_CASE("verify verbs succeed on small inputs and are deterministic") {
  const auto a = run("verify-geometry", {{"samples", 200}, {"seed", 4}, {"seeds", 2}});
  CHECK(a.exit_code == 0);
  CHECK(parse_out(a).at("passed") == true);
  CHECK(parse_out(a).at("reports").size() == 4);
  const auto b = run("verify-geometry", {{"samples", 200}, {"seed", 4}, {"seeds", 2}});
  CHECK(a.out == b.out);

  const auto q = run("verify-qr", {{"group", "SL2R"}, {"bound", 3}, {"max-factors", 2}});
  CHECK(q.exit_code == 0);
  CHECK(parse_out(q).at("failures").empty());
  CHECK(parse_out(q).at("instances").get<int>() > 0);
  CHECK(run("verify-qr", {{"group", "SL2R"}, {"bound", 3}, {"max-factors", 2}}).out == q.out);
}

TEST_CASE("table output is derived from the JSON model") {
  const auto r = run("quantize", {{"cartan", "A1"}, {"factors", {{2}, {3}}}}, "table");
  REQUIRE(r.exit_code == 0);
  const Json j = parse_out(run("quantize", {{"cartan", "A1"}, {"factors", {{2}, {3}}}}));
  CHECK(r.out == cli::render_table(j));
  CHECK(r.out.find("weight") != std::string::npos);
  CHECK(r.out.find("[5]") != std::string::npos);
}

TEST_CASE("flag text parsers") {
  CHECK(cli::parse_weight_text("3", "/lambda") == Json{3});
  CHECK(cli::parse_weight_text("1,-2", "/lambda") == Json{1, -2});
  CHECK(cli::parse_weight_text("[1, 2]", "/lambda") == Json{1, 2});
  CHECK(cli::parse_factors_text("2;3", "/factors") == Json{{2}, {3}});
  CHECK(cli::parse_factors_text("1,0;0,1", "/factors") == Json{{1, 0}, {0, 1}});
  CHECK(cli::parse_factors_text("[[1],[2]]", "/factors") == Json{{1}, {2}});
  try {
    (void)cli::parse_factors_text("1;x", "/factors");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(e.field() == "/factors/1");
  }
  CHECK_THROWS_AS((void)cli::parse_weight_text("[1,", "/lambda"), Error);
}

TEST_CASE("JSON round trips") {
  const auto rd = build_root_datum("A2");
  const RepRingElement x(rd, {{Weight{1, 0}, 2}, {Weight{0, 3}, -1}});
  CHECK(rep_ring_from_json(rd, to_json(x)) == x);
  const KTheoryClass y(1, {{Weight{2, 2}, 5}});
  CHECK(ktheory_class_from_json(to_json(y)) == y);
  const SeriesLabel l{SeriesLabel::Series::Discrete, Weight{1, 3}, -1};
  CHECK(series_label_from_json(to_json(l)) == l);
  const OrbitProductManifold n(rd, {Weight{1, 1}, Weight{0, 2}});
  const auto back = orbit_product_from_json(to_json(n));
  CHECK(back.factors() == n.factors());
  CHECK(back.root_datum() == rd);
  CHECK(weight_from_json(to_json(Weight{-4, 7})) == Weight{-4, 7});
  try {
    (void)ktheory_class_from_json(Json{{"degree", 1}, {"terms", {{{"weight", {1}}, {"coeff", "x"}}}}});
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(e.field() == "/terms/0/coeff");
  }
}
