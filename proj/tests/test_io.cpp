#include <doctest.h>

#include "dynfield/error.hpp"
#include "dynfield/field_automaton.hpp"
#include "dynfield/svg.hpp"
#include "support.hpp"

using namespace testing;
using io::json;

TEST_SUITE("io") {

TEST_CASE("rationals") {
  CHECK(to_string(Q("6/8")) == "3/4");
  CHECK(to_string(Rational(3)) == "3/1");
  CHECK(display(Rational(3)) == "3");
  CHECK(Q("-2") == -2);
  CHECK(power_of(4, -2) == Q("1/16"));
  CHECK_THROWS_AS(Q("1/0"), InvalidArgument);
  CHECK_THROWS_AS(Q("0.5"), InvalidArgument);
  CHECK_THROWS_AS(Q("x/2"), InvalidArgument);
}

TEST_CASE("NDA round trip") {
  Example ex;
  const json j = io::to_json(ex.nda);
  const auto back = io::nda_from_json(j);
  CHECK(back.branches() == ex.nda.branches());
  CHECK(io::to_json(back) == j);
  CHECK(j["branches"][0]["a_x"] == "-1/16");
}

TEST_CASE("orbit, density and report round trips") {
  Example ex;
  const auto orbit =
      dfa::dfa_orbit(ex.nda, dfa::RectMacrostate::uniform(rect("3/4", "1", "1/4", "3/8")), 5);
  CHECK(io::orbit_from_json(io::to_json(orbit)) == orbit);

  const auto d = dfa::GridDensity::rasterize(orbit[2], 16);
  CHECK(io::density_from_json(io::to_json(d)) == d);
  const auto bytes = io::density_to_binary(d);
  CHECK(bytes.size() == 8 + 8 * 256);
  CHECK(io::density_from_binary(bytes) == d);
  CHECK_THROWS_AS(io::density_from_binary(bytes.substr(0, 100)), InvalidArgument);

  amari::ConstantFieldConfig cfg;
  cfg.f = amari::Activation(amari::ActivationKind::kSigmoid, {10.0, 0.5});
  const auto report = amari::find_fixed_points(cfg);
  CHECK(io::report_from_json(json::parse(io::to_json(report).dump())) == report);
  const auto cfg2 = io::field_config_from_json(io::to_json(cfg));
  CHECK(cfg2.f.params().beta == 10.0);
  CHECK(amari::find_fixed_points(cfg2) == report);
}

TEST_CASE("coding round trip") {
  Example ex;
  const auto back = io::coding_from_json(io::to_json(ex.coding), ex.def.alphabet());
  CHECK(back.stack_symbols() == ex.coding.stack_symbols());
  CHECK(back.input_symbols() == ex.coding.input_symbols());
}

TEST_CASE("operator export") {
  Example ex;
  const auto j = io::to_json(dfa::build_transfer_operator(ex.nda, 16));
  CHECK(j["n"] == 16);
  CHECK(j["entries"].size() > 256);
}

TEST_CASE("trace records") {
  Example ex;
  const auto trace = symbolic::gs_run(ex.gs, ex.seq("S", "NP V NP"), 10);
  const auto rec = io::trace_record(trace.entries[1]);
  CHECK(rec["stack"] == json::array({"NP", "VP"}));
  CHECK(rec["input"] == json::array({"NP", "V", "NP"}));
  CHECK(rec["op"] == "attach");
  const auto jsonl = io::trace_jsonl(trace);
  CHECK(std::count(jsonl.begin(), jsonl.end(), '\n') == 6);
}

TEST_CASE("malformed definitions name the problem") {
  auto message = [](const json& j) -> std::string {
    try {
      io::load_definition(j);
    } catch (const InvalidArgument& e) {
      return e.what();
    }
    return "";
  };
  CHECK(message(json::object()).find("'type'") != std::string::npos);
  CHECK(message(json{{"type", "pda"}}).find("type") != std::string::npos);
  json g = io::read_json_file(data_path("grammar.json"));
  g["rules"][0].erase("lhs");
  CHECK(message(g).find("'lhs'") != std::string::npos);
  g = io::read_json_file(data_path("grammar.json"));
  g["coding"]["stack"] = json::array({"NP", "Q"});
  CHECK_FALSE(message(g).empty());
  json tm = io::read_json_file(data_path("increment.json"));
  tm["rules"][0]["move"] = "N";
  CHECK(message(tm).find("move") != std::string::npos);
  CHECK_THROWS_AS(io::read_json_file(data_path("missing.json")), InvalidArgument);
}

TEST_CASE("definitions choose the start sequence") {
  const auto g = load("grammar.json");
  CHECK(g.initial(std::nullopt, "NP V NP").to_string() == "S . NP V NP");
  CHECK(g.initial(std::string("VP"), "V").to_string() == "VP . V");
  const auto tm = load("increment.json");
  CHECK(tm.initial(std::nullopt, "1 0").to_string() == "carry . 1 0");
}

TEST_CASE("SVG output is deterministic") {
  Example ex;
  const auto orbit =
      dfa::dfa_orbit(ex.nda, dfa::RectMacrostate::uniform(rect("3/4", "1", "1/4", "3/8")), 5);
  const auto a = svg::render_orbit(ex.nda, orbit);
  CHECK(a == svg::render_orbit(Example{}.nda, orbit));
  CHECK(a.rfind("<svg", 0) == 0);
  CHECK(a.find("t = 5, u = 1") != std::string::npos);
  const auto dod = svg::render_partition(ex.nda, svg::Panel::kDomains);
  CHECK(dod == svg::render_partition(ex.nda, svg::Panel::kDomains));
  CHECK(dod.find("#999999") != std::string::npos);
  CHECK(dod.find("#000000") != std::string::npos);
  CHECK(dod != svg::render_partition(ex.nda, svg::Panel::kEffects));
}

}  // TEST_SUITE
