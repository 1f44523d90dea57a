#include <doctest.h>

#include "dynfield/error.hpp"
#include "support.hpp"

using namespace testing;
using symbolic::Outcome;

namespace {

std::vector<std::string> names(const symbolic::Alphabet& a, const Word& w) {
  std::vector<std::string> out;
  for (auto s : w) out.push_back(a.name(s));
  return out;
}

}  // namespace

TEST_SUITE("symbolic") {

TEST_CASE("alphabet parses and formats words") {
  symbolic::Alphabet a({"b", "x", "y"}, "b");
  CHECK(a.format(a.parse_word("x  y x")) == "x y x");
  CHECK(a.parse_word("ε").empty());
  CHECK(a.format({}) == "ε");
  CHECK_THROWS_AS(a.parse_word("x z"), InvalidArgument);
  CHECK_THROWS_AS(symbolic::Alphabet({"x", "x"}), InvalidArgument);
}

TEST_CASE("dotted sequences strip trailing blanks and pad with blank") {
  auto a = std::make_shared<const symbolic::Alphabet>(
      std::vector<std::string>{"b", "x"}, std::optional<std::string>{"b"});
  DottedSequence s(a, a->parse_word("x b b"), a->parse_word("b x b"));
  CHECK(s.stack().size() == 1);
  CHECK(s.input().size() == 2);
  CHECK(s.stack_at(5) == a->blank());
  CHECK(s.to_string() == "x . b x");

  auto v = std::make_shared<const symbolic::Alphabet>(std::vector<std::string>{"x"});
  DottedSequence e(v, {}, {});
  CHECK_FALSE(e.input_at(0).has_value());
  CHECK(e.to_string() == "ε . ε");
}

TEST_CASE("example grammar steps") {
  Example ex;
  const auto& a = *ex.def.alphabet();

  auto s1 = symbolic::gs_step(ex.gs, ex.seq("S", "NP V NP"));
  REQUIRE(s1);
  CHECK(names(a, s1->next.stack()) == std::vector<std::string>{"NP", "VP"});
  CHECK(names(a, s1->next.input()) == std::vector<std::string>{"NP", "V", "NP"});
  CHECK(ex.gs.rules()[s1->rule].label == "predict (S -> NP VP)");

  auto s2 = symbolic::gs_step(ex.gs, s1->next);
  REQUIRE(s2);
  CHECK(s2->next == ex.seq("VP", "V NP"));
  CHECK(ex.gs.rules()[s2->rule].label == "attach");

  CHECK_FALSE(symbolic::gs_step(ex.gs, ex.seq("", "")));
  CHECK_FALSE(symbolic::gs_step(ex.gs, ex.seq("NP", "V")));
}

TEST_CASE("example grammar runs") {
  Example ex;
  const auto ok = symbolic::gs_run(ex.gs, ex.seq("S", "NP V NP"), 100);
  CHECK(ok.outcome == Outcome::kAccept);
  REQUIRE(ok.entries.size() == 6);
  const std::vector<std::string> ops{"predict (S -> NP VP)", "attach", "predict (VP -> V NP)",
                                     "attach", "attach", "accept"};
  for (std::size_t t = 0; t < ops.size(); ++t) {
    CHECK(ok.entries[t].t == t);
    CHECK(ok.entries[t].op == ops[t]);
  }
  CHECK(ok.entries[3].state.to_string() == "NP V . V NP");

  CHECK(symbolic::gs_run(ex.gs, ex.seq("S", "V NP"), 100).outcome == Outcome::kReject);
  CHECK(symbolic::gs_run(ex.gs, ex.seq("", ""), 0).outcome == Outcome::kAccept);
  const auto cut = symbolic::gs_run(ex.gs, ex.seq("S", "NP V NP"), 3);
  CHECK(cut.outcome == Outcome::kBudgetExhausted);
  CHECK(cut.entries.size() == 4);
  CHECK(cut.entries.back().op == "budget-exhausted");
}

TEST_CASE("overlapping rules are rejected") {
  Example ex;
  auto rules = ex.gs.rules();
  rules.push_back(rules.front());
  CHECK_THROWS_AS(symbolic::GeneralizedShift(ex.def.alphabet(), rules), InvalidArgument);

  // a wildcard on the input side overlaps an explicit symbol
  auto wild = rules.front();
  wild.dod_right = {std::nullopt};
  CHECK(symbolic::patterns_overlap(wild, rules.front()));
  const auto& attach_np = ex.gs.rules()[2];
  const auto& attach_v = ex.gs.rules()[3];
  CHECK_FALSE(symbolic::patterns_overlap(attach_np, attach_v));
}

TEST_CASE("rules must have a nonempty domain of dependence") {
  Example ex;
  symbolic::GsRule empty;
  CHECK_THROWS_AS(symbolic::GeneralizedShift(ex.def.alphabet(), {empty}), InvalidArgument);
}

TEST_CASE("wildcard rules consume any present symbol") {
  auto a = std::make_shared<const symbolic::Alphabet>(std::vector<std::string>{"x", "y"});
  symbolic::GsRule r{{a->symbol("x")}, {std::nullopt}, {}, {a->symbol("y")}, 0, "w"};
  symbolic::GeneralizedShift gs(a, {r});
  auto step = symbolic::gs_step(gs, DottedSequence(a, a->parse_word("x"), a->parse_word("x y")));
  REQUIRE(step);
  CHECK(step->next.to_string() == "ε . y y");
  // no symbol to match the wildcard without a blank
  CHECK_FALSE(symbolic::gs_step(gs, DottedSequence(a, a->parse_word("x"), {})));
}

TEST_CASE("machine table step") {
  symbolic::TuringMachine tm = std::get<symbolic::TuringMachine>(load("two_state.json").machine);
  const auto& a = *tm.alphabet();
  auto s = tm.start(a.parse_word("a a"));
  CHECK(s.to_string() == "1 . a a");
  auto next = symbolic::tm_step(tm, s);
  REQUIRE(next);
  CHECK(next->to_string() == "b 2 . a");
  CHECK_FALSE(symbolic::tm_step(tm, *next));  // halting state

  DottedSequence bad(tm.alphabet(), a.parse_word("a"), a.parse_word("a"));
  CHECK_THROWS_AS(symbolic::tm_step(tm, bad), MalformedDescription);
}

TEST_CASE("machine definitions are validated") {
  symbolic::TmDefinition d;
  d.states = {"q"};
  d.tape_symbols = {"b", "x"};
  d.blank = "b";
  d.initial = "q";
  d.rules = {{"q", "x", "q", "x", symbolic::Move::kRight},
             {"q", "x", "q", "b", symbolic::Move::kLeft}};
  CHECK_THROWS_AS(symbolic::TuringMachine{d}, InvalidArgument);  // duplicate entry
  d.rules.pop_back();
  d.input_symbols = {"b"};
  CHECK_THROWS_AS(symbolic::TuringMachine{d}, InvalidArgument);  // blank as input
  d.input_symbols = {};
  d.initial = "p";
  CHECK_THROWS_AS(symbolic::TuringMachine{d}, InvalidArgument);
}

TEST_CASE("binary increment machine") {
  const auto def = load("increment.json");
  const auto& tm = std::get<symbolic::TuringMachine>(def.machine);
  const auto trace = symbolic::gs_run(def.shift(), def.initial(std::nullopt, "1 1 1"), 100);
  CHECK(trace.outcome == Outcome::kHalt);
  const auto& last = trace.entries.back().state;
  CHECK(tm.alphabet()->format(tm.tape(last)) == "0 0 0 1");
  CHECK(trace.entries.size() == 9);
}

TEST_CASE("machine emulation agrees with the table and a direct tape simulator") {
  std::mt19937_64 rng(20251);
  for (int m = 0; m < 60; ++m) {
    const auto d = random_machine(rng);
    const symbolic::TuringMachine tm(d);
    const auto gs = symbolic::tm_to_gs(tm);
    std::vector<std::string> input;
    const int len = std::uniform_int_distribution<int>(0, 5)(rng);
    for (int i = 0; i < len; ++i) {
      input.push_back(d.tape_symbols[std::uniform_int_distribution<std::size_t>(
          0, d.tape_symbols.size() - 1)(rng)]);
    }
    TapeMachine oracle(d, input);
    auto s = tm.start(tm.alphabet()->word(input));
    for (int t = 0; t < 50; ++t) {
      const auto by_table = symbolic::tm_step(tm, s);
      const auto by_shift = symbolic::gs_step(gs, s);
      const bool moved = oracle.step();
      REQUIRE(by_table.has_value() == by_shift.has_value());
      REQUIRE(by_table.has_value() == moved);
      if (!by_table) break;
      REQUIRE(*by_table == by_shift->next);
      const auto [left, right] = oracle.halves();
      std::vector<std::string> stack{oracle.state};
      stack.insert(stack.end(), left.begin(), left.end());
      REQUIRE(names(*tm.alphabet(), by_table->stack()) == stack);
      REQUIRE(names(*tm.alphabet(), by_table->input()) == right);
      s = *by_table;
    }
  }
}

TEST_CASE("cylinders") {
  Example ex;
  const auto& a = *ex.def.alphabet();
  const auto c = symbolic::cylinder(a.parse_word("S"), a.parse_word("NP V NP"), ex.def.alphabet());
  CHECK(c.contains(ex.seq("S", "NP V NP")));
  CHECK(c.contains(ex.seq("S VP", "NP V NP V")));
  CHECK_FALSE(c.contains(ex.seq("S", "NP V")));
  CHECK_FALSE(c.contains(ex.seq("VP", "NP V NP")));
  CHECK(symbolic::cylinder({}, {}, ex.def.alphabet()).is_full());
}

}  // TEST_SUITE
