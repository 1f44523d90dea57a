#include <fstream>
#include <sstream>

#include "dynfield/error.hpp"
#include "dynfield/io.hpp"

namespace dynfield::io {

using symbolic::ContextFreeGrammar;
using symbolic::TuringMachine;

namespace {

const json& field(const json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidArgument(std::string(where) + ": missing field '" + key + "'");
  }
  return j.at(key);
}

std::vector<std::string> strings(const json& j, const char* key, const char* where) {
  const json& v = field(j, key, where);
  if (!v.is_array()) {
    throw InvalidArgument(std::string(where) + ": '" + key + "' must be a list");
  }
  return v.get<std::vector<std::string>>();
}

ContextFreeGrammar load_grammar(const json& j) {
  const json& symbols = field(j, "symbols", "grammar");
  auto nonterminals = strings(symbols, "nonterminals", "grammar symbols");
  auto terminals = strings(symbols, "terminals", "grammar symbols");
  std::vector<symbolic::CfgRule> rules;
  for (const auto& r : field(j, "rules", "grammar")) {
    auto lhs = field(r, "lhs", "grammar rule").get<std::string>();
    auto rhs = strings(r, "rhs", "grammar rule");
    rules.push_back({std::move(lhs), std::move(rhs), r.value("name", std::string{})});
  }
  auto start = field(j, "start", "grammar").get<std::string>();
  return ContextFreeGrammar(std::move(nonterminals), std::move(terminals), std::move(rules),
                            std::move(start));
}

TuringMachine load_machine(const json& j) {
  const json& symbols = field(j, "symbols", "turing machine");
  symbolic::TmDefinition d;
  d.states = strings(symbols, "states", "turing machine symbols");
  d.tape_symbols = strings(symbols, "tape", "turing machine symbols");
  d.blank = field(symbols, "blank", "turing machine symbols").get<std::string>();
  d.input_symbols = symbols.contains("input") ? strings(symbols, "input", "turing machine")
                                              : std::vector<std::string>{};
  for (const auto& r : field(j, "rules", "turing machine")) {
    const auto move = field(r, "move", "turing machine rule").get<std::string>();
    if (move != "L" && move != "R") {
      throw InvalidArgument("turing machine rule: move must be \"L\" or \"R\"");
    }
    symbolic::TmRule rule;
    rule.state = field(r, "state", "turing machine rule").get<std::string>();
    rule.read = field(r, "read", "turing machine rule").get<std::string>();
    rule.next = field(r, "next", "turing machine rule").get<std::string>();
    rule.write = field(r, "write", "turing machine rule").get<std::string>();
    rule.move = move == "L" ? symbolic::Move::kLeft : symbolic::Move::kRight;
    d.rules.push_back(std::move(rule));
  }
  d.initial = field(j, "initial", "turing machine").get<std::string>();
  d.halting = j.contains("halting") ? strings(j, "halting", "turing machine")
                                    : std::vector<std::string>{};
  return TuringMachine(std::move(d));
}

}  // namespace

const symbolic::AlphabetPtr& Definition::alphabet() const {
  return std::visit([](const auto& m) -> const symbolic::AlphabetPtr& { return m.alphabet(); },
                    machine);
}

symbolic::GeneralizedShift Definition::shift() const {
  if (const auto* g = std::get_if<ContextFreeGrammar>(&machine)) {
    return symbolic::cfg_to_gs(*g, attach);
  }
  return symbolic::tm_to_gs(std::get<TuringMachine>(machine));
}

symbolic::DottedSequence Definition::initial(const std::optional<std::string>& stack,
                                             std::string_view tape) const {
  const auto& a = *alphabet();
  symbolic::Word input = a.parse_word(tape);
  if (const auto* g = std::get_if<ContextFreeGrammar>(&machine)) {
    symbolic::Word top = stack ? a.parse_word(*stack) : symbolic::Word{a.symbol(g->start())};
    return symbolic::DottedSequence(alphabet(), std::move(top), std::move(input));
  }
  const auto& tm = std::get<TuringMachine>(machine);
  if (!stack) return tm.start(input);
  return symbolic::DottedSequence(alphabet(), a.parse_word(*stack), std::move(input));
}

Definition load_definition(const json& j) {
  try {
    const auto type = field(j, "type", "definition").get<std::string>();
    std::optional<Definition> def;
    if (type == "cfg") {
      ContextFreeGrammar g = load_grammar(j);
      std::vector<std::string> attach =
          j.contains("attach") ? strings(j, "attach", "grammar") : g.terminals();
      def.emplace(Definition{std::move(g), std::nullopt, std::move(attach)});
    } else if (type == "tm") {
      def.emplace(Definition{load_machine(j), std::nullopt, {}});
    } else {
      throw InvalidArgument("definition: type must be \"cfg\" or \"tm\"");
    }
    if (j.contains("coding")) def->coding = coding_from_json(j.at("coding"), def->alphabet());
    return std::move(*def);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("definition: ") + e.what());
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidArgument("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << text;
}

json trace_record(const symbolic::TraceEntry& entry) {
  const auto& a = *entry.state.alphabet();
  json stack = json::array();
  for (auto s : entry.state.stack()) stack.push_back(a.name(s));
  json input = json::array();
  for (auto s : entry.state.input()) input.push_back(a.name(s));
  return json{{"t", entry.t}, {"stack", stack}, {"input", input}, {"op", entry.op}};
}

std::string trace_jsonl(const symbolic::Trace& trace) {
  std::string out;
  for (const auto& e : trace.entries) out += trace_record(e).dump() + "\n";
  return out;
}

namespace {

std::size_t display_width(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}

std::string pad(std::string s, std::size_t width) {
  const std::size_t w = display_width(s);
  if (w < width) s.append(width - w, ' ');
  return s;
}

}  // namespace

std::string trace_table(const symbolic::Trace& trace) {
  std::vector<std::string> states;
  std::size_t width = display_width("state");
  for (const auto& e : trace.entries) {
    states.push_back(e.state.to_string());
    width = std::max(width, display_width(states.back()));
  }
  std::ostringstream out;
  out << "time  " << pad("state", width) << "  operation\n";
  for (std::size_t i = 0; i < trace.entries.size(); ++i) {
    out << pad(std::to_string(trace.entries[i].t), 4) << "  " << pad(states[i], width)
        << "  " << trace.entries[i].op << "\n";
  }
  return out.str();
}

}  // namespace dynfield::io
