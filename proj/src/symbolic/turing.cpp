#include <algorithm>

#include "dynfield/error.hpp"
#include "dynfield/symbolic.hpp"

namespace dynfield::symbolic {

namespace {

std::vector<std::string> joint_names(const TmDefinition& d) {
  std::vector<std::string> names = d.tape_symbols;
  names.insert(names.end(), d.states.begin(), d.states.end());
  return names;
}

bool listed(const std::vector<std::string>& list, const std::string& name) {
  return std::find(list.begin(), list.end(), name) != list.end();
}

}  // namespace

TuringMachine::TuringMachine(TmDefinition definition)
    : definition_(std::move(definition)),
      alphabet_(std::make_shared<const Alphabet>(joint_names(definition_),
                                                 definition_.blank)) {
  const TmDefinition& d = definition_;
  if (d.states.empty()) throw InvalidArgument("turing machine: Q must be nonempty");
  for (const auto& name : d.input_symbols) {
    if (!listed(d.tape_symbols, name) || name == d.blank) {
      throw InvalidArgument("turing machine: input symbol '" + name +
                            "' violates T subset of N \\ {b}");
    }
  }
  if (!listed(d.states, d.initial)) {
    throw InvalidArgument("turing machine: initial state '" + d.initial + "' not in Q");
  }
  for (const auto& name : d.tape_symbols) {
    tape_symbols_.push_back(alphabet_->symbol(name));
  }
  for (const auto& name : d.states) states_.push_back(alphabet_->symbol(name));
  state_set_.insert(states_.begin(), states_.end());
  tape_set_.insert(tape_symbols_.begin(), tape_symbols_.end());
  for (const auto& name : d.halting) {
    if (!listed(d.states, name)) {
      throw InvalidArgument("turing machine: halting state '" + name +
                            "' violates F subset of Q");
    }
    halting_.insert(alphabet_->symbol(name));
  }
  blank_ = *alphabet_->blank();
  initial_ = alphabet_->symbol(d.initial);

  for (const auto& rule : d.rules) {
    auto require = [&](const std::string& name, bool state, const char* role) {
      if (!listed(state ? d.states : d.tape_symbols, name)) {
        throw InvalidArgument(std::string("turing machine: rule ") + role + " '" +
                              name + "' is not in " + (state ? "Q" : "N"));
      }
      return alphabet_->symbol(name);
    };
    const Symbol q = require(rule.state, true, "state");
    const Symbol a = require(rule.read, false, "read symbol");
    const Transition t{require(rule.next, true, "next state"),
                       require(rule.write, false, "written symbol"), rule.move};
    if (halting_.count(q)) {
      throw InvalidArgument("turing machine: halting state '" + rule.state +
                            "' must not have table entries");
    }
    if (!table_.emplace(std::pair{q, a}, t).second) {
      throw InvalidArgument("turing machine: duplicate table entry for (" +
                            rule.state + ", " + rule.read + ")");
    }
  }
}

bool TuringMachine::is_state(Symbol s) const { return state_set_.count(s) > 0; }
bool TuringMachine::is_tape_symbol(Symbol s) const { return tape_set_.count(s) > 0; }
bool TuringMachine::is_halting(Symbol s) const { return halting_.count(s) > 0; }

const Transition* TuringMachine::lookup(Symbol state, Symbol read) const {
  auto it = table_.find({state, read});
  return it == table_.end() ? nullptr : &it->second;
}

DottedSequence TuringMachine::start(const Word& tape) const {
  for (Symbol s : tape) {
    if (!is_tape_symbol(s)) {
      throw InvalidArgument("turing machine: initial tape holds a non-tape symbol");
    }
  }
  return DottedSequence(alphabet_, Word{initial_}, tape);
}

Word TuringMachine::tape(const DottedSequence& s) const {
  Word out;
  if (s.stack().size() > 1) out.assign(s.stack().rbegin(), s.stack().rend() - 1);
  out.insert(out.end(), s.input().begin(), s.input().end());
  return out;
}

std::string TuringMachine::label(Symbol state, Symbol read) const {
  const Transition* t = lookup(state, read);
  if (!t) return "halt";
  return "delta(" + alphabet_->name(state) + "," + alphabet_->name(read) + ")=(" +
         alphabet_->name(t->next) + "," + alphabet_->name(t->write) + "," +
         (t->move == Move::kLeft ? "L" : "R") + ")";
}

std::optional<DottedSequence> tm_step(const TuringMachine& tm, const DottedSequence& s) {
  if (s.stack().empty() || !tm.is_state(s.stack().front())) {
    throw MalformedDescription("state description " + s.to_string() +
                               ": no control state left of the dot");
  }
  const Symbol q = s.stack().front();
  const Symbol a = *s.input_at(0);
  if (!tm.is_tape_symbol(a)) {
    throw MalformedDescription("state description " + s.to_string() +
                               ": no tape symbol right of the dot");
  }
  if (tm.is_halting(q)) return std::nullopt;
  const Transition* t = tm.lookup(q, a);
  if (!t) return std::nullopt;

  const Word& stack = s.stack();
  const Word& input = s.input();
  Word rest_input(input.begin() + (input.empty() ? 0 : 1), input.end());
  if (t->move == Move::kRight) {
    Word new_stack{t->next, t->write};
    new_stack.insert(new_stack.end(), stack.begin() + 1, stack.end());
    return DottedSequence(s.alphabet(), std::move(new_stack), std::move(rest_input));
  }
  const Symbol left = *s.stack_at(1);
  Word new_stack{t->next};
  if (stack.size() > 2) new_stack.insert(new_stack.end(), stack.begin() + 2, stack.end());
  Word new_input{left, t->write};
  new_input.insert(new_input.end(), rest_input.begin(), rest_input.end());
  return DottedSequence(s.alphabet(), std::move(new_stack), std::move(new_input));
}

GeneralizedShift tm_to_gs(const TuringMachine& tm) {
  std::vector<GsRule> rules;
  for (const auto& [key, t] : tm.table()) {
    const auto [q, a] = key;
    if (t.move == Move::kRight) {
      // q . a  ->  a' . q'  then the dot moves right: a' q' .
      rules.push_back(GsRule{{q}, {a}, {t.write}, {t.next}, +1, tm.label(q, a),
                             RuleKind::kMachine});
      continue;
    }
    // c q . a  ->  q' c . a'  then the dot moves left: q' . c a'
    for (Symbol c : tm.tape_symbols()) {
      rules.push_back(GsRule{{q, c}, {a}, {c, t.next}, {t.write}, -1,
                             tm.label(q, a), RuleKind::kMachine});
    }
  }
  return GeneralizedShift(tm.alphabet(), std::move(rules), NoRuleMeaning::kHalt);
}

}  // namespace dynfield::symbolic
