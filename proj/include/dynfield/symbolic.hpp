#pragma once

// Turing machines, dotted sequences, cylinder sets and generalized shifts.
//
// A dotted sequence ... a(-2) a(-1) . a(0) a(1) ... is stored as two finite
// words: the stack (left half, top-first, so a(-1) comes first) and the input
// (right half in reading order). Everything beyond the stored part is blank
// padding when the alphabet has a blank, and void otherwise.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dynfield::symbolic {

struct Symbol {
  std::uint32_t id = 0;

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

using Word = std::vector<Symbol>;

class Alphabet {
 public:
  Alphabet(std::vector<std::string> names,
           std::optional<std::string> blank = std::nullopt);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Symbol> blank() const noexcept { return blank_; }

  bool contains(Symbol s) const noexcept { return s.id < names_.size(); }
  std::optional<Symbol> find(std::string_view name) const;
  /// Throws InvalidArgument for unknown names.
  Symbol symbol(std::string_view name) const;
  const std::string& name(Symbol s) const;

  Word word(const std::vector<std::string>& names) const;
  /// Whitespace-separated symbol names; "" and "ε" give the empty word.
  Word parse_word(std::string_view text) const;
  /// Names joined by single spaces; "ε" for the empty word.
  std::string format(const Word& word) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_ && a.blank_ == b.blank_;
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::uint32_t, std::less<>> index_;
  std::optional<Symbol> blank_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

class DottedSequence {
 public:
  /// Validates membership and strips trailing blanks.
  DottedSequence(AlphabetPtr alphabet, Word stack, Word input);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const Word& stack() const noexcept { return stack_; }
  const Word& input() const noexcept { return input_; }
  bool empty() const noexcept { return stack_.empty() && input_.empty(); }

  /// Symbol at distance i from the dot; blank padding past the stored part,
  /// nullopt when the alphabet has no blank.
  std::optional<Symbol> stack_at(std::size_t i) const;
  std::optional<Symbol> input_at(std::size_t i) const;

  /// Tape order, as in "VP NP . NP V NP".
  std::string to_string() const;

  friend bool operator==(const DottedSequence& a, const DottedSequence& b);

 private:
  AlphabetPtr alphabet_;
  Word stack_;
  Word input_;
};

// ---------------------------------------------------------------------------
// Turing machines

enum class Move { kLeft, kRight };

struct TmRule {
  std::string state;
  std::string read;
  std::string next;
  std::string write;
  Move move = Move::kRight;
};

struct TmDefinition {
  std::vector<std::string> states;
  std::vector<std::string> tape_symbols;
  std::string blank;
  std::vector<std::string> input_symbols;
  std::vector<TmRule> rules;
  std::string initial;
  std::vector<std::string> halting;
};

struct Transition {
  Symbol next;
  Symbol write;
  Move move;
};

/// Deterministic machine over the joint alphabet A = N u Q (tape symbols
/// first, then states, in definition order).
class TuringMachine {
 public:
  explicit TuringMachine(TmDefinition definition);

  const TmDefinition& definition() const noexcept { return definition_; }
  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  Symbol blank() const noexcept { return blank_; }
  Symbol initial() const noexcept { return initial_; }
  const std::vector<Symbol>& states() const noexcept { return states_; }
  const std::vector<Symbol>& tape_symbols() const noexcept { return tape_symbols_; }

  bool is_state(Symbol s) const;
  bool is_tape_symbol(Symbol s) const;
  bool is_halting(Symbol s) const;
  const Transition* lookup(Symbol state, Symbol read) const;
  const std::map<std::pair<Symbol, Symbol>, Transition>& table() const noexcept {
    return table_;
  }

  /// Initial state description: q0 . tape
  DottedSequence start(const Word& tape) const;
  /// The tape contents of a state description, leftmost stored cell first.
  Word tape(const DottedSequence& s) const;
  std::string label(Symbol state, Symbol read) const;

 private:
  TmDefinition definition_;
  AlphabetPtr alphabet_;
  Symbol blank_;
  Symbol initial_;
  std::vector<Symbol> states_;
  std::vector<Symbol> tape_symbols_;
  std::set<Symbol> state_set_;
  std::set<Symbol> tape_set_;
  std::set<Symbol> halting_;
  std::map<std::pair<Symbol, Symbol>, Transition> table_;
};

/// One machine-table step. nullopt means Halted (halting state or no entry).
/// Throws MalformedDescription unless the dot is flanked by (state, symbol).
std::optional<DottedSequence> tm_step(const TuringMachine& tm,
                                      const DottedSequence& s);

// ---------------------------------------------------------------------------
// Generalized shifts

/// nullopt matches any symbol (including blank padding).
using PatternSymbol = std::optional<Symbol>;
using Pattern = std::vector<PatternSymbol>;

enum class RuleKind { kPredict, kAttach, kMachine, kOther };

/// Replaces the dotted word dod_left . dod_right by doe_left . doe_right and
/// then moves the dot by `shift` cells (positive = rightwards). Left words
/// are top-first.
struct GsRule {
  Pattern dod_left;
  Pattern dod_right;
  Word doe_left;
  Word doe_right;
  int shift = 0;
  std::string label;
  RuleKind kind = RuleKind::kOther;

  bool matches(const DottedSequence& s) const;
};

/// What an unmatched, non-empty sequence means.
enum class NoRuleMeaning { kReject, kHalt };

class GeneralizedShift {
 public:
  /// Throws InvalidArgument if a rule is malformed or two DoDs overlap.
  GeneralizedShift(AlphabetPtr alphabet, std::vector<GsRule> rules,
                   NoRuleMeaning no_rule = NoRuleMeaning::kReject);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const std::vector<GsRule>& rules() const noexcept { return rules_; }
  NoRuleMeaning no_rule_meaning() const noexcept { return no_rule_; }

  /// Index of the unique matching rule. Throws AmbiguousMatch if two match.
  std::optional<std::size_t> match(const DottedSequence& s) const;

 private:
  AlphabetPtr alphabet_;
  std::vector<GsRule> rules_;
  NoRuleMeaning no_rule_;
};

/// True if some dotted sequence matches both patterns.
bool patterns_overlap(const GsRule& a, const GsRule& b);

struct GsStep {
  DottedSequence next;
  std::size_t rule;
};

/// nullopt = NoRule.
std::optional<GsStep> gs_step(const GeneralizedShift& gs, const DottedSequence& s);

enum class Outcome { kAccept, kReject, kHalt, kBudgetExhausted };

std::string_view outcome_name(Outcome outcome);

struct TraceEntry {
  std::size_t t;
  DottedSequence state;
  /// Label of the rule applied at t, or the outcome name on the last entry.
  std::string op;
};

struct Trace {
  std::vector<TraceEntry> entries;
  Outcome outcome;
};

Trace gs_run(const GeneralizedShift& gs, const DottedSequence& s0,
             std::size_t max_steps);

GeneralizedShift tm_to_gs(const TuringMachine& tm);

// ---------------------------------------------------------------------------
// Context-free grammars

struct CfgRule {
  std::string lhs;
  std::vector<std::string> rhs;
  /// Optional display name used in "predict (name)" labels.
  std::string name;
};

class ContextFreeGrammar {
 public:
  ContextFreeGrammar(std::vector<std::string> nonterminals,
                     std::vector<std::string> terminals,
                     std::vector<CfgRule> rules, std::string start);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const std::vector<std::string>& nonterminals() const noexcept { return nonterminals_; }
  const std::vector<std::string>& terminals() const noexcept { return terminals_; }
  const std::vector<CfgRule>& rules() const noexcept { return rules_; }
  const std::string& start() const noexcept { return start_; }

 private:
  std::vector<std::string> nonterminals_;
  std::vector<std::string> terminals_;
  std::vector<CfgRule> rules_;
  std::string start_;
  AlphabetPtr alphabet_;
};

/// Predict-attach shift-free parser. Rules whose left-hand side is listed in
/// `attach_terminals` are treated as lexical and omitted.
GeneralizedShift cfg_to_gs(const ContextFreeGrammar& g,
                           const std::vector<std::string>& attach_terminals);
GeneralizedShift cfg_to_gs(const ContextFreeGrammar& g);

// ---------------------------------------------------------------------------
// Cylinder sets

/// The pair of cylinders fixing `left` (top-first) just left of the dot and
/// `right` just right of it.
struct CylinderSpec {
  AlphabetPtr alphabet;
  Word left;
  Word right;

  bool is_full() const noexcept { return left.empty() && right.empty(); }
  bool contains(const DottedSequence& s) const;
};

CylinderSpec cylinder(Word left, Word right, AlphabetPtr alphabet);

}  // namespace dynfield::symbolic
