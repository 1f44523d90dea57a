#include <algorithm>

#include "dynfield/error.hpp"
#include "dynfield/symbolic.hpp"

namespace dynfield::symbolic {

namespace {

bool side_matches(const Pattern& pattern, const DottedSequence& s, bool left) {
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    const std::optional<Symbol> present = left ? s.stack_at(i) : s.input_at(i);
    if (!present) return false;
    if (pattern[i] && *pattern[i] != *present) return false;
  }
  return true;
}

bool sides_compatible(const Pattern& a, const Pattern& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] && b[i] && *a[i] != *b[i]) return false;
  }
  return true;
}

Symbol padding(const Alphabet& alphabet) {
  if (auto b = alphabet.blank()) return *b;
  throw InvalidArgument("generalized shift: dot moved past the end of a "
                        "sequence over an alphabet without blank");
}

void check_members(const Alphabet& alphabet, const GsRule& rule) {
  auto check = [&](Symbol s) {
    if (!alphabet.contains(s)) {
      throw InvalidArgument("generalized shift: rule '" + rule.label +
                            "' uses a symbol outside the alphabet");
    }
  };
  for (const auto& p : rule.dod_left) if (p) check(*p);
  for (const auto& p : rule.dod_right) if (p) check(*p);
  for (Symbol s : rule.doe_left) check(s);
  for (Symbol s : rule.doe_right) check(s);
}

DottedSequence apply(const GsRule& rule, const DottedSequence& s) {
  const Alphabet& alphabet = *s.alphabet();
  Word stack = s.stack();
  Word input = s.input();
  stack.erase(stack.begin(),
              stack.begin() + static_cast<std::ptrdiff_t>(
                                  std::min(rule.dod_left.size(), stack.size())));
  input.erase(input.begin(),
              input.begin() + static_cast<std::ptrdiff_t>(
                                  std::min(rule.dod_right.size(), input.size())));
  stack.insert(stack.begin(), rule.doe_left.begin(), rule.doe_left.end());
  input.insert(input.begin(), rule.doe_right.begin(), rule.doe_right.end());

  for (int k = 0; k < rule.shift; ++k) {
    Symbol moved = input.empty() ? padding(alphabet) : input.front();
    if (!input.empty()) input.erase(input.begin());
    stack.insert(stack.begin(), moved);
  }
  for (int k = 0; k > rule.shift; --k) {
    Symbol moved = stack.empty() ? padding(alphabet) : stack.front();
    if (!stack.empty()) stack.erase(stack.begin());
    input.insert(input.begin(), moved);
  }
  return DottedSequence(s.alphabet(), std::move(stack), std::move(input));
}

}  // namespace

bool GsRule::matches(const DottedSequence& s) const {
  return side_matches(dod_left, s, true) && side_matches(dod_right, s, false);
}

bool patterns_overlap(const GsRule& a, const GsRule& b) {
  return sides_compatible(a.dod_left, b.dod_left) &&
         sides_compatible(a.dod_right, b.dod_right);
}

GeneralizedShift::GeneralizedShift(AlphabetPtr alphabet, std::vector<GsRule> rules,
                                   NoRuleMeaning no_rule)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)), no_rule_(no_rule) {
  if (!alphabet_) throw InvalidArgument("generalized shift: missing alphabet");
  for (const auto& r : rules_) {
    if (r.dod_left.size() + r.dod_right.size() == 0) {
      throw InvalidArgument("generalized shift: rule '" + r.label +
                            "' has an empty domain of dependence (d >= 1)");
    }
    check_members(*alphabet_, r);
  }
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    for (std::size_t j = i + 1; j < rules_.size(); ++j) {
      if (patterns_overlap(rules_[i], rules_[j])) {
        throw InvalidArgument("generalized shift: domains of dependence of rules '" +
                              rules_[i].label + "' and '" + rules_[j].label +
                              "' overlap (rule DoDs must be pairwise disjoint)");
      }
    }
  }
}

std::optional<std::size_t> GeneralizedShift::match(const DottedSequence& s) const {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (!rules_[i].matches(s)) continue;
    if (found) {
      throw AmbiguousMatch("rules '" + rules_[*found].label + "' and '" +
                           rules_[i].label + "' both match " + s.to_string());
    }
    found = i;
  }
  return found;
}

std::optional<GsStep> gs_step(const GeneralizedShift& gs, const DottedSequence& s) {
  const auto rule = gs.match(s);
  if (!rule) return std::nullopt;
  return GsStep{apply(gs.rules()[*rule], s), *rule};
}

std::string_view outcome_name(Outcome outcome) {
  switch (outcome) {
    case Outcome::kAccept: return "accept";
    case Outcome::kReject: return "reject";
    case Outcome::kHalt: return "halt";
    case Outcome::kBudgetExhausted: return "budget-exhausted";
  }
  return "unknown";
}

Trace gs_run(const GeneralizedShift& gs, const DottedSequence& s0,
             std::size_t max_steps) {
  Trace trace{{}, Outcome::kBudgetExhausted};
  DottedSequence current = s0;
  for (std::size_t t = 0;; ++t) {
    const auto rule = gs.match(current);
    if (!rule) {
      if (current.empty()) {
        trace.outcome = Outcome::kAccept;
      } else {
        trace.outcome = gs.no_rule_meaning() == NoRuleMeaning::kReject
                            ? Outcome::kReject
                            : Outcome::kHalt;
      }
      trace.entries.push_back({t, current, std::string(outcome_name(trace.outcome))});
      return trace;
    }
    if (t == max_steps) {
      trace.outcome = Outcome::kBudgetExhausted;
      trace.entries.push_back({t, current, std::string(outcome_name(trace.outcome))});
      return trace;
    }
    const GsRule& r = gs.rules()[*rule];
    DottedSequence next = apply(r, current);
    trace.entries.push_back({t, std::move(current), r.label});
    current = std::move(next);
  }
}

}  // namespace dynfield::symbolic
