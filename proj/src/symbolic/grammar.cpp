#include <algorithm>
#include <set>

#include "dynfield/error.hpp"
#include "dynfield/symbolic.hpp"

namespace dynfield::symbolic {

namespace {

std::vector<std::string> concat(std::vector<std::string> a,
                                 const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string rule_text(const CfgRule& r) {
  std::string out = r.lhs + " ->";
  for (const auto& s : r.rhs) out += " " + s;
  return out;
}

}  // namespace

ContextFreeGrammar::ContextFreeGrammar(std::vector<std::string> nonterminals,
                                       std::vector<std::string> terminals,
                                       std::vector<CfgRule> rules, std::string start)
    : nonterminals_(std::move(nonterminals)),
      terminals_(std::move(terminals)),
      rules_(std::move(rules)),
      start_(std::move(start)),
      alphabet_(std::make_shared<const Alphabet>(concat(nonterminals_, terminals_))) {
  const std::set<std::string> nts(nonterminals_.begin(), nonterminals_.end());
  if (!nts.count(start_)) {
    throw InvalidArgument("grammar: start symbol '" + start_ + "' is not a nonterminal");
  }
  for (const auto& r : rules_) {
    if (!nts.count(r.lhs)) {
      throw InvalidArgument("grammar: rule '" + rule_text(r) +
                            "' has a left-hand side that is not a nonterminal");
    }
    if (r.rhs.empty()) {
      throw InvalidArgument("grammar: rule for '" + r.lhs +
                            "' has an empty right-hand side");
    }
    for (const auto& s : r.rhs) alphabet_->symbol(s);
  }
}

GeneralizedShift cfg_to_gs(const ContextFreeGrammar& g,
                           const std::vector<std::string>& attach_terminals) {
  const Alphabet& alphabet = *g.alphabet();
  const std::set<std::string> attached(attach_terminals.begin(), attach_terminals.end());
  std::vector<GsRule> rules;
  for (const auto& r : g.rules()) {
    if (attached.count(r.lhs)) continue;
    GsRule rule;
    rule.dod_left = {alphabet.symbol(r.lhs)};
    // The first right-hand-side symbol becomes the new stack top.
    rule.doe_left = alphabet.word(r.rhs);
    rule.label = "predict (" + (r.name.empty() ? rule_text(r) : r.name) + ")";
    rule.kind = RuleKind::kPredict;
    rules.push_back(std::move(rule));
  }
  for (const auto& z : attach_terminals) {
    const Symbol s = alphabet.symbol(z);
    GsRule rule;
    rule.dod_left = {s};
    rule.dod_right = {s};
    rule.label = "attach";
    rule.kind = RuleKind::kAttach;
    rules.push_back(std::move(rule));
  }
  return GeneralizedShift(g.alphabet(), std::move(rules), NoRuleMeaning::kReject);
}

GeneralizedShift cfg_to_gs(const ContextFreeGrammar& g) {
  return cfg_to_gs(g, g.terminals());
}

}  // namespace dynfield::symbolic
