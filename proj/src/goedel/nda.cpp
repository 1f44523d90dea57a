#include <algorithm>
#include <sstream>

#include "dynfield/error.hpp"
#include "dynfield/goedel.hpp"

namespace dynfield::goedel {

using symbolic::GsRule;
using symbolic::Pattern;

Rect::Rect(Rational x_lo, Rational x_hi, Rational y_lo, Rational y_hi)
    : x_lo_(std::move(x_lo)), x_hi_(std::move(x_hi)), y_lo_(std::move(y_lo)),
      y_hi_(std::move(y_hi)) {
  const bool ok = 0 <= x_lo_ && x_lo_ < x_hi_ && x_hi_ <= 1 && 0 <= y_lo_ &&
                  y_lo_ < y_hi_ && y_hi_ <= 1;
  if (!ok) {
    throw InvalidArgument("rect: requires 0 <= lo < hi <= 1 on both axes, got " +
                          to_string());
  }
}

Rect Rect::unit() { return Rect(0, 1, 0, 1); }

bool Rect::contains(const Point& p) const {
  return x_lo_ <= p.x && p.x < x_hi_ && y_lo_ <= p.y && p.y < y_hi_;
}

bool Rect::contains(const Rect& r) const {
  return x_lo_ <= r.x_lo_ && r.x_hi_ <= x_hi_ && y_lo_ <= r.y_lo_ && r.y_hi_ <= y_hi_;
}

bool Rect::overlaps(const Rect& r) const {
  return x_lo_ < r.x_hi_ && r.x_lo_ < x_hi_ && y_lo_ < r.y_hi_ && r.y_lo_ < y_hi_;
}

Point Rect::center() const { return Point{(x_lo_ + x_hi_) / 2, (y_lo_ + y_hi_) / 2}; }

std::string Rect::to_string() const {
  return "[" + display(x_lo_) + ", " + display(x_hi_) + ") x [" +
         display(y_lo_) + ", " + display(y_hi_) + ")";
}

Point AffineBranch::apply(const Point& p) const {
  return Point{a_x + lambda_x * p.x, a_y + lambda_y * p.y};
}

Rect AffineBranch::image(const Rect& r) const {
  return Rect(a_x + lambda_x * r.x_lo(), a_x + lambda_x * r.x_hi(),
              a_y + lambda_y * r.y_lo(), a_y + lambda_y * r.y_hi());
}

NdaMachine::NdaMachine(std::vector<AffineBranch> branches, GoedelCoding coding)
    : branches_(std::move(branches)), coding_(std::move(coding)) {
  for (const auto& b : branches_) {
    if (b.lambda_x <= 0 || b.lambda_y <= 0) {
      throw InvalidArgument("nda: branch '" + b.label + "' needs positive lambdas");
    }
    // Rect's constructor rejects images leaving the unit square.
    try {
      (void)b.image(b.cell);
    } catch (const InvalidArgument&) {
      throw InvalidArgument("nda: image of branch '" + b.label +
                            "' leaves the unit square");
    }
  }
  for (std::size_t i = 0; i < branches_.size(); ++i) {
    for (std::size_t j = i + 1; j < branches_.size(); ++j) {
      if (branches_[i].cell.overlaps(branches_[j].cell)) {
        throw InvalidArgument("nda: cells of branches '" + branches_[i].label +
                              "' and '" + branches_[j].label +
                              "' are not pairwise disjoint");
      }
    }
  }
}

std::optional<std::size_t> NdaMachine::branch_at(const Point& p) const {
  for (std::size_t i = 0; i < branches_.size(); ++i) {
    if (branches_[i].cell.contains(p)) return i;
  }
  return std::nullopt;
}

Point nda_step(const NdaMachine& m, const Point& p) {
  if (auto i = m.branch_at(p)) return m.branches()[*i].apply(p);
  return p;
}

std::vector<DodDoeEntry> dod_doe_report(const NdaMachine& m) {
  std::vector<DodDoeEntry> out;
  out.reserve(m.branches().size());
  for (const auto& b : m.branches()) {
    out.push_back({b.cell, b.image(b.cell), b.label, b.kind});
  }
  return out;
}

namespace {

// All concrete words matching a pattern, wildcards ranging over `choices`.
std::vector<Word> expand(const Pattern& pattern, const std::vector<Symbol>& choices) {
  std::vector<Word> words{Word{}};
  for (const auto& p : pattern) {
    std::vector<Word> next;
    const std::vector<Symbol> options = p ? std::vector<Symbol>{*p} : choices;
    for (const auto& w : words) {
      for (Symbol s : options) {
        next.push_back(w);
        next.back().push_back(s);
      }
    }
    words = std::move(next);
  }
  return words;
}

// Moves the dot of the replacement word so that the rule reads as a pure
// substitution of stack/input prefixes.
void absorb_shift(const GsRule& rule, Word& stack, Word& input) {
  stack = rule.doe_left;
  input = rule.doe_right;
  for (int k = 0; k < rule.shift; ++k) {
    if (input.empty()) {
      throw InexpressibleRule("rule '" + rule.label +
                              "' shifts symbols from outside its domain of "
                              "dependence across the dot");
    }
    stack.insert(stack.begin(), input.front());
    input.erase(input.begin());
  }
  for (int k = 0; k > rule.shift; --k) {
    if (stack.empty()) {
      throw InexpressibleRule("rule '" + rule.label +
                              "' shifts symbols from outside its domain of "
                              "dependence across the dot");
    }
    input.insert(input.begin(), stack.front());
    stack.erase(stack.begin());
  }
}

}  // namespace

NdaMachine compile_nda(const symbolic::GeneralizedShift& gs, const GoedelCoding& coding) {
  if (!(*gs.alphabet() == *coding.alphabet())) {
    throw InvalidArgument("compile: coding and shift use different alphabets");
  }
  std::vector<AffineBranch> branches;
  for (const auto& rule : gs.rules()) {
    Word stack_after, input_after;
    absorb_shift(rule, stack_after, input_after);
    const Rational lambda_x = power_of(
        coding.stack_base(),
        static_cast<long>(rule.dod_left.size()) - static_cast<long>(stack_after.size()));
    const Rational lambda_y = power_of(
        coding.input_base(),
        static_cast<long>(rule.dod_right.size()) - static_cast<long>(input_after.size()));
    const Rational stack_doe = coding.encode_stack(stack_after);
    const Rational input_doe = coding.encode_input(input_after);

    for (const auto& dod_stack : expand(rule.dod_left, coding.stack_symbols())) {
      for (const auto& dod_input : expand(rule.dod_right, coding.input_symbols())) {
        AffineBranch b{cylinder_rect(dod_stack, dod_input, coding),
                       stack_doe - lambda_x * coding.encode_stack(dod_stack),
                       input_doe - lambda_y * coding.encode_input(dod_input),
                       lambda_x,
                       lambda_y,
                       rule.label,
                       rule.kind};
        branches.push_back(std::move(b));
      }
    }
  }
  return NdaMachine(std::move(branches), coding);
}

}  // namespace dynfield::goedel
