#include "dynfield/error.hpp"
#include "dynfield/goedel.hpp"

namespace dynfield::goedel {

namespace {

std::vector<std::optional<std::uint32_t>> index_codes(const symbolic::Alphabet& alphabet,
                                                      const std::vector<Symbol>& order,
                                                      const char* side) {
  std::vector<std::optional<std::uint32_t>> codes(alphabet.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) {
    if (!alphabet.contains(order[i])) {
      throw InvalidArgument(std::string("goedel coding: ") + side +
                            " code list holds a symbol outside the alphabet");
    }
    if (codes[order[i].id]) {
      throw InvalidArgument(std::string("goedel coding: ") + side + " code of '" +
                            alphabet.name(order[i]) + "' is not injective");
    }
    codes[order[i].id] = i;
  }
  if (order.empty()) {
    throw InvalidArgument(std::string("goedel coding: ") + side +
                          " base must be positive");
  }
  if (auto blank = alphabet.blank(); blank && codes[blank->id] != std::uint32_t{0}) {
    throw InvalidArgument(std::string("goedel coding: blank must have ") + side +
                          " code 0");
  }
  return codes;
}

}  // namespace

GoedelCoding::GoedelCoding(AlphabetPtr alphabet, std::vector<Symbol> stack_symbols,
                           std::vector<Symbol> input_symbols)
    : alphabet_(std::move(alphabet)),
      stack_(std::move(stack_symbols)),
      input_(std::move(input_symbols)) {
  if (!alphabet_) throw InvalidArgument("goedel coding: missing alphabet");
  stack_code_ = index_codes(*alphabet_, stack_, "stack");
  input_code_ = index_codes(*alphabet_, input_, "input");
}

GoedelCoding GoedelCoding::from_names(AlphabetPtr alphabet,
                                      const std::vector<std::string>& stack_symbols,
                                      const std::vector<std::string>& input_symbols) {
  if (!alphabet) throw InvalidArgument("goedel coding: missing alphabet");
  Word stack = alphabet->word(stack_symbols);
  Word input = alphabet->word(input_symbols);
  return GoedelCoding(std::move(alphabet), std::move(stack), std::move(input));
}

std::optional<std::uint32_t> GoedelCoding::find_stack_code(Symbol s) const {
  return s.id < stack_code_.size() ? stack_code_[s.id] : std::nullopt;
}

std::optional<std::uint32_t> GoedelCoding::find_input_code(Symbol s) const {
  return s.id < input_code_.size() ? input_code_[s.id] : std::nullopt;
}

std::uint32_t GoedelCoding::stack_code(Symbol s) const {
  if (auto c = find_stack_code(s)) return *c;
  throw UncodedSymbol("symbol '" + (alphabet_->contains(s) ? alphabet_->name(s) : "?") +
                      "' has no stack code");
}

std::uint32_t GoedelCoding::input_code(Symbol s) const {
  if (auto c = find_input_code(s)) return *c;
  throw UncodedSymbol("symbol '" + (alphabet_->contains(s) ? alphabet_->name(s) : "?") +
                      "' has no input code");
}

namespace {

// Horner evaluation of 0.d1 d2 d3 ... in the given base.
template <typename CodeOf>
Rational fraction_digits(const Word& word, unsigned base, CodeOf code_of) {
  Rational value = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    value = (value + code_of(*it)) / base;
  }
  return value;
}

}  // namespace

Rational GoedelCoding::encode_stack(const Word& word) const {
  return fraction_digits(word, stack_base(), [this](Symbol s) { return stack_code(s); });
}

Rational GoedelCoding::encode_input(const Word& word) const {
  return fraction_digits(word, input_base(), [this](Symbol s) { return input_code(s); });
}

Point encode(const symbolic::DottedSequence& s, const GoedelCoding& coding) {
  return Point{coding.encode_stack(s.stack()), coding.encode_input(s.input())};
}

Rect cylinder_rect(const Word& stack, const Word& input, const GoedelCoding& coding) {
  const Rational x = coding.encode_stack(stack);
  const Rational y = coding.encode_input(input);
  return Rect(x, x + power_of(coding.stack_base(), -static_cast<long>(stack.size())), y,
              y + power_of(coding.input_base(), -static_cast<long>(input.size())));
}

Rect cylinder_rect(const symbolic::CylinderSpec& cylinder, const GoedelCoding& coding) {
  return cylinder_rect(cylinder.left, cylinder.right, coding);
}

std::vector<Rect> background_partition(const GoedelCoding& coding) {
  std::vector<Rect> cells;
  const Rational w = Rational(1) / coding.stack_base();
  const Rational h = Rational(1) / coding.input_base();
  for (unsigned i = 0; i < coding.stack_base(); ++i) {
    for (unsigned j = 0; j < coding.input_base(); ++j) {
      cells.emplace_back(w * i, w * (i + 1), h * j, h * (j + 1));
    }
  }
  return cells;
}

}  // namespace dynfield::goedel
