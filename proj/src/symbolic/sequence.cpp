#include <algorithm>
#include <cctype>
#include <sstream>

#include "dynfield/error.hpp"
#include "dynfield/symbolic.hpp"

namespace dynfield::symbolic {

namespace {

constexpr std::string_view kEmptyWord = "ε";

bool valid_name(const std::string& name) {
  if (name.empty() || name == kEmptyWord || name == ".") return false;
  return std::none_of(name.begin(), name.end(),
                      [](unsigned char c) { return std::isspace(c); });
}

void strip_trailing(Word& word, std::optional<Symbol> blank) {
  if (!blank) return;
  while (!word.empty() && word.back() == *blank) word.pop_back();
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names, std::optional<std::string> blank)
    : names_(std::move(names)) {
  for (std::uint32_t i = 0; i < names_.size(); ++i) {
    if (!valid_name(names_[i])) {
      throw InvalidArgument("alphabet: symbol name '" + names_[i] +
                            "' must be nonempty and free of whitespace");
    }
    if (!index_.emplace(names_[i], i).second) {
      throw InvalidArgument("alphabet: symbol names must be unique ('" +
                            names_[i] + "' repeated)");
    }
  }
  if (blank) {
    auto it = index_.find(*blank);
    if (it == index_.end()) {
      throw InvalidArgument("alphabet: blank '" + *blank + "' is not a member");
    }
    blank_ = Symbol{it->second};
  }
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return Symbol{it->second};
}

Symbol Alphabet::symbol(std::string_view name) const {
  if (auto s = find(name)) return *s;
  throw InvalidArgument("unknown symbol '" + std::string(name) + "'");
}

const std::string& Alphabet::name(Symbol s) const {
  if (!contains(s)) throw InvalidArgument("symbol id out of range");
  return names_[s.id];
}

Word Alphabet::word(const std::vector<std::string>& names) const {
  Word w;
  w.reserve(names.size());
  for (const auto& n : names) w.push_back(symbol(n));
  return w;
}

Word Alphabet::parse_word(std::string_view text) const {
  std::istringstream in{std::string(text)};
  std::vector<std::string> names;
  for (std::string tok; in >> tok;) {
    if (tok == kEmptyWord) continue;
    names.push_back(tok);
  }
  return word(names);
}

std::string Alphabet::format(const Word& word) const {
  if (word.empty()) return std::string(kEmptyWord);
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += name(word[i]);
  }
  return out;
}

DottedSequence::DottedSequence(AlphabetPtr alphabet, Word stack, Word input)
    : alphabet_(std::move(alphabet)), stack_(std::move(stack)), input_(std::move(input)) {
  if (!alphabet_) throw InvalidArgument("dotted sequence: missing alphabet");
  for (const Word* w : {&stack_, &input_}) {
    for (Symbol s : *w) {
      if (!alphabet_->contains(s)) {
        throw InvalidArgument("dotted sequence: symbol outside the alphabet");
      }
    }
  }
  strip_trailing(stack_, alphabet_->blank());
  strip_trailing(input_, alphabet_->blank());
}

std::optional<Symbol> DottedSequence::stack_at(std::size_t i) const {
  if (i < stack_.size()) return stack_[i];
  return alphabet_->blank();
}

std::optional<Symbol> DottedSequence::input_at(std::size_t i) const {
  if (i < input_.size()) return input_[i];
  return alphabet_->blank();
}

std::string DottedSequence::to_string() const {
  Word left(stack_.rbegin(), stack_.rend());
  return alphabet_->format(left) + " . " + alphabet_->format(input_);
}

bool operator==(const DottedSequence& a, const DottedSequence& b) {
  if (a.stack_ != b.stack_ || a.input_ != b.input_) return false;
  return a.alphabet_ == b.alphabet_ || *a.alphabet_ == *b.alphabet_;
}

bool CylinderSpec::contains(const DottedSequence& s) const {
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (s.stack_at(i) != left[i]) return false;
  }
  for (std::size_t i = 0; i < right.size(); ++i) {
    if (s.input_at(i) != right[i]) return false;
  }
  return true;
}

CylinderSpec cylinder(Word left, Word right, AlphabetPtr alphabet) {
  if (!alphabet) throw InvalidArgument("cylinder: missing alphabet");
  for (const Word* w : {&left, &right}) {
    for (Symbol s : *w) {
      if (!alphabet->contains(s)) {
        throw InvalidArgument("cylinder: symbol outside the alphabet");
      }
    }
  }
  return CylinderSpec{std::move(alphabet), std::move(left), std::move(right)};
}

}  // namespace dynfield::symbolic
