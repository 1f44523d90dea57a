#pragma once

// Shared fixtures for the test binaries.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dynfield/goedel.hpp"
#include "dynfield/io.hpp"
#include "dynfield/rational.hpp"
#include "dynfield/symbolic.hpp"

namespace testing {

using namespace dynfield;
using symbolic::DottedSequence;
using symbolic::Symbol;
using symbolic::Word;

inline Rational Q(const char* text) { return parse_rational(text); }

inline goedel::Rect rect(const char* x0, const char* x1, const char* y0, const char* y1) {
  return goedel::Rect(Q(x0), Q(x1), Q(y0), Q(y1));
}

inline std::string data_path(const std::string& name) {
  return std::string(DYNFIELD_DATA_DIR) + "/" + name;
}

inline io::Definition load(const std::string& name) {
  return io::load_definition(io::read_json_file(data_path(name)));
}

/// The predict/attach example grammar with its coding.
struct Example {
  io::Definition def = load("grammar.json");
  symbolic::GeneralizedShift gs = def.shift();
  goedel::GoedelCoding coding = *def.coding;
  goedel::NdaMachine nda = goedel::compile_nda(gs, coding);

  DottedSequence seq(const std::string& stack, const std::string& input) const {
    const auto& a = *def.alphabet();
    return DottedSequence(def.alphabet(), a.parse_word(stack), a.parse_word(input));
  }
};

/// Random canonical sequence: stack over the stack-coded symbols, input over
/// the input-coded symbols.
inline DottedSequence random_sequence(std::mt19937_64& rng, const goedel::GoedelCoding& c,
                                      std::size_t max_stack, std::size_t max_input) {
  auto pick = [&](const std::vector<Symbol>& from, std::size_t max_len) {
    Word w(std::uniform_int_distribution<std::size_t>(0, max_len)(rng));
    for (auto& s : w) s = from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng)];
    return w;
  };
  return DottedSequence(c.alphabet(), pick(c.stack_symbols(), max_stack),
                        pick(c.input_symbols(), max_input));
}

/// Random deterministic machine with states q0..q{k-1}, tape symbols
/// b, s1.. and an optional halting state h.
inline symbolic::TmDefinition random_machine(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nstates(1, 4), nsyms(2, 3), coin(0, 3);
  symbolic::TmDefinition d;
  const int q = nstates(rng);
  const int n = nsyms(rng);
  for (int i = 0; i < q; ++i) d.states.push_back("q" + std::to_string(i));
  d.tape_symbols.push_back("b");
  for (int i = 1; i < n; ++i) d.tape_symbols.push_back("s" + std::to_string(i));
  const bool with_halt = coin(rng) != 0;
  if (with_halt) {
    d.states.push_back("h");
    d.halting.push_back("h");
  }
  d.blank = "b";
  d.initial = "q0";
  for (int i = 0; i < q; ++i) {
    for (const auto& a : d.tape_symbols) {
      if (coin(rng) == 0) continue;  // leave some entries undefined
      const auto& next = d.states[std::uniform_int_distribution<std::size_t>(
          0, d.states.size() - 1)(rng)];
      const auto& write = d.tape_symbols[std::uniform_int_distribution<std::size_t>(
          0, d.tape_symbols.size() - 1)(rng)];
      d.rules.push_back({"q" + std::to_string(i), a, next, write,
                         coin(rng) % 2 ? symbolic::Move::kLeft : symbolic::Move::kRight});
    }
  }
  return d;
}

/// Direct tape simulator used as an oracle for the machine emulation. The
/// tape is a sparse map from cell index to symbol name.
struct TapeMachine {
  const symbolic::TmDefinition& d;
  std::map<long, std::string> tape;
  long head = 0;
  std::string state;

  TapeMachine(const symbolic::TmDefinition& def, const std::vector<std::string>& input)
      : d(def), state(def.initial) {
    for (std::size_t i = 0; i < input.size(); ++i) tape[static_cast<long>(i)] = input[i];
  }

  std::string read(long i) const {
    auto it = tape.find(i);
    return it == tape.end() ? d.blank : it->second;
  }

  /// false when the machine halts.
  bool step() {
    for (const auto& h : d.halting) {
      if (h == state) return false;
    }
    const auto a = read(head);
    for (const auto& r : d.rules) {
      if (r.state == state && r.read == a) {
        tape[head] = r.write;
        state = r.next;
        head += r.move == symbolic::Move::kRight ? 1 : -1;
        return true;
      }
    }
    return false;
  }

  /// (left of head, nearest first) and (head and right), blanks trimmed.
  std::pair<std::vector<std::string>, std::vector<std::string>> halves() const {
    long lo = head, hi = head - 1;
    for (const auto& [i, s] : tape) {
      if (s == d.blank) continue;
      lo = std::min(lo, i);
      hi = std::max(hi, i);
    }
    std::vector<std::string> left, right;
    for (long i = head - 1; i >= lo; --i) left.push_back(read(i));
    for (long i = head; i <= hi; ++i) right.push_back(read(i));
    while (!left.empty() && left.back() == d.blank) left.pop_back();
    while (!right.empty() && right.back() == d.blank) right.pop_back();
    return {left, right};
  }
};

}  // namespace testing
