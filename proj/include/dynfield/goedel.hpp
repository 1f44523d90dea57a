#pragma once

// Goedel encoding of dotted sequences into the unit square and compilation of
// generalized shifts into piecewise affine-linear maps (nonlinear dynamical
// automata). All coordinates are exact rationals.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dynfield/rational.hpp"
#include "dynfield/symbolic.hpp"

namespace dynfield::goedel {

using symbolic::AlphabetPtr;
using symbolic::Symbol;
using symbolic::Word;

/// Digit assignment for both halves of a dotted sequence. A symbol's code is
/// its position in the respective list; the bases are the list lengths.
class GoedelCoding {
 public:
  GoedelCoding(AlphabetPtr alphabet, std::vector<Symbol> stack_symbols,
               std::vector<Symbol> input_symbols);
  static GoedelCoding from_names(AlphabetPtr alphabet,
                                 const std::vector<std::string>& stack_symbols,
                                 const std::vector<std::string>& input_symbols);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  unsigned stack_base() const noexcept { return static_cast<unsigned>(stack_.size()); }
  unsigned input_base() const noexcept { return static_cast<unsigned>(input_.size()); }
  const std::vector<Symbol>& stack_symbols() const noexcept { return stack_; }
  const std::vector<Symbol>& input_symbols() const noexcept { return input_; }

  std::optional<std::uint32_t> find_stack_code(Symbol s) const;
  std::optional<std::uint32_t> find_input_code(Symbol s) const;
  /// Throw UncodedSymbol.
  std::uint32_t stack_code(Symbol s) const;
  std::uint32_t input_code(Symbol s) const;

  /// sum_k psi(w_k) b_L^-k for k = 1.. (top-first word)
  Rational encode_stack(const Word& word) const;
  /// sum_k psi(w_k) b_R^-(k+1) for k = 0..
  Rational encode_input(const Word& word) const;

 private:
  AlphabetPtr alphabet_;
  std::vector<Symbol> stack_;
  std::vector<Symbol> input_;
  std::vector<std::optional<std::uint32_t>> stack_code_;
  std::vector<std::optional<std::uint32_t>> input_code_;
};

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Half-open [x_lo, x_hi) x [y_lo, y_hi) inside the unit square.
class Rect {
 public:
  /// Throws InvalidArgument unless 0 <= lo < hi <= 1 on both axes.
  Rect(Rational x_lo, Rational x_hi, Rational y_lo, Rational y_hi);
  static Rect unit();

  const Rational& x_lo() const noexcept { return x_lo_; }
  const Rational& x_hi() const noexcept { return x_hi_; }
  const Rational& y_lo() const noexcept { return y_lo_; }
  const Rational& y_hi() const noexcept { return y_hi_; }
  Rational width() const { return x_hi_ - x_lo_; }
  Rational height() const { return y_hi_ - y_lo_; }
  Rational area() const { return width() * height(); }

  bool contains(const Point& p) const;
  bool contains(const Rect& r) const;
  bool overlaps(const Rect& r) const;
  Point center() const;

  std::string to_string() const;

  friend bool operator==(const Rect&, const Rect&) = default;

 private:
  Rational x_lo_, x_hi_, y_lo_, y_hi_;
};

struct AffineBranch {
  Rect cell;
  Rational a_x;
  Rational a_y;
  Rational lambda_x;
  Rational lambda_y;
  std::string label;
  symbolic::RuleKind kind = symbolic::RuleKind::kOther;

  Point apply(const Point& p) const;
  /// Exact image of a rectangle (the map is monotone per axis).
  Rect image(const Rect& r) const;

  friend bool operator==(const AffineBranch&, const AffineBranch&) = default;
};

/// Branches over pairwise disjoint cells; the identity acts elsewhere.
class NdaMachine {
 public:
  /// Throws InvalidArgument for overlapping cells, non-positive lambdas or
  /// images leaving the unit square.
  NdaMachine(std::vector<AffineBranch> branches, GoedelCoding coding);

  const std::vector<AffineBranch>& branches() const noexcept { return branches_; }
  const GoedelCoding& coding() const noexcept { return coding_; }

  std::optional<std::size_t> branch_at(const Point& p) const;

 private:
  std::vector<AffineBranch> branches_;
  GoedelCoding coding_;
};

/// Throws UncodedSymbol.
Point encode(const symbolic::DottedSequence& s, const GoedelCoding& coding);

Rect cylinder_rect(const Word& stack, const Word& input, const GoedelCoding& coding);
Rect cylinder_rect(const symbolic::CylinderSpec& cylinder, const GoedelCoding& coding);

/// One branch per rule after wildcard expansion over the coded symbols.
/// Throws InexpressibleRule or UncodedSymbol.
NdaMachine compile_nda(const symbolic::GeneralizedShift& gs, const GoedelCoding& coding);

/// Phi(p); points outside every cell are fixed.
Point nda_step(const NdaMachine& m, const Point& p);

struct DodDoeEntry {
  Rect cell;
  Rect image;
  std::string label;
  symbolic::RuleKind kind;
};

std::vector<DodDoeEntry> dod_doe_report(const NdaMachine& m);

/// The b_L x b_R one-symbol cylinders tiling the square, row-major in x.
std::vector<Rect> background_partition(const GoedelCoding& coding);

}  // namespace dynfield::goedel
