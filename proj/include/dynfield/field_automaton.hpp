#pragma once

// Dynamic field automaton: evolution of uniform densities with rectangular
// support under the Frobenius-Perron operator of an NDA, exactly on
// rectangles and numerically on an n x n grid.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dynfield/amari.hpp"
#include "dynfield/goedel.hpp"
#include "dynfield/rational.hpp"

namespace dynfield::dfa {

using goedel::NdaMachine;
using goedel::Rect;

/// Uniform p.d.f. 1/|R| on R.
struct RectMacrostate {
  Rect support;
  Rational weight;

  static RectMacrostate uniform(const Rect& support);

  friend bool operator==(const RectMacrostate&, const RectMacrostate&) = default;
};

/// The branch whose cell contains `r`, nullopt for the identity region.
/// Throws StraddlesPartition (with `step`) when `r` overlaps two regions.
std::optional<std::size_t> branch_for(const NdaMachine& m, const Rect& r,
                                      std::size_t step = 0);

RectMacrostate dfa_step(const NdaMachine& m, const RectMacrostate& r);

/// steps + 1 macrostates starting with r0.
std::vector<RectMacrostate> dfa_orbit(const NdaMachine& m, const RectMacrostate& r0,
                                      std::size_t steps);

class TransferOperator;

/// Piecewise-constant density on an n x n grid. Values are probability per
/// unit area, stored row-major with y fastest: index = ix * n + iy.
class GridDensity {
 public:
  /// Throws InvalidArgument for negative values or total mass != 1 (1e-12).
  GridDensity(std::uint32_t n, std::vector<double> values);

  /// Each cell gets weight * |cell intersect support| / |cell|.
  static GridDensity rasterize(const RectMacrostate& r, std::uint32_t n);

  std::uint32_t n() const noexcept { return n_; }
  const std::vector<double>& values() const noexcept { return values_; }
  double at(std::uint32_t ix, std::uint32_t iy) const { return values_[ix * n_ + iy]; }
  double mass() const;

  friend bool operator==(const GridDensity&, const GridDensity&) = default;

 private:
  struct Unchecked {};
  GridDensity(Unchecked, std::uint32_t n, std::vector<double> values)
      : n_(n), values_(std::move(values)) {}
  friend GridDensity fp_apply(const TransferOperator&, const GridDensity&);

  std::uint32_t n_;
  std::vector<double> values_;
};

/// Discretized kernel w(x, y) = delta(x - Phi(y)): each source cell sends
/// the exact fraction of its measure that lands in each target cell.
class TransferOperator {
 public:
  struct Entry {
    std::uint32_t target;
    Rational fraction;
    double weight;  // fraction as double
  };

  TransferOperator(std::uint32_t n, std::vector<std::vector<Entry>> rows);

  std::uint32_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return rows_.size(); }
  const std::vector<Entry>& row(std::size_t source) const { return rows_[source]; }
  const std::vector<std::vector<Entry>>& rows() const noexcept { return rows_; }

  /// Matrix-vector product in fixed source-major order.
  std::vector<double> apply(const std::vector<double>& field) const;

 private:
  std::uint32_t n_;
  std::vector<std::vector<Entry>> rows_;
};

/// Throws ResolutionMismatch unless every cell boundary and every cell-image
/// boundary of `m` lies on the grid lines k / n.
void check_alignment(const NdaMachine& m, std::uint32_t n);

TransferOperator build_transfer_operator(const NdaMachine& m, std::uint32_t n);

/// Pushforward; throws DimensionMismatch.
GridDensity fp_apply(const TransferOperator& op, const GridDensity& d);

/// One explicit-Euler step of tau du/dt = -u + K f(u) with K the transfer
/// operator: (1 - dt/tau) u + (dt/tau) K f(u).
std::vector<double> amari_euler_step(const TransferOperator& op,
                                     const std::vector<double>& u, double dt_over_tau,
                                     const amari::Activation& f);

struct AmariCheckReport {
  std::uint32_t n = 0;
  std::size_t steps = 0;
  /// max |euler - fp_apply| per step; zero when the two routes agree.
  std::vector<double> deviation;
  double max_deviation = 0.0;
  /// total mass after each Euler step
  std::vector<double> mass;
};

/// Runs the identity-activation Euler route with tau = dt side by side with
/// fp_apply starting from the rasterized r0.
AmariCheckReport amari_discretization_check(const NdaMachine& m, const RectMacrostate& r0,
                                            std::size_t steps, std::uint32_t n);

}  // namespace dynfield::dfa
