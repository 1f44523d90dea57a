#include <algorithm>
#include <cmath>

#include "dynfield/error.hpp"
#include "dynfield/field_automaton.hpp"

namespace dynfield::dfa {

namespace {

using boost::multiprecision::cpp_int;

constexpr double kMassTolerance = 1e-12;

// floor(r * n) for r >= 0
std::uint32_t floor_scaled(const Rational& r, std::uint32_t n) {
  const cpp_int q = boost::multiprecision::numerator(r) * n /
                    boost::multiprecision::denominator(r);
  return q.convert_to<std::uint32_t>();
}

// ceil(r * n) for r >= 0
std::uint32_t ceil_scaled(const Rational& r, std::uint32_t n) {
  const cpp_int num = boost::multiprecision::numerator(r) * n;
  const cpp_int den = boost::multiprecision::denominator(r);
  return cpp_int((num + den - 1) / den).convert_to<std::uint32_t>();
}

bool on_grid(const Rational& r, std::uint32_t n) {
  return boost::multiprecision::denominator(Rational(r * n)) == 1;
}

Rational overlap(const Rational& lo_a, const Rational& hi_a, const Rational& lo_b,
                 const Rational& hi_b) {
  const Rational lo = std::max(lo_a, lo_b);
  const Rational hi = std::min(hi_a, hi_b);
  return hi > lo ? Rational(hi - lo) : Rational(0);
}

Rect grid_cell(std::uint32_t ix, std::uint32_t iy, std::uint32_t n) {
  return Rect(Rational(ix, n), Rational(ix + 1, n), Rational(iy, n), Rational(iy + 1, n));
}

double total_mass(const std::vector<double>& values, std::uint32_t n) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / (static_cast<double>(n) * n);
}

}  // namespace

GridDensity::GridDensity(std::uint32_t n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  if (n_ == 0 || values_.size() != static_cast<std::size_t>(n_) * n_) {
    throw InvalidArgument("grid density: needs n > 0 and n*n values");
  }
  if (std::any_of(values_.begin(), values_.end(),
                  [](double v) { return !(v >= 0.0) || !std::isfinite(v); })) {
    throw InvalidArgument("grid density: values must be finite and nonnegative");
  }
  if (std::abs(mass() - 1.0) > kMassTolerance) {
    throw InvalidArgument("grid density: total mass must be 1 within 1e-12");
  }
}

double GridDensity::mass() const { return total_mass(values_, n_); }

GridDensity GridDensity::rasterize(const RectMacrostate& r, std::uint32_t n) {
  if (n == 0) throw InvalidArgument("rasterize: n must be positive");
  std::vector<double> values(static_cast<std::size_t>(n) * n, 0.0);
  const Rect& s = r.support;
  const Rational cell_area = Rational(1, static_cast<long long>(n) * n);
  for (std::uint32_t ix = floor_scaled(s.x_lo(), n); ix < ceil_scaled(s.x_hi(), n); ++ix) {
    const Rational ox = overlap(s.x_lo(), s.x_hi(), Rational(ix, n), Rational(ix + 1, n));
    for (std::uint32_t iy = floor_scaled(s.y_lo(), n); iy < ceil_scaled(s.y_hi(), n);
         ++iy) {
      const Rational oy =
          overlap(s.y_lo(), s.y_hi(), Rational(iy, n), Rational(iy + 1, n));
      values[static_cast<std::size_t>(ix) * n + iy] =
          to_double(r.weight * ox * oy / cell_area);
    }
  }
  return GridDensity(n, std::move(values));
}

TransferOperator::TransferOperator(std::uint32_t n, std::vector<std::vector<Entry>> rows)
    : n_(n), rows_(std::move(rows)) {
  if (n_ == 0 || rows_.size() != static_cast<std::size_t>(n_) * n_) {
    throw InvalidArgument("transfer operator: needs n > 0 and n*n rows");
  }
  for (std::size_t s = 0; s < rows_.size(); ++s) {
    Rational sum = 0;
    for (const auto& e : rows_[s]) {
      if (e.target >= rows_.size() || e.fraction < 0) {
        throw InvalidArgument("transfer operator: bad entry in row " + std::to_string(s));
      }
      sum += e.fraction;
    }
    if (sum != 1) {
      throw InvalidArgument("transfer operator: row " + std::to_string(s) +
                            " does not conserve measure");
    }
  }
}

std::vector<double> TransferOperator::apply(const std::vector<double>& field) const {
  if (field.size() != rows_.size()) {
    throw DimensionMismatch("transfer operator: field has " +
                            std::to_string(field.size()) + " cells, expected " +
                            std::to_string(rows_.size()));
  }
  std::vector<double> out(field.size(), 0.0);
  for (std::size_t s = 0; s < rows_.size(); ++s) {
    const double v = field[s];
    if (v == 0.0) continue;
    for (const auto& e : rows_[s]) out[e.target] += v * e.weight;
  }
  return out;
}

void check_alignment(const NdaMachine& m, std::uint32_t n) {
  if (n == 0) throw ResolutionMismatch("grid resolution must be positive");
  for (const auto& b : m.branches()) {
    for (const Rect& r : {b.cell, b.image(b.cell)}) {
      for (const Rational* v : {&r.x_lo(), &r.x_hi(), &r.y_lo(), &r.y_hi()}) {
        if (!on_grid(*v, n)) {
          throw ResolutionMismatch("n = " + std::to_string(n) + " does not align with " +
                                   r.to_string() + " of branch '" + b.label + "'");
        }
      }
    }
  }
}

TransferOperator build_transfer_operator(const NdaMachine& m, std::uint32_t n) {
  check_alignment(m, n);
  std::vector<std::vector<TransferOperator::Entry>> rows(static_cast<std::size_t>(n) * n);
  for (std::uint32_t ix = 0; ix < n; ++ix) {
    for (std::uint32_t iy = 0; iy < n; ++iy) {
      const Rect cell = grid_cell(ix, iy, n);
      // Aligned grids put each grid cell inside one region.
      const auto branch = m.branch_at(goedel::Point{cell.x_lo(), cell.y_lo()});
      const Rect img = branch ? m.branches()[*branch].image(cell) : cell;
      auto& row = rows[static_cast<std::size_t>(ix) * n + iy];
      for (std::uint32_t tx = floor_scaled(img.x_lo(), n); tx < ceil_scaled(img.x_hi(), n);
           ++tx) {
        const Rational fx =
            overlap(img.x_lo(), img.x_hi(), Rational(tx, n), Rational(tx + 1, n)) /
            img.width();
        for (std::uint32_t ty = floor_scaled(img.y_lo(), n);
             ty < ceil_scaled(img.y_hi(), n); ++ty) {
          const Rational fy =
              overlap(img.y_lo(), img.y_hi(), Rational(ty, n), Rational(ty + 1, n)) /
              img.height();
          Rational f = fx * fy;
          if (f == 0) continue;
          const double w = to_double(f);
          row.push_back({tx * n + ty, std::move(f), w});
        }
      }
    }
  }
  return TransferOperator(n, std::move(rows));
}

GridDensity fp_apply(const TransferOperator& op, const GridDensity& d) {
  if (d.n() != op.n()) {
    throw DimensionMismatch("fp_apply: density n = " + std::to_string(d.n()) +
                            " but operator n = " + std::to_string(op.n()));
  }
  return GridDensity(GridDensity::Unchecked{}, d.n(), op.apply(d.values()));
}

std::vector<double> amari_euler_step(const TransferOperator& op,
                                     const std::vector<double>& u, double dt_over_tau,
                                     const amari::Activation& f) {
  if (!(dt_over_tau > 0.0) || dt_over_tau > 1.0) {
    throw InvalidArgument("amari step: requires 0 < dt / tau <= 1");
  }
  std::vector<double> fu(u.size());
  std::transform(u.begin(), u.end(), fu.begin(), [&](double v) { return f(v); });
  const std::vector<double> input = op.apply(fu);
  std::vector<double> next(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    next[i] = (1.0 - dt_over_tau) * u[i] + dt_over_tau * input[i];
  }
  return next;
}

AmariCheckReport amari_discretization_check(const NdaMachine& m, const RectMacrostate& r0,
                                            std::size_t steps, std::uint32_t n) {
  const TransferOperator op = build_transfer_operator(m, n);
  const amari::Activation identity(amari::ActivationKind::kIdentity, {});
  AmariCheckReport report;
  report.n = n;
  report.steps = steps;
  GridDensity density = GridDensity::rasterize(r0, n);
  std::vector<double> field = density.values();
  for (std::size_t t = 0; t < steps; ++t) {
    density = fp_apply(op, density);
    field = amari_euler_step(op, field, 1.0, identity);
    double dev = 0.0;
    for (std::size_t i = 0; i < field.size(); ++i) {
      dev = std::max(dev, std::abs(field[i] - density.values()[i]));
    }
    report.deviation.push_back(dev);
    report.max_deviation = std::max(report.max_deviation, dev);
    report.mass.push_back(total_mass(field, n));
  }
  return report;
}

}  // namespace dynfield::dfa
