#pragma once

// Piecewise-constant reduction of the Amari field equation: a field equal to
// u on a domain of measure |A| under a constant kernel w obeys
//   tau du/dt = -u + |A| w f(u).

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dynfield::amari {

enum class ActivationKind { kSigmoid, kIdentity, kHeaviside, kTanh };

std::string_view kind_name(ActivationKind kind);
/// Throws InvalidArgument for unknown names.
ActivationKind parse_kind(std::string_view name);

struct SigmoidParams {
  double beta = 1.0;   // gain
  double theta = 0.0;  // threshold
};

/// f(u) for the chosen kind:
///   sigmoid    1 / (1 + exp(-beta (u - theta)))
///   identity   u
///   heaviside  1 if u > theta, else 0
///   tanh       tanh(beta (u - theta))
class Activation {
 public:
  Activation() = default;
  /// Throws InvalidArgument unless beta > 0.
  Activation(ActivationKind kind, SigmoidParams params);

  ActivationKind kind() const noexcept { return kind_; }
  const SigmoidParams& params() const noexcept { return params_; }

  double operator()(double u) const;
  /// f'(u); zero on the Heaviside plateaus.
  double derivative(double u) const;
  /// Range bounds; nullopt when unbounded.
  std::optional<std::pair<double, double>> range() const;
  bool vanishes_at_zero() const { return (*this)(0.0) == 0.0; }

 private:
  ActivationKind kind_ = ActivationKind::kIdentity;
  SigmoidParams params_{};
};

double activation(double u, const SigmoidParams& params, ActivationKind kind);

struct ConstantFieldConfig {
  double domain_measure = 1.0;  // |A|
  double kernel_value = 1.0;    // w
  Activation f;
  double tau = 1.0;
  /// Scan interval for root finding; derived from the range of f when unset.
  std::optional<std::pair<double, double>> bracket;

  double gain() const { return domain_measure * kernel_value; }
  /// Throws InvalidArgument naming the violated invariant.
  void validate() const;
  std::pair<double, double> scan_bracket() const;
};

enum class Stability { kStable, kUnstable, kMarginal };

std::string_view stability_name(Stability s);
Stability parse_stability(std::string_view name);

struct FixedPoint {
  double u0;
  Stability stability;
  /// |A| w f'(u0); stable below 1.
  double criterion;

  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
};

struct FixedPointReport {
  std::vector<FixedPoint> points;  // ascending in u0
  /// Set when the scan found no sign change.
  bool no_bracket = false;

  friend bool operator==(const FixedPointReport&, const FixedPointReport&) = default;
};

Stability classify(double criterion);

/// Roots of g(u) = |A| w f(u) - u by sign-change scan plus bisection to
/// 1e-12. Heaviside fields use the plateau solutions {0, |A| w}.
FixedPointReport find_fixed_points(const ConstantFieldConfig& cfg,
                                   double scan_step = 1e-3);

/// Explicit Euler; returns steps + 1 samples starting with u_init.
/// Requires dt > 0 and dt / tau <= 1.
std::vector<double> integrate(const ConstantFieldConfig& cfg, double u_init, double dt,
                              std::size_t steps);

}  // namespace dynfield::amari
