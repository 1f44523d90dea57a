#include <algorithm>
#include <cmath>

#include "dynfield/amari.hpp"
#include "dynfield/error.hpp"

namespace dynfield::amari {

std::string_view kind_name(ActivationKind kind) {
  switch (kind) {
    case ActivationKind::kSigmoid: return "sigmoid";
    case ActivationKind::kIdentity: return "identity";
    case ActivationKind::kHeaviside: return "heaviside";
    case ActivationKind::kTanh: return "tanh";
  }
  return "unknown";
}

ActivationKind parse_kind(std::string_view name) {
  for (auto k : {ActivationKind::kSigmoid, ActivationKind::kIdentity,
                 ActivationKind::kHeaviside, ActivationKind::kTanh}) {
    if (kind_name(k) == name) return k;
  }
  throw InvalidArgument("unknown activation kind '" + std::string(name) + "'");
}

Activation::Activation(ActivationKind kind, SigmoidParams params)
    : kind_(kind), params_(params) {
  if (!(params_.beta > 0.0)) throw InvalidArgument("activation: beta must be > 0");
}

double Activation::operator()(double u) const {
  const double z = params_.beta * (u - params_.theta);
  switch (kind_) {
    case ActivationKind::kSigmoid: return 1.0 / (1.0 + std::exp(-z));
    case ActivationKind::kIdentity: return u;
    case ActivationKind::kHeaviside: return u > params_.theta ? 1.0 : 0.0;
    case ActivationKind::kTanh: return std::tanh(z);
  }
  return 0.0;
}

double Activation::derivative(double u) const {
  switch (kind_) {
    case ActivationKind::kSigmoid: {
      const double f = (*this)(u);
      return params_.beta * f * (1.0 - f);
    }
    case ActivationKind::kIdentity: return 1.0;
    case ActivationKind::kHeaviside: return 0.0;
    case ActivationKind::kTanh: {
      const double t = (*this)(u);
      return params_.beta * (1.0 - t * t);
    }
  }
  return 0.0;
}

std::optional<std::pair<double, double>> Activation::range() const {
  switch (kind_) {
    case ActivationKind::kSigmoid:
    case ActivationKind::kHeaviside: return std::pair{0.0, 1.0};
    case ActivationKind::kTanh: return std::pair{-1.0, 1.0};
    case ActivationKind::kIdentity: return std::nullopt;
  }
  return std::nullopt;
}

double activation(double u, const SigmoidParams& params, ActivationKind kind) {
  return Activation(kind, params)(u);
}

void ConstantFieldConfig::validate() const {
  if (!(domain_measure > 0.0)) throw InvalidArgument("field config: |A| must be > 0");
  if (!(tau > 0.0)) throw InvalidArgument("field config: tau must be > 0");
  if (!std::isfinite(kernel_value)) {
    throw InvalidArgument("field config: kernel value must be finite");
  }
  if (!(f.params().beta > 0.0)) throw InvalidArgument("field config: beta must be > 0");
  if (bracket && !(bracket->first < bracket->second)) {
    throw InvalidArgument("field config: bracket must satisfy lo < hi");
  }
}

std::pair<double, double> ConstantFieldConfig::scan_bracket() const {
  if (bracket) return *bracket;
  const auto r = f.range();
  if (!r) return {-1.0, 1.0};
  const double a = gain() * r->first;
  const double b = gain() * r->second;
  return {std::min(a, b) - 0.5, std::max(a, b) + 0.5};
}

std::string_view stability_name(Stability s) {
  switch (s) {
    case Stability::kStable: return "stable";
    case Stability::kUnstable: return "unstable";
    case Stability::kMarginal: return "marginal";
  }
  return "unknown";
}

Stability parse_stability(std::string_view name) {
  for (auto s : {Stability::kStable, Stability::kUnstable, Stability::kMarginal}) {
    if (stability_name(s) == name) return s;
  }
  throw InvalidArgument("unknown stability '" + std::string(name) + "'");
}

Stability classify(double criterion) {
  constexpr double kTangency = 1e-12;
  if (std::abs(criterion - 1.0) <= kTangency) return Stability::kMarginal;
  return criterion < 1.0 ? Stability::kStable : Stability::kUnstable;
}

namespace {

FixedPoint make_point(const ConstantFieldConfig& cfg, double u0) {
  const double c = cfg.gain() * cfg.f.derivative(u0);
  return FixedPoint{u0, classify(c), c};
}

FixedPointReport heaviside_points(const ConstantFieldConfig& cfg) {
  FixedPointReport report;
  std::vector<double> candidates{0.0, cfg.gain()};
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (double u : candidates) {
    if (cfg.gain() * cfg.f(u) == u) report.points.push_back(make_point(cfg, u));
  }
  report.no_bracket = report.points.empty();
  return report;
}

double bisect(const ConstantFieldConfig& cfg, double lo, double hi) {
  auto g = [&](double u) { return cfg.gain() * cfg.f(u) - u; };
  double glo = g(lo);
  for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if (gm == 0.0) return mid;
    if ((gm < 0.0) == (glo < 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

FixedPointReport find_fixed_points(const ConstantFieldConfig& cfg, double scan_step) {
  cfg.validate();
  if (!(scan_step > 0.0)) throw InvalidArgument("fixed points: scan step must be > 0");
  if (cfg.f.kind() == ActivationKind::kHeaviside) return heaviside_points(cfg);
  if (cfg.f.kind() == ActivationKind::kIdentity && cfg.gain() == 1.0) {
    throw InvalidArgument("fixed points: linear field with |A| w = 1 is degenerate "
                          "(every u is a fixed point)");
  }

  auto g = [&](double u) { return cfg.gain() * cfg.f(u) - u; };
  const auto [lo, hi] = cfg.scan_bracket();
  const auto n = static_cast<std::size_t>(std::ceil((hi - lo) / scan_step));

  FixedPointReport report;
  double prev_u = lo;
  double prev_g = g(lo);
  if (prev_g == 0.0) report.points.push_back(make_point(cfg, prev_u));
  for (std::size_t i = 1; i <= n; ++i) {
    const double u = std::min(hi, lo + static_cast<double>(i) * scan_step);
    const double gu = g(u);
    if (gu == 0.0) {
      report.points.push_back(make_point(cfg, u));
    } else if (prev_g != 0.0 && (gu < 0.0) != (prev_g < 0.0)) {
      report.points.push_back(make_point(cfg, bisect(cfg, prev_u, u)));
    }
    prev_u = u;
    prev_g = gu;
  }
  report.no_bracket = report.points.empty();
  return report;
}

std::vector<double> integrate(const ConstantFieldConfig& cfg, double u_init, double dt,
                              std::size_t steps) {
  cfg.validate();
  if (!(dt > 0.0) || dt / cfg.tau > 1.0) {
    throw InvalidArgument("integrate: requires dt > 0 and dt / tau <= 1");
  }
  std::vector<double> u;
  u.reserve(steps + 1);
  u.push_back(u_init);
  const double rate = dt / cfg.tau;
  for (std::size_t k = 0; k < steps; ++k) {
    const double x = u.back();
    u.push_back(x + rate * (-x + cfg.gain() * cfg.f(x)));
  }
  return u;
}

}  // namespace dynfield::amari
