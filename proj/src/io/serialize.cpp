#include <bit>
#include <cstring>

#include "dynfield/error.hpp"
#include "dynfield/io.hpp"

namespace dynfield::io {

namespace {

template <typename F>
auto guarded(const char* where, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string(where) + ": " + e.what());
  }
}

Rational rational_at(const json& j, const char* key) {
  return parse_rational(j.at(key).get<std::string>());
}

json interval(const Rational& lo, const Rational& hi) {
  return json::array({to_string(lo), to_string(hi)});
}

}  // namespace

std::string_view kind_name(symbolic::RuleKind kind) {
  switch (kind) {
    case symbolic::RuleKind::kPredict: return "predict";
    case symbolic::RuleKind::kAttach: return "attach";
    case symbolic::RuleKind::kMachine: return "machine";
    case symbolic::RuleKind::kOther: return "other";
  }
  return "other";
}

symbolic::RuleKind parse_rule_kind(std::string_view name) {
  for (auto k : {symbolic::RuleKind::kPredict, symbolic::RuleKind::kAttach,
                 symbolic::RuleKind::kMachine, symbolic::RuleKind::kOther}) {
    if (kind_name(k) == name) return k;
  }
  throw InvalidArgument("unknown rule kind '" + std::string(name) + "'");
}

json to_json(const goedel::Rect& r) {
  return json{{"x", interval(r.x_lo(), r.x_hi())}, {"y", interval(r.y_lo(), r.y_hi())}};
}

goedel::Rect rect_from_json(const json& j) {
  return guarded("rect", [&] {
    const auto& x = j.at("x");
    const auto& y = j.at("y");
    // braces keep the evaluation order, so errors name the first bad bound
    return goedel::Rect{parse_rational(x.at(0).get<std::string>()),
                        parse_rational(x.at(1).get<std::string>()),
                        parse_rational(y.at(0).get<std::string>()),
                        parse_rational(y.at(1).get<std::string>())};
  });
}

json to_json(const goedel::GoedelCoding& c) {
  const auto& a = *c.alphabet();
  json stack = json::array();
  for (auto s : c.stack_symbols()) stack.push_back(a.name(s));
  json input = json::array();
  for (auto s : c.input_symbols()) input.push_back(a.name(s));
  return json{{"stack", stack}, {"input", input}};
}

goedel::GoedelCoding coding_from_json(const json& j, symbolic::AlphabetPtr alphabet) {
  return guarded("coding", [&] {
    return goedel::GoedelCoding::from_names(std::move(alphabet),
                                            j.at("stack").get<std::vector<std::string>>(),
                                            j.at("input").get<std::vector<std::string>>());
  });
}

json to_json(const goedel::NdaMachine& m) {
  const auto& a = *m.coding().alphabet();
  json alphabet{{"symbols", a.names()}, {"blank", nullptr}};
  if (auto b = a.blank()) alphabet["blank"] = a.name(*b);
  json branches = json::array();
  for (const auto& b : m.branches()) {
    branches.push_back(json{{"label", b.label},
                            {"kind", kind_name(b.kind)},
                            {"cell", to_json(b.cell)},
                            {"a_x", to_string(b.a_x)},
                            {"a_y", to_string(b.a_y)},
                            {"lambda_x", to_string(b.lambda_x)},
                            {"lambda_y", to_string(b.lambda_y)}});
  }
  return json{{"alphabet", alphabet}, {"coding", to_json(m.coding())}, {"branches", branches}};
}

goedel::NdaMachine nda_from_json(const json& j) {
  return guarded("nda", [&] {
    const auto& aj = j.at("alphabet");
    std::optional<std::string> blank;
    if (!aj.at("blank").is_null()) blank = aj.at("blank").get<std::string>();
    auto alphabet = std::make_shared<const symbolic::Alphabet>(
        aj.at("symbols").get<std::vector<std::string>>(), blank);
    goedel::GoedelCoding coding = coding_from_json(j.at("coding"), alphabet);
    std::vector<goedel::AffineBranch> branches;
    for (const auto& b : j.at("branches")) {
      branches.push_back(goedel::AffineBranch{
          rect_from_json(b.at("cell")), rational_at(b, "a_x"), rational_at(b, "a_y"),
          rational_at(b, "lambda_x"), rational_at(b, "lambda_y"),
          b.at("label").get<std::string>(),
          parse_rule_kind(b.value("kind", std::string("other")))});
    }
    return goedel::NdaMachine(std::move(branches), std::move(coding));
  });
}

json to_json(const std::vector<dfa::RectMacrostate>& orbit) {
  json states = json::array();
  for (std::size_t t = 0; t < orbit.size(); ++t) {
    states.push_back(json{{"t", t},
                          {"support", to_json(orbit[t].support)},
                          {"weight", to_string(orbit[t].weight)}});
  }
  return json{{"orbit", states}};
}

std::vector<dfa::RectMacrostate> orbit_from_json(const json& j) {
  return guarded("orbit", [&] {
    std::vector<dfa::RectMacrostate> orbit;
    for (const auto& s : j.at("orbit")) {
      dfa::RectMacrostate r{rect_from_json(s.at("support")), rational_at(s, "weight")};
      if (r.weight * r.support.area() != 1) {
        throw InvalidArgument("orbit: weight must equal 1 / area(support)");
      }
      orbit.push_back(std::move(r));
    }
    return orbit;
  });
}

json to_json(const dfa::TransferOperator& op) {
  json entries = json::array();
  for (std::size_t s = 0; s < op.size(); ++s) {
    for (const auto& e : op.row(s)) {
      entries.push_back(json::array({s, e.target, to_string(e.fraction)}));
    }
  }
  return json{{"n", op.n()}, {"order", "row-major, y fastest"}, {"entries", entries}};
}

json to_json(const dfa::GridDensity& d) {
  return json{{"n", d.n()}, {"order", "row-major, y fastest"}, {"values", d.values()}};
}

dfa::GridDensity density_from_json(const json& j) {
  return guarded("density", [&] {
    return dfa::GridDensity(j.at("n").get<std::uint32_t>(),
                            j.at("values").get<std::vector<double>>());
  });
}

namespace {

static_assert(std::endian::native == std::endian::little,
              "binary density snapshots assume a little-endian host");

template <typename T>
void append_raw(std::string& out, T value) {
  char buf[sizeof(T)];
  std::memcpy(buf, &value, sizeof(T));
  out.append(buf, sizeof(T));
}

template <typename T>
T read_raw(std::string_view bytes, std::size_t offset) {
  T value;
  std::memcpy(&value, bytes.data() + offset, sizeof(T));
  return value;
}

}  // namespace

std::string density_to_binary(const dfa::GridDensity& d) {
  std::string out;
  out.reserve(8 + d.values().size() * 8);
  append_raw<std::uint32_t>(out, d.n());
  append_raw<std::uint32_t>(out, 0);
  for (double v : d.values()) append_raw<double>(out, v);
  return out;
}

dfa::GridDensity density_from_binary(std::string_view bytes) {
  if (bytes.size() < 8) throw InvalidArgument("density: truncated header");
  const auto n = read_raw<std::uint32_t>(bytes, 0);
  const std::size_t count = static_cast<std::size_t>(n) * n;
  if (bytes.size() != 8 + count * 8) {
    throw InvalidArgument("density: payload size does not match n");
  }
  std::vector<double> values(count);
  for (std::size_t i = 0; i < count; ++i) values[i] = read_raw<double>(bytes, 8 + 8 * i);
  return dfa::GridDensity(n, std::move(values));
}

json to_json(const amari::ConstantFieldConfig& cfg) {
  json j{{"domain_measure", cfg.domain_measure},
         {"kernel_value", cfg.kernel_value},
         {"tau", cfg.tau},
         {"activation",
          {{"kind", amari::kind_name(cfg.f.kind())},
           {"beta", cfg.f.params().beta},
           {"theta", cfg.f.params().theta}}}};
  if (cfg.bracket) j["bracket"] = json::array({cfg.bracket->first, cfg.bracket->second});
  return j;
}

amari::ConstantFieldConfig field_config_from_json(const json& j) {
  return guarded("field config", [&] {
    amari::ConstantFieldConfig cfg;
    cfg.domain_measure = j.at("domain_measure").get<double>();
    cfg.kernel_value = j.at("kernel_value").get<double>();
    cfg.tau = j.value("tau", 1.0);
    const auto& a = j.at("activation");
    cfg.f = amari::Activation(amari::parse_kind(a.at("kind").get<std::string>()),
                              {a.value("beta", 1.0), a.value("theta", 0.0)});
    if (j.contains("bracket")) {
      cfg.bracket = std::pair{j.at("bracket").at(0).get<double>(),
                              j.at("bracket").at(1).get<double>()};
    }
    cfg.validate();
    return cfg;
  });
}

json to_json(const amari::FixedPointReport& report) {
  json points = json::array();
  for (const auto& p : report.points) {
    points.push_back(json{{"u0", p.u0},
                          {"stability", amari::stability_name(p.stability)},
                          {"criterion", p.criterion}});
  }
  return json{{"points", points}, {"no_bracket", report.no_bracket}};
}

amari::FixedPointReport report_from_json(const json& j) {
  return guarded("fixed point report", [&] {
    amari::FixedPointReport report;
    for (const auto& p : j.at("points")) {
      report.points.push_back({p.at("u0").get<double>(),
                               amari::parse_stability(p.at("stability").get<std::string>()),
                               p.at("criterion").get<double>()});
    }
    report.no_bracket = j.at("no_bracket").get<bool>();
    return report;
  });
}

}  // namespace dynfield::io
