// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "dynfield/amari.hpp"
#include "dynfield/cli.hpp"
#include "dynfield/field_automaton.hpp"
#include "support.hpp"

using namespace testing;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Verdict parse_trace() {
  Verdict v;
  const auto dir = std::filesystem::temp_directory_path() / "dynfield_acceptance";
  std::filesystem::remove_all(dir);
  cli::RunConfig cfg;
  cfg.command = "parse";
  cfg.input = data_path("grammar.json");
  cfg.tape = "NP V NP";
  cfg.out = dir;
  std::ostringstream out, err;
  const auto start = std::chrono::steady_clock::now();
  const int code = cli::run(cfg, out, err);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.require(code == cli::kAccept, "exit code " + std::to_string(code));
  v.require(slurp((dir / "trace.txt").string()) ==
                slurp(std::string(DYNFIELD_GOLDEN_DIR) + "/parse_np_v_np.txt"),
            "trace differs from golden file");
  v.require(secs < 1.0, "took " + std::to_string(secs) + " s");
  return v;
}

Verdict commutation() {
  Verdict v;
  Example ex;
  std::mt19937_64 rng(2024);
  const auto start = std::chrono::steady_clock::now();
  int matched = 0;
  while (matched < 1000) {
    const auto s = random_sequence(rng, ex.coding, 6, 8);
    const auto step = symbolic::gs_step(ex.gs, s);
    if (!step) continue;
    ++matched;
    v.require(goedel::encode(step->next, ex.coding) ==
                  goedel::nda_step(ex.nda, goedel::encode(s, ex.coding)),
              "mismatch at " + s.to_string());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.require(secs < 10.0, "took " + std::to_string(secs) + " s");
  v.detail = v.ok ? std::to_string(matched) + " sequences" : v.detail;
  return v;
}

Verdict rectangle_orbit() {
  Verdict v;
  Example ex;
  const auto orbit =
      dfa::dfa_orbit(ex.nda, dfa::RectMacrostate::uniform(rect("3/4", "1", "1/4", "3/8")), 5);
  const std::vector<goedel::Rect> expected{
      rect("3/4", "1", "1/4", "3/8"),   rect("1/8", "3/16", "1/4", "3/8"),
      rect("1/2", "3/4", "1/2", "3/4"), rect("1/4", "5/16", "1/2", "3/4"),
      rect("0", "1/4", "0", "1/2"),     rect("0", "1", "0", "1")};
  v.require(orbit.size() == expected.size(), "orbit length");
  for (std::size_t t = 0; v.ok && t < orbit.size(); ++t) {
    v.require(orbit[t].support == expected[t], "support at t = " + std::to_string(t));
    v.require(orbit[t].weight * orbit[t].support.area() == 1,
              "weight at t = " + std::to_string(t));
  }
  return v;
}

Verdict transfer_operator() {
  Verdict v;
  Example ex;
  const auto orbit =
      dfa::dfa_orbit(ex.nda, dfa::RectMacrostate::uniform(rect("3/4", "1", "1/4", "3/8")), 5);
  const auto op = dfa::build_transfer_operator(ex.nda, 64);
  for (std::size_t s = 0; s < op.size(); ++s) {
    double sum = 0;
    for (const auto& e : op.row(s)) sum += e.weight;
    v.require(std::abs(sum - 1.0) <= 1e-12, "row " + std::to_string(s) + " sum");
  }
  auto d = dfa::GridDensity::rasterize(orbit.front(), 64);
  for (std::size_t t = 1; t < orbit.size(); ++t) {
    d = dfa::fp_apply(op, d);
    v.require(d == dfa::GridDensity::rasterize(orbit[t], 64), "snapshot " + std::to_string(t));
  }
  return v;
}

Verdict tm_emulation() {
  Verdict v;
  std::mt19937_64 rng(99);
  int machines = 0;
  for (; machines < 200 && v.ok; ++machines) {
    const symbolic::TuringMachine tm(random_machine(rng));
    const auto gs = symbolic::tm_to_gs(tm);
    Word tape(std::uniform_int_distribution<int>(0, 6)(rng));
    for (auto& s : tape) {
      s = tm.tape_symbols()[std::uniform_int_distribution<std::size_t>(
          0, tm.tape_symbols().size() - 1)(rng)];
    }
    auto s = tm.start(tape);
    for (int t = 0; t < 50; ++t) {
      const auto a = symbolic::tm_step(tm, s);
      const auto b = symbolic::gs_step(gs, s);
      v.require(a.has_value() == b.has_value(), "halting differs");
      if (!a || !b) break;
      v.require(*a == b->next, "state description differs at " + s.to_string());
      s = *a;
    }
  }
  if (v.ok) v.detail = std::to_string(machines) + " machines";
  return v;
}

Verdict stability() {
  Verdict v;
  amari::ConstantFieldConfig cfg;
  cfg.f = amari::Activation(amari::ActivationKind::kSigmoid, {10.0, 0.5});
  const auto pts = amari::find_fixed_points(cfg).points;
  v.require(pts.size() == 3, std::to_string(pts.size()) + " fixed points");
  if (!v.ok) return v;
  v.require(pts[0].stability == amari::Stability::kStable &&
                pts[1].stability == amari::Stability::kUnstable &&
                pts[2].stability == amari::Stability::kStable,
            "stability pattern");
  v.require(std::abs(amari::integrate(cfg, 0.4, 0.1, 2000).back() - pts[0].u0) < 1e-6,
            "Euler from 0.4");
  v.require(std::abs(amari::integrate(cfg, 0.6, 0.1, 2000).back() - pts[2].u0) < 1e-6,
            "Euler from 0.6");
  for (const auto& p : pts) {
    const double h = 1e-6;
    const double slope = (cfg.gain() * (cfg.f(p.u0 + h) - cfg.f(p.u0 - h))) / (2 * h);
    v.require(std::abs(slope - p.criterion) <= 1e-4 * std::abs(p.criterion),
              "criterion vs finite difference");
    v.require((slope - 1 < 0) == (p.criterion < 1), "sign of the slope");
  }
  return v;
}

Verdict coverage() {
  // Everything quantitative is covered by the oracle-equivalence criteria
  // above; nothing beyond the parse trace is printed as a number to match.
  Verdict v;
  v.detail = "no further quantitative targets";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"parse trace matches the golden table", parse_trace},
      {"encode and shift commute exactly", commutation},
      {"rectangle orbit of the worked example", rectangle_orbit},
      {"grid transfer operator reproduces the orbit", transfer_operator},
      {"Turing machine emulation", tm_emulation},
      {"bistable field stability", stability},
      {"no unreproduced quantitative claims", coverage},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    failed += !v.ok;
    std::cout << (v.ok ? "PASS  " : "FAIL  ") << name
              << (v.detail.empty() ? "" : "  (" + v.detail + ")") << "\n";
  }
  return failed == 0 ? 0 : 1;
}
