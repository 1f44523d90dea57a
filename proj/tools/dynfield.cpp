// dynfield: command-line front end.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dynfield/cli.hpp"

namespace {

void add_common(CLI::App* sub, dynfield::cli::RunConfig& cfg) {
  sub->add_option("input,--input", cfg.input, "input file")->required();
  sub->add_option("--out", cfg.out, "output directory")->capture_default_str();
  sub->add_option("--format", cfg.format, "stdout format: json or table")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
}

void add_start(CLI::App* sub, dynfield::cli::RunConfig& cfg) {
  sub->add_option("--stack", cfg.stack, "initial stack word, top first");
  sub->add_option("--tape", cfg.tape, "initial input word, e.g. \"NP V NP\"");
  sub->add_option("--steps", cfg.steps, "step budget")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  dynfield::cli::RunConfig cfg;
  CLI::App app{"Symbolic machines, nonlinear dynamical automata and dynamic field automata"};
  app.require_subcommand(1);

  auto* parse = app.add_subcommand("parse", "run a grammar or Turing machine as a generalized shift");
  add_common(parse, cfg);
  add_start(parse, cfg);

  auto* compile = app.add_subcommand("compile", "compile a definition into an NDA (nda.json)");
  add_common(compile, cfg);
  compile->add_flag("--svg", cfg.svg, "also write dod.svg and doe.svg");

  auto* dfa = app.add_subcommand("dfa", "evolve a uniform macrostate under an NDA");
  add_common(dfa, cfg);
  add_start(dfa, cfg);
  dfa->add_option("--grid", cfg.grid, "also evolve on an n x n grid");
  dfa->add_flag("--binary", cfg.binary, "grid snapshots as raw float64");
  dfa->add_flag("--svg", cfg.svg, "also write orbit.svg, dod.svg and doe.svg");

  auto* grid = app.add_subcommand("grid", "build the discretized transfer operator");
  add_common(grid, cfg);
  add_start(grid, cfg);
  grid->add_option("--grid", cfg.grid, "grid resolution n")->required();
  grid->add_flag("--binary", cfg.binary, "grid snapshots as raw float64");

  auto* stability = app.add_subcommand("stability", "fixed points of a constant Amari field");
  add_common(stability, cfg);
  stability->add_option("--u0", cfg.u0, "also integrate from this initial value");
  stability->add_option("--dt", cfg.dt, "Euler step")->capture_default_str();
  stability->add_option("--steps", cfg.steps, "Euler steps")->capture_default_str();

  auto* render = app.add_subcommand("render", "draw partitions (and an orbit) as SVG");
  add_common(render, cfg);
  add_start(render, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : dynfield::cli::kInvalidInput;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return dynfield::cli::run(cfg, std::cout, std::cerr);
}
