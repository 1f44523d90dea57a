#include <iomanip>
#include <ostream>
#include <sstream>

#include "dynfield/cli.hpp"
#include "dynfield/error.hpp"
#include "dynfield/io.hpp"
#include "dynfield/svg.hpp"

namespace dynfield::cli {

namespace {

using io::json;

void require_format(const RunConfig& cfg) {
  if (cfg.format != "json" && cfg.format != "table") {
    throw InvalidArgument("--format must be json or table");
  }
}

goedel::NdaMachine load_nda(const RunConfig& cfg) {
  return io::nda_from_json(io::read_json_file(cfg.input));
}

dfa::RectMacrostate initial_macrostate(const RunConfig& cfg, const goedel::NdaMachine& m) {
  const auto& a = *m.coding().alphabet();
  const auto stack = a.parse_word(cfg.stack.value_or(""));
  const auto input = a.parse_word(cfg.tape);
  return dfa::RectMacrostate::uniform(goedel::cylinder_rect(stack, input, m.coding()));
}

std::string snapshot_name(std::size_t t, bool binary) {
  std::ostringstream name;
  name << "density_t" << std::setw(3) << std::setfill('0') << t
       << (binary ? ".bin" : ".json");
  return name.str();
}

// Writes grid snapshots of the evolved rasterized macrostate and reports
// whether they match the rasterized exact orbit bit for bit.
bool write_grid_snapshots(const RunConfig& cfg, const goedel::NdaMachine& m,
                          const std::vector<dfa::RectMacrostate>& orbit, std::ostream& out) {
  const auto n = *cfg.grid;
  const auto op = dfa::build_transfer_operator(m, n);
  auto density = dfa::GridDensity::rasterize(orbit.front(), n);
  bool exact = true;
  for (std::size_t t = 0; t < orbit.size(); ++t) {
    if (t > 0) density = dfa::fp_apply(op, density);
    exact = exact && density == dfa::GridDensity::rasterize(orbit[t], n);
    const auto path = cfg.out / snapshot_name(t, cfg.binary);
    io::write_text_file(path, cfg.binary ? io::density_to_binary(density)
                                         : io::to_json(density).dump() + "\n");
  }
  out << "grid n = " << n << ": " << orbit.size() << " snapshots, "
      << (exact ? "identical to" : "DIFFERENT from") << " the rasterized exact orbit\n";
  return exact;
}

}  // namespace

int cmd_parse(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg);
  const io::Definition def = io::load_definition(io::read_json_file(cfg.input));
  const auto gs = def.shift();
  const auto trace = symbolic::gs_run(gs, def.initial(cfg.stack, cfg.tape), cfg.steps);

  const std::string jsonl = io::trace_jsonl(trace);
  const std::string table = io::trace_table(trace);
  io::write_text_file(cfg.out / "trace.jsonl", jsonl);
  io::write_text_file(cfg.out / "trace.txt", table);
  out << (cfg.format == "json" ? jsonl : table);

  switch (trace.outcome) {
    case symbolic::Outcome::kAccept:
    case symbolic::Outcome::kHalt: return kAccept;
    case symbolic::Outcome::kReject: return kReject;
    case symbolic::Outcome::kBudgetExhausted: return kBudgetExhausted;
  }
  return kReject;
}

int cmd_compile(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg);
  const io::Definition def = io::load_definition(io::read_json_file(cfg.input));
  if (!def.coding) {
    throw InvalidArgument("definition has no 'coding' block (needed to compile an NDA)");
  }
  const auto nda = goedel::compile_nda(def.shift(), *def.coding);
  const json j = io::to_json(nda);
  io::write_text_file(cfg.out / "nda.json", j.dump(2) + "\n");
  if (cfg.svg) {
    io::write_text_file(cfg.out / "dod.svg", svg::render_partition(nda, svg::Panel::kDomains));
    io::write_text_file(cfg.out / "doe.svg", svg::render_partition(nda, svg::Panel::kEffects));
  }
  if (cfg.format == "json") {
    out << j.dump(2) << "\n";
    return kOk;
  }
  const auto& c = nda.coding();
  out << "branches: " << nda.branches().size() << "\n"
      << "background partition: " << c.stack_base() * c.input_base()
      << " rectangles (b_L = " << c.stack_base() << ", b_R = " << c.input_base() << ")\n";
  for (const auto& e : goedel::dod_doe_report(nda)) {
    out << "  " << e.label << ": " << e.cell.to_string() << " -> " << e.image.to_string()
        << "\n";
  }
  return kOk;
}

int cmd_dfa(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg);
  const auto nda = load_nda(cfg);
  const auto r0 = initial_macrostate(cfg, nda);
  const auto orbit = dfa::dfa_orbit(nda, r0, cfg.steps);
  const json j = io::to_json(orbit);
  io::write_text_file(cfg.out / "orbit.json", j.dump(2) + "\n");
  if (cfg.svg) {
    io::write_text_file(cfg.out / "orbit.svg", svg::render_orbit(nda, orbit));
    io::write_text_file(cfg.out / "dod.svg", svg::render_partition(nda, svg::Panel::kDomains));
    io::write_text_file(cfg.out / "doe.svg", svg::render_partition(nda, svg::Panel::kEffects));
  }
  if (cfg.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    for (std::size_t t = 0; t < orbit.size(); ++t) {
      out << std::setw(4) << t << "  " << orbit[t].support.to_string()
          << "  u = " << display(orbit[t].weight) << "\n";
    }
  }
  if (cfg.grid) write_grid_snapshots(cfg, nda, orbit, out);
  return kOk;
}

int cmd_grid(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.grid) throw InvalidArgument("grid: --grid <n> is required");
  const auto nda = load_nda(cfg);
  const auto op = dfa::build_transfer_operator(nda, *cfg.grid);
  io::write_text_file(cfg.out / "operator.json", io::to_json(op).dump() + "\n");
  std::size_t nnz = 0;
  for (const auto& row : op.rows()) nnz += row.size();
  out << "transfer operator n = " << op.n() << ": " << op.size() << " rows, " << nnz
      << " entries, every row sums to 1\n";
  if (cfg.stack || !cfg.tape.empty()) {
    const auto orbit = dfa::dfa_orbit(nda, initial_macrostate(cfg, nda), cfg.steps);
    write_grid_snapshots(cfg, nda, orbit, out);
  }
  return kOk;
}

int cmd_stability(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg);
  amari::ConstantFieldConfig field;
  try {
    field = io::field_config_from_json(io::read_json_file(cfg.input));
  } catch (const Error& e) {
    throw InvalidArgument(std::string("invalid field config: ") + e.what());
  }
  const auto report = amari::find_fixed_points(field);
  const json j = io::to_json(report);
  io::write_text_file(cfg.out / "fixed_points.json", j.dump(2) + "\n");

  // u against |A| w f(u) over the scan bracket, for plotting.
  std::ostringstream curve;
  curve << std::setprecision(12) << "u,gain_f_u\n";
  const auto [lo, hi] = field.scan_bracket();
  for (int i = 0; i <= 400; ++i) {
    const double u = lo + (hi - lo) * i / 400.0;
    curve << u << "," << field.gain() * field.f(u) << "\n";
  }
  io::write_text_file(cfg.out / "stability_curve.csv", curve.str());

  if (cfg.u0) {
    const auto traj = amari::integrate(field, *cfg.u0, cfg.dt, cfg.steps);
    std::ostringstream csv;
    csv << std::setprecision(12) << "t,u\n";
    for (std::size_t k = 0; k < traj.size(); ++k) csv << k * cfg.dt << "," << traj[k] << "\n";
    io::write_text_file(cfg.out / "trajectory.csv", csv.str());
  }

  if (cfg.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << "u0                  stability  |A| w f'(u0)\n";
    for (const auto& p : report.points) {
      out << std::left << std::setw(20) << std::setprecision(12) << p.u0 << std::setw(11)
          << amari::stability_name(p.stability) << p.criterion << "\n";
    }
    if (report.no_bracket) out << "no sign change found on the scan bracket\n";
  }
  return kOk;
}

int cmd_render(const RunConfig& cfg, std::ostream& out) {
  const auto nda = load_nda(cfg);
  io::write_text_file(cfg.out / "dod.svg", svg::render_partition(nda, svg::Panel::kDomains));
  io::write_text_file(cfg.out / "doe.svg", svg::render_partition(nda, svg::Panel::kEffects));
  out << "wrote " << (cfg.out / "dod.svg").string() << ", " << (cfg.out / "doe.svg").string()
      << "\n";
  if (cfg.stack || !cfg.tape.empty()) {
    const auto orbit = dfa::dfa_orbit(nda, initial_macrostate(cfg, nda), cfg.steps);
    io::write_text_file(cfg.out / "orbit.svg", svg::render_orbit(nda, orbit));
    out << "wrote " << (cfg.out / "orbit.svg").string() << "\n";
  }
  return kOk;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.grid && *cfg.grid == 0) throw InvalidArgument("--grid must be positive");
    if (cfg.command == "parse") return cmd_parse(cfg, out);
    if (cfg.command == "compile") return cmd_compile(cfg, out);
    if (cfg.command == "dfa") return cmd_dfa(cfg, out);
    if (cfg.command == "grid") return cmd_grid(cfg, out);
    if (cfg.command == "stability") return cmd_stability(cfg, out);
    if (cfg.command == "render") return cmd_render(cfg, out);
    throw InvalidArgument("unknown command '" + cfg.command + "'");
  } catch (const StraddlesPartition& e) {
    err << "error: inconsistent macrostate: " << e.what() << "\n";
    return kInconsistentMacrostate;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace dynfield::cli
