#pragma once

// JSON/JSONL/binary serialization for definitions, traces, NDAs, orbits,
// transfer operators, densities and stability reports. Rationals travel as
// "num/den" strings. Loader failures throw InvalidArgument.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "dynfield/amari.hpp"
#include "dynfield/field_automaton.hpp"
#include "dynfield/goedel.hpp"
#include "dynfield/symbolic.hpp"

namespace dynfield::io {

using nlohmann::json;

/// A machine or grammar definition plus its optional Goedel coding.
struct Definition {
  std::variant<symbolic::ContextFreeGrammar, symbolic::TuringMachine> machine;
  std::optional<goedel::GoedelCoding> coding;
  /// Grammars only: symbols that get attach rules (defaults to terminals).
  std::vector<std::string> attach;

  bool is_grammar() const {
    return std::holds_alternative<symbolic::ContextFreeGrammar>(machine);
  }
  const symbolic::AlphabetPtr& alphabet() const;
  symbolic::GeneralizedShift shift() const;
  /// Start stack word: the start symbol or [q0] unless overridden.
  symbolic::DottedSequence initial(const std::optional<std::string>& stack,
                                   std::string_view tape) const;
};

Definition load_definition(const json& j);
json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

json trace_record(const symbolic::TraceEntry& entry);
std::string trace_jsonl(const symbolic::Trace& trace);
/// Human-readable table with columns time | state | operation.
std::string trace_table(const symbolic::Trace& trace);

json to_json(const goedel::Rect& r);
goedel::Rect rect_from_json(const json& j);

json to_json(const goedel::GoedelCoding& c);
goedel::GoedelCoding coding_from_json(const json& j, symbolic::AlphabetPtr alphabet);

json to_json(const goedel::NdaMachine& m);
goedel::NdaMachine nda_from_json(const json& j);

json to_json(const std::vector<dfa::RectMacrostate>& orbit);
std::vector<dfa::RectMacrostate> orbit_from_json(const json& j);

json to_json(const dfa::TransferOperator& op);

json to_json(const dfa::GridDensity& d);
dfa::GridDensity density_from_json(const json& j);
/// Little-endian: uint32 n, uint32 reserved (0), then n*n float64 values.
std::string density_to_binary(const dfa::GridDensity& d);
dfa::GridDensity density_from_binary(std::string_view bytes);

json to_json(const amari::ConstantFieldConfig& cfg);
amari::ConstantFieldConfig field_config_from_json(const json& j);
json to_json(const amari::FixedPointReport& report);
amari::FixedPointReport report_from_json(const json& j);

std::string_view kind_name(symbolic::RuleKind kind);
symbolic::RuleKind parse_rule_kind(std::string_view name);

}  // namespace dynfield::io
