#pragma once

// Deterministic SVG renderings of symbologram partitions and macrostate
// orbits. Coordinates are printed with 12 significant digits.

#include <string>
#include <vector>

#include "dynfield/field_automaton.hpp"
#include "dynfield/goedel.hpp"

namespace dynfield::svg {

enum class Panel { kDomains, kEffects };

/// Domains of dependence (cells) or domains of effect (cell images), over the
/// b_L x b_R background partition. Predict gray, attach black, identity white.
std::string render_partition(const goedel::NdaMachine& m, Panel panel);

/// One panel per macrostate, left to right.
std::string render_orbit(const goedel::NdaMachine& m,
                         const std::vector<dfa::RectMacrostate>& orbit);

}  // namespace dynfield::svg
