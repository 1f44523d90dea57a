#include "dynfield/error.hpp"
#include "dynfield/field_automaton.hpp"

namespace dynfield::dfa {

RectMacrostate RectMacrostate::uniform(const Rect& support) {
  return RectMacrostate{support, Rational(1) / support.area()};
}

std::optional<std::size_t> branch_for(const NdaMachine& m, const Rect& r,
                                      std::size_t step) {
  std::optional<std::size_t> found;
  const auto& branches = m.branches();
  for (std::size_t i = 0; i < branches.size(); ++i) {
    if (!branches[i].cell.overlaps(r)) continue;
    if (found || !branches[i].cell.contains(r)) {
      throw StraddlesPartition("macrostate " + r.to_string() + " at step " +
                                   std::to_string(step) +
                                   " is not contained in a single partition cell",
                               step);
    }
    found = i;
  }
  return found;
}

namespace {

RectMacrostate step_at(const NdaMachine& m, const RectMacrostate& r, std::size_t t) {
  if (r.weight * r.support.area() != 1) {
    throw InvalidArgument("macrostate weight must equal 1 / area(support)");
  }
  const auto branch = branch_for(m, r.support, t);
  if (!branch) return r;
  return RectMacrostate::uniform(m.branches()[*branch].image(r.support));
}

}  // namespace

RectMacrostate dfa_step(const NdaMachine& m, const RectMacrostate& r) {
  return step_at(m, r, 0);
}

std::vector<RectMacrostate> dfa_orbit(const NdaMachine& m, const RectMacrostate& r0,
                                      std::size_t steps) {
  std::vector<RectMacrostate> orbit{r0};
  orbit.reserve(steps + 1);
  for (std::size_t t = 0; t < steps; ++t) orbit.push_back(step_at(m, orbit.back(), t));
  return orbit;
}

}  // namespace dynfield::dfa
