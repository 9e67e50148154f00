#pragma once

#include "acta/predicate.hpp"
#include "acta/semantics.hpp"

#include <string>
#include <vector>

namespace acta {

/// A product of per-variable value sets: allowed[var][value].
struct cube {
  std::vector<std::vector<bool>> allowed;
};

/// Cover of `p` by prime cubes, greedy in state order, with redundant cubes
/// dropped. Deterministic for a given predicate.
std::vector<cube> minimize(const predicate& p);

/// Canonical readable form, e.g. `light=green & loc in {C, D} | loc=A`.
/// The text parses back (as a predicate) to `p`.
std::string describe(const predicate& p);

std::string describe(const cube& c, const state_space& space);

/// `abort`, `miracle`, or `{(light=green, loc=C), ...}`.
std::string describe(const outcome& o, const state_space& space);

} // namespace acta
