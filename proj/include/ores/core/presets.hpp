#pragma once

#include <string>
#include <vector>

#include "ores/core/presentation.hpp"

namespace ores::presets {

/// C[x], x hermitian, no relations.
PresentationPtr polynomial_x();
/// C[x, y], commuting hermitian generators: y*x -> x*y.
PresentationPtr commuting_xy();
/// Heisenberg algebra <a, a'> with a*a' -> a'*a + 1 (normal ordering).
/// Generator order is (a', a) so that the rule is deglex-decreasing.
PresentationPtr heisenberg();
/// Free *-algebra C<x, y> on two hermitian generators.
PresentationPtr free_xy();
/// C[e] / (e*e = e), e hermitian: an algebra with zero divisors.
PresentationPtr idempotent();

/// Looks up a preset by its CLI name: cx, cxy, heisenberg, free, idempotent.
PresentationPtr by_name(const std::string& name);
std::vector<std::string> names();

}  // namespace ores::presets
