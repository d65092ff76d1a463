#pragma once

#include <variant>

#include "ores/core/element.hpp"

namespace ores {

struct RegularUpTo {
  std::size_t depth;
};

/// Nonzero `a` with s*a = 0 (side Left) or a*s = 0 (side Right).
struct ZeroDivisorWitness {
  enum class Side { Left, Right };
  AlgebraElement a;
  Side side;
};

using RegularityResult = std::variant<RegularUpTo, ZeroDivisorWitness>;

/// Exact check that a -> s*a and a -> a*s are injective on elements of
/// degree <= d. Requires d + deg(s) <= degree cap (DegreeOverflow otherwise).
/// A witness is scaled so that its deglex-smallest word has coefficient 1.
RegularityResult is_regular_up_to(const AlgebraElement& s, std::size_t d);

inline bool is_regular(const RegularityResult& r) {
  return std::holds_alternative<RegularUpTo>(r);
}

}  // namespace ores
