#include "ores/loc/fraction.hpp"

#include "ores/core/regularity.hpp"
#include "ores/error.hpp"

namespace ores {

Fraction::Fraction(AlgebraElement num, SProduct den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.presentation() != den_.presentation()) throw PresentationMismatch();
}

void require_regular(const AlgebraElement& s, std::size_t depth) {
  const std::size_t cap = s.presentation()->degree_cap();
  const std::size_t d = std::min(depth, cap - std::min(cap, s.degree()));
  auto r = is_regular_up_to(s, d);
  if (auto* w = std::get_if<ZeroDivisorWitness>(&r))
    throw IrregularDenominator("denominator " + s.str() + " is a zero divisor: witness " +
                               w->a.str());
}

Fraction Fraction::make(AlgebraElement num, SProduct den, std::size_t regularity_depth) {
  require_regular(den.value(), regularity_depth);
  return Fraction(std::move(num), std::move(den));
}

Fraction embed(const AlgebraElement& a) { return Fraction(a, SProduct::one(a.presentation())); }

}  // namespace ores
