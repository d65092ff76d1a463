#include "ores/core/regularity.hpp"

#include "ores/core/echelon.hpp"
#include "ores/error.hpp"

namespace ores {

namespace {

std::optional<AlgebraElement> kernel_vector(const AlgebraElement& s, const std::vector<Word>& basis,
                                            bool left) {
  const auto& p = s.presentation();
  EchelonBasis echelon;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const AlgebraElement w = AlgebraElement::word(p, basis[j]);
    const AlgebraElement col = left ? s * w : w * s;
    auto dep = echelon.insert(j, col.terms());
    if (!dep) continue;
    Terms raw;
    for (const auto& [k, c] : *dep) add_term(raw, basis[k], c);
    // Normalise: deglex-smallest word gets coefficient 1.
    const Scalar inv = Scalar(1) / raw.begin()->second;
    for (auto& [w2, c] : raw) c *= inv;
    return AlgebraElement::normalize(p, std::move(raw));
  }
  return std::nullopt;
}

}  // namespace

RegularityResult is_regular_up_to(const AlgebraElement& s, std::size_t d) {
  const auto& p = s.presentation();
  if (d + s.degree() > p->degree_cap())
    throw DegreeOverflow("regularity depth " + std::to_string(d) + " with deg(s) = " +
                         std::to_string(s.degree()) + " exceeds degree cap " +
                         std::to_string(p->degree_cap()));
  if (s.is_zero()) return ZeroDivisorWitness{AlgebraElement::one(p), ZeroDivisorWitness::Side::Left};
  const auto basis = p->normal_words(d);
  if (auto a = kernel_vector(s, basis, true)) return ZeroDivisorWitness{*a, ZeroDivisorWitness::Side::Left};
  if (auto a = kernel_vector(s, basis, false)) return ZeroDivisorWitness{*a, ZeroDivisorWitness::Side::Right};
  return RegularUpTo{d};
}

}  // namespace ores
