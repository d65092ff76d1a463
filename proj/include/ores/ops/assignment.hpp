#pragma once

#include <vector>

#include "ores/core/element.hpp"
#include "ores/gns/moments.hpp"
#include "ores/ops/banded.hpp"

namespace ores {

/// Generator -> banded operator. Words act by composition, so the
/// assignment determines pi on all of A through normal forms.
class FockAssignment {
 public:
  FockAssignment(PresentationPtr p, std::vector<BandedOperator> ops);

  /// Heisenberg preset: a -> annihilation, a' -> its adjoint.
  static FockAssignment heisenberg();
  /// C[x] preset: x -> (A + A*)/sqrt(2), the position operator.
  static FockAssignment position();

  const PresentationPtr& presentation() const { return pres_; }
  const BandedOperator& op(Gen g) const { return ops_.at(g); }

  BandedOperator represent(const Word& w) const;
  BandedOperator represent(const AlgebraElement& a) const;

  /// Checks that lhs - rhs of every relation and g' - adjoint(g) of every
  /// generator annihilate e_0 .. e_n exactly. Returns a description of the
  /// first failure, or an empty string.
  std::string check(std::size_t n) const;

 private:
  PresentationPtr pres_;
  std::vector<BandedOperator> ops_;
};

/// <e_0, pi(w) e_0> for all normal words of degree <= 2d.
MomentFunctional vacuum_state(const FockAssignment& assignment, std::size_t degree);

}  // namespace ores
