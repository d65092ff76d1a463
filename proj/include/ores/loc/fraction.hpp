#pragma once

#include "ores/loc/sproduct.hpp"

namespace ores {

/// Right fraction [a, s] = a s^{-1}. There is no canonical form; compare
/// with eq_fraction.
///
/// The public constructor does not re-check regularity: products of regular
/// elements are regular, so fractions produced by the localisation
/// operations from checked operands stay valid. Untrusted input goes
/// through `make`.
class Fraction {
 public:
  Fraction(AlgebraElement num, SProduct den);

  /// Checks that den.value() is regular up to min(depth, cap - deg) and
  /// throws IrregularDenominator otherwise.
  static Fraction make(AlgebraElement num, SProduct den, std::size_t regularity_depth);

  const AlgebraElement& num() const { return num_; }
  const SProduct& den() const { return den_; }
  const PresentationPtr& presentation() const { return num_.presentation(); }

 private:
  AlgebraElement num_;
  SProduct den_;
};

/// The canonical map a -> [a, 1].
Fraction embed(const AlgebraElement& a);

/// Throws IrregularDenominator if `s` has a zero-divisor witness up to the
/// clamped depth.
void require_regular(const AlgebraElement& s, std::size_t depth);

}  // namespace ores
