#pragma once

#include <vector>

#include "ores/core/element.hpp"

namespace ores {

/// One generator 1 + p'p of the multiplicative set, with p recorded.
struct SFactor {
  AlgebraElement p;
  AlgebraElement value;
};

/// Element of S given by an explicit ordered factorisation
/// (1 + p1'p1)(1 + p2'p2)...; the empty product is 1. Membership in S is
/// therefore syntactic.
class SProduct {
 public:
  static SProduct one(PresentationPtr p);
  static SProduct factor(const AlgebraElement& p);
  static SProduct from_factors(PresentationPtr pres, const std::vector<AlgebraElement>& ps);

  const PresentationPtr& presentation() const { return pres_; }
  const std::vector<SFactor>& factors() const { return factors_; }
  const AlgebraElement& value() const { return value_; }
  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }

  /// Concatenated factorisation; value is the product of values.
  SProduct operator*(const SProduct& rhs) const;
  /// Each factor is hermitian, so the dagger only reverses the factor order.
  SProduct dagger() const;

  friend bool operator==(const SProduct& a, const SProduct& b);

 private:
  SProduct(PresentationPtr pres, std::vector<SFactor> factors, AlgebraElement value);

  PresentationPtr pres_;
  std::vector<SFactor> factors_;
  AlgebraElement value_;
};

/// 1 + p'p in normal form.
AlgebraElement s_factor_value(const AlgebraElement& p);

}  // namespace ores
