#pragma once

#include <string>

#include "ores/core/presentation.hpp"

namespace ores {

/// Element of a presented *-algebra in normal form. Canonical: two elements
/// are equal exactly when their term maps are equal.
class AlgebraElement {
 public:
  /// Zero of `p`.
  explicit AlgebraElement(PresentationPtr p);

  static AlgebraElement zero(PresentationPtr p) { return AlgebraElement(std::move(p)); }
  static AlgebraElement one(PresentationPtr p) { return scalar(std::move(p), 1); }
  static AlgebraElement scalar(PresentationPtr p, const Scalar& c);
  static AlgebraElement generator(PresentationPtr p, Gen g);
  static AlgebraElement word(PresentationPtr p, const Word& w, const Scalar& c = 1);
  /// Normal form of a formal combination of words.
  static AlgebraElement normalize(PresentationPtr p, Terms raw);

  const PresentationPtr& presentation() const { return pres_; }
  const Terms& terms() const { return terms_; }
  Scalar coefficient(const Word& w) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const;
  /// Degree of the leading word; 0 for zero and scalars.
  std::size_t degree() const;

  AlgebraElement dagger() const;
  AlgebraElement scaled(const Scalar& c) const;

  AlgebraElement operator-() const { return scaled(-1); }
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const Scalar& c, const AlgebraElement& a) { return a.scaled(c); }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

  /// Plain-text rendering: coefficients, generator names joined by '*'.
  std::string str() const;

 private:
  AlgebraElement(PresentationPtr p, Terms normal_terms);
  void check_same(const AlgebraElement& o) const;

  PresentationPtr pres_;
  Terms terms_;
};

inline AlgebraElement add(const AlgebraElement& u, const AlgebraElement& v) { return u + v; }
inline AlgebraElement scale(const Scalar& c, const AlgebraElement& u) { return u.scaled(c); }
inline AlgebraElement mul(const AlgebraElement& u, const AlgebraElement& v) { return u * v; }
inline AlgebraElement dagger(const AlgebraElement& u) { return u.dagger(); }

/// Generator names of `w` joined by `*`; "1" for the empty word.
std::string word_string(const Presentation& p, const Word& w);

}  // namespace ores
