#include "ores/gns/positivity.hpp"

#include "ores/error.hpp"

namespace ores {

AlgebraElement certificate_value(const PresentationPtr& p, const PositivityCertificate& c) {
  AlgebraElement sum = AlgebraElement::zero(p);
  for (const auto& [lambda, a] : c.terms) {
    if (a.presentation() != p) throw PresentationMismatch();
    sum += (a.dagger() * a).scaled(lambda);
  }
  return sum;
}

bool verify_certificate(const AlgebraElement& x, const PositivityCertificate& c) {
  for (const auto& [lambda, a] : c.terms)
    if (!lambda.is_real() || sgn(lambda.re()) <= 0) return false;
  try {
    return certificate_value(x.presentation(), c) == x;
  } catch (const PresentationMismatch&) {
    return false;
  }
}

FactorCertificate factor_certificate(const AlgebraElement& b) {
  const AlgebraElement btb = b.dagger() * b;
  const AlgebraElement s = AlgebraElement::one(b.presentation()) + btb;
  FactorCertificate out{b, s * s - AlgebraElement::one(b.presentation()), {}};
  out.certificate.terms = {{Scalar(2), b}, {Scalar(1), btb}};
  return out;
}

CofinalDominator cofinal_dominator(const AlgebraElement& a, const SProduct& s) {
  if (a.presentation() != s.presentation()) throw PresentationMismatch();
  CofinalDominator out{LeftFraction{s, a}, a.dagger() * a, {}};
  for (const auto& f : s.factors()) out.chain.push_back(factor_certificate(f.p));
  return out;
}

CofinalDominator cofinal_dominator(const Fraction& f, const SearchBudget& budget) {
  LeftFraction left = to_left_fraction(f, budget);
  return cofinal_dominator(left.a, left.s);
}

bool verify_dominator(const CofinalDominator& d) {
  if (!(d.dominator == d.left.a.dagger() * d.left.a)) return false;
  if (d.chain.size() != d.left.s.size()) return false;
  for (std::size_t i = 0; i < d.chain.size(); ++i) {
    const auto& link = d.chain[i];
    if (!(link.b == d.left.s.factors()[i].p)) return false;
    if (!verify_certificate(link.value, link.certificate)) return false;
    const auto& v = d.left.s.factors()[i].value;
    if (!(link.value == v * v - AlgebraElement::one(v.presentation()))) return false;
  }
  return true;
}

}  // namespace ores
