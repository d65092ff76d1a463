#include "ores/loc/sproduct.hpp"

#include "ores/error.hpp"

namespace ores {

AlgebraElement s_factor_value(const AlgebraElement& p) {
  return AlgebraElement::one(p.presentation()) + p.dagger() * p;
}

SProduct::SProduct(PresentationPtr pres, std::vector<SFactor> factors, AlgebraElement value)
    : pres_(std::move(pres)), factors_(std::move(factors)), value_(std::move(value)) {}

SProduct SProduct::one(PresentationPtr p) {
  auto v = AlgebraElement::one(p);
  return SProduct(std::move(p), {}, std::move(v));
}

SProduct SProduct::factor(const AlgebraElement& p) {
  auto v = s_factor_value(p);
  return SProduct(p.presentation(), {SFactor{p, v}}, v);
}

SProduct SProduct::from_factors(PresentationPtr pres, const std::vector<AlgebraElement>& ps) {
  SProduct out = one(pres);
  for (const auto& p : ps) {
    if (p.presentation() != pres) throw PresentationMismatch();
    out = out * factor(p);
  }
  return out;
}

SProduct SProduct::operator*(const SProduct& rhs) const {
  if (pres_ != rhs.pres_) throw PresentationMismatch();
  if (rhs.empty()) return *this;
  if (empty()) return rhs;
  std::vector<SFactor> f = factors_;
  f.insert(f.end(), rhs.factors_.begin(), rhs.factors_.end());
  return SProduct(pres_, std::move(f), value_ * rhs.value_);
}

SProduct SProduct::dagger() const {
  if (factors_.size() < 2) return *this;
  std::vector<SFactor> f(factors_.rbegin(), factors_.rend());
  auto v = value_.dagger();
  return SProduct(pres_, std::move(f), std::move(v));
}

bool operator==(const SProduct& a, const SProduct& b) {
  if (a.pres_ != b.pres_ || a.factors_.size() != b.factors_.size()) return false;
  for (std::size_t i = 0; i < a.factors_.size(); ++i)
    if (!(a.factors_[i].p == b.factors_[i].p)) return false;
  return true;
}

}  // namespace ores
