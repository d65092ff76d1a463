#include "ores/core/element.hpp"

#include "ores/error.hpp"

namespace ores {

AlgebraElement::AlgebraElement(PresentationPtr p) : pres_(std::move(p)) {
  if (!pres_) throw std::invalid_argument("null presentation");
}

AlgebraElement::AlgebraElement(PresentationPtr p, Terms normal_terms)
    : pres_(std::move(p)), terms_(std::move(normal_terms)) {}

AlgebraElement AlgebraElement::scalar(PresentationPtr p, const Scalar& c) {
  Terms t;
  add_term(t, Word{}, c);
  return AlgebraElement(std::move(p), std::move(t));
}

AlgebraElement AlgebraElement::generator(PresentationPtr p, Gen g) {
  if (g >= p->num_generators()) throw std::out_of_range("generator index");
  return word(std::move(p), Word{g});
}

AlgebraElement AlgebraElement::word(PresentationPtr p, const Word& w, const Scalar& c) {
  Terms raw;
  add_term(raw, w, c);
  return normalize(std::move(p), std::move(raw));
}

AlgebraElement AlgebraElement::normalize(PresentationPtr p, Terms raw) {
  for (const auto& [w, c] : raw)
    if (w.degree() > p->degree_cap())
      throw DegreeOverflow("word of degree " + std::to_string(w.degree()) +
                           " exceeds degree cap " + std::to_string(p->degree_cap()));
  Terms nf = p->normalize(std::move(raw));
  return AlgebraElement(std::move(p), std::move(nf));
}

Scalar AlgebraElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

bool AlgebraElement::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

std::size_t AlgebraElement::degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

AlgebraElement AlgebraElement::dagger() const {
  Terms raw;
  for (const auto& [w, c] : terms_) add_term(raw, pres_->dagger(w), c.conj());
  return AlgebraElement(pres_, pres_->normalize(std::move(raw)));
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
  if (c.is_zero()) return AlgebraElement(pres_);
  Terms out = terms_;
  for (auto& [w, v] : out) v *= c;
  return AlgebraElement(pres_, std::move(out));
}

void AlgebraElement::check_same(const AlgebraElement& o) const {
  if (pres_ != o.pres_) throw PresentationMismatch();
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check_same(o);
  for (const auto& [w, c] : o.terms_) add_term(terms_, w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  check_same(o);
  for (const auto& [w, c] : o.terms_) add_term(terms_, w, -c);
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  a.check_same(b);
  const std::size_t cap = a.pres_->degree_cap();
  Terms raw;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      if (wa.degree() + wb.degree() > cap)
        throw DegreeOverflow("product of degree " + std::to_string(wa.degree() + wb.degree()) +
                             " exceeds degree cap " + std::to_string(cap));
      add_term(raw, wa * wb, ca * cb);
    }
  return AlgebraElement(a.pres_, a.pres_->normalize(std::move(raw)));
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.pres_ == b.pres_ && a.terms_ == b.terms_;
}

std::string word_string(const Presentation& p, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.degree(); ++i) {
    if (i) out += '*';
    out += p.name(w[i]);
  }
  return out;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    const bool negative = c.is_real() ? sgn(c.re()) < 0 : false;
    const Scalar mag = negative ? -c : c;
    std::string coeff;
    if (!mag.is_real())
      coeff = "(" + mag.str() + ")";
    else if (!mag.is_one() || w.empty())
      coeff = mag.str();
    std::string term = coeff;
    if (!w.empty()) term += (coeff.empty() ? "" : "*") + word_string(*pres_, w);
    if (first)
      out = negative ? "-" + term : term;
    else
      out += (negative ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

}  // namespace ores
