#include "ores/ops/surd.hpp"

#include <cmath>
#include <stdexcept>

namespace ores {

std::pair<mpz_class, mpz_class> square_part(const mpz_class& m) {
  mpz_class rest = m, s = 1, f = 1;
  for (unsigned long p = 2; p <= 100000; ++p) {
    if (rest == 1) break;
    mpz_class pp = p;
    if (pp * pp > rest) break;
    unsigned count = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      ++count;
    }
    for (unsigned k = 0; k < count / 2; ++k) s *= p;
    if (count % 2) f *= p;
  }
  if (mpz_perfect_square_p(rest.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
    s *= r;
  } else {
    f *= rest;
  }
  return {s, f};
}

Surd::Surd(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(mpz_class(1), c);
}

Surd Surd::sqrt(const mpq_class& q) {
  if (sgn(q) < 0) throw std::domain_error("square root of a negative rational");
  Surd out;
  if (sgn(q) == 0) return out;
  // sqrt(p/d) = sqrt(p*d) / d
  const auto [s, f] = square_part(q.get_num() * q.get_den());
  out.add(f, Scalar(mpq_class(s, q.get_den())));
  return out;
}

void Surd::add(const mpz_class& radicand, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(radicand, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<Scalar> Surd::rational() const {
  if (terms_.empty()) return Scalar();
  if (terms_.size() == 1 && terms_.begin()->first == 1) return terms_.begin()->second;
  return std::nullopt;
}

Surd Surd::conj() const {
  Surd out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c.conj());
  return out;
}

std::complex<double> Surd::to_complex() const {
  std::complex<double> sum = 0;
  for (const auto& [m, c] : terms_) sum += c.to_complex() * std::sqrt(m.get_d());
  return sum;
}

std::string Surd::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += m == 1 ? c.str() : "(" + c.str() + ")*sqrt(" + m.get_str() + ")";
  }
  return out;
}

Surd& Surd::operator+=(const Surd& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Surd& Surd::operator-=(const Surd& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

Surd Surd::operator-() const {
  Surd out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Surd operator*(const Surd& a, const Surd& b) {
  Surd out;
  for (const auto& [m, c] : a.terms_)
    for (const auto& [k, d] : b.terms_) {
      // sqrt(m) sqrt(k) = g sqrt(m k / g^2) with g = gcd(m, k), both squarefree
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), k.get_mpz_t());
      out.add((m / g) * (k / g), c * d * Scalar(mpq_class(g)));
    }
  return out;
}

}  // namespace ores
