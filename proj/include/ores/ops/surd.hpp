#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>

#include "ores/core/scalar.hpp"

namespace ores {

/// Exact number sum_m c_m sqrt(m) over distinct squarefree m >= 1 with
/// c_m in Q(i). Closed under +, *, and conjugation; equality is exact.
class Surd {
 public:
  Surd() = default;
  Surd(const Scalar& c);  // NOLINT: rationals convert implicitly
  Surd(long c) : Surd(Scalar(c)) {}  // NOLINT

  /// sqrt(q) for a rational q >= 0. Throws std::domain_error when q < 0.
  static Surd sqrt(const mpq_class& q);

  const std::map<mpz_class, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// The rational value when only the sqrt(1) term is present.
  std::optional<Scalar> rational() const;

  Surd conj() const;
  std::complex<double> to_complex() const;
  std::string str() const;

  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  Surd operator-() const;
  friend Surd operator*(const Surd& a, const Surd& b);
  friend bool operator==(const Surd&, const Surd&) = default;

 private:
  void add(const mpz_class& radicand, const Scalar& c);
  std::map<mpz_class, Scalar> terms_;
};

/// Writes m = s^2 * f with f squarefree; returns (s, f).
std::pair<mpz_class, mpz_class> square_part(const mpz_class& m);

}  // namespace ores
