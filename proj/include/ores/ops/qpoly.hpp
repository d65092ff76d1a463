#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "ores/core/scalar.hpp"

namespace ores {

/// Polynomial in the index variable n with coefficients in Q(i).
class QPoly {
 public:
  QPoly() = default;
  QPoly(const Scalar& c);  // NOLINT: constants convert implicitly
  QPoly(long c) : QPoly(Scalar(c)) {}  // NOLINT
  explicit QPoly(std::vector<Scalar> coefficients);
  static QPoly n() { return QPoly(std::vector<Scalar>{0, 1}); }

  /// Ascending coefficients, no trailing zeros.
  const std::vector<Scalar>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_real() const;
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Scalar leading() const { return c_.empty() ? Scalar() : c_.back(); }
  Scalar constant() const { return c_.empty() ? Scalar() : c_.front(); }

  Scalar operator()(const Scalar& x) const;
  Scalar operator()(long x) const { return (*this)(Scalar(x)); }
  std::complex<double> eval(double x) const;

  /// p(n + k)
  QPoly shifted(long k) const;
  QPoly conj() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  QPoly operator-() const;
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly&, const QPoly&) = default;
  /// Total order used to keep formula terms canonical.
  friend bool operator<(const QPoly& a, const QPoly& b);

  /// Exact square root over Q when p = q^2 for a rational q.
  std::optional<QPoly> square_root() const;

  /// Text form in the variable n, e.g. "n*n + 1" or "1/2*n".
  std::string str() const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

}  // namespace ores
