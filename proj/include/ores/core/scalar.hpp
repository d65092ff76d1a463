#pragma once

#include <complex>
#include <gmpxx.h>
#include <string>

namespace ores {

/// Exact element of the Gaussian rationals Q(i).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT: integers convert implicitly
  Scalar(mpq_class re, mpq_class im = 0);

  static Scalar i() { return Scalar(0, 1); }
  /// re_num/re_den + i*im_num/im_den.
  static Scalar from_parts(long re_num, long re_den, long im_num, long im_den);
  /// Best rational approximation of a float value: a small-denominator
  /// rational when one lies within `snap` relative to max(1, |z|), otherwise the exact
  /// binary value of the double.
  static Scalar from_double(std::complex<double> z, double snap = 1e-12);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2, exact.
  mpq_class norm2() const { return re_ * re_ + im_ * im_; }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
  std::string str() const;

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  mpq_class re_;
  mpq_class im_;
};

std::string to_string(const mpq_class& q);

}  // namespace ores
