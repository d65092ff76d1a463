#include "ores/core/scalar.hpp"

#include <cmath>

namespace ores {

namespace {

mpq_class make_q(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

// Continued-fraction convergents of x, stopping at the first convergent
// within snap * scale of x whose denominator stays below 1e6.
mpq_class snap_real(double x, double snap, double scale) {
  mpq_class exact(x);
  if (!std::isfinite(x)) return exact;
  mpz_class h2 = 0, h1 = 1;  // numerators of the two previous convergents
  mpz_class k2 = 1, k1 = 0;  // denominators
  mpq_class rest = exact;
  for (int step = 0; step < 64; ++step) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    mpz_class h = a * h1 + h2;
    mpz_class k = a * k1 + k2;
    if (k > 1000000) break;
    mpq_class approx(h, k);
    approx.canonicalize();
    if (std::abs(approx.get_d() - x) <= snap * scale) return approx;
    mpq_class frac = rest - a;
    if (sgn(frac) == 0) break;
    rest = 1 / frac;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
  }
  return exact;
}

}  // namespace

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::from_parts(long re_num, long re_den, long im_num, long im_den) {
  return Scalar(make_q(re_num, re_den), make_q(im_num, im_den));
}

Scalar Scalar::from_double(std::complex<double> z, double snap) {
  const double scale = std::max(1.0, std::abs(z));
  return Scalar(snap_real(z.real(), snap, scale), snap_real(z.imag(), snap, scale));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ /= o.re_;
    return *this;
  }
  const mpq_class n = o.norm2();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

std::string Scalar::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string im_part = (im_ == 1) ? "i" : (im_ == -1 ? "-i" : im_.get_str() + "*i");
  if (sgn(re_) == 0) return im_part;
  if (sgn(im_) < 0) {
    mpq_class m = -im_;
    return re_.get_str() + " - " + (m == 1 ? "i" : m.get_str() + "*i");
  }
  return re_.get_str() + " + " + im_part;
}

}  // namespace ores
