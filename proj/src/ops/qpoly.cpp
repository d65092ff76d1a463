#include "ores/ops/qpoly.hpp"

#include <optional>

namespace ores {

QPoly::QPoly(const Scalar& c) {
  if (!c.is_zero()) c_.push_back(c);
}

QPoly::QPoly(std::vector<Scalar> coefficients) : c_(std::move(coefficients)) { trim(); }

void QPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool QPoly::is_real() const {
  for (const auto& c : c_)
    if (!c.is_real()) return false;
  return true;
}

Scalar QPoly::operator()(const Scalar& x) const {
  Scalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> QPoly::eval(double x) const {
  std::complex<double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_complex();
  return acc;
}

QPoly QPoly::shifted(long k) const {
  // Horner in the polynomial ring: p(n + k) = (...(c_d (n+k) + c_{d-1})(n+k) ...)
  QPoly acc;
  const QPoly x(std::vector<Scalar>{Scalar(k), Scalar(1)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + QPoly(*it);
  return acc;
}

QPoly QPoly::conj() const {
  std::vector<Scalar> c;
  for (const auto& x : c_) c.push_back(x.conj());
  return QPoly(std::move(c));
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) { return *this += -o; }

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return QPoly(std::move(c));
}

bool operator<(const QPoly& a, const QPoly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    const auto& x = a.c_[i];
    const auto& y = b.c_[i];
    if (x.re() != y.re()) return x.re() < y.re();
    if (x.im() != y.im()) return x.im() < y.im();
  }
  return false;
}

namespace {

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return mpq_class(n, d);
}

}  // namespace

std::optional<QPoly> QPoly::square_root() const {
  if (is_zero()) return QPoly();
  if (!is_real() || degree() % 2 != 0) return std::nullopt;
  const auto lead = rational_sqrt(leading().re());
  if (!lead) return std::nullopt;
  // Coefficients of q from the top down: (q^2)_k fixes q_{k - m}.
  const std::size_t m = static_cast<std::size_t>(degree() / 2);
  std::vector<Scalar> q(m + 1);
  q[m] = Scalar(*lead);
  for (std::size_t step = 1; step <= m; ++step) {
    const std::size_t k = 2 * m - step;
    Scalar rest = c_[k];
    for (std::size_t i = m - step + 1; i <= m; ++i) {
      const std::size_t j = k - i;
      if (j > m || j < m - step + 1) continue;
      rest -= q[i] * q[j];
    }
    q[m - step] = rest / (Scalar(2) * q[m]);
  }
  QPoly r(std::move(q));
  if (!(r * r == *this)) return std::nullopt;
  return r;
}

std::string QPoly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Scalar& c = c_[i];
    if (c.is_zero()) continue;
    std::string coeff;
    bool negative = false;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      const Scalar a = negative ? -c : c;
      if (!(a.is_one() && i > 0)) coeff = a.str();
    } else {
      coeff = "(" + c.str() + ")";
    }
    std::string mono;
    for (std::size_t k = 0; k < i; ++k) mono += k == 0 ? "n" : "*n";
    std::string t = coeff.empty() ? mono : (mono.empty() ? coeff : coeff + "*" + mono);
    if (out.empty())
      out = negative ? "-" + t : t;
    else
      out += (negative ? " - " : " + ") + t;
  }
  return out;
}

}  // namespace ores
