#include "ores/ops/banded.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ores/error.hpp"

namespace ores {

namespace {

bool term_less(const FormulaTerm& a, const FormulaTerm& b) {
  if (a.n_min != b.n_min) return a.n_min < b.n_min;
  return a.radicand < b.radicand;
}

bool all_nonnegative(const QPoly& q) {
  for (const auto& c : q.coefficients())
    if (!c.is_real() || sgn(c.re()) < 0) return false;
  return true;
}

// Writes the radicand as content * primitive integer polynomial and moves
// every square factor it can see into the polynomial part.
void normalize_radicand(FormulaTerm& t) {
  if (!t.radicand.is_real())
    throw InvalidFormula("radicand " + t.radicand.str() + " is not real");
  if (t.radicand.is_zero()) {
    t.poly = QPoly();
    return;
  }
  if (sgn(t.radicand.leading().re()) < 0)
    throw InvalidFormula("radicand " + t.radicand.str() + " is negative for large n");
  mpz_class lcm = 1, gcd = 0;
  for (const auto& c : t.radicand.coefficients())
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.re().get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : t.radicand.coefficients()) {
    mpq_class v = c.re() * lcm;
    ints.push_back(v.get_num());
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), v.get_num_mpz_t());
  }
  std::vector<Scalar> primitive;
  for (const auto& v : ints) primitive.push_back(Scalar(mpq_class(v / gcd)));
  QPoly prim(std::move(primitive));
  // sqrt(gcd / lcm) = s sqrt(f) / lcm
  auto [s, f] = square_part(gcd * lcm);
  t.poly = t.poly * QPoly(Scalar(mpq_class(s, lcm)));
  if (auto q = prim.square_root()) {
    QPoly root = sgn(q->leading().re()) < 0 ? -*q : *q;
    if (all_nonnegative(root)) {
      t.poly = t.poly * root;
      prim = QPoly(1);
    }
  }
  t.radicand = prim * QPoly(Scalar(mpq_class(f)));
}

}  // namespace

Formula::Formula(std::vector<FormulaTerm> terms, long offset) {
  const long base = std::max(0L, -offset);
  std::vector<FormulaTerm> work;
  for (auto& t : terms) {
    normalize_radicand(t);
    if (t.poly.is_zero()) continue;
    t.n_min = std::max(t.n_min, base);
    while (t.n_min > base) {
      const long m = t.n_min - 1;
      const Scalar r = t.radicand(m);
      if (sgn(r.re()) < 0) break;
      if (!t.poly(m).is_zero() && !r.is_zero()) break;
      t.n_min = m;
    }
    work.push_back(std::move(t));
  }
  std::sort(work.begin(), work.end(), term_less);
  for (auto& t : work) {
    if (!terms_.empty() && terms_.back().n_min == t.n_min && terms_.back().radicand == t.radicand) {
      terms_.back().poly += t.poly;
      if (terms_.back().poly.is_zero()) terms_.pop_back();
    } else {
      terms_.push_back(std::move(t));
    }
  }
}

Formula Formula::constant(const Scalar& c, long offset) { return Formula({{QPoly(c), QPoly(1), 0}}, offset); }

Formula Formula::poly(QPoly p, long offset) { return Formula({{std::move(p), QPoly(1), 0}}, offset); }

Formula Formula::sqrt_poly(QPoly p, long offset) { return Formula({{QPoly(1), std::move(p), 0}}, offset); }

Surd Formula::exact(long n) const {
  Surd sum;
  for (const auto& t : terms_) {
    if (n < t.n_min) continue;
    const Scalar r = t.radicand(n);
    if (sgn(r.re()) < 0)
      throw InvalidFormula("radicand " + t.radicand.str() + " negative at n = " + std::to_string(n));
    sum += Surd(t.poly(n)) * Surd::sqrt(r.re());
  }
  return sum;
}

std::complex<double> Formula::operator()(long n) const {
  std::complex<double> sum = 0;
  const double x = static_cast<double>(n);
  for (const auto& t : terms_) {
    if (n < t.n_min) continue;
    const double r = t.radicand.eval(x).real();
    if (r < 0)
      throw InvalidFormula("radicand " + t.radicand.str() + " negative at n = " + std::to_string(n));
    sum += t.poly.eval(x) * std::sqrt(r);
  }
  return sum;
}

BandedOperator::BandedOperator(std::map<long, Formula> bands) {
  for (auto& [k, f] : bands)
    if (!f.is_zero()) bands_.emplace(k, std::move(f));
}

BandedOperator BandedOperator::identity() { return band(0, Formula::constant(1, 0)); }

BandedOperator BandedOperator::band(long offset, Formula f) {
  std::map<long, Formula> m;
  m.emplace(offset, std::move(f));
  return BandedOperator(std::move(m));
}

long BandedOperator::bandwidth() const {
  long k = 0;
  for (const auto& [off, f] : bands_) k = std::max(k, std::abs(off));
  return k;
}

long BandedOperator::min_offset() const { return bands_.empty() ? 0 : bands_.begin()->first; }

Surd BandedOperator::entry(long n, long m) const {
  if (n < 0 || m < 0) return Surd();
  auto it = bands_.find(m - n);
  return it == bands_.end() ? Surd() : it->second.exact(n);
}

std::complex<double> BandedOperator::entry_d(long n, long m) const {
  if (n < 0 || m < 0) return 0;
  auto it = bands_.find(m - n);
  return it == bands_.end() ? std::complex<double>(0) : it->second(n);
}

ExactVector BandedOperator::apply(const ExactVector& xi) const {
  const long len = static_cast<long>(xi.size());
  ExactVector out(static_cast<std::size_t>(len + std::max(0L, -min_offset())));
  for (long n = 0; n < static_cast<long>(out.size()); ++n)
    for (const auto& [k, f] : bands_) {
      const long m = n + k;
      if (m < 0 || m >= len || xi[m].is_zero()) continue;
      out[n] += f.exact(n) * xi[m];
    }
  return trimmed(std::move(out));
}

Eigen::VectorXcd BandedOperator::apply(const Eigen::VectorXcd& xi) const {
  const long len = xi.size();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(len + std::max(0L, -min_offset()));
  for (long n = 0; n < out.size(); ++n)
    for (const auto& [k, f] : bands_) {
      const long m = n + k;
      if (m < 0 || m >= len || xi(m) == std::complex<double>(0)) continue;
      out(n) += f(n) * xi(m);
    }
  return out;
}

Eigen::SparseMatrix<std::complex<double>> BandedOperator::truncation(long n) const {
  std::vector<Eigen::Triplet<std::complex<double>>> entries;
  for (long r = 0; r < n; ++r)
    for (const auto& [k, f] : bands_) {
      const long c = r + k;
      if (c < 0 || c >= n) continue;
      const auto v = f(r);
      if (v != std::complex<double>(0)) entries.emplace_back(r, c, v);
    }
  Eigen::SparseMatrix<std::complex<double>> m(n, n);
  m.setFromTriplets(entries.begin(), entries.end());
  return m;
}

Eigen::MatrixXcd BandedOperator::dense_truncation(long n) const {
  return Eigen::MatrixXcd(truncation(n));
}

BandedOperator BandedOperator::adjoint() const {
  // c*_{-k}(n) = conj(c_k(n - k))
  std::map<long, Formula> out;
  for (const auto& [k, f] : bands_) {
    std::vector<FormulaTerm> terms;
    for (const auto& t : f.terms())
      terms.push_back({t.poly.conj().shifted(-k), t.radicand.shifted(-k), t.n_min + k});
    out.emplace(-k, Formula(std::move(terms), -k));
  }
  return BandedOperator(std::move(out));
}

BandedOperator BandedOperator::scaled(const Scalar& c) const {
  std::map<long, Formula> out;
  for (const auto& [k, f] : bands_) {
    std::vector<FormulaTerm> terms = f.terms();
    for (auto& t : terms) t.poly = t.poly * QPoly(c);
    out.emplace(k, Formula(std::move(terms), k));
  }
  return BandedOperator(std::move(out));
}

namespace {

BandedOperator from_term_lists(std::map<long, std::vector<FormulaTerm>> lists) {
  std::map<long, Formula> out;
  for (auto& [k, terms] : lists) out.emplace(k, Formula(std::move(terms), k));
  return BandedOperator(std::move(out));
}

}  // namespace

BandedOperator strong_sum(const BandedOperator& a, const BandedOperator& b) {
  std::map<long, std::vector<FormulaTerm>> lists;
  for (const auto* op : {&a, &b})
    for (const auto& [k, f] : op->bands_)
      lists[k].insert(lists[k].end(), f.terms().begin(), f.terms().end());
  return from_term_lists(std::move(lists));
}

BandedOperator strong_product(const BandedOperator& a, const BandedOperator& b) {
  // (AB)_{n, n+k+j} = c_k(n) d_j(n + k)
  std::map<long, std::vector<FormulaTerm>> lists;
  for (const auto& [k, c] : a.bands_)
    for (const auto& [j, d] : b.bands_)
      for (const auto& tc : c.terms())
        for (const auto& td : d.terms()) {
          const long n_min = std::max({tc.n_min, td.n_min - k, 0L, -(k + j)});
          lists[k + j].push_back(
              {tc.poly * td.poly.shifted(k), tc.radicand * td.radicand.shifted(k), n_min});
        }
  return from_term_lists(std::move(lists));
}

std::string formula_string(const Formula& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    if (!out.empty()) out += " + ";
    std::string piece = "(" + t.poly.str() + ")";
    if (!(t.radicand == QPoly(1))) piece += "*sqrt(" + t.radicand.str() + ")";
    if (t.n_min > 0) piece += "[n>=" + std::to_string(t.n_min) + "]";
    out += piece;
  }
  return out;
}

std::string BandedOperator::str() const {
  std::ostringstream out;
  for (const auto& [k, f] : bands_) out << k << ": " << formula_string(f) << "\n";
  return out.str();
}

BandedOperator annihilation() {
  return BandedOperator::band(1, Formula::sqrt_poly(QPoly::n() + QPoly(1), 1));
}

BandedOperator one_plus_star(const BandedOperator& a) {
  return BandedOperator::identity() + a.adjoint() * a;
}

ExactVector basis_vector(std::size_t n) {
  ExactVector v(n + 1);
  v[n] = Surd(1);
  return v;
}

Eigen::VectorXcd basis_vector_d(std::size_t n, std::size_t length) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(std::max(length, n + 1)));
  v(static_cast<Eigen::Index>(n)) = 1;
  return v;
}

Eigen::VectorXcd to_numeric(const ExactVector& v) {
  Eigen::VectorXcd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i].to_complex();
  return out;
}

ExactVector trimmed(ExactVector v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
  return v;
}

double distance(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v) {
  const Eigen::Index n = std::max(u.size(), v.size());
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(n), b = Eigen::VectorXcd::Zero(n);
  a.head(u.size()) = u;
  b.head(v.size()) = v;
  return (a - b).norm();
}

}  // namespace ores
