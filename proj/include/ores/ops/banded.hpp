#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <map>
#include <vector>

#include "ores/ops/qpoly.hpp"
#include "ores/ops/surd.hpp"

namespace ores {

/// poly(n) * sqrt(radicand(n)) for n >= n_min, zero below. The radicand is
/// a real polynomial with integer coefficients and nonnegative leading
/// coefficient; radicand 1 means no root.
struct FormulaTerm {
  QPoly poly;
  QPoly radicand = QPoly(1);
  long n_min = 0;
  friend bool operator==(const FormulaTerm&, const FormulaTerm&) = default;
};

/// Coefficient c(n) of one band: a sum of terms, kept canonical (merged,
/// sorted, square factors pulled out of radicands).
class Formula {
 public:
  Formula() = default;
  /// Canonicalizes for a band at `offset`. Throws InvalidFormula when a
  /// radicand is not a real polynomial or is negative for large n.
  Formula(std::vector<FormulaTerm> terms, long offset);

  static Formula constant(const Scalar& c, long offset);
  static Formula poly(QPoly p, long offset);
  static Formula sqrt_poly(QPoly p, long offset);

  const std::vector<FormulaTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Throws InvalidFormula if a radicand is negative at n.
  Surd exact(long n) const;
  std::complex<double> operator()(long n) const;

  friend bool operator==(const Formula&, const Formula&) = default;

 private:
  std::vector<FormulaTerm> terms_;
};

using ExactVector = std::vector<Surd>;

/// Operator on l2(N) with finitely many bands: (A xi)_n = sum_k c_k(n) xi_{n+k}.
/// Closed under adjoint, sum, and composition, all computed on formulas.
class BandedOperator {
 public:
  BandedOperator() = default;
  explicit BandedOperator(std::map<long, Formula> bands);

  static BandedOperator identity();
  static BandedOperator band(long offset, Formula f);

  const std::map<long, Formula>& bands() const { return bands_; }
  bool is_zero() const { return bands_.empty(); }
  /// Largest |offset|.
  long bandwidth() const;
  long min_offset() const;

  /// Matrix entry <e_n, A e_m>.
  Surd entry(long n, long m) const;
  std::complex<double> entry_d(long n, long m) const;

  /// Exact product; trailing zeros of the result are trimmed.
  ExactVector apply(const ExactVector& xi) const;
  /// Result has length len(xi) + max(0, -min_offset).
  Eigen::VectorXcd apply(const Eigen::VectorXcd& xi) const;

  /// Top-left N x N block.
  Eigen::SparseMatrix<std::complex<double>> truncation(long n) const;
  Eigen::MatrixXcd dense_truncation(long n) const;

  BandedOperator adjoint() const;
  BandedOperator scaled(const Scalar& c) const;
  BandedOperator operator-() const { return scaled(-1); }

  friend BandedOperator strong_sum(const BandedOperator& a, const BandedOperator& b);
  friend BandedOperator strong_product(const BandedOperator& a, const BandedOperator& b);
  friend BandedOperator operator+(const BandedOperator& a, const BandedOperator& b) {
    return strong_sum(a, b);
  }
  friend BandedOperator operator-(const BandedOperator& a, const BandedOperator& b) {
    return strong_sum(a, -b);
  }
  friend BandedOperator operator*(const BandedOperator& a, const BandedOperator& b) {
    return strong_product(a, b);
  }
  friend bool operator==(const BandedOperator&, const BandedOperator&) = default;

  /// One line per band: "offset: formula".
  std::string str() const;

 private:
  std::map<long, Formula> bands_;
};

/// Weighted shift with (A xi)_n = sqrt(n+1) xi_{n+1}.
BandedOperator annihilation();
/// 1 + A*A.
BandedOperator one_plus_star(const BandedOperator& a);

ExactVector basis_vector(std::size_t n);
Eigen::VectorXcd basis_vector_d(std::size_t n, std::size_t length);
Eigen::VectorXcd to_numeric(const ExactVector& v);
/// Trims trailing zeros so equal vectors compare equal.
ExactVector trimmed(ExactVector v);
/// ||u - v||_2 for vectors of possibly different lengths.
double distance(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v);

/// Text form of one term, e.g. "sqrt_poly n + 1" style pieces joined by " + ".
std::string formula_string(const Formula& f);

}  // namespace ores
