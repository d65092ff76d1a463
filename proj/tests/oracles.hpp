// Independent reference computations used by the tests. None of these call
// the library's rewriting, elimination or operator code.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <vector>

#include "ores/core/presentation.hpp"

namespace oracle {

using ores::Gen;
using ores::Scalar;
using Letters = std::vector<Gen>;
using Poly = std::map<Letters, Scalar>;  // formal combination of words

inline void add(Poly& p, const Letters& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = p.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

inline Poly word(const Letters& w, const Scalar& c = 1) {
  Poly p;
  add(p, w, c);
  return p;
}

inline Poly from_terms(const ores::Terms& t) {
  Poly p;
  for (const auto& [w, c] : t) add(p, Letters(w.letters().begin(), w.letters().end()), c);
  return p;
}

inline Poly times(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [u, c] : a)
    for (const auto& [v, d] : b) {
      Letters w = u;
      w.insert(w.end(), v.begin(), v.end());
      add(out, w, c * d);
    }
  return out;
}

inline Poly plus(Poly a, const Poly& b) {
  for (const auto& [w, c] : b) add(a, w, c);
  return a;
}

// Rightmost-redex rewriting to a fixpoint, term by term, with plain vectors.
inline Poly normal_form(const ores::Presentation& p, Poly in) {
  std::vector<std::pair<Letters, Poly>> rules;
  for (const auto& r : p.rules())
    rules.emplace_back(Letters(r.lhs.letters().begin(), r.lhs.letters().end()), from_terms(r.rhs));
  Poly done;
  std::vector<std::pair<Letters, Scalar>> work(in.begin(), in.end());
  while (!work.empty()) {
    auto [w, c] = work.back();
    work.pop_back();
    bool rewritten = false;
    for (std::size_t pos = w.size(); pos-- > 0 && !rewritten;) {
      for (const auto& [lhs, rhs] : rules) {
        if (pos + lhs.size() > w.size()) continue;
        if (!std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<long>(pos))) continue;
        for (const auto& [v, d] : rhs) {
          Letters nw(w.begin(), w.begin() + static_cast<long>(pos));
          nw.insert(nw.end(), v.begin(), v.end());
          nw.insert(nw.end(), w.begin() + static_cast<long>(pos + lhs.size()), w.end());
          work.emplace_back(nw, c * d);
        }
        rewritten = true;
        break;
      }
    }
    if (!rewritten) add(done, w, c);
  }
  return done;
}

// Univariate polynomials over Q(i), ascending coefficients.
using UPoly = std::vector<Scalar>;

inline UPoly trim(UPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

inline UPoly to_upoly(const Poly& p) {
  UPoly out;
  for (const auto& [w, c] : p) {
    if (out.size() <= w.size()) out.resize(w.size() + 1);
    out[w.size()] += c;
  }
  return trim(out);
}

inline UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return trim(out);
}

// a1/s1 == a2/s2 as rational functions.
inline bool same_rational_function(const UPoly& a1, const UPoly& s1, const UPoly& a2, const UPoly& s2) {
  return umul(a1, s2) == umul(a2, s1);
}

// m_{2k} = (2k - 1) m_{2k - 2}, odd moments zero.
inline double gaussian_moment(std::size_t k) {
  if (k % 2) return 0;
  double m = 1;
  for (std::size_t j = 2; j <= k; j += 2) m *= static_cast<double>(j - 1);
  return m;
}

// Jacobi matrix of the Hermite recurrence x He_n = He_{n+1} + n He_{n-1}
// in the orthonormal basis: off-diagonal sqrt(n).
inline Eigen::MatrixXd hermite_jacobi(int n) {
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) j(k, k - 1) = j(k - 1, k) = std::sqrt(static_cast<double>(k));
  return j;
}

// Truncated annihilation matrix, A(n, n+1) = sqrt(n+1).
inline Eigen::MatrixXd fock_annihilation(int n) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k + 1 < n; ++k) a(k, k + 1) = std::sqrt(static_cast<double>(k + 1));
  return a;
}

// Dense (1 + A^T A) x = y with A given by a callback A(n, m) on an N x N
// window (A needs one extra row so that the truncation of A^T A is exact).
template <class Entry>
Eigen::VectorXcd dense_solve(Entry entry, int n, const Eigen::VectorXcd& y) {
  Eigen::MatrixXcd a(n + 4, n);
  for (int r = 0; r < n + 4; ++r)
    for (int c = 0; c < n; ++c) a(r, c) = entry(r, c);
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Identity(n, n) + a.adjoint() * a;
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(n);
  rhs.head(y.size()) = y;
  return b.ldlt().solve(rhs);
}

}  // namespace oracle
