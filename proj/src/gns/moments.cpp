#include "ores/gns/moments.hpp"

#include <Eigen/Dense>
#include <random>
#include <sstream>

#include "ores/core/presets.hpp"
#include "ores/error.hpp"

namespace ores {

MomentFunctional::MomentFunctional(PresentationPtr p, std::size_t degree,
                                   std::map<Word, Scalar> table)
    : pres_(std::move(p)), degree_(degree) {
  if (2 * degree > pres_->degree_cap())
    throw DegreeOverflow("moment table degree " + std::to_string(2 * degree) +
                         " exceeds degree cap " + std::to_string(pres_->degree_cap()));
  for (auto& [w, c] : table) {
    if (w.degree() > 2 * degree)
      throw InvalidState("moment table entry " + word_string(*pres_, w) + " beyond degree " +
                         std::to_string(2 * degree));
    if (pres_->is_reducible(w))
      throw InvalidState("moment table entry " + word_string(*pres_, w) + " is not in normal form");
    if (!c.is_zero()) table_.emplace(w, c);
  }
}

Scalar MomentFunctional::value(const Word& w) const {
  if (w.degree() > 2 * degree_)
    throw InsufficientDegree("word " + word_string(*pres_, w) + " needs moments beyond degree " +
                             std::to_string(2 * degree_));
  if (pres_->is_reducible(w)) return (*this)(AlgebraElement::word(pres_, w));
  auto it = table_.find(w);
  return it == table_.end() ? Scalar() : it->second;
}

Scalar MomentFunctional::operator()(const AlgebraElement& a) const {
  if (a.presentation() != pres_) throw PresentationMismatch();
  Scalar sum;
  for (const auto& [w, c] : a.terms()) sum += c * value(w);
  return sum;
}

Scalar MomentFunctional::gram(const Word& u, const Word& v) const {
  return (*this)(AlgebraElement::word(pres_, pres_->dagger(u) * v));
}

MomentFunctional gaussian_state(std::size_t degree) {
  auto p = presets::polynomial_x();
  std::map<Word, Scalar> table;
  mpz_class m = 1;  // (2k-1)!!
  for (std::size_t k = 0; 2 * k <= 2 * degree; ++k) {
    if (k > 0) m *= static_cast<unsigned long>(2 * k - 1);
    table.emplace(Word(std::vector<Gen>(2 * k, 0)), Scalar(mpq_class(m)));
  }
  return MomentFunctional(p, degree, std::move(table));
}

MomentFunctional dirac_state(PresentationPtr p, std::size_t degree) {
  return MomentFunctional(std::move(p), degree, {{Word(), Scalar(1)}});
}

MomentFunctional fock_state(std::size_t degree) {
  return dirac_state(presets::heisenberg(), degree);
}

std::string StateAxiomReport::summary(const Presentation& p) const {
  std::ostringstream out;
  out << "hermitian " << (hermitian ? "ok" : "FAIL");
  if (hermitian_violation) out << " at " << word_string(p, *hermitian_violation);
  out << "; normalized " << (normalized ? "ok" : "FAIL");
  out << "; psd " << (psd ? "ok" : "FAIL");
  if (psd_violation) out << " at pivot " << word_string(p, *psd_violation);
  out << "; cauchy-schwarz " << (cauchy_schwarz ? "ok" : "FAIL");
  if (cs_violation)
    out << " at (" << word_string(p, cs_violation->first) << ", "
        << word_string(p, cs_violation->second) << ")";
  out << "; rank " << gram_rank << "; min eigenvalue " << min_eigenvalue;
  return out.str();
}

namespace {

using ExactMatrix = std::vector<std::vector<Scalar>>;

Scalar quad(const ExactMatrix& g, const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
  Scalar sum;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    Scalar row;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) row += g[i][j] * v[j];
    sum += u[i].conj() * row;
  }
  return sum;
}

}  // namespace

StateAxiomReport check_state_axioms(const MomentFunctional& f, std::uint64_t seed,
                                    std::size_t samples) {
  const auto& p = f.presentation();
  StateAxiomReport r;

  for (const auto& w : p->normal_words(2 * f.degree())) {
    if (!(f.gram(w, Word()) == f.value(w).conj())) {
      r.hermitian = false;
      r.hermitian_violation = w;
      break;
    }
  }
  r.normalized = f.value(Word()).is_one();

  const auto words = p->normal_words(f.degree());
  const std::size_t n = words.size();
  ExactMatrix g(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i][j] = f.gram(words[i], words[j]);

  // Exact elimination with the largest remaining diagonal as pivot.
  {
    ExactMatrix h = g;
    std::vector<bool> active(n, true);
    while (true) {
      std::optional<std::size_t> pivot;
      for (std::size_t i = 0; i < n && r.psd; ++i) {
        if (!active[i]) continue;
        if (sgn(h[i][i].re()) < 0) {
          r.psd = false;
          r.psd_violation = words[i];
        } else if (!pivot || h[i][i].re() > h[*pivot][*pivot].re()) {
          pivot = i;
        }
      }
      if (!r.psd || !pivot) break;
      const std::size_t k = *pivot;
      if (h[k][k].is_zero()) {
        for (std::size_t i = 0; i < n && r.psd; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (active[i] && active[j] && !h[i][j].is_zero()) {
              r.psd = false;
              r.psd_violation = words[i];
              break;
            }
        break;
      }
      active[k] = false;
      ++r.gram_rank;
      const Scalar d = h[k][k];
      for (std::size_t i = 0; i < n; ++i) {
        if (!active[i] || h[i][k].is_zero()) continue;
        const Scalar m = h[i][k] / d;
        for (std::size_t j = 0; j < n; ++j)
          if (active[j] && !h[k][j].is_zero()) h[i][j] -= m * h[k][j];
      }
    }
  }

  for (std::size_t i = 0; i < n && r.cauchy_schwarz; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      ++r.cs_checked;
      if (g[i][j].norm2() > g[i][i].re() * g[j][j].re()) {
        r.cauchy_schwarz = false;
        r.cs_violation = {words[i], words[j]};
        break;
      }
    }
  std::mt19937_64 rng(seed);
  auto coeff = [&] {
    const long re = static_cast<long>(rng() % 7) - 3;
    const long im = static_cast<long>(rng() % 7) - 3;
    return Scalar(re, im);
  };
  for (std::size_t s = 0; s < samples && r.cauchy_schwarz; ++s) {
    std::vector<Scalar> u(n), v(n);
    for (std::size_t i = 0; i < n; ++i) {
      u[i] = coeff();
      v[i] = coeff();
    }
    ++r.cs_checked;
    if (quad(g, u, v).norm2() > quad(g, u, u).re() * quad(g, v, v).re()) r.cauchy_schwarz = false;
  }

  Eigen::MatrixXcd gd(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gd(i, j) = g[i][j].to_complex();
  if (n > 0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gd, Eigen::EigenvaluesOnly);
    r.min_eigenvalue = es.eigenvalues().minCoeff();
  }
  double scale = 1;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(gd(i, i)));
  r.eigen_agrees = r.psd == (r.min_eigenvalue >= -1e-9 * scale);
  return r;
}

}  // namespace ores
