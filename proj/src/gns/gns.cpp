#include "ores/gns/gns.hpp"

#include <cmath>

#include "ores/error.hpp"

namespace ores {

namespace {

using ExactVector = std::vector<Scalar>;

Scalar inner(const ExactVector& u, const ExactVector& gv) {
  Scalar s;
  for (std::size_t a = 0; a < u.size(); ++a)
    if (!u[a].is_zero() && !gv[a].is_zero()) s += u[a].conj() * gv[a];
  return s;
}

ExactVector times(const std::vector<ExactVector>& g, const ExactVector& v) {
  ExactVector out(g.size());
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < v.size(); ++b)
      if (!v[b].is_zero() && !g[a][b].is_zero()) out[a] += g[a][b] * v[b];
  return out;
}

}  // namespace

GnsRepresentation gns(const MomentFunctional& f) {
  if (f.degree() < 1) throw InsufficientDegree("GNS construction needs degree >= 1");
  const auto axioms = check_state_axioms(f);
  if (!axioms.passed()) throw InvalidState(axioms.summary(*f.presentation()));

  const auto& p = f.presentation();
  GnsRepresentation r;
  r.presentation = p;
  r.degree = f.degree();
  r.words = p->normal_words(f.degree());
  const std::size_t n = r.words.size();

  std::vector<ExactVector> g(n, ExactVector(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g[a][b] = f.gram(r.words[a], r.words[b]);

  std::vector<ExactVector> gu;  // G * u_j
  for (std::size_t k = 0; k < n; ++k) {
    ExactVector c(n);
    c[k] = 1;
    for (std::size_t j = 0; j < r.coefficients.size(); ++j) {
      const Scalar proj = gu[j][k].conj() / r.norms2[j];
      if (proj.is_zero()) continue;
      for (std::size_t a = 0; a < n; ++a)
        if (!r.coefficients[j][a].is_zero()) c[a] -= proj * r.coefficients[j][a];
    }
    ExactVector gc = times(g, c);
    const Scalar d = inner(c, gc);
    if (d.is_zero()) continue;
    r.leading_words.push_back(r.words[k]);
    r.coefficients.push_back(std::move(c));
    r.norms2.push_back(d);
    gu.push_back(std::move(gc));
  }
  r.gram_rank = r.coefficients.size();
  for (const auto& w : r.leading_words)
    if (w.degree() + 1 <= r.degree) ++r.window;

  std::vector<double> scale(r.gram_rank);
  for (std::size_t i = 0; i < r.gram_rank; ++i) scale[i] = std::sqrt(r.norms2[i].re().get_d());

  for (Gen gen = 0; gen < p->num_generators(); ++gen) {
    const auto letter = AlgebraElement::generator(p, gen);
    // h[a][b] = f(w_a' g w_b) for deg w_b <= d - 1
    std::vector<ExactVector> h(n, ExactVector(n));
    for (std::size_t b = 0; b < n; ++b) {
      if (r.words[b].degree() + 1 > r.degree) continue;
      const auto gw = letter * AlgebraElement::word(p, r.words[b]);
      for (std::size_t a = 0; a < n; ++a)
        h[a][b] = f(AlgebraElement::word(p, p->dagger(r.words[a])) * gw);
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(r.gram_rank, r.window);
    for (std::size_t j = 0; j < r.window; ++j) {
      const ExactVector hu = times(h, r.coefficients[j]);
      for (std::size_t i = 0; i < r.gram_rank; ++i) {
        const Scalar num = inner(r.coefficients[i], hu);
        if (!num.is_zero()) m(i, j) = num.to_complex() / (scale[i] * scale[j]);
      }
    }
    r.matrices.push_back(std::move(m));
  }

  r.cyclic_vector = Eigen::VectorXcd::Zero(r.gram_rank);
  r.cyclic_vector(0) = 1;
  return r;
}

Eigen::VectorXcd GnsRepresentation::apply_word(const Word& w) const {
  if (w.degree() > degree)
    throw InsufficientDegree("word " + word_string(*presentation, w) +
                             " leaves the truncation of degree " + std::to_string(degree));
  Eigen::VectorXcd v = cyclic_vector;
  for (std::size_t k = w.degree(); k-- > 0;) v = matrices[w[k]] * v.head(window);
  return v;
}

std::complex<double> GnsRepresentation::moment(const Word& w) const {
  const std::size_t right = std::min(w.degree(), degree);
  const Word w1 = w.sub(0, w.degree() - right);
  const Word w2 = w.sub(w.degree() - right, right);
  return apply_word(presentation->dagger(w1)).dot(apply_word(w2));
}

double GnsRepresentation::adjoint_defect(Gen g) const {
  const Gen gd = presentation->dagger(g);
  const Eigen::MatrixXcd a = matrices[gd].topRows(window);
  const Eigen::MatrixXcd b = matrices[g].topRows(window).adjoint();
  return (a - b).norm();
}

MomentFunctional state_from_representation(const GnsRepresentation& r) {
  std::map<Word, Scalar> table;
  for (const auto& w : r.presentation->normal_words(2 * r.degree))
    table.emplace(w, Scalar::from_double(r.moment(w)));
  return MomentFunctional(r.presentation, r.degree, std::move(table));
}

MomentFunctional state_from_matrices(const PresentationPtr& p,
                                     const std::vector<Eigen::MatrixXcd>& matrices,
                                     const Eigen::VectorXcd& omega, std::size_t degree) {
  if (matrices.size() != p->num_generators())
    throw InvalidState("expected one matrix per generator");
  std::map<Word, Scalar> table;
  for (const auto& w : p->normal_words(2 * degree)) {
    Eigen::VectorXcd v = omega;
    for (std::size_t k = w.degree(); k-- > 0;) v = matrices[w[k]] * v;
    table.emplace(w, Scalar::from_double(omega.dot(v)));
  }
  return MomentFunctional(p, degree, std::move(table));
}

}  // namespace ores
