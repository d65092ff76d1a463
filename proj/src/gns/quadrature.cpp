#include "ores/gns/quadrature.hpp"

#include "ores/error.hpp"

namespace ores {

namespace {

void require_single_hermitian(const Presentation& p) {
  if (p.num_generators() != 1 || !p.is_hermitian(0))
    throw InvalidState("quadrature needs a single hermitian generator");
}

std::complex<double> evaluate(const AlgebraElement& a, double x) {
  std::complex<double> sum = 0;
  for (const auto& [w, c] : a.terms()) sum += c.to_complex() * std::pow(x, static_cast<int>(w.degree()));
  return sum;
}

}  // namespace

Quadrature gauss_quadrature(const GnsRepresentation& r) {
  require_single_hermitian(*r.presentation);
  const Eigen::MatrixXcd j = r.matrices[0].topRows(r.window);
  const Eigen::MatrixXd jr = (j + j.adjoint()).real() / 2;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jr);
  Quadrature q;
  for (Eigen::Index k = 0; k < jr.rows(); ++k) {
    q.nodes.push_back(es.eigenvalues()(k));
    const double v0 = es.eigenvectors()(0, k);
    q.weights.push_back(v0 * v0);
  }
  return q;
}

std::complex<double> integrate(const Quadrature& q, const AlgebraElement& a) {
  require_single_hermitian(*a.presentation());
  std::complex<double> sum = 0;
  for (std::size_t k = 0; k < q.nodes.size(); ++k) sum += q.weights[k] * evaluate(a, q.nodes[k]);
  return sum;
}

std::complex<double> integrate(const Quadrature& q, const Fraction& f) {
  require_single_hermitian(*f.presentation());
  std::complex<double> sum = 0;
  for (std::size_t k = 0; k < q.nodes.size(); ++k)
    sum += q.weights[k] * evaluate(f.num(), q.nodes[k]) / evaluate(f.den().value(), q.nodes[k]);
  return sum;
}

}  // namespace ores
