#pragma once

#include <complex>
#include <vector>

#include "ores/gns/gns.hpp"
#include "ores/loc/fraction.hpp"

namespace ores {

/// Nodes and weights of the Gauss rule attached to a state on C[x].
struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss rule from the eigen-decomposition of the window block of pi(x)
/// (the Jacobi matrix): nodes are its eigenvalues, weights the squared first
/// components of the normalized eigenvectors. Exact on polynomials of degree
/// < 2 * window. Only for presentations with a single hermitian generator.
Quadrature gauss_quadrature(const GnsRepresentation& r);

/// Sum of w_k a(x_k) for an element of a single-generator presentation.
std::complex<double> integrate(const Quadrature& q, const AlgebraElement& a);

/// Sum of w_k a(x_k) / s(x_k): the quadrature extension of the state to a
/// fraction [a, s] of C[x]. Denominators 1 + p'p never vanish on real nodes.
std::complex<double> integrate(const Quadrature& q, const Fraction& f);

}  // namespace ores
