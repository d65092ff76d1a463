#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ores/gns/moments.hpp"

namespace ores {

/// Truncated GNS data of a moment functional.
///
/// The quotient V_d = span(words of degree <= d) / null(G) carries the
/// orthonormal basis obtained by Gram-Schmidt over the normal words in
/// deglex order; zero-norm residuals are dropped. Because the order is by
/// degree, the first `window` basis vectors span V_{d-1}. Generators act
/// V_{d-1} -> V_d, so each matrix is gram_rank x window.
struct GnsRepresentation {
  PresentationPtr presentation;
  std::size_t degree = 0;
  std::size_t gram_rank = 0;
  std::size_t window = 0;
  /// Normal word that produced each basis vector.
  std::vector<Word> leading_words;
  /// Coefficients of each (unnormalized) basis vector in the normal words
  /// of degree <= d, exact, and its squared norm.
  std::vector<std::vector<Scalar>> coefficients;
  std::vector<Scalar> norms2;
  std::vector<Word> words;
  /// One matrix per generator, indexed by generator.
  std::vector<Eigen::MatrixXcd> matrices;
  Eigen::VectorXcd cyclic_vector;

  /// pi(w) Omega for deg w <= d, as coordinates in V_d.
  Eigen::VectorXcd apply_word(const Word& w) const;
  /// <Omega, pi(w) Omega> for deg w <= 2d, split as w = w1 w2 with
  /// |w1|, |w2| <= d and evaluated as <pi(w1') Omega, pi(w2) Omega>.
  std::complex<double> moment(const Word& w) const;
  /// Frobenius norm of M(g')|_window - (M(g)|_window)^*.
  double adjoint_defect(Gen g) const;
};

/// Throws InsufficientDegree if d < 1 and InvalidState if the state axioms
/// fail.
GnsRepresentation gns(const MomentFunctional& f);

/// Moments <Omega, pi(w) Omega> of a truncated GNS representation for all
/// normal words of degree <= 2d, snapped to exact scalars.
MomentFunctional state_from_representation(const GnsRepresentation& r);

/// Moments of a finite matrix representation (one square matrix per
/// generator) in the vector `omega`, up to degree 2d.
MomentFunctional state_from_matrices(const PresentationPtr& p,
                                     const std::vector<Eigen::MatrixXcd>& matrices,
                                     const Eigen::VectorXcd& omega, std::size_t degree);

}  // namespace ores
