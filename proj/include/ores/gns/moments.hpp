#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "ores/core/element.hpp"

namespace ores {

/// Linear functional given by its values on normal words of degree <= 2d.
/// Words absent from the table have value 0.
class MomentFunctional {
 public:
  MomentFunctional(PresentationPtr p, std::size_t degree, std::map<Word, Scalar> table);

  const PresentationPtr& presentation() const { return pres_; }
  std::size_t degree() const { return degree_; }
  const std::map<Word, Scalar>& table() const { return table_; }

  /// Throws InsufficientDegree past 2d; reducible words are normalized first.
  Scalar value(const Word& w) const;
  Scalar operator()(const AlgebraElement& a) const;

  /// Gram matrix entry f(u' v) for normal words u, v of degree <= d.
  Scalar gram(const Word& u, const Word& v) const;

 private:
  PresentationPtr pres_;
  std::size_t degree_;
  std::map<Word, Scalar> table_;
};

/// Standard Gaussian moments on C[x]: m_2k = (2k-1)!!, odd moments 0.
MomentFunctional gaussian_state(std::size_t degree);

/// Point evaluation at 0: only the empty word has nonzero value.
MomentFunctional dirac_state(PresentationPtr p, std::size_t degree);

/// Vacuum state of the Heisenberg preset. In the normal-ordered basis
/// a'^i a^j the vacuum expectation vanishes except on 1.
MomentFunctional fock_state(std::size_t degree);

struct StateAxiomReport {
  bool hermitian = true;
  bool normalized = true;
  bool psd = true;
  bool cauchy_schwarz = true;
  std::optional<Word> hermitian_violation;
  /// Word whose pivot was negative, or whose diagonal vanished with a
  /// nonzero off-diagonal entry.
  std::optional<Word> psd_violation;
  std::optional<std::pair<Word, Word>> cs_violation;
  std::size_t gram_rank = 0;
  std::size_t cs_checked = 0;
  double min_eigenvalue = 0;
  bool eigen_agrees = true;

  bool passed() const { return hermitian && normalized && psd && cauchy_schwarz; }
  std::string summary(const Presentation& p) const;
};

/// Hermitian symmetry and normalization exactly, PSD of the Gram matrix by
/// exact elimination with diagonal pivoting, Cauchy-Schwarz on all basis
/// pairs and on `samples` seeded random combinations. The floating minimum
/// eigenvalue is reported alongside.
StateAxiomReport check_state_axioms(const MomentFunctional& f, std::uint64_t seed = 0,
                                    std::size_t samples = 32);

}  // namespace ores
