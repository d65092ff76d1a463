#pragma once

#include <utility>
#include <vector>

#include "ores/ops/banded.hpp"

namespace ores {

struct InversionResult {
  Eigen::VectorXcd x;
  /// ||(1 + A*A) x - y||, with the full operator applied to x.
  double residual = 0;
  std::size_t truncation_size = 0;
  /// (N, residual) for every truncation tried.
  std::vector<std::pair<std::size_t, double>> history;
};

struct InversionOptions {
  double tol = 1e-10;
  std::size_t max_truncation = 1 << 16;
};

/// Solves the N x N truncation of 1 + A*A by sparse LDL^T with natural
/// ordering, doubling N from max(16, 2(len(y) + 2K)) until the true
/// residual is <= tol. Since ||(1 + A*A)^-1|| <= 1 the error of x is at most
/// the residual. Throws TruncationLimit past max_truncation.
InversionResult invert_one_plus_AstarA(const BandedOperator& a, const Eigen::VectorXcd& y,
                                       const InversionOptions& options = {});

/// Same, for an operator B already known to be of the form 1 + A*A.
InversionResult invert_positive(const BandedOperator& b, const Eigen::VectorXcd& y,
                                const InversionOptions& options = {});

}  // namespace ores
