#pragma once

#include <optional>
#include <vector>

#include "ores/loc/ore.hpp"
#include "ores/ops/assignment.hpp"
#include "ores/ops/inversion.hpp"

namespace ores {

/// pi(s) as the ordered list of factor operators 1 + A_i* A_i.
std::vector<BandedOperator> factor_operators(const FockAssignment& assignment, const SProduct& s);

struct PreimageResult {
  Eigen::VectorXcd x;
  /// ||pi(s) x - y|| with pi(s) applied factor by factor.
  double residual = 0;
  std::size_t truncation_size = 0;
  double inner_tol = 0;
};

/// x with ||pi(s) x - y|| <= tol: chained inversions of the factors from the
/// left, tightening the inner tolerance by 100 until the composite residual
/// meets tol. Throws TruncationLimit when it never does.
PreimageResult solve_pi_s(const FockAssignment& assignment, const SProduct& s,
                          const Eigen::VectorXcd& y, const InversionOptions& options);

struct SurjectivityItem {
  Eigen::VectorXcd target;
  double residual = 0;
  std::size_t truncation_size = 0;
  bool pass = false;
};

struct SurjectivityReport {
  std::vector<SurjectivityItem> items;
  bool pass() const;
};

SurjectivityReport pi_s_surjectivity_probe(const FockAssignment& assignment, const SProduct& s,
                                           const std::vector<Eigen::VectorXcd>& targets,
                                           const InversionOptions& options);

struct LemmaReport {
  bool pass = true;
  std::size_t checked = 0;
  /// Index of the first sample where the two sides differ.
  std::optional<std::size_t> mismatch;
};

/// Compares pi(s) xi, with s normalized and then represented, against the
/// product of the factors 1 + A_i* A_i applied in turn; exact. `adjoints`,
/// when given, replaces the adjoint used in each factor (for perturbation
/// tests).
LemmaReport lemma_pis_equals_S_check(const FockAssignment& assignment, const SProduct& s,
                                     const std::vector<ExactVector>& samples,
                                     const std::vector<std::optional<BandedOperator>>& adjoints = {});

struct CoreDensityReport {
  Eigen::VectorXcd v;
  /// Graph-norm distance sqrt(||xi - v||^2 + ||A(xi - v)||^2).
  double distance = 0;
  std::size_t truncation_size = 0;
  bool pass = false;
};

/// Finds v = pi(s) u with u finitely supported and ||xi - v||_A <= tol, A = pi(a).
CoreDensityReport core_density_probe(const FockAssignment& assignment, const AlgebraElement& a,
                                     const SProduct& s, const Eigen::VectorXcd& xi,
                                     const InversionOptions& options);

struct ExtensionResult {
  /// pi(a) pi(s)^-1 xi
  Eigen::VectorXcd value;
  double residual = 0;
  std::size_t truncation_size = 0;
  /// pi(t)^-1 pi(b) xi for a left witness t a = b s, when one was found.
  std::optional<Eigen::VectorXcd> witness_route;
  std::optional<double> route_difference;
  bool routes_agree = true;
};

/// Evaluates the extended representation on a fraction [a, s]. The inner
/// solves run at options.tol / 1000; the two routes must agree within
/// 10 * options.tol.
ExtensionResult extend_representation(const FockAssignment& assignment, const Fraction& f,
                                      const Eigen::VectorXcd& xi, const InversionOptions& options,
                                      const SearchBudget& budget);

}  // namespace ores
