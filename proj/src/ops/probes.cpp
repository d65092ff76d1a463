#include "ores/ops/probes.hpp"

#include <cmath>

#include "ores/error.hpp"

namespace ores {

std::vector<BandedOperator> factor_operators(const FockAssignment& assignment, const SProduct& s) {
  std::vector<BandedOperator> out;
  for (const auto& f : s.factors()) out.push_back(one_plus_star(assignment.represent(f.p)));
  return out;
}

namespace {

Eigen::VectorXcd apply_chain(const std::vector<BandedOperator>& ops, Eigen::VectorXcd v) {
  for (std::size_t i = ops.size(); i-- > 0;) v = ops[i].apply(v);
  return v;
}

constexpr int kMaxTightening = 6;

}  // namespace

PreimageResult solve_pi_s(const FockAssignment& assignment, const SProduct& s,
                          const Eigen::VectorXcd& y, const InversionOptions& options) {
  const auto ops = factor_operators(assignment, s);
  PreimageResult r;
  if (ops.empty()) {
    r.x = y;
    return r;
  }
  double inner = options.tol;
  for (int attempt = 0; attempt < kMaxTightening; ++attempt, inner /= 100) {
    Eigen::VectorXcd x = y;
    std::size_t n = 0;
    try {
      for (const auto& op : ops) {
        auto inv = invert_positive(op, x, {inner, options.max_truncation});
        x = std::move(inv.x);
        n = std::max(n, inv.truncation_size);
      }
    } catch (const TruncationLimit&) {
      break;
    }
    const double residual = distance(apply_chain(ops, x), y);
    if (residual <= options.tol) {
      r.x = std::move(x);
      r.residual = residual;
      r.truncation_size = n;
      r.inner_tol = inner;
      return r;
    }
  }
  throw TruncationLimit("no preimage under pi(" + s.value().str() + ") within tolerance " +
                        std::to_string(options.tol));
}

bool SurjectivityReport::pass() const {
  for (const auto& item : items)
    if (!item.pass) return false;
  return true;
}

SurjectivityReport pi_s_surjectivity_probe(const FockAssignment& assignment, const SProduct& s,
                                           const std::vector<Eigen::VectorXcd>& targets,
                                           const InversionOptions& options) {
  SurjectivityReport report;
  for (const auto& y : targets) {
    SurjectivityItem item{y, INFINITY, 0, false};
    try {
      auto r = solve_pi_s(assignment, s, y, options);
      item.residual = r.residual;
      item.truncation_size = r.truncation_size;
      item.pass = r.residual <= options.tol;
    } catch (const TruncationLimit&) {
    }
    report.items.push_back(std::move(item));
  }
  return report;
}

LemmaReport lemma_pis_equals_S_check(const FockAssignment& assignment, const SProduct& s,
                                     const std::vector<ExactVector>& samples,
                                     const std::vector<std::optional<BandedOperator>>& adjoints) {
  const BandedOperator whole = assignment.represent(s.value());
  std::vector<BandedOperator> ops;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const BandedOperator a = assignment.represent(s.factors()[i].p);
    const BandedOperator star = i < adjoints.size() && adjoints[i] ? *adjoints[i] : a.adjoint();
    ops.push_back(BandedOperator::identity() + star * a);
  }
  LemmaReport report;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    ExactVector chained = samples[k];
    for (std::size_t i = ops.size(); i-- > 0;) chained = ops[i].apply(chained);
    ++report.checked;
    if (!(trimmed(chained) == whole.apply(samples[k]))) {
      report.pass = false;
      report.mismatch = k;
      break;
    }
  }
  return report;
}

CoreDensityReport core_density_probe(const FockAssignment& assignment, const AlgebraElement& a,
                                     const SProduct& s, const Eigen::VectorXcd& xi,
                                     const InversionOptions& options) {
  const BandedOperator op = assignment.represent(a);
  const auto ops = factor_operators(assignment, s);
  CoreDensityReport report;
  report.distance = INFINITY;
  double inner = options.tol;
  for (int attempt = 0; attempt < kMaxTightening; ++attempt, inner /= 100) {
    PreimageResult u;
    try {
      u = solve_pi_s(assignment, s, xi, {inner, options.max_truncation});
    } catch (const TruncationLimit&) {
      break;
    }
    Eigen::VectorXcd v = apply_chain(ops, u.x);
    Eigen::VectorXcd d = Eigen::VectorXcd::Zero(std::max(v.size(), xi.size()));
    d.head(xi.size()) = xi;
    d.head(v.size()) -= v;
    const double graph = std::sqrt(d.squaredNorm() + op.apply(d).squaredNorm());
    if (graph < report.distance) {
      report.v = std::move(v);
      report.distance = graph;
      report.truncation_size = u.truncation_size;
    }
    if (graph <= options.tol) break;
  }
  report.pass = report.distance <= options.tol;
  return report;
}

ExtensionResult extend_representation(const FockAssignment& assignment, const Fraction& f,
                                      const Eigen::VectorXcd& xi, const InversionOptions& options,
                                      const SearchBudget& budget) {
  const InversionOptions inner{options.tol / 1000, options.max_truncation};
  ExtensionResult r;
  const auto x = solve_pi_s(assignment, f.den(), xi, inner);
  r.value = assignment.represent(f.num()).apply(x.x);
  r.residual = x.residual;
  r.truncation_size = x.truncation_size;
  std::optional<LeftFraction> left;
  try {
    left = to_left_fraction(f, budget);
  } catch (const OreWitnessNotFound&) {
    return r;
  }
  const Eigen::VectorXcd z = assignment.represent(left->a).apply(xi);
  const auto w = solve_pi_s(assignment, left->s, z, inner);
  r.witness_route = w.x;
  r.route_difference = distance(r.value, w.x);
  r.routes_agree = *r.route_difference <= 10 * options.tol;
  return r;
}

}  // namespace ores
