#pragma once

#include <functional>
#include <optional>
#include <variant>

#include "ores/loc/fraction.hpp"

namespace ores {

/// (b, t) with a*t = s*b (right) or t*a = b*s (left).
struct OreWitness {
  AlgebraElement b;
  SProduct t;
};

struct NotFoundWithinBudget {
  std::size_t candidates_tried = 0;
  std::size_t candidates_overflowed = 0;
};

using OreResult = std::variant<OreWitness, NotFoundWithinBudget>;

/// Search limits for the Ore-witness solver and the regularity depth used
/// for denominators. `on_witness` (optional) observes every right witness
/// the solver returns, as (a, s, witness).
struct SearchBudget {
  std::size_t max_factors = 2;
  std::size_t max_degree = 2;
  std::size_t regularity_depth = 2;
  std::function<void(const AlgebraElement&, const SProduct&, const OreWitness&)> on_witness;
};

/// Candidate p for factors 1 + p'p, in search order: normal monomials of
/// degree 1..max_degree (deglex), then w_i + w_j and w_i - w_j for i < j.
std::vector<AlgebraElement> ore_factor_candidates(const PresentationPtr& p, std::size_t max_degree);

/// Bounded search for (b, t) with a*t = s*b, t in S.
///
/// Candidates t are tried in a fixed order: 1, then s itself, then every
/// ordered product of at most max_factors factors 1 + p'p with p from
/// `ore_factor_candidates`. For each t, membership of a*t in s*A is decided
/// by exact elimination over the span of s*w, w normal of degree
/// <= min(cap - deg s, deg(a t)). The first hit is returned and re-verified.
/// Throws IrregularDenominator if s has a zero divisor up to the budget depth.
OreResult ore_solve_right(const AlgebraElement& a, const SProduct& s, const SearchBudget& budget);

/// Bounded search for (b, t) with t*a = b*s, via the right search on
/// (a', s') and the involution.
OreResult ore_solve_left(const AlgebraElement& a, const SProduct& s, const SearchBudget& budget);

/// Certificate of [a, s] ~ [b, t]: a*u = b*v and s*u = t*v = su in S.
struct Equal {
  AlgebraElement u;
  AlgebraElement v;
  SProduct su;
};

/// `decided` is true when a common-denominator witness was found and the
/// numerators differ, which refutes equality in the localisation.
/// Otherwise no witness was found within budget.
struct NotEqualUpToBudget {
  bool decided = false;
};

using EqResult = std::variant<Equal, NotEqualUpToBudget>;

EqResult eq_fraction(const Fraction& f, const Fraction& g, const SearchBudget& budget);

inline bool is_equal(const EqResult& r) { return std::holds_alternative<Equal>(r); }

/// lambda*[a1, s1] + [a2, s2] = [lambda*a1*t + a2*b, s1*t] where s1*t = s2*b.
/// Throws OreWitnessNotFound when the search fails.
Fraction frac_add(const Scalar& lambda, const Fraction& f, const Fraction& g,
                  const SearchBudget& budget);

/// [a1, s1]*[a2, s2] = [a1*b, s2*t] where a2*t = s1*b.
Fraction frac_mul(const Fraction& f, const Fraction& g, const SearchBudget& budget);

/// [a, s]' = [1, s'] * [a', 1].
Fraction frac_dagger(const Fraction& f, const SearchBudget& budget);

/// Checks [1, us][ua, 1] ~ [1, s][a, 1] given a certified factorisation of
/// u*s. nullopt when a witness needed by either product is not found.
/// Throws std::invalid_argument if us.value() != u * s.value().
std::optional<bool> remark_mult_property_check(const AlgebraElement& a, const SProduct& s,
                                               const AlgebraElement& u, const SProduct& us,
                                               const SearchBudget& budget);

/// s^{-1} a
struct LeftFraction {
  SProduct s;
  AlgebraElement a;
};

/// Rewrites a*s^{-1} as t^{-1}*b with t*a = b*s. Throws OreWitnessNotFound.
LeftFraction to_left_fraction(const Fraction& f, const SearchBudget& budget);

}  // namespace ores
