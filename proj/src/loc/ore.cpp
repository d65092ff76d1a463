#include "ores/loc/ore.hpp"

#include <stdexcept>

#include "ores/core/echelon.hpp"
#include "ores/error.hpp"

namespace ores {

std::vector<AlgebraElement> ore_factor_candidates(const PresentationPtr& p, std::size_t max_degree) {
  std::vector<AlgebraElement> monomials;
  for (const auto& w : p->normal_words(std::min(max_degree, p->degree_cap())))
    if (!w.empty()) monomials.push_back(AlgebraElement::word(p, w));
  std::vector<AlgebraElement> out = monomials;
  for (std::size_t i = 0; i < monomials.size(); ++i)
    for (std::size_t j = i + 1; j < monomials.size(); ++j) {
      out.push_back(monomials[i] + monomials[j]);
      out.push_back(monomials[i] - monomials[j]);
    }
  return out;
}

namespace {

// Span of {s*w : w normal, deg w <= degree}, grown on demand.
class RightMultiples {
 public:
  explicit RightMultiples(const SProduct& s) : s_(s) {
    const auto& p = s.presentation();
    max_degree_ = p->degree_cap() - std::min(p->degree_cap(), s.value().degree());
    words_ = p->normal_words(max_degree_);
  }

  std::optional<AlgebraElement> quotient(const AlgebraElement& target) {
    const std::size_t need = std::min(max_degree_, target.degree());
    while (next_ < words_.size() && words_[next_].degree() <= need) {
      const auto w = AlgebraElement::word(s_.presentation(), words_[next_]);
      echelon_.insert(next_, (s_.value() * w).terms());
      ++next_;
    }
    auto combo = echelon_.express(target.terms());
    if (!combo) return std::nullopt;
    Terms b;
    for (const auto& [j, c] : *combo) add_term(b, words_[j], c);
    return AlgebraElement::normalize(s_.presentation(), std::move(b));
  }

 private:
  const SProduct& s_;
  std::size_t max_degree_ = 0;
  std::vector<Word> words_;
  std::size_t next_ = 0;
  EchelonBasis echelon_;
};

}  // namespace

OreResult ore_solve_right(const AlgebraElement& a, const SProduct& s, const SearchBudget& budget) {
  const auto& p = s.presentation();
  if (a.presentation() != p) throw PresentationMismatch();
  require_regular(s.value(), budget.regularity_depth);

  RightMultiples multiples(s);
  NotFoundWithinBudget miss;

  auto attempt = [&](const SProduct& t) -> std::optional<OreWitness> {
    ++miss.candidates_tried;
    try {
      const AlgebraElement at = a * t.value();
      auto b = multiples.quotient(at);
      if (!b) return std::nullopt;
      if (!(at == s.value() * *b))
        throw std::logic_error("Ore witness failed re-verification");
      return OreWitness{*b, t};
    } catch (const DegreeOverflow&) {
      ++miss.candidates_overflowed;
      return std::nullopt;
    }
  };
  auto found = [&](OreWitness w) -> OreResult {
    if (budget.on_witness) budget.on_witness(a, s, w);
    return w;
  };

  if (auto w = attempt(SProduct::one(p))) return found(std::move(*w));
  if (!s.empty())
    if (auto w = attempt(s)) return found(std::move(*w));

  if (budget.max_factors == 0) return miss;
  std::vector<SProduct> factors;
  for (const auto& c : ore_factor_candidates(p, budget.max_degree)) {
    try {
      factors.push_back(SProduct::factor(c));
    } catch (const DegreeOverflow&) {
    }
  }
  if (factors.empty()) return miss;

  // Ordered tuples of length 1..max_factors, lexicographic in candidate index.
  for (std::size_t len = 1; len <= budget.max_factors; ++len) {
    std::vector<std::size_t> idx(len, 0);
    std::vector<std::optional<SProduct>> prefix(len);
    while (true) {
      bool overflow = false;
      for (std::size_t k = 0; k < len; ++k) {
        if (prefix[k]) continue;
        try {
          prefix[k] = (k == 0) ? factors[idx[0]] : *prefix[k - 1] * factors[idx[k]];
        } catch (const DegreeOverflow&) {
          overflow = true;
          break;
        }
      }
      if (overflow) {
        ++miss.candidates_tried;
        ++miss.candidates_overflowed;
      } else if (auto w = attempt(*prefix[len - 1])) {
        return found(std::move(*w));
      }
      // advance odometer; invalidate prefixes from the changed position on
      std::size_t k = len;
      while (k > 0) {
        --k;
        if (++idx[k] < factors.size()) break;
        idx[k] = 0;
        if (k == 0) {
          k = len + 1;
          break;
        }
      }
      if (k == len + 1) break;
      for (std::size_t j = k; j < len; ++j) prefix[j].reset();
    }
  }
  return miss;
}

OreResult ore_solve_left(const AlgebraElement& a, const SProduct& s, const SearchBudget& budget) {
  // t*a = b*s  <=>  a'*t' = s'*b'
  auto r = ore_solve_right(a.dagger(), s.dagger(), budget);
  if (auto* w = std::get_if<OreWitness>(&r)) return OreWitness{w->b.dagger(), w->t.dagger()};
  return r;
}

EqResult eq_fraction(const Fraction& f, const Fraction& g, const SearchBudget& budget) {
  const auto& p = f.presentation();
  if (g.presentation() != p) throw PresentationMismatch();
  const auto one = AlgebraElement::one(p);

  // Any (u, v) with s*u = t*v in S decides the question: in the localisation
  // a s^-1 = a u (su)^-1 and b t^-1 = b v (su)^-1.
  auto decide = [&](AlgebraElement u, AlgebraElement v, SProduct su) -> EqResult {
    if (f.num() * u == g.num() * v) return Equal{std::move(u), std::move(v), std::move(su)};
    return NotEqualUpToBudget{true};
  };

  if (f.den().value() == g.den().value()) return decide(one, one, f.den());
  if (p->is_commutative()) {
    // Cross-multiplication: u = t, v = s, s*t certified by concatenation.
    return decide(g.den().value(), f.den().value(), f.den() * g.den());
  }
  auto r = ore_solve_right(f.den().value(), g.den(), budget);
  auto* w = std::get_if<OreWitness>(&r);
  if (!w) return NotEqualUpToBudget{false};
  // s*t' = t*b'  =>  u = t', v = b'
  return decide(w->t.value(), w->b, f.den() * w->t);
}

namespace {

OreWitness require_witness(const AlgebraElement& a, const SProduct& s, const SearchBudget& budget,
                           const char* op) {
  auto r = ore_solve_right(a, s, budget);
  if (auto* w = std::get_if<OreWitness>(&r)) return std::move(*w);
  throw OreWitnessNotFound(std::string(op) + ": no Ore witness for (" + a.str() + ", " +
                           s.value().str() + ") within budget");
}

}  // namespace

Fraction frac_add(const Scalar& lambda, const Fraction& f, const Fraction& g,
                  const SearchBudget& budget) {
  if (f.presentation() != g.presentation()) throw PresentationMismatch();
  auto w = require_witness(f.den().value(), g.den(), budget, "frac_add");
  AlgebraElement num = (f.num() * w.t.value()).scaled(lambda) + g.num() * w.b;
  return Fraction(std::move(num), f.den() * w.t);
}

Fraction frac_mul(const Fraction& f, const Fraction& g, const SearchBudget& budget) {
  if (f.presentation() != g.presentation()) throw PresentationMismatch();
  auto w = require_witness(g.num(), f.den(), budget, "frac_mul");
  return Fraction(f.num() * w.b, g.den() * w.t);
}

Fraction frac_dagger(const Fraction& f, const SearchBudget& budget) {
  const auto& p = f.presentation();
  return frac_mul(Fraction(AlgebraElement::one(p), f.den().dagger()), embed(f.num().dagger()),
                  budget);
}

std::optional<bool> remark_mult_property_check(const AlgebraElement& a, const SProduct& s,
                                               const AlgebraElement& u, const SProduct& us,
                                               const SearchBudget& budget) {
  if (!(us.value() == u * s.value()))
    throw std::invalid_argument("factorisation does not certify u*s");
  const auto one = AlgebraElement::one(a.presentation());
  try {
    Fraction lhs = frac_mul(Fraction(one, us), embed(u * a), budget);
    Fraction rhs = frac_mul(Fraction(one, s), embed(a), budget);
    auto r = eq_fraction(lhs, rhs, budget);
    if (auto* ne = std::get_if<NotEqualUpToBudget>(&r); ne && !ne->decided) return std::nullopt;
    return is_equal(r);
  } catch (const OreWitnessNotFound&) {
    return std::nullopt;
  }
}

LeftFraction to_left_fraction(const Fraction& f, const SearchBudget& budget) {
  auto r = ore_solve_left(f.num(), f.den(), budget);
  auto* w = std::get_if<OreWitness>(&r);
  if (!w)
    throw OreWitnessNotFound("no left Ore witness for (" + f.num().str() + ", " +
                             f.den().value().str() + ") within budget");
  return LeftFraction{std::move(w->t), std::move(w->b)};
}

}  // namespace ores
