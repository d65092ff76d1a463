#include "ores/io/evaluate.hpp"

#include "ores/error.hpp"

namespace ores {

using Kind = Expr::Kind;

AlgebraElement evaluate(const Expr& e, const PresentationPtr& p) {
  switch (e.kind) {
    case Kind::Number:
      return AlgebraElement::scalar(p, e.number);
    case Kind::Symbol: {
      auto g = p->find(e.symbol);
      if (!g) throw ConfigError("unknown generator '" + e.symbol + "'");
      return AlgebraElement::generator(p, *g);
    }
    case Kind::Dagger:
      return evaluate(e.children[0], p).dagger();
    case Kind::Neg:
      return -evaluate(e.children[0], p);
    case Kind::Sum: {
      AlgebraElement sum = AlgebraElement::zero(p);
      for (const auto& c : e.children) sum += evaluate(c, p);
      return sum;
    }
    case Kind::Product: {
      AlgebraElement prod = AlgebraElement::one(p);
      for (const auto& c : e.children) prod = prod * evaluate(c, p);
      return prod;
    }
    case Kind::Frac:
      throw ConfigError("a fraction is not an algebra element: " + print(e));
  }
  return AlgebraElement::zero(p);
}

AlgebraElement evaluate(std::string_view text, const PresentationPtr& p) {
  return evaluate(parse(text), p);
}

std::optional<AlgebraElement> factor_argument(const Expr& factor, const PresentationPtr& p) {
  const AlgebraElement value = evaluate(factor, p);
  if (value == AlgebraElement::one(p)) return std::nullopt;
  const auto is_one = [](const Expr& e) { return e.kind == Kind::Number && e.number.is_one(); };
  if (factor.kind == Kind::Sum && factor.children.size() == 2) {
    for (int side = 0; side < 2; ++side) {
      const Expr& unit = factor.children[side];
      const Expr& rest = factor.children[1 - side];
      if (!is_one(unit) || rest.kind != Kind::Product) continue;
      const auto& cs = rest.children;
      for (std::size_t k = 1; k < cs.size(); ++k) {
        auto part = [&](std::size_t from, std::size_t to) {
          if (to - from == 1) return evaluate(cs[from], p);
          return evaluate(Expr::product({cs.begin() + from, cs.begin() + to}), p);
        };
        const AlgebraElement left = part(0, k);
        const AlgebraElement right = part(k, cs.size());
        if (left == right.dagger()) return right;
      }
    }
  }
  throw ConfigError("denominator factor " + print(factor) + " is not of the form 1 + p'*p");
}

SProduct evaluate_denominator(const std::vector<Expr>& factors, const PresentationPtr& p) {
  std::vector<AlgebraElement> ps;
  for (const auto& f : factors)
    if (auto arg = factor_argument(f, p)) ps.push_back(*arg);
  return SProduct::from_factors(p, ps);
}

Fraction evaluate_fraction(const Expr& frac, const PresentationPtr& p, std::size_t regularity_depth) {
  if (frac.kind != Kind::Frac) return embed(evaluate(frac, p));
  std::vector<Expr> dens(frac.children.begin() + 1, frac.children.end());
  return Fraction::make(evaluate(frac.children[0], p), evaluate_denominator(dens, p),
                        regularity_depth);
}

Fraction evaluate_fraction(std::string_view text, const PresentationPtr& p,
                           std::size_t regularity_depth) {
  return evaluate_fraction(parse_fraction(text), p, regularity_depth);
}

QPoly evaluate_poly(const Expr& e) {
  switch (e.kind) {
    case Kind::Number:
      return QPoly(e.number);
    case Kind::Symbol:
      if (e.symbol != "n") throw InvalidFormula("unknown variable '" + e.symbol + "', expected n");
      return QPoly::n();
    case Kind::Dagger:
      return evaluate_poly(e.children[0]).conj();
    case Kind::Neg:
      return -evaluate_poly(e.children[0]);
    case Kind::Sum: {
      QPoly sum;
      for (const auto& c : e.children) sum += evaluate_poly(c);
      return sum;
    }
    case Kind::Product: {
      QPoly prod(1);
      for (const auto& c : e.children) prod = prod * evaluate_poly(c);
      return prod;
    }
    case Kind::Frac:
      break;
  }
  throw InvalidFormula("fractions are not polynomials");
}

QPoly evaluate_poly(std::string_view text) { return evaluate_poly(parse(text)); }

namespace {

Expr generator_expr(const Presentation& p, Gen g) {
  const std::string& name = p.name(g);
  const Gen partner = p.dagger(g);
  if (partner != g && name == p.name(partner) + "'") return Expr::dagger(Expr::sym(p.name(partner)));
  return Expr::sym(name);
}

// A coefficient times a list of factors, with the sign pulled out front.
Expr signed_term(Scalar c, std::vector<Expr> factors) {
  bool negative = false;
  if ((c.is_real() && sgn(c.re()) < 0) || (sgn(c.re()) == 0 && sgn(c.im()) < 0)) {
    negative = true;
    c = -c;
  }
  if (!c.is_one() || factors.empty()) factors.insert(factors.begin(), Expr::num(c));
  Expr t = factors.size() == 1 ? std::move(factors.front()) : Expr::product(std::move(factors));
  return negative ? Expr::neg(std::move(t)) : t;
}

Expr sum_of(std::vector<Expr> terms) {
  if (terms.empty()) return Expr::num(0);
  if (terms.size() == 1) return std::move(terms.front());
  return Expr::sum(std::move(terms));
}

}  // namespace

Expr to_expr(const AlgebraElement& a) {
  const auto& p = *a.presentation();
  std::vector<Expr> terms;
  for (const auto& [w, c] : a.terms()) {
    std::vector<Expr> factors;
    for (Gen g : w.letters()) factors.push_back(generator_expr(p, g));
    terms.push_back(signed_term(c, std::move(factors)));
  }
  return sum_of(std::move(terms));
}

Expr to_expr(const Fraction& f) {
  std::vector<Expr> dens;
  for (const auto& factor : f.den().factors()) {
    const Expr arg = to_expr(factor.p);
    dens.push_back(Expr::sum({Expr::num(1), Expr::product({to_expr(factor.p.dagger()), arg})}));
  }
  return Expr::frac(to_expr(f.num()), std::move(dens));
}

Expr to_expr(const QPoly& q) {
  std::vector<Expr> terms;
  const auto& cs = q.coefficients();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (cs[k].is_zero()) continue;
    terms.push_back(signed_term(cs[k], std::vector<Expr>(k, Expr::sym("n"))));
  }
  return sum_of(std::move(terms));
}

std::string format(const AlgebraElement& a) { return print(to_expr(a)); }

std::string format(const Fraction& f) { return print_fraction(to_expr(f)); }

}  // namespace ores
