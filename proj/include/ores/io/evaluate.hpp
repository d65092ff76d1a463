#pragma once

#include "ores/io/expr.hpp"
#include "ores/loc/fraction.hpp"
#include "ores/ops/qpoly.hpp"

namespace ores {

/// Evaluates in the presentation; symbols are generator names. Throws
/// ConfigError for unknown generators or a fraction node.
AlgebraElement evaluate(const Expr& e, const PresentationPtr& p);
AlgebraElement evaluate(std::string_view text, const PresentationPtr& p);

/// Reads a denominator factor written as 1 + L*R with L = R'; returns R.
/// A factor equal to 1 yields nullopt. Throws ConfigError otherwise.
std::optional<AlgebraElement> factor_argument(const Expr& factor, const PresentationPtr& p);

SProduct evaluate_denominator(const std::vector<Expr>& factors, const PresentationPtr& p);

/// Frac node (or bare expression) -> fraction with the denominator checked
/// for regularity up to `regularity_depth`.
Fraction evaluate_fraction(const Expr& frac, const PresentationPtr& p, std::size_t regularity_depth);
Fraction evaluate_fraction(std::string_view text, const PresentationPtr& p,
                           std::size_t regularity_depth);

/// Polynomial in the symbol n. Throws InvalidFormula on other symbols.
QPoly evaluate_poly(const Expr& e);
QPoly evaluate_poly(std::string_view text);

/// Syntax tree of an element in normal form, terms in ascending deglex
/// order. print(to_expr(a)) parses back to a.
Expr to_expr(const AlgebraElement& a);
/// Frac node with each factor written as 1 + p'*p.
Expr to_expr(const Fraction& f);
Expr to_expr(const QPoly& q);

std::string format(const AlgebraElement& a);
/// "(num) / (1 + p'*p)*..."
std::string format(const Fraction& f);

}  // namespace ores
