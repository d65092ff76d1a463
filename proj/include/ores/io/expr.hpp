#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ores/core/scalar.hpp"

namespace ores {

/// Syntax tree of the expression language.
///
///   expr    := ['-'] term (('+' | '-') term)*
///   term    := factor ('*' factor)*
///   factor  := primary "'"*
///   primary := number | 'i' | ident | '(' expr ')'
///            | 'frac' '(' expr ';' expr (',' expr)* ')'
///   number  := digits ['/' digits]
///
/// Parentheses leave no node; the printer re-inserts them where needed, so
/// parse(print(e)) == e for every tree the parser produces.
struct Expr {
  enum class Kind { Number, Symbol, Dagger, Sum, Neg, Product, Frac };

  Kind kind = Kind::Number;
  Scalar number;
  std::string symbol;
  /// Dagger, Neg: one child. Sum, Product: two or more. Frac: numerator
  /// followed by the denominator factors.
  std::vector<Expr> children;

  static Expr num(const Scalar& c);
  static Expr sym(std::string name);
  static Expr dagger(Expr e);
  static Expr neg(Expr e);
  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);
  static Expr frac(Expr num, std::vector<Expr> dens);

  friend bool operator==(const Expr&, const Expr&) = default;
};

/// Throws SyntaxError with the 1-based line and column of the first
/// offending character and the set of accepted tokens.
Expr parse(std::string_view text);

/// Canonical text: " + " and " - " between terms, "*" between factors,
/// postfix "'" for the dagger, "frac(num; f1, f2)".
std::string print(const Expr& e);

/// Structural dump, e.g. Sum(Product(a, Dagger(a)), Neg(...)).
std::string debug_string(const Expr& e);

/// A fraction written as "(num) / (f1)*(f2)..." or "frac(num; f1, ...)";
/// both give a Frac node. A bare expression gives Frac with no factors.
Expr parse_fraction(std::string_view text);
std::string print_fraction(const Expr& frac);

}  // namespace ores
