#include "ores/io/expr.hpp"

namespace ores {

namespace {

using Kind = Expr::Kind;

std::string number_string(const Scalar& c) {
  if (c.is_real() && sgn(c.re()) >= 0) return to_string(c.re());
  if (c == Scalar::i()) return "i";
  return "(" + c.str() + ")";
}

std::string atom(const Expr& e);
std::string term_level(const Expr& e);

std::string atom(const Expr& e) {
  switch (e.kind) {
    case Kind::Sum:
    case Kind::Neg:
    case Kind::Product:
      return "(" + print(e) + ")";
    default:
      return print(e);
  }
}

// A term of a sum: sums and negations need parentheses.
std::string term_level(const Expr& e) {
  if (e.kind == Kind::Sum || e.kind == Kind::Neg) return "(" + print(e) + ")";
  return print(e);
}

}  // namespace

std::string print(const Expr& e) {
  switch (e.kind) {
    case Kind::Number:
      return number_string(e.number);
    case Kind::Symbol:
      return e.symbol;
    case Kind::Dagger:
      return atom(e.children[0]) + "'";
    case Kind::Neg:
      return "-" + term_level(e.children[0]);
    case Kind::Product: {
      std::string out;
      for (std::size_t k = 0; k < e.children.size(); ++k) {
        if (k) out += "*";
        out += atom(e.children[k]);
      }
      return out;
    }
    case Kind::Sum: {
      std::string out;
      for (std::size_t k = 0; k < e.children.size(); ++k) {
        const Expr& c = e.children[k];
        if (c.kind == Kind::Neg)
          out += (k ? " - " : "-") + term_level(c.children[0]);
        else
          out += (k ? " + " : "") + term_level(c);
      }
      return out;
    }
    case Kind::Frac: {
      std::string out = "frac(" + print(e.children[0]) + ";";
      for (std::size_t k = 1; k < e.children.size(); ++k)
        out += (k > 1 ? ", " : " ") + print(e.children[k]);
      return out + ")";
    }
  }
  return {};
}

std::string debug_string(const Expr& e) {
  auto list = [](const char* head, const std::vector<Expr>& cs) {
    std::string out = std::string(head) + "(";
    for (std::size_t k = 0; k < cs.size(); ++k) out += (k ? ", " : "") + debug_string(cs[k]);
    return out + ")";
  };
  switch (e.kind) {
    case Kind::Number:
      return e.number.str();
    case Kind::Symbol:
      return e.symbol;
    case Kind::Dagger:
      return list("Dagger", e.children);
    case Kind::Neg:
      return list("Neg", e.children);
    case Kind::Sum:
      return list("Sum", e.children);
    case Kind::Product:
      return list("Prod", e.children);
    case Kind::Frac:
      return list("Frac", e.children);
  }
  return {};
}

std::string print_fraction(const Expr& frac) {
  if (frac.kind != Kind::Frac) return "(" + print(frac) + ")";
  std::string out = "(" + print(frac.children[0]) + ")";
  for (std::size_t k = 1; k < frac.children.size(); ++k)
    out += (k == 1 ? " / (" : "*(") + print(frac.children[k]) + ")";
  return out;
}

}  // namespace ores
