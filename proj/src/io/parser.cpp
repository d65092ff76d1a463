#include <cctype>

#include "ores/error.hpp"
#include "ores/io/expr.hpp"

namespace ores {

Expr Expr::num(const Scalar& c) {
  Expr e;
  e.kind = Kind::Number;
  e.number = c;
  return e;
}

Expr Expr::sym(std::string name) {
  Expr e;
  e.kind = Kind::Symbol;
  e.symbol = std::move(name);
  return e;
}

namespace {

Expr node(Expr::Kind kind, std::vector<Expr> children) {
  Expr e;
  e.kind = kind;
  e.children = std::move(children);
  return e;
}

}  // namespace

Expr Expr::dagger(Expr e) { return node(Kind::Dagger, {std::move(e)}); }
Expr Expr::neg(Expr e) { return node(Kind::Neg, {std::move(e)}); }
Expr Expr::sum(std::vector<Expr> terms) { return node(Kind::Sum, std::move(terms)); }
Expr Expr::product(std::vector<Expr> factors) { return node(Kind::Product, std::move(factors)); }

Expr Expr::frac(Expr num, std::vector<Expr> dens) {
  dens.insert(dens.begin(), std::move(num));
  return node(Kind::Frac, std::move(dens));
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr expression() {
    std::vector<Expr> items;
    skip();
    if (peek() == '-') {
      advance();
      items.push_back(Expr::neg(term()));
    } else {
      items.push_back(term());
    }
    while (true) {
      skip();
      if (peek() == '+') {
        advance();
        items.push_back(term());
      } else if (peek() == '-') {
        advance();
        items.push_back(Expr::neg(term()));
      } else {
        break;
      }
    }
    if (items.size() == 1) return std::move(items.front());
    return Expr::sum(std::move(items));
  }

  Expr term() {
    std::vector<Expr> items{factor()};
    while (true) {
      skip();
      if (peek() != '*') break;
      advance();
      items.push_back(factor());
    }
    if (items.size() == 1) return std::move(items.front());
    return Expr::product(std::move(items));
  }

  Expr factor() {
    Expr e = primary();
    while (true) {
      skip();
      if (peek() != '\'') break;
      advance();
      e = Expr::dagger(std::move(e));
    }
    return e;
  }

  void expect_end() {
    skip();
    if (pos_ < text_.size()) fail("'+', '-', '*', \"'\" or end of input");
  }

  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("'") + c + "'");
    advance();
  }

  bool at(char c) {
    skip();
    return peek() == c;
  }

  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }

  bool at_keyword(std::string_view word) {
    skip();
    if (text_.substr(pos_, word.size()) != word) return false;
    const std::size_t after = pos_ + word.size();
    return after >= text_.size() || !(std::isalnum(static_cast<unsigned char>(text_[after])) || text_[after] == '_');
  }

  [[noreturn]] void fail(const std::string& expected) const {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < pos_ && k < text_.size(); ++k) {
      if (text_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    const std::string found =
        pos_ >= text_.size() ? "end of input" : "'" + std::string(1, text_[pos_]) + "'";
    throw SyntaxError(line, col, expected, found);
  }

 private:
  Expr primary() {
    skip();
    const char c = peek();
    if (c == '(') {
      advance();
      Expr e = expression();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = identifier();
      if (name == "i") return Expr::num(Scalar::i());
      if (name == "frac") return fraction();
      return Expr::sym(std::move(name));
    }
    fail("number, identifier, 'frac' or '('");
  }

  Expr fraction() {
    expect('(');
    Expr num = expression();
    expect(';');
    std::vector<Expr> dens{expression()};
    while (at(',')) {
      advance();
      dens.push_back(expression());
    }
    expect(')');
    return Expr::frac(std::move(num), std::move(dens));
  }

  Expr number() {
    mpz_class num(digits());
    mpz_class den = 1;
    if (peek() == '/' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      advance();
      const std::size_t start = pos_;
      den = mpz_class(digits());
      if (den == 0) {
        pos_ = start;
        fail("nonzero denominator");
      }
    }
    mpq_class q(num, den);
    q.canonicalize();
    return Expr::num(Scalar(q));
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void advance() { ++pos_; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) {
  Parser p(text);
  Expr e = p.expression();
  p.expect_end();
  return e;
}

Expr parse_fraction(std::string_view text) {
  Parser p(text);
  if (p.at_keyword("frac")) {
    Expr e = p.expression();
    p.expect_end();
    if (e.kind == Expr::Kind::Frac) return e;
    // frac(...) used inside a larger expression
    return Expr::frac(std::move(e), {});
  }
  Expr num = p.expression();
  std::vector<Expr> dens;
  if (!p.at_end()) {
    p.expect('/');
    dens.push_back(p.factor());
    while (p.at('*')) {
      p.expect('*');
      dens.push_back(p.factor());
    }
    p.expect_end();
  }
  return Expr::frac(std::move(num), std::move(dens));
}

}  // namespace ores
