#include <doctest.h>

#include <random>
#include <sstream>

#include "ores/core/presets.hpp"
#include "ores/error.hpp"
#include "ores/gns/gns.hpp"
#include "ores/io/evaluate.hpp"
#include "ores/io/expr.hpp"
#include "ores/io/formats.hpp"
#include "ores/io/scenario.hpp"
#include "ores/ops/banded.hpp"

using namespace ores;

namespace {

Expr random_expr(std::mt19937_64& rng, int depth) {
  const auto leaf = [&] {
    switch (rng() % 4) {
      case 0:
        return Expr::num(Scalar(mpq_class(static_cast<long>(rng() % 9), static_cast<long>(1 + rng() % 3))));
      case 1:
        return Expr::num(Scalar::i());
      case 2:
        return Expr::sym("x");
      default:
        return Expr::sym("a_1");
    }
  };
  if (depth == 0) return leaf();
  const auto many = [&] {
    std::vector<Expr> out;
    const std::size_t k = 2 + rng() % 2;
    for (std::size_t j = 0; j < k; ++j) out.push_back(random_expr(rng, depth - 1));
    return out;
  };
  switch (rng() % 6) {
    case 0:
      return leaf();
    case 1:
      return Expr::dagger(random_expr(rng, depth - 1));
    case 2: {
      auto terms = many();
      for (auto& t : terms)
        if (rng() % 3 == 0) t = Expr::neg(std::move(t));
      return Expr::sum(std::move(terms));
    }
    case 3:
      return Expr::product(many());
    case 4:
      return Expr::neg(random_expr(rng, depth - 1));
    default:
      return Expr::frac(random_expr(rng, depth - 1), {random_expr(rng, depth - 1)});
  }
}

}  // namespace

TEST_CASE("grammar examples") {
  CHECK(debug_string(parse("a*a' - a'*a")) == "Sum(Prod(a, Dagger(a)), Neg(Prod(Dagger(a), a)))");
  CHECK(debug_string(parse("(1+ x*x)'")) == "Dagger(Sum(1, Prod(x, x)))");
  const auto f = parse("frac(x; 1+x*x)");
  CHECK(f.kind == Expr::Kind::Frac);
  CHECK(f.children.size() == 2);
  CHECK(parse("((x))") == Expr::sym("x"));
  CHECK(parse("3/4*i") == Expr::product({Expr::num(Scalar(mpq_class(3, 4))), Expr::num(Scalar::i())}));
}

TEST_CASE("printing normalizes whitespace") {
  CHECK(print(parse("a *a'  -a'* a")) == "a*a' - a'*a");
  CHECK(print(parse("( 1+ x*x )'")) == "(1 + x*x)'");
  CHECK(print(parse("frac(x;1+x*x ,x)")) == "frac(x; 1 + x*x, x)");
  CHECK(print(parse("-x - (y - z)")) == "-x - (y - z)");
}

TEST_CASE("syntax errors carry positions") {
  const auto err = [](const char* text) -> SyntaxError {
    try {
      parse(text);
    } catch (const SyntaxError& e) {
      return e;
    }
    FAIL("no syntax error for " << text);
    throw;
  };
  auto e1 = err("x + * y");
  CHECK(e1.line() == 1);
  CHECK(e1.column() == 5);
  auto e2 = err("x +\n (y");
  CHECK(e2.line() == 2);
  CHECK(e2.column() == 4);
  CHECK(e2.expected() == "')'");
  auto e3 = err("1/0");
  CHECK(e3.column() == 3);
  CHECK_THROWS_AS(parse(""), SyntaxError);
  CHECK_THROWS_AS(parse("x y"), SyntaxError);
  CHECK_THROWS_AS(parse("frac(x)"), SyntaxError);
  CHECK_THROWS_AS(parse("'x"), SyntaxError);
}

TEST_CASE("parse and print round trip on random trees") {
  std::mt19937_64 rng(0);
  for (int trial = 0; trial < 500; ++trial) {
    const auto e = random_expr(rng, 4);
    const auto text = print(e);
    INFO(text);
    CHECK(parse(text) == e);
    CHECK(print(parse(text)) == text);
  }
}

TEST_CASE("fuzzed input never crashes the parser") {
  const std::string alphabet = "xa'()+-*/;,frac 0123i\n_";
  std::mt19937_64 rng(1);
  std::size_t parsed = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    std::string s;
    const std::size_t len = rng() % 16;
    for (std::size_t k = 0; k < len; ++k) s += alphabet[rng() % alphabet.size()];
    try {
      const auto e = parse(s);
      CHECK(parse(print(e)) == e);
      ++parsed;
    } catch (const SyntaxError& err) {
      CHECK(err.line() >= 1);
      CHECK(err.column() >= 1);
    }
  }
  CHECK(parsed > 0);
}

TEST_CASE("evaluation into a presentation") {
  const auto h = presets::heisenberg();
  CHECK(format(evaluate("a*a' - a'*a", h)) == "1");
  CHECK(format(evaluate("(a + 2*i*a')'", h)) == "a' - (2*i)*a");
  CHECK_THROWS_AS(evaluate("b", h), ConfigError);
  CHECK_THROWS_AS(evaluate("frac(a; a)", h), ConfigError);
  const auto cx = presets::polynomial_x();
  for (const auto* text : {"x*x + 1", "-x", "1/2 - 3*i*x", "0", "i*x*x*x"}) {
    const auto a = evaluate(text, cx);
    CHECK(evaluate(format(a), cx) == a);
  }
}

TEST_CASE("fraction text") {
  const auto cx = presets::polynomial_x();
  const auto f = evaluate_fraction("(x) / (1 + x*x)*(1 + (x + 1)*(x + 1))", cx, 2);
  CHECK(f.den().size() == 2);
  CHECK(f.den().factors()[1].p == evaluate("x + 1", cx));
  const auto g = evaluate_fraction("frac(x; 1 + x*x)", cx, 2);
  CHECK(g.den().size() == 1);
  CHECK(evaluate_fraction(format(f), cx, 2).den() == f.den());
  CHECK(evaluate_fraction("x*x", cx, 2).den().empty());
  // denominators must be of the form 1 + p'p
  CHECK_THROWS(evaluate_fraction("(x) / (2 + x*x)", cx, 2));
  const auto h = presets::heisenberg();
  const auto fh = evaluate_fraction("(a) / (1 + a'*a)", h, 2);
  CHECK(fh.den().factors()[0].p == evaluate("a", h));
  CHECK(format(fh) == "(a) / (1 + a'*a)");
}

TEST_CASE("polynomials in n") {
  CHECK(evaluate_poly("n*n + 1") == QPoly::n() * QPoly::n() + QPoly(1));
  CHECK(evaluate_poly("1/2*n").str() == "1/2*n");
  CHECK_THROWS_AS(evaluate_poly("m"), InvalidFormula);
  CHECK(evaluate_poly(print(to_expr(evaluate_poly("(n + 1)*(n - 2)")))) == evaluate_poly("n*n - n - 2"));
}

TEST_CASE("scalars and words in JSON") {
  for (const auto& c : {Scalar(0), Scalar(mpq_class(-3, 7), 2), Scalar(mpq_class("123456789012345678901234567890"))}) {
    CHECK(scalar_from_json(scalar_to_json(c)) == c);
  }
  const auto h = presets::heisenberg();
  CHECK(word_to_string(*h, Word{0, 0, 1}) == "a'.a'.a");
  CHECK(word_from_string(*h, "a'.a") == Word{0, 1});
  CHECK(word_from_string(*h, "1") == Word{});
  CHECK_THROWS_AS(word_from_string(*h, "a.b"), ConfigError);
}

TEST_CASE("presentation JSON round trip is bit-exact") {
  for (const auto& name : presets::names()) {
    const auto p = presets::by_name(name);
    const auto j = presentation_to_json(*p);
    const auto back = presentation_from_json(j);
    CHECK(presentation_to_json(*back).dump() == j.dump());
    CHECK(presentation_hash(*back) == presentation_hash(*p));
  }
  CHECK(presentation_hash(*presets::polynomial_x()) != presentation_hash(*presets::commuting_xy()));
  auto bad = presentation_to_json(*presets::free_xy());
  bad["relations"] = json::parse(R"([{"lhs":"x.y","rhs":[{"coeff":[1,1,0,1],"word":"y.x"}]}])");
  CHECK_THROWS_AS(presentation_from_json(bad), InvalidPresentation);
  CHECK_THROWS(presentation_from_json(json::parse("{}")));
}

TEST_CASE("moment tables") {
  const auto f = gaussian_state(3);
  const auto back = moments_from_json(moments_to_json(f), f.presentation());
  CHECK(back.table() == f.table());
  CHECK(back.degree() == 3);
  const auto j = json::parse(R"({"degree": 1, "moments": {"1": [1, 1, 0, 1], "x.x": [2, 1, 0, 1]}})");
  const auto g = moments_from_json(j, presets::polynomial_x());
  CHECK(g.value(Word{0, 0}) == Scalar(2));
  CHECK(g.value(Word{0}) == Scalar(0));
}

TEST_CASE("operator spec files") {
  const auto a = annihilation();
  CHECK(operator_from_json(operator_to_json(a)) == a);
  const auto mixed = a + a.adjoint() * a;
  CHECK(operator_from_json(operator_to_json(mixed)) == mixed);
  const auto spec = json::parse(R"({"bands": [{"offset": 1, "formula": "sqrt_poly n + 1"},
                                               {"offset": 0, "formula": "poly 1/2*n*n"}]})");
  const auto op = operator_from_json(spec);
  CHECK(op.entry(0, 1) == Surd(1));
  CHECK(op.entry(2, 2) == Surd(2));
  CHECK(parse_formula("const 3", 0) == Formula::constant(3, 0));
  CHECK_THROWS_AS(parse_formula("table 1 2 3", 0), InvalidFormula);
  CHECK_THROWS_AS(parse_formula("poly m", 0), InvalidFormula);
}

TEST_CASE("GNS text output") {
  const auto r = gns(gaussian_state(2));
  std::istringstream in(gns_to_text(r));
  std::string header;
  std::getline(in, header);
  const auto meta = json::parse(header);
  CHECK(meta["gram_rank"] == 3);
  CHECK(meta["degree"] == 2);
  CHECK(meta["presentation_hash"] == presentation_hash(*r.presentation));
  std::string line;
  std::getline(in, line);
  CHECK(line == "matrix x 3 2");
}

TEST_CASE("scenario configuration") {
  ScenarioConfig c;
  c.presentation = "cx";
  CHECK_NOTHROW(c.validate());
  const auto back = ScenarioConfig::from_json(c.to_json());
  CHECK(back.to_json() == c.to_json());
  c.tol = -1;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  CHECK_THROWS_AS(ScenarioConfig::from_json(json::parse(R"({"tol": "small"})")), ConfigError);
  CHECK_THROWS_AS(ScenarioConfig::from_json(json::parse(R"({"bogus": 1})")), ConfigError);
  CHECK_THROWS_AS(run_scenario("nope", ScenarioConfig{}), ConfigError);
  CHECK(scenario_names().size() == 6);
}

TEST_CASE("reports") {
  Report r("demo");
  r.add({{"check", "a"}}, true);
  r.add({{"check", "b"}}, false);
  CHECK(r.passed() == 1);
  CHECK(r.failed() == 1);
  CHECK_FALSE(r.pass());
  const auto text = r.jsonl("2020-01-01T00:00:00Z");
  std::istringstream in(text);
  std::string first;
  std::getline(in, first);
  CHECK(json::parse(first).contains("generated"));
}

TEST_CASE("a small scenario run is deterministic") {
  ScenarioConfig c;
  c.samples = 5;
  const auto r1 = run_scenario("involution-proposition", c);
  const auto r2 = run_scenario("involution-proposition", c);
  CHECK(r1.pass());
  CHECK(r1.jsonl("t1").substr(r1.jsonl("t1").find('\n')) == r2.jsonl("t2").substr(r2.jsonl("t2").find('\n')));
}
