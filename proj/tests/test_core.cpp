#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ores/core/echelon.hpp"
#include "ores/core/element.hpp"
#include "ores/core/presets.hpp"
#include "ores/core/regularity.hpp"
#include "ores/error.hpp"

using namespace ores;

namespace {

AlgebraElement gen(const PresentationPtr& p, const char* name) {
  return AlgebraElement::generator(p, *p->find(name));
}

AlgebraElement random_elem(const PresentationPtr& p, std::mt19937_64& rng, std::size_t degree) {
  const auto words = p->normal_words(degree);
  AlgebraElement a = AlgebraElement::zero(p);
  const std::size_t terms = 1 + rng() % 3;
  for (std::size_t k = 0; k < terms; ++k) {
    const Scalar c(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) - 1);
    a += AlgebraElement::word(p, words[rng() % words.size()], c);
  }
  return a;
}

}  // namespace

TEST_CASE("scalar arithmetic is exact in Q(i)") {
  const Scalar half(mpq_class(1, 2));
  CHECK(half + half == Scalar(1));
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
  CHECK((Scalar(1) / Scalar(1, 1)) == Scalar(mpq_class(1, 2), mpq_class(-1, 2)));
  CHECK(Scalar(3, -4).norm2() == 25);
  CHECK(Scalar(2, 3).conj() == Scalar(2, -3));
  CHECK_THROWS_AS(Scalar(1) / Scalar(), std::domain_error);
}

TEST_CASE("scalar printing") {
  CHECK(Scalar(mpq_class(3, 4)).str() == "3/4");
  CHECK(Scalar::i().str() == "i");
  CHECK(Scalar(1, 2).str() == "1 + 2*i");
  CHECK(Scalar(1, -1).str() == "1 - i");
  CHECK(Scalar(-2).str() == "-2");
}

TEST_CASE("from_double snaps to small rationals and keeps other values exactly") {
  CHECK(Scalar::from_double(1.0 / 3) == Scalar(mpq_class(1, 3)));
  CHECK(Scalar::from_double(0.1) == Scalar(mpq_class(1, 10)));
  CHECK(Scalar::from_double({2.0, -0.5}) == Scalar(2, mpq_class(-1, 2)));
  CHECK(Scalar::from_double(1e-17) == Scalar());
  const double off = 1.0 / 3 + 1e-9;
  CHECK(Scalar::from_double(off) == Scalar(mpq_class(off)));
}

TEST_CASE("words are ordered degree-lexicographically") {
  CHECK(Word{} < Word{0});
  CHECK(Word{1} < Word{0, 0});
  CHECK(Word{0, 1} < Word{1, 0});
  CHECK(Word{0, 1} * Word{1} == Word{0, 1, 1});
  CHECK(Word{0, 1, 0, 1}.find(Word{1, 0}) == 1);
  CHECK(Word{0, 1}.find(Word{1, 1}) == Word::npos);
}

TEST_CASE("presets") {
  CHECK(presets::names().size() == 5);
  for (const auto& n : presets::names()) CHECK(presets::by_name(n) != nullptr);
  CHECK_THROWS_AS(presets::by_name("nope"), ConfigError);
  CHECK(presets::polynomial_x()->is_commutative());
  CHECK(presets::commuting_xy()->is_commutative());
  CHECK_FALSE(presets::heisenberg()->is_commutative());
  CHECK_FALSE(presets::free_xy()->is_commutative());
}

TEST_CASE("normal words are counted correctly") {
  CHECK(presets::polynomial_x()->normal_words(5).size() == 6);
  CHECK(presets::heisenberg()->normal_words(4).size() == 15);
  CHECK(presets::commuting_xy()->normal_words(3).size() == 10);
  CHECK(presets::free_xy()->normal_words(3).size() == 15);
  CHECK(presets::idempotent()->normal_words(5).size() == 2);
}

TEST_CASE("Heisenberg relation and normal ordering") {
  const auto h = presets::heisenberg();
  const auto a = gen(h, "a"), ad = gen(h, "a'");
  CHECK(ad == a.dagger());
  CHECK(a * ad - ad * a == AlgebraElement::one(h));
  CHECK((a * ad).str() == "1 + a'*a");
  // a a a' a' = a'a'aa + 4 a'a + 2
  const auto lhs = a * a * ad * ad;
  const auto expected = ad * ad * a * a + (ad * a).scaled(4) + AlgebraElement::scalar(h, 2);
  CHECK(lhs == expected);
}

TEST_CASE("normalization agrees with a naive rewriting oracle") {
  std::mt19937_64 rng(7);
  for (const auto& name : {"heisenberg", "cxy", "idempotent"}) {
    const auto p = presets::by_name(name);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Gen> letters;
      const std::size_t len = rng() % 7;
      for (std::size_t k = 0; k < len; ++k) letters.push_back(static_cast<Gen>(rng() % p->num_generators()));
      const Word w(letters);
      const auto lib = AlgebraElement::word(p, w);
      const auto ref = oracle::normal_form(*p, oracle::word(letters));
      CHECK(oracle::from_terms(lib.terms()) == ref);
    }
  }
}

TEST_CASE("involution is antilinear, antimultiplicative and involutive") {
  std::mt19937_64 rng(11);
  for (const auto& name : presets::names()) {
    const auto p = presets::by_name(name);
    for (int trial = 0; trial < 40; ++trial) {
      const auto a = random_elem(p, rng, 2), b = random_elem(p, rng, 2);
      const Scalar l(static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 5) - 2);
      CHECK((a.scaled(l) + b).dagger() == a.dagger().scaled(l.conj()) + b.dagger());
      CHECK((a * b).dagger() == b.dagger() * a.dagger());
      CHECK(a.dagger().dagger() == a);
    }
  }
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937_64 rng(3);
  for (const auto& name : presets::names()) {
    const auto p = presets::by_name(name);
    for (int trial = 0; trial < 30; ++trial) {
      const auto a = random_elem(p, rng, 2), b = random_elem(p, rng, 2), c = random_elem(p, rng, 2);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) * c == a * c + b * c);
      CHECK(a - a == AlgebraElement::zero(p));
      CHECK(a * AlgebraElement::one(p) == a);
    }
  }
}

TEST_CASE("products beyond the degree cap overflow") {
  const auto f = presets::free_xy();
  const auto x = gen(f, "x");
  AlgebraElement w = AlgebraElement::one(f);
  for (int k = 0; k < 8; ++k) w = w * x;
  CHECK(w.degree() == 8);
  CHECK_THROWS_AS(w * x, DegreeOverflow);
  CHECK_THROWS_AS(AlgebraElement::word(f, Word(std::vector<Gen>(9, 0))), DegreeOverflow);
}

TEST_CASE("mixing presentations is rejected") {
  const auto x = gen(presets::polynomial_x(), "x");
  const auto e = gen(presets::idempotent(), "e");
  CHECK_THROWS_AS(x + e, PresentationMismatch);
  CHECK_THROWS_AS(x * e, PresentationMismatch);
}

TEST_CASE("presentation validation") {
  // dagger map not an involution
  CHECK_THROWS_AS(Presentation::make({"a", "b", "c"}, {1, 2, 0}, {}, 4), InvalidPresentation);
  // duplicate names
  CHECK_THROWS_AS(Presentation::make({"x", "x"}, {0, 1}, {}, 4), InvalidPresentation);
  // rule that does not decrease
  CHECK_THROWS_AS(Presentation::make({"x", "y"}, {0, 1}, {RewriteRule{Word{0, 1}, {{Word{1, 0}, 1}}}}, 4),
                  InvalidPresentation);
  // x*x -> y is not confluent: x(xx) and (xx)x reduce to x*y and y*x
  CHECK_THROWS_AS(Presentation::make({"x", "y"}, {0, 1}, {RewriteRule{Word{0, 0}, {{Word{1}, 1}}}}, 4),
                  InvalidPresentation);
  // y*x -> x is not closed under the involution: x*y = x does not follow
  CHECK_THROWS_AS(Presentation::make({"x", "y"}, {0, 1}, {RewriteRule{Word{1, 0}, {{Word{0}, 1}}}}, 4),
                  InvalidPresentation);
  // a valid q-commutation: y*x -> x*y on hermitian generators
  CHECK_NOTHROW(Presentation::make({"x", "y"}, {0, 1}, {RewriteRule{Word{1, 0}, {{Word{0, 1}, 1}}}}, 4));
}

TEST_CASE("element printing") {
  const auto cx = presets::polynomial_x();
  const auto x = gen(cx, "x");
  CHECK((AlgebraElement::one(cx) - x).str() == "1 - x");
  CHECK(x.scaled(Scalar(1, 2)).str() == "(1 + 2*i)*x");
  CHECK(AlgebraElement::zero(cx).str() == "0");
  CHECK(word_string(*cx, Word{}) == "1");
}

TEST_CASE("echelon basis expresses members of the span") {
  EchelonBasis basis;
  Terms u{{Word{0}, 1}, {Word{}, 1}};
  Terms v{{Word{0}, 1}, {Word{}, -1}};
  CHECK_FALSE(basis.insert(0, u));
  CHECK_FALSE(basis.insert(1, v));
  Terms target{{Word{}, 2}};
  auto combo = basis.express(target);
  REQUIRE(combo);
  CHECK((*combo)[0] == Scalar(1));
  CHECK((*combo)[1] == Scalar(-1));
  auto dep = basis.insert(2, Terms{{Word{0}, 2}});
  REQUIRE(dep);
  CHECK(dep->count(2) == 1);
  CHECK_FALSE(basis.express(Terms{{Word{0, 0}, 1}}));
  CHECK(basis.rank() == 2);
}

TEST_CASE("regularity checks") {
  const auto cx = presets::polynomial_x();
  const auto x = gen(cx, "x");
  const auto s = AlgebraElement::one(cx) + x * x;
  CHECK(is_regular(is_regular_up_to(s, 4)));
  CHECK_THROWS_AS(is_regular_up_to(s, 63), DegreeOverflow);

  const auto id = presets::idempotent();
  const auto e = gen(id, "e");
  auto r = is_regular_up_to(e, 1);
  REQUIRE_FALSE(is_regular(r));
  const auto& w = std::get<ZeroDivisorWitness>(r);
  CHECK(w.a == AlgebraElement::one(id) - e);
  CHECK((e * w.a).is_zero());
  CHECK(is_regular(is_regular_up_to(AlgebraElement::one(id) + e, 4)));

  const auto zero = is_regular_up_to(AlgebraElement::zero(cx), 2);
  CHECK_FALSE(is_regular(zero));
}
