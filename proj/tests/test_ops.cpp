#include <doctest.h>

#include <cmath>

#include <Eigen/Sparse>

#include "oracles.hpp"
#include "ores/core/presets.hpp"
#include "ores/error.hpp"
#include "ores/gns/moments.hpp"
#include "ores/ops/assignment.hpp"
#include "ores/ops/inversion.hpp"
#include "ores/ops/probes.hpp"

using namespace ores;

namespace {

AlgebraElement gen(const PresentationPtr& p, const char* name) {
  return AlgebraElement::generator(p, *p->find(name));
}

Surd root(long m) { return Surd::sqrt(mpq_class(m)); }

Eigen::VectorXcd padded(const Eigen::VectorXcd& v, long n) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(std::max<long>(n, v.size()));
  out.head(v.size()) = v;
  return out;
}

double diff(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v) {
  const long n = std::max(u.size(), v.size());
  return (padded(u, n) - padded(v, n)).norm();
}

BandedOperator weighted_shift() { return BandedOperator::band(1, Formula::poly(QPoly::n() + QPoly(1), 1)); }

// bands 0 and +1, so 1 + A*A is tridiagonal
BandedOperator mixed() {
  return BandedOperator::band(0, Formula::poly(QPoly::n(), 0)) +
         BandedOperator::band(1, Formula::sqrt_poly(QPoly::n() + QPoly(2), 1)).scaled(Scalar(0, 1));
}

Eigen::MatrixXcd dense(const BandedOperator& a, long n) { return a.dense_truncation(n); }

}  // namespace

TEST_CASE("surds") {
  CHECK(root(8) == root(2) * Surd(2));
  CHECK(root(2) * root(3) == root(6));
  CHECK(root(4) == Surd(2));
  CHECK((root(2) - root(2)).is_zero());
  CHECK(root(2).rational() == std::nullopt);
  CHECK(Surd::sqrt(mpq_class(1, 4)).rational() == Scalar(mpq_class(1, 2)));
  CHECK_THROWS_AS(Surd::sqrt(mpq_class(-1)), std::domain_error);
  CHECK(std::abs(root(3).to_complex() - std::sqrt(3.0)) < 1e-15);
  CHECK(square_part(mpz_class(72)) == std::make_pair(mpz_class(6), mpz_class(2)));
}

TEST_CASE("polynomials in n") {
  const auto n = QPoly::n();
  const auto p = n * n + QPoly(1);
  CHECK(p(3) == Scalar(10));
  CHECK(p.shifted(1) == n * n + n + n + QPoly(2));
  CHECK(p.str() == "n*n + 1");
  CHECK(((n + QPoly(1)) * (n + QPoly(1))).square_root() == n + QPoly(1));
  CHECK_FALSE(p.square_root());
}

TEST_CASE("formulas are canonical") {
  const auto n = QPoly::n();
  CHECK(Formula::sqrt_poly((n + QPoly(1)) * (n + QPoly(1)), 0) == Formula::poly(n + QPoly(1), 0));
  CHECK(Formula::sqrt_poly(QPoly(4) * n, 0).exact(3) == Surd(2) * root(3));
  CHECK(Formula::constant(0, 0).is_zero());
}

TEST_CASE("apply examples") {
  const auto a = annihilation();
  const auto e2 = basis_vector(2);
  CHECK(BandedOperator::identity().apply(e2) == e2);
  const ExactVector expected{Surd(), root(2)};
  CHECK(a.apply(e2) == expected);
  const auto number = a.adjoint() * a;
  for (std::size_t n = 0; n < 10; ++n) {
    ExactVector want = basis_vector(n);
    for (auto& c : want) c = c * Surd(static_cast<long>(n));
    CHECK(trimmed(number.apply(basis_vector(n))) == trimmed(want));
  }
  CHECK(a.apply(basis_vector(0)).empty());
}

TEST_CASE("adjoint identity on basis pairs is exact") {
  for (const auto& op : {annihilation(), weighted_shift(), mixed(), mixed() * annihilation()}) {
    const auto adj = op.adjoint();
    for (long n = 0; n < 12; ++n)
      for (long m = 0; m < 12; ++m) CHECK(adj.entry(n, m) == op.entry(m, n).conj());
    CHECK(adj.adjoint() == op);
  }
}

TEST_CASE("strong sum and product") {
  const auto a = mixed();
  CHECK(strong_sum(a, -a).is_zero());
  const auto d = BandedOperator::band(0, Formula::poly(QPoly::n(), 0));
  CHECK(strong_product(d, d) == BandedOperator::band(0, Formula::poly(QPoly::n() * QPoly::n(), 0)));
  // products agree with dense products away from the truncation edge
  const auto b = annihilation();
  const Eigen::MatrixXcd lhs = dense(a * b.adjoint(), 10);
  const Eigen::MatrixXcd rhs = (dense(a, 14) * dense(b.adjoint(), 14)).topLeftCorner(10, 10);
  CHECK((lhs - rhs).norm() < 1e-12);
  CHECK(annihilation() * annihilation().adjoint() - annihilation().adjoint() * annihilation() ==
        BandedOperator::identity());
}

TEST_CASE("Fock assignments satisfy their relations") {
  CHECK(FockAssignment::heisenberg().check(30).empty());
  CHECK(FockAssignment::position().check(30).empty());
  const auto h = presets::heisenberg();
  const auto fa = FockAssignment::heisenberg();
  CHECK(fa.represent(gen(h, "a")) == annihilation());
  CHECK(vacuum_state(fa, 3).table() == fock_state(3).table());
  const auto bad = FockAssignment(h, {annihilation(), annihilation()});
  CHECK_FALSE(bad.check(10).empty());
}

TEST_CASE("inverting 1 + A*A for the annihilation operator") {
  const auto a = annihilation();
  for (std::size_t n = 0; n <= 20; ++n) {
    const auto r = invert_one_plus_AstarA(a, basis_vector_d(n, n + 1));
    const Eigen::VectorXcd want = basis_vector_d(n, n + 1) / double(n + 1);
    CHECK(diff(r.x, want) < 1e-15);
    CHECK(r.residual <= 1e-10);
  }
  const Eigen::VectorXcd y = Eigen::VectorXcd::LinSpaced(5, 1, 5);
  CHECK(diff(invert_one_plus_AstarA(BandedOperator(), y).x, y) == 0);
}

TEST_CASE("inversion against a larger dense solve") {
  for (const auto& op : {weighted_shift(), mixed()}) {
    Eigen::VectorXcd y = Eigen::VectorXcd::Zero(6);
    y(0) = 1;
    y(5) = 1;
    const auto r = invert_one_plus_AstarA(op, y, {1e-10, 1 << 16});
    CHECK(r.residual <= 1e-10);
    const int big = static_cast<int>(4 * r.truncation_size);
    const auto ref = oracle::dense_solve([&](int i, int j) { return op.entry_d(i, j); }, big, y);
    const double err = diff(r.x, ref);
    CHECK(err < 1e-9);
    CHECK(err <= r.residual + 1e-15);
    // the reported residual is the true one
    const Eigen::VectorXcd ax = op.apply(r.x);
    const Eigen::VectorXcd bx = padded(r.x, ax.size()) + op.adjoint().apply(ax);
    CHECK(std::abs(diff(bx, y) - r.residual) < 1e-12);
    for (std::size_t k = 1; k < r.history.size(); ++k)
      CHECK(r.history[k].second <= r.history[k - 1].second * (1 + 1e-12));
  }
}

TEST_CASE("inversion reports a truncation limit") {
  Eigen::VectorXcd y = Eigen::VectorXcd::Ones(3);
  CHECK_THROWS_AS(invert_one_plus_AstarA(mixed(), y, {1e-300, 32}), TruncationLimit);
}

TEST_CASE("surjectivity probes") {
  const auto fa = FockAssignment::heisenberg();
  const auto h = fa.presentation();
  const auto a = gen(h, "a"), ad = gen(h, "a'");
  const InversionOptions opts{1e-8, 1 << 16};
  std::vector<Eigen::VectorXcd> targets;
  for (std::size_t n = 0; n <= 5; ++n) targets.push_back(basis_vector_d(n, n + 1));

  const auto one = pi_s_surjectivity_probe(fa, SProduct::one(h), targets, opts);
  CHECK(one.pass());
  CHECK(diff(one.items[3].target, targets[3]) == 0);

  const auto s1 = SProduct::factor(a);
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto pre = solve_pi_s(fa, s1, targets[n], opts);
    CHECK(diff(pre.x, targets[n] / double(n + 1)) < 1e-12);
  }
  for (const auto& s : {s1, s1 * s1, SProduct::from_factors(h, {a, a + ad})}) {
    const auto rep = pi_s_surjectivity_probe(fa, s, targets, opts);
    CHECK(rep.pass());
    for (const auto& it : rep.items) CHECK(it.residual <= 1e-8);
  }

  // two-factor preimage of e0 against a direct solve of the composite
  const auto s2 = SProduct::from_factors(h, {a, a + ad});
  const auto pre = solve_pi_s(fa, s2, targets[0], opts);
  const long big = static_cast<long>(pre.truncation_size) + 64;
  const Eigen::SparseMatrix<double> am = oracle::fock_annihilation(static_cast<int>(big + 4)).sparseView();
  const Eigen::SparseMatrix<double> q = am + Eigen::SparseMatrix<double>(am.transpose());
  Eigen::SparseMatrix<double> id(big + 4, big + 4);
  id.setIdentity();
  const Eigen::SparseMatrix<double> one_a = id + Eigen::SparseMatrix<double>(am.transpose()) * am;
  const Eigen::SparseMatrix<double> one_q = id + Eigen::SparseMatrix<double>(q.transpose()) * q;
  const Eigen::MatrixXd s_dense = Eigen::MatrixXd(one_a * one_q).topLeftCorner(big, big);
  const Eigen::VectorXd ref = s_dense.partialPivLu().solve(Eigen::VectorXd::Unit(big, 0));
  CHECK(diff(pre.x, ref.cast<std::complex<double>>()) < 1e-7);
}

TEST_CASE("pi(s) equals the operator product") {
  const auto fa = FockAssignment::heisenberg();
  const auto h = fa.presentation();
  const auto a = gen(h, "a"), ad = gen(h, "a'");
  std::vector<ExactVector> samples;
  for (std::size_t n = 0; n <= 8; ++n) samples.push_back(basis_vector(n));
  CHECK(lemma_pis_equals_S_check(fa, SProduct::factor(a), samples).pass);
  const auto s2 = SProduct::from_factors(h, {a, a + ad});
  const auto rep = lemma_pis_equals_S_check(fa, s2, samples);
  CHECK(rep.pass);
  CHECK(rep.checked == 9);

  // independent dense evaluation of pi(s) for the two-factor product
  const Eigen::MatrixXd am = oracle::fock_annihilation(20);
  const Eigen::MatrixXd q = am + am.transpose();
  const Eigen::MatrixXd one = Eigen::MatrixXd::Identity(20, 20);
  const Eigen::MatrixXd s_dense = (one + am.transpose() * am) * (one + q.transpose() * q);
  const Eigen::MatrixXcd s_op = fa.represent(s2.value()).dense_truncation(20);
  CHECK((s_op.topLeftCorner(12, 12) - s_dense.topLeftCorner(12, 12).cast<std::complex<double>>()).norm() < 1e-9);

  // a wrong adjoint for the first factor is detected
  const auto wrong = annihilation().scaled(2).adjoint();
  const auto bad = lemma_pis_equals_S_check(fa, s2, samples, {wrong, std::nullopt});
  CHECK_FALSE(bad.pass);
  CHECK(bad.mismatch.has_value());
}

TEST_CASE("core density") {
  const auto fa = FockAssignment::heisenberg();
  const auto h = fa.presentation();
  const auto a = gen(h, "a");
  const auto s = SProduct::factor(a);
  const InversionOptions opts{1e-6, 1 << 16};
  Eigen::VectorXcd geometric(60);
  for (int n = 0; n < 60; ++n) geometric(n) = std::pow(0.5, n);
  const auto r = core_density_probe(fa, a, s, geometric, opts);
  CHECK(r.pass);
  CHECK(r.distance <= 1e-6);

  const Eigen::VectorXcd in_range = fa.represent(s.value()).apply(basis_vector_d(2, 3));
  CHECK(core_density_probe(fa, a, s, in_range, opts).distance < 1e-12);
  CHECK(core_density_probe(fa, AlgebraElement::zero(h), s, geometric, opts).pass);
}

TEST_CASE("extending the representation to fractions") {
  const auto fa = FockAssignment::heisenberg();
  const auto h = fa.presentation();
  const auto a = gen(h, "a");
  const auto one = AlgebraElement::one(h);
  const auto s = SProduct::factor(a);
  const InversionOptions opts{1e-10, 1 << 16};
  const SearchBudget budget{2, 2, 2, {}};
  const auto e3 = basis_vector_d(3, 4);

  CHECK(diff(extend_representation(fa, embed(one), e3, opts, budget).value, e3) < 1e-15);
  CHECK(diff(extend_representation(fa, Fraction(one, s), e3, opts, budget).value, e3 / 4.0) < 1e-12);

  const auto r = extend_representation(fa, Fraction(a, s), e3, opts, budget);
  CHECK(diff(r.value, basis_vector_d(2, 3) * (std::sqrt(3.0) / 4)) < 1e-10);
  REQUIRE(r.witness_route);
  CHECK(r.routes_agree);
  CHECK(*r.route_difference < 1e-8);
}
