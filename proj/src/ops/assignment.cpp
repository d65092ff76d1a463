#include "ores/ops/assignment.hpp"

#include "ores/core/presets.hpp"
#include "ores/error.hpp"

namespace ores {

FockAssignment::FockAssignment(PresentationPtr p, std::vector<BandedOperator> ops)
    : pres_(std::move(p)), ops_(std::move(ops)) {
  if (ops_.size() != pres_->num_generators())
    throw InvalidState("assignment needs one operator per generator");
}

FockAssignment FockAssignment::heisenberg() {
  auto p = presets::heisenberg();
  std::vector<BandedOperator> ops(2);
  ops[*p->find("a")] = annihilation();
  ops[*p->find("a'")] = annihilation().adjoint();
  return FockAssignment(p, std::move(ops));
}

FockAssignment FockAssignment::position() {
  // sqrt((n+1)/2) above and sqrt(n/2) below the diagonal
  const Scalar half(mpq_class(1, 2));
  BandedOperator x = BandedOperator::band(1, Formula::sqrt_poly((QPoly::n() + QPoly(1)) * QPoly(half), 1)) +
                     BandedOperator::band(-1, Formula::sqrt_poly(QPoly::n() * QPoly(half), -1));
  return FockAssignment(presets::polynomial_x(), {x});
}

BandedOperator FockAssignment::represent(const Word& w) const {
  BandedOperator out = BandedOperator::identity();
  for (Gen g : w.letters()) out = out * ops_.at(g);
  return out;
}

BandedOperator FockAssignment::represent(const AlgebraElement& a) const {
  if (a.presentation() != pres_) throw PresentationMismatch();
  BandedOperator out;
  for (const auto& [w, c] : a.terms()) out = out + represent(w).scaled(c);
  return out;
}

std::string FockAssignment::check(std::size_t n) const {
  auto annihilates = [&](const BandedOperator& d) {
    for (std::size_t k = 0; k <= n; ++k)
      if (!d.apply(basis_vector(k)).empty()) return false;
    return true;
  };
  for (Gen g = 0; g < pres_->num_generators(); ++g)
    if (!annihilates(ops_[pres_->dagger(g)] - ops_[g].adjoint()))
      return "operator of " + pres_->name(pres_->dagger(g)) + " is not the adjoint of " +
             pres_->name(g);
  for (const auto& rule : pres_->rules()) {
    BandedOperator rhs;
    for (const auto& [w, c] : rule.rhs) rhs = rhs + represent(w).scaled(c);
    if (!annihilates(represent(rule.lhs) - rhs))
      return "relation " + word_string(*pres_, rule.lhs) + " fails";
  }
  return {};
}

MomentFunctional vacuum_state(const FockAssignment& assignment, std::size_t degree) {
  const auto& p = assignment.presentation();
  std::map<Word, Scalar> table;
  for (const auto& w : p->normal_words(2 * degree)) {
    const ExactVector v = assignment.represent(w).apply(basis_vector(0));
    const Surd value = v.empty() ? Surd() : v[0];
    if (auto q = value.rational())
      table.emplace(w, *q);
    else
      table.emplace(w, Scalar::from_double(value.to_complex()));
  }
  return MomentFunctional(p, degree, std::move(table));
}

}  // namespace ores
