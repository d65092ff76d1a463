#include "ores/core/echelon.hpp"

namespace ores {

void add_to(Combination& c, std::size_t index, const Scalar& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = c.try_emplace(index, v);
  if (inserted) return;
  it->second += v;
  if (it->second.is_zero()) c.erase(it);
}

void EchelonBasis::reduce(Terms& v, Combination& combo) const {
  while (!v.empty()) {
    const auto lead = std::prev(v.end());
    auto it = pivots_.find(lead->first);
    if (it == pivots_.end()) return;
    const Scalar factor = lead->second;
    for (const auto& [w, c] : it->second.vec) add_term(v, w, -(factor * c));
    for (const auto& [j, c] : it->second.combo) add_to(combo, j, -(factor * c));
  }
}

std::optional<Combination> EchelonBasis::insert(std::size_t index, Terms column) {
  Combination combo{{index, Scalar(1)}};
  reduce(column, combo);
  if (column.empty()) return combo;
  const Scalar inv = Scalar(1) / std::prev(column.end())->second;
  for (auto& [w, c] : column) c *= inv;
  for (auto& [j, c] : combo) c *= inv;
  const Word lead = std::prev(column.end())->first;
  pivots_.emplace(lead, Row{std::move(column), std::move(combo)});
  return std::nullopt;
}

std::optional<Combination> EchelonBasis::express(Terms target) const {
  Combination combo;
  reduce(target, combo);
  if (!target.empty()) return std::nullopt;
  // target - sum(combo_j * col_j) was driven to zero with combo accumulating
  // the negated coefficients.
  for (auto& [j, c] : combo) c = -c;
  return combo;
}

}  // namespace ores
