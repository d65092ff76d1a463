#include "ores/core/word.hpp"

#include <algorithm>

namespace ores {

Word Word::operator*(const Word& rhs) const {
  std::vector<Gen> out;
  out.reserve(letters_.size() + rhs.letters_.size());
  out.insert(out.end(), letters_.begin(), letters_.end());
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(out));
}

Word Word::sub(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Gen>(letters_.begin() + static_cast<long>(pos),
                               letters_.begin() + static_cast<long>(pos + len)));
}

std::size_t Word::find(const Word& pattern, std::size_t from) const {
  if (pattern.degree() > degree()) return npos;
  auto it = std::search(letters_.begin() + static_cast<long>(from), letters_.end(),
                        pattern.letters_.begin(), pattern.letters_.end());
  if (it == letters_.end() && !pattern.empty()) return npos;
  return static_cast<std::size_t>(it - letters_.begin());
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                b.letters_.begin(), b.letters_.end());
}

void add_term(Terms& terms, const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

}  // namespace ores
