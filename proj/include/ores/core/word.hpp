#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include "ores/core/scalar.hpp"

namespace ores {

/// Index of a generator inside its presentation.
using Gen = std::uint16_t;

/// Monomial in the generators; the empty word is the unit.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Gen> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Gen> letters) : letters_(letters) {}

  std::size_t degree() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const Gen> letters() const { return letters_; }
  Gen operator[](std::size_t i) const { return letters_[i]; }

  Word operator*(const Word& rhs) const;
  /// Letters [pos, pos+len).
  Word sub(std::size_t pos, std::size_t len) const;
  /// Position of the first occurrence of `pattern`, or npos.
  std::size_t find(const Word& pattern, std::size_t from = 0) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  friend bool operator==(const Word&, const Word&) = default;
  /// Degree-lexicographic order on generator indices.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Gen> letters_;
};

/// Sparse linear combination of words. Ordered by deglex so that the leading
/// (largest) word is `rbegin()`.
using Terms = std::map<Word, Scalar>;

/// Adds c*w to `terms`, erasing the entry if it cancels.
void add_term(Terms& terms, const Word& w, const Scalar& c);

}  // namespace ores
