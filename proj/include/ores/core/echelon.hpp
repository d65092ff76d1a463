#pragma once

#include <map>
#include <optional>

#include "ores/core/word.hpp"

namespace ores {

/// Sparse combination of inserted columns, keyed by column index.
using Combination = std::map<std::size_t, Scalar>;

/// Incremental exact row-echelon basis of a span of sparse vectors over Q(i),
/// with pivots on leading (deglex-largest) words. Tracks, for every pivot
/// row, which combination of inserted columns produced it.
class EchelonBasis {
 public:
  /// Inserts column `index`. Returns the dependency (a combination of
  /// columns summing to zero, containing `index`) if the column is already
  /// in the span; nullopt when it extends the basis.
  std::optional<Combination> insert(std::size_t index, Terms column);

  /// Coefficients expressing `target` in the inserted columns, if it lies in
  /// their span.
  std::optional<Combination> express(Terms target) const;

  std::size_t rank() const { return pivots_.size(); }

 private:
  struct Row {
    Terms vec;  // leading coefficient normalised to 1
    Combination combo;
  };
  // Reduces `v` until its leading word has no pivot; `combo` tracks the
  // subtracted multiples of rows.
  void reduce(Terms& v, Combination& combo) const;

  std::map<Word, Row> pivots_;
};

void add_to(Combination& c, std::size_t index, const Scalar& v);

}  // namespace ores
