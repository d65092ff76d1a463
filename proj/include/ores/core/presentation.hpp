#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ores/core/word.hpp"

namespace ores {

/// Rewrite rule lhs -> rhs. Every word of rhs must be deglex-smaller than lhs.
struct RewriteRule {
  Word lhs;
  Terms rhs;

  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

class Presentation;
using PresentationPtr = std::shared_ptr<const Presentation>;

/// Finitely presented unital *-algebra: generators, an involutive pairing of
/// generators under the dagger, and a terminating rewriting system whose
/// confluence and dagger-closure are verified up to the degree cap on load.
///
/// Rules are required to be strictly deglex-decreasing. Deglex is a monomial
/// well-order, so rewriting terminates and never lengthens a word; normal
/// forms of words within the cap therefore stay within the cap.
class Presentation {
 public:
  /// Validates and builds. Throws InvalidPresentation on any violated
  /// invariant, naming the offending generator, rule or critical pair.
  static PresentationPtr make(std::vector<std::string> generators,
                              std::vector<Gen> dagger_map,
                              std::vector<RewriteRule> rules,
                              std::size_t degree_cap);

  std::size_t num_generators() const { return names_.size(); }
  const std::vector<std::string>& generators() const { return names_; }
  const std::string& name(Gen g) const { return names_.at(g); }
  std::optional<Gen> find(std::string_view name) const;

  Gen dagger(Gen g) const { return dagger_.at(g); }
  const std::vector<Gen>& dagger_map() const { return dagger_; }
  bool is_hermitian(Gen g) const { return dagger_.at(g) == g; }
  /// Reverses the word and maps each letter through the dagger pairing.
  Word dagger(const Word& w) const;

  const std::vector<RewriteRule>& rules() const { return rules_; }
  std::size_t degree_cap() const { return degree_cap_; }
  /// True when all generators commute (checked exactly on load).
  bool is_commutative() const { return commutative_; }

  bool is_reducible(const Word& w) const;
  /// Rewrites every word of `raw` to normal form and collects terms.
  Terms normalize(Terms raw) const;
  /// All normal-form words of degree <= max_degree, in deglex order.
  std::vector<Word> normal_words(std::size_t max_degree) const;

 private:
  Presentation() = default;

  struct Redex {
    std::size_t pos;
    const RewriteRule* rule;
  };
  std::optional<Redex> leftmost_redex(const Word& w) const;
  Terms rewrite_at(const Word& w, const Redex& r, const Scalar& c) const;
  void check_confluence() const;
  void check_dagger_closure() const;

  std::vector<std::string> names_;
  std::vector<Gen> dagger_;
  std::vector<RewriteRule> rules_;
  std::size_t degree_cap_ = 0;
  bool commutative_ = false;
};

}  // namespace ores
