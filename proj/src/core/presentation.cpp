#include "ores/core/presentation.hpp"

#include <set>

#include "ores/error.hpp"

namespace ores {

namespace {

std::string render(const Presentation& p, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.degree(); ++i) {
    if (i) out += '*';
    out += p.name(w[i]);
  }
  return out;
}

}  // namespace

PresentationPtr Presentation::make(std::vector<std::string> generators,
                                   std::vector<Gen> dagger_map,
                                   std::vector<RewriteRule> rules,
                                   std::size_t degree_cap) {
  std::shared_ptr<Presentation> p(new Presentation());
  if (generators.empty()) throw InvalidPresentation("presentation has no generators");
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (g.empty()) throw InvalidPresentation("empty generator name");
    if (!seen.insert(g).second) throw InvalidPresentation("duplicate generator '" + g + "'");
  }
  if (dagger_map.size() != generators.size())
    throw InvalidPresentation("dagger map does not cover every generator");
  for (std::size_t g = 0; g < dagger_map.size(); ++g) {
    if (dagger_map[g] >= generators.size() || dagger_map[dagger_map[g]] != g)
      throw InvalidPresentation("dagger map is not an involution at '" + generators[g] + "'");
  }
  if (degree_cap < 1) throw InvalidPresentation("degree cap must be positive");

  p->names_ = std::move(generators);
  p->dagger_ = std::move(dagger_map);
  p->degree_cap_ = degree_cap;

  for (const auto& r : rules) {
    if (r.lhs.empty()) throw InvalidPresentation("rule with empty left-hand side");
    for (Gen g : r.lhs.letters())
      if (g >= p->names_.size()) throw InvalidPresentation("rule uses unknown generator");
    for (const auto& [w, c] : r.rhs) {
      for (Gen g : w.letters())
        if (g >= p->names_.size()) throw InvalidPresentation("rule uses unknown generator");
      if (c.is_zero()) throw InvalidPresentation("rule with zero coefficient");
      if (!(w < r.lhs))
        throw InvalidPresentation("rule " + render(*p, r.lhs) +
                                  " is not deglex-decreasing (term " + render(*p, w) + ")");
    }
  }
  p->rules_ = std::move(rules);

  p->check_confluence();
  p->check_dagger_closure();

  p->commutative_ = true;
  if (degree_cap >= 2) {
    for (Gen g = 0; g < p->names_.size() && p->commutative_; ++g)
      for (Gen h = g + 1; h < p->names_.size(); ++h) {
        Terms gh{{Word{g, h}, Scalar(1)}};
        Terms hg{{Word{h, g}, Scalar(1)}};
        if (p->normalize(gh) != p->normalize(hg)) {
          p->commutative_ = false;
          break;
        }
      }
  } else {
    p->commutative_ = p->names_.size() == 1;
  }
  return p;
}

std::optional<Gen> Presentation::find(std::string_view name) const {
  for (std::size_t g = 0; g < names_.size(); ++g)
    if (names_[g] == name) return static_cast<Gen>(g);
  return std::nullopt;
}

Word Presentation::dagger(const Word& w) const {
  std::vector<Gen> out(w.degree());
  for (std::size_t i = 0; i < w.degree(); ++i) out[w.degree() - 1 - i] = dagger_.at(w[i]);
  return Word(std::move(out));
}

std::optional<Presentation::Redex> Presentation::leftmost_redex(const Word& w) const {
  const auto letters = w.letters();
  for (std::size_t pos = 0; pos < letters.size(); ++pos) {
    for (const auto& r : rules_) {
      const auto lhs = r.lhs.letters();
      if (pos + lhs.size() > letters.size()) continue;
      bool match = true;
      for (std::size_t k = 0; k < lhs.size() && match; ++k) match = letters[pos + k] == lhs[k];
      if (match) return Redex{pos, &r};
    }
  }
  return std::nullopt;
}

Terms Presentation::rewrite_at(const Word& w, const Redex& r, const Scalar& c) const {
  const std::size_t len = r.rule->lhs.degree();
  const Word prefix = w.sub(0, r.pos);
  const Word suffix = w.sub(r.pos + len, w.degree() - r.pos - len);
  Terms out;
  for (const auto& [rw, rc] : r.rule->rhs) add_term(out, prefix * rw * suffix, c * rc);
  return out;
}

bool Presentation::is_reducible(const Word& w) const { return leftmost_redex(w).has_value(); }

Terms Presentation::normalize(Terms raw) const {
  // Rewriting strictly lowers words in deglex, so always expanding the
  // largest pending word visits each word at most once.
  Terms result;
  while (!raw.empty()) {
    auto node = raw.extract(std::prev(raw.end()));
    const Word& w = node.key();
    const Scalar& c = node.mapped();
    auto redex = leftmost_redex(w);
    if (!redex) {
      result.emplace(w, c);
      continue;
    }
    for (const auto& [rw, rc] : rewrite_at(w, *redex, c)) add_term(raw, rw, rc);
  }
  return result;
}

std::vector<Word> Presentation::normal_words(std::size_t max_degree) const {
  std::vector<Word> out{Word{}};
  std::size_t layer_begin = 0;
  for (std::size_t d = 1; d <= max_degree; ++d) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (Gen g = 0; g < names_.size(); ++g) {
        Word w = out[i] * Word{g};
        if (!is_reducible(w)) out.push_back(std::move(w));
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

void Presentation::check_confluence() const {
  // Critical pairs: proper overlaps (suffix of lhs_i = prefix of lhs_j) and
  // inclusions (lhs_j inside lhs_i). Terminating + locally confluent on
  // every critical pair of length <= cap gives confluence up to the cap.
  auto join = [&](const Word& w, const Redex& a, const Redex& b) {
    Terms left = normalize(rewrite_at(w, a, 1));
    Terms right = normalize(rewrite_at(w, b, 1));
    if (left != right)
      throw InvalidPresentation("rules are not confluent: critical pair at " + render(*this, w));
  };
  for (const auto& ri : rules_) {
    for (const auto& rj : rules_) {
      const std::size_t li = ri.lhs.degree(), lj = rj.lhs.degree();
      for (std::size_t ov = 1; ov < std::min(li, lj); ++ov) {
        if (ri.lhs.sub(li - ov, ov) != rj.lhs.sub(0, ov)) continue;
        Word w = ri.lhs * rj.lhs.sub(ov, lj - ov);
        if (w.degree() > degree_cap_) continue;
        join(w, Redex{0, &ri}, Redex{li - ov, &rj});
      }
      if (&ri == &rj || lj > li) continue;
      for (std::size_t pos = ri.lhs.find(rj.lhs); pos != Word::npos;
           pos = ri.lhs.find(rj.lhs, pos + 1)) {
        if (ri.lhs.degree() > degree_cap_) break;
        join(ri.lhs, Redex{0, &ri}, Redex{pos, &rj});
      }
    }
  }
}

void Presentation::check_dagger_closure() const {
  for (const auto& r : rules_) {
    if (r.lhs.degree() > degree_cap_) continue;
    Terms diff{{dagger(r.lhs), Scalar(1)}};
    for (const auto& [w, c] : r.rhs) add_term(diff, dagger(w), -c.conj());
    if (!normalize(std::move(diff)).empty())
      throw InvalidPresentation("relation set is not closed under the involution: rule " +
                                render(*this, r.lhs));
  }
}

}  // namespace ores
