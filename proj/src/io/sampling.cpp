#include "ores/io/sampling.hpp"

namespace ores {

Scalar random_scalar(Rng& rng) {
  while (true) {
    const long re = static_cast<long>(pick(rng, 7)) - 3;
    const long im = pick(rng, 3) == 0 ? static_cast<long>(pick(rng, 5)) - 2 : 0;
    const long den = 1 + static_cast<long>(pick(rng, 2));
    Scalar c = Scalar::from_parts(re, den, im, 1);
    if (!c.is_zero()) return c;
  }
}

AlgebraElement random_element(const PresentationPtr& p, Rng& rng, std::size_t max_degree,
                              std::size_t max_terms) {
  const auto words = p->normal_words(max_degree);
  while (true) {
    AlgebraElement a = AlgebraElement::zero(p);
    const std::size_t terms = 1 + pick(rng, max_terms);
    for (std::size_t k = 0; k < terms; ++k)
      a += AlgebraElement::word(p, words[pick(rng, words.size())], random_scalar(rng));
    if (!a.is_zero()) return a;
  }
}

SProduct random_sproduct(const PresentationPtr& p, Rng& rng, std::size_t max_factors,
                         std::size_t p_degree) {
  const std::size_t n = pick(rng, max_factors + 1);
  std::vector<AlgebraElement> ps;
  while (ps.size() < n) {
    AlgebraElement q = random_element(p, rng, p_degree, 2);
    if (q.degree() > 0) ps.push_back(q);
  }
  return SProduct::from_factors(p, ps);
}

}  // namespace ores
