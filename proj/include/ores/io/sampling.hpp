#pragma once

#include <random>

#include "ores/loc/fraction.hpp"

namespace ores {

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

/// Nonzero Gaussian rational with small numerators and denominators 1 or 2.
Scalar random_scalar(Rng& rng);

/// Nonzero element with 1..max_terms terms on normal words of degree <= max_degree.
AlgebraElement random_element(const PresentationPtr& p, Rng& rng, std::size_t max_degree,
                              std::size_t max_terms = 3);

/// Product of 0..max_factors factors 1 + p'p with p random of degree
/// 1..p_degree.
SProduct random_sproduct(const PresentationPtr& p, Rng& rng, std::size_t max_factors,
                         std::size_t p_degree);

}  // namespace ores
