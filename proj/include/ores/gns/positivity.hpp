#pragma once

#include <utility>
#include <vector>

#include "ores/loc/ore.hpp"

namespace ores {

/// Sum of lambda_i * a_i' a_i with every lambda_i a positive rational.
struct PositivityCertificate {
  std::vector<std::pair<Scalar, AlgebraElement>> terms;
};

/// Normal form of sum lambda_i a_i' a_i; zero of `p` for an empty certificate.
AlgebraElement certificate_value(const PresentationPtr& p, const PositivityCertificate& c);

/// True iff every lambda is a positive rational and the certificate expands
/// exactly to x.
bool verify_certificate(const AlgebraElement& x, const PositivityCertificate& c);

/// (1 + b'b)^2 - 1 = 2 b'b + (b'b)'(b'b).
struct FactorCertificate {
  AlgebraElement b;
  AlgebraElement value;
  PositivityCertificate certificate;
};

FactorCertificate factor_certificate(const AlgebraElement& b);

/// Dominator a'a of (s^-1 a)'(s^-1 a), with one factor certificate per
/// factor of s.
struct CofinalDominator {
  LeftFraction left;
  AlgebraElement dominator;
  std::vector<FactorCertificate> chain;
};

/// From a left fraction s^-1 a given directly.
CofinalDominator cofinal_dominator(const AlgebraElement& a, const SProduct& s);

/// From a right fraction, rewritten as s^-1 a through a left Ore witness.
/// Throws OreWitnessNotFound.
CofinalDominator cofinal_dominator(const Fraction& f, const SearchBudget& budget);

/// Verifies every certificate of the chain and the dominator value.
bool verify_dominator(const CofinalDominator& d);

}  // namespace ores
