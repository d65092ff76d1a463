#include "ores/io/scenario.hpp"

#include <cmath>
#include <functional>

#include "ores/core/presets.hpp"
#include "ores/error.hpp"
#include "ores/gns/positivity.hpp"
#include "ores/gns/quadrature.hpp"
#include "ores/io/evaluate.hpp"
#include "ores/io/sampling.hpp"
#include "ores/ops/probes.hpp"

namespace ores {

void ScenarioConfig::validate() const {
  if (!(tol > 0) || !(probe_tol > 0)) throw ConfigError("tolerances must be positive");
  if (max_degree == 0) throw ConfigError("budget degree must be at least 1");
  if (max_truncation < 16) throw ConfigError("truncation cap must be at least 16");
  if (!presentation.empty()) load_presentation(presentation);
}

json ScenarioConfig::to_json() const {
  return {{"presentation", presentation},   {"max_factors", max_factors},
          {"max_degree", max_degree},       {"regularity_depth", regularity_depth},
          {"tol", tol},                     {"probe_tol", probe_tol},
          {"max_truncation", max_truncation}, {"seed", seed},
          {"samples", samples},             {"degree", degree}};
}

ScenarioConfig ScenarioConfig::from_json(const json& j) {
  ScenarioConfig c;
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "presentation") c.presentation = v.get<std::string>();
      else if (key == "max_factors") c.max_factors = v.get<std::size_t>();
      else if (key == "max_degree") c.max_degree = v.get<std::size_t>();
      else if (key == "regularity_depth") c.regularity_depth = v.get<std::size_t>();
      else if (key == "tol") c.tol = v.get<double>();
      else if (key == "probe_tol") c.probe_tol = v.get<double>();
      else if (key == "max_truncation") c.max_truncation = v.get<std::size_t>();
      else if (key == "out_dir") c.out_dir = v.get<std::string>();
      else if (key == "seed") c.seed = v.get<std::uint64_t>();
      else if (key == "samples") c.samples = v.get<std::size_t>();
      else if (key == "degree") c.degree = v.get<std::size_t>();
      else throw ConfigError("unknown config key '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  c.validate();
  return c;
}

std::vector<std::string> scenario_names() {
  return {"ore-axioms",  "involution-proposition", "cofinality",
          "gaussian-gns", "fock-integrability",    "extend-representation"};
}

namespace {

enum class Outcome { Pass, Fail, Skip };

// Aggregated verdicts of one sampled property.
struct Tally {
  Tally(std::string c, std::string p) : check(std::move(c)), presentation(std::move(p)) {}

  std::string check;
  std::string presentation;
  std::size_t passed = 0, failed = 0, skipped = 0;
  std::optional<json> counterexample;

  void run(const std::function<Outcome()>& body, const std::function<json()>& describe) {
    Outcome o;
    try {
      o = body();
    } catch (const OreWitnessNotFound&) {
      o = Outcome::Skip;
    } catch (const DegreeOverflow&) {
      o = Outcome::Skip;
    } catch (const IrregularDenominator&) {
      o = Outcome::Skip;
    }
    if (o == Outcome::Pass) ++passed;
    if (o == Outcome::Skip) ++skipped;
    if (o == Outcome::Fail) {
      ++failed;
      if (!counterexample) counterexample = describe();
    }
  }

  void flush(Report& report) const {
    json r = {{"check", check}, {"presentation", presentation}, {"passed", passed},
              {"failed", failed}, {"skipped", skipped}};
    const std::size_t total = passed + failed + skipped;
    r["found_rate"] = total ? static_cast<double>(passed + failed) / static_cast<double>(total) : 0.0;
    if (counterexample) r["counterexample"] = *counterexample;
    report.add(std::move(r), failed == 0);
  }
};

// Equal: Pass; decided inequality: Fail; no witness: Skip.
Outcome same(const Fraction& f, const Fraction& g, const SearchBudget& budget) {
  const auto r = eq_fraction(f, g, budget);
  if (is_equal(r)) return Outcome::Pass;
  return std::get<NotEqualUpToBudget>(r).decided ? Outcome::Fail : Outcome::Skip;
}

SearchBudget budget_of(const ScenarioConfig& c) {
  SearchBudget b;
  b.max_factors = c.max_factors;
  b.max_degree = c.max_degree;
  b.regularity_depth = c.regularity_depth;
  return b;
}

PresentationPtr presentation_or(const ScenarioConfig& c, const std::string& fallback) {
  return load_presentation(c.presentation.empty() ? fallback : c.presentation);
}

std::string preset_label(const ScenarioConfig& c, const std::string& fallback) {
  return c.presentation.empty() ? fallback : c.presentation;
}

Fraction random_fraction(const PresentationPtr& p, Rng& rng, const ScenarioConfig& c) {
  const std::size_t factors = p->is_commutative() ? 2 : 1;
  return Fraction::make(random_element(p, rng, 2), random_sproduct(p, rng, factors, 1),
                        c.regularity_depth);
}

json describe(std::initializer_list<std::pair<const char*, std::string>> items) {
  json j = json::object();
  for (const auto& [k, v] : items) j[k] = v;
  return j;
}

// Wraps a budget so every witness is re-multiplied and counted.
struct WitnessAudit {
  std::size_t seen = 0;
  std::size_t violations = 0;
  std::optional<json> counterexample;

  SearchBudget attach(SearchBudget b) {
    b.on_witness = [this](const AlgebraElement& a, const SProduct& s, const OreWitness& w) {
      ++seen;
      if (!(a * w.t.value() == s.value() * w.b)) {
        ++violations;
        if (!counterexample)
          counterexample = describe({{"a", format(a)}, {"s", format(s.value())},
                                     {"t", format(w.t.value())}, {"b", format(w.b)}});
      }
    };
    return b;
  }

  void flush(Report& report, const std::string& label) const {
    json r = {{"check", "witness-soundness"}, {"presentation", label},
              {"witnesses", seen}, {"violations", violations}};
    if (counterexample) r["counterexample"] = *counterexample;
    report.add(std::move(r), violations == 0);
  }
};

Report ore_axioms(const ScenarioConfig& c) {
  Report report("ore-axioms");
  const std::string label = preset_label(c, "cx");
  const auto p = presentation_or(c, "cx");
  Rng rng(c.seed);
  WitnessAudit audit;
  const SearchBudget budget = audit.attach(budget_of(c));
  const std::size_t n = c.samples ? c.samples : 50;
  Tally reflexive{"eq-reflexive", label}, symmetric{"eq-symmetric", label},
      transitive{"eq-transitive", label}, assoc{"mul-associative", label},
      add_assoc{"add-associative", label}, distrib{"distributive", label},
      embed_mul{"embed-multiplicative", label}, embed_star{"embed-involutive", label},
      embed_inv{"embed-inverse", label}, injective{"embed-injective", label};
  const Scalar one(1);
  for (std::size_t i = 0; i < n; ++i) {
    Fraction f = random_fraction(p, rng, c), g = random_fraction(p, rng, c),
             h = random_fraction(p, rng, c);
    const AlgebraElement a = random_element(p, rng, 2), b = random_element(p, rng, 2);
    const SProduct u = SProduct::factor(random_element(p, rng, 1, 2) + AlgebraElement::generator(p, 0));
    const SProduct v = SProduct::factor(random_element(p, rng, 1, 2) + AlgebraElement::generator(p, 0));
    auto show = [&] {
      return describe({{"f", format(f)}, {"g", format(g)}, {"h", format(h)}});
    };
    reflexive.run([&] { return same(f, f, budget); }, show);
    symmetric.run(
        [&] {
          const auto fg = eq_fraction(f, g, budget), gf = eq_fraction(g, f, budget);
          const auto decided = [](const EqResult& r) {
            return is_equal(r) || std::get<NotEqualUpToBudget>(r).decided;
          };
          if (!decided(fg) || !decided(gf)) return Outcome::Skip;
          return is_equal(fg) == is_equal(gf) ? Outcome::Pass : Outcome::Fail;
        },
        show);
    transitive.run(
        [&] {
          const Fraction g2(f.num() * u.value(), f.den() * u);
          const Fraction h2(g2.num() * v.value(), g2.den() * v);
          const Outcome first = same(f, g2, budget), second = same(g2, h2, budget);
          if (first != Outcome::Pass || second != Outcome::Pass) return Outcome::Skip;
          return same(f, h2, budget);
        },
        show);
    assoc.run(
        [&] {
          return same(frac_mul(frac_mul(f, g, budget), h, budget),
                      frac_mul(f, frac_mul(g, h, budget), budget), budget);
        },
        show);
    add_assoc.run(
        [&] {
          return same(frac_add(one, frac_add(one, f, g, budget), h, budget),
                      frac_add(one, f, frac_add(one, g, h, budget), budget), budget);
        },
        show);
    distrib.run(
        [&] {
          return same(frac_mul(f, frac_add(one, g, h, budget), budget),
                      frac_add(one, frac_mul(f, g, budget), frac_mul(f, h, budget), budget), budget);
        },
        show);
    auto show_ab = [&] { return describe({{"a", format(a)}, {"b", format(b)}}); };
    embed_mul.run([&] { return same(embed(a * b), frac_mul(embed(a), embed(b), budget), budget); },
                  show_ab);
    embed_star.run([&] { return same(embed(a.dagger()), frac_dagger(embed(a), budget), budget); },
                   show_ab);
    embed_inv.run(
        [&] {
          const Fraction inverse(AlgebraElement::one(p), u);
          return same(frac_mul(embed(u.value()), inverse, budget), embed(AlgebraElement::one(p)),
                      budget);
        },
        show_ab);
    injective.run(
        [&] {
          const auto r = eq_fraction(embed(a), embed(b), budget);
          if (is_equal(r) && !(a == b)) return Outcome::Fail;
          return same(embed(a), embed(a), budget);
        },
        show_ab);
  }
  for (const auto* t : {&reflexive, &symmetric, &transitive, &assoc, &add_assoc, &distrib,
                        &embed_mul, &embed_star, &embed_inv, &injective})
    t->flush(report);
  audit.flush(report, label);
  return report;
}

Report involution(const ScenarioConfig& c) {
  Report report("involution-proposition");
  const std::string label = preset_label(c, "cx");
  const auto p = presentation_or(c, "cx");
  Rng rng(c.seed);
  WitnessAudit audit;
  const SearchBudget budget = audit.attach(budget_of(c));
  const std::size_t n = c.samples ? c.samples : 200;
  Tally antilinear{"antilinear", label}, antimult{"antimultiplicative", label},
      involutive{"involutive", label};
  for (std::size_t i = 0; i < n; ++i) {
    const Fraction f = random_fraction(p, rng, c), g = random_fraction(p, rng, c);
    const Scalar lambda = random_scalar(rng);
    auto show = [&] {
      return describe({{"f", format(f)}, {"g", format(g)}, {"lambda", lambda.str()}});
    };
    antilinear.run(
        [&] {
          const Fraction lhs = frac_dagger(frac_add(lambda, f, g, budget), budget);
          const Fraction rhs =
              frac_add(lambda.conj(), frac_dagger(f, budget), frac_dagger(g, budget), budget);
          return same(lhs, rhs, budget);
        },
        show);
    antimult.run(
        [&] {
          const Fraction lhs = frac_dagger(frac_mul(f, g, budget), budget);
          const Fraction rhs = frac_mul(frac_dagger(g, budget), frac_dagger(f, budget), budget);
          return same(lhs, rhs, budget);
        },
        show);
    involutive.run([&] { return same(frac_dagger(frac_dagger(f, budget), budget), f, budget); },
                   show);
  }
  for (const auto* t : {&antilinear, &antimult, &involutive}) t->flush(report);
  audit.flush(report, label);
  return report;
}

Report cofinality(const ScenarioConfig& c) {
  Report report("cofinality");
  const std::vector<std::string> labels =
      c.presentation.empty() ? presets::names() : std::vector<std::string>{c.presentation};
  const std::size_t n = c.samples ? c.samples : 50;
  const SearchBudget budget = budget_of(c);
  for (const auto& label : labels) {
    const auto p = load_presentation(label);
    Rng rng(c.seed);
    Tally single{"factor-certificate", label}, chained{"chained-certificate", label},
        from_fraction{"dominator-from-fraction", label}, negative{"rejects-negative", label};
    for (std::size_t i = 0; i < n; ++i) {
      const AlgebraElement b = random_element(p, rng, 2);
      const AlgebraElement b2 = random_element(p, rng, 2);
      const AlgebraElement a = random_element(p, rng, 1);
      auto show = [&] { return describe({{"b", format(b)}, {"b2", format(b2)}, {"a", format(a)}}); };
      single.run(
          [&] {
            const FactorCertificate fc = factor_certificate(b);
            const AlgebraElement s = AlgebraElement::one(p) + b.dagger() * b;
            const bool ok = fc.value == s * s - AlgebraElement::one(p) &&
                            verify_certificate(fc.value, fc.certificate);
            return ok ? Outcome::Pass : Outcome::Fail;
          },
          show);
      chained.run(
          [&] {
            const SProduct s = SProduct::factor(b) * SProduct::factor(b2);
            const CofinalDominator d = cofinal_dominator(a, s);
            return verify_dominator(d) && d.chain.size() == 2 ? Outcome::Pass : Outcome::Fail;
          },
          show);
      from_fraction.run(
          [&] {
            const Fraction f = Fraction::make(a, SProduct::factor(random_element(p, rng, 1)),
                                              c.regularity_depth);
            return verify_dominator(cofinal_dominator(f, budget)) ? Outcome::Pass : Outcome::Fail;
          },
          show);
      negative.run(
          [&] {
            PositivityCertificate cert{{{Scalar(1), b}}};
            return verify_certificate(-AlgebraElement::one(p), cert) ? Outcome::Fail : Outcome::Pass;
          },
          show);
    }
    for (const auto* t : {&single, &chained, &from_fraction, &negative}) t->flush(report);
  }
  // Positivity transported by a state: f(w' x w) >= 0 for certified x.
  {
    const auto p = presets::polynomial_x();
    const MomentFunctional gauss = gaussian_state(6);
    Rng rng(c.seed);
    Tally transport{"state-positivity", "cx"};
    for (std::size_t i = 0; i < n; ++i) {
      const AlgebraElement b = random_element(p, rng, 2);
      const AlgebraElement w = random_element(p, rng, 2);
      transport.run(
          [&] {
            const FactorCertificate fc = factor_certificate(b);
            const Scalar v = gauss(w.dagger() * fc.value * w);
            return v.is_real() && v.re().get_d() >= -1e-12 ? Outcome::Pass : Outcome::Fail;
          },
          [&] { return describe({{"b", format(b)}, {"w", format(w)}}); });
    }
    transport.flush(report);
  }
  return report;
}

json vector_json(const Eigen::VectorXcd& v, std::size_t limit = 8) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size() && static_cast<std::size_t>(i) < limit; ++i) {
    if (v(i).imag() == 0)
      out.push_back(v(i).real());
    else
      out.push_back({v(i).real(), v(i).imag()});
  }
  return out;
}

Report gaussian_gns(const ScenarioConfig& c) {
  Report report("gaussian-gns");
  const std::size_t d = c.degree ? c.degree : 4;
  const MomentFunctional f = gaussian_state(d);
  const auto axioms = check_state_axioms(f, c.seed);
  report.add({{"check", "state-axioms"}, {"degree", d}, {"summary", axioms.summary(*f.presentation())}},
             axioms.passed());
  report.add({{"check", "eigenvalue-agreement"}, {"min_eigenvalue", axioms.min_eigenvalue}},
             axioms.eigen_agrees);

  const GnsRepresentation r = gns(f);
  const Eigen::MatrixXcd& m = r.matrices[0];
  double diag = 0, off = 0, outside = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double x = std::abs(m(i, j));
      if (i == j)
        diag = std::max(diag, x);
      else if (std::abs(i - j) == 1)
        off = std::max(off, std::abs(m(i, j) - std::sqrt(static_cast<double>(std::max(i, j)))));
      else
        outside = std::max(outside, x);
    }
  report.add({{"check", "jacobi-diagonal"}, {"max_abs", diag}}, diag <= c.tol);
  report.add({{"check", "jacobi-offdiagonal"}, {"max_error", off}, {"outside_band", outside}},
             off <= c.tol && outside <= c.tol);

  double moment_err = 0;
  json moments = json::array();
  for (std::size_t k = 0; k <= 2 * d; ++k) {
    const Word w(std::vector<Gen>(k, 0));
    const std::complex<double> got = r.moment(w);
    moment_err = std::max(moment_err, std::abs(got - f.value(w).to_complex()));
    moments.push_back(got.real());
  }
  report.add({{"check", "moment-recovery"}, {"moments", moments}, {"max_error", moment_err}},
             moment_err <= c.tol);
  const double defect = r.adjoint_defect(0);
  report.add({{"check", "adjoint-window"}, {"defect", defect}, {"window", r.window}}, defect <= c.tol);

  const MomentFunctional back = state_from_representation(r);
  bool round_trip = true;
  for (const auto& w : f.presentation()->normal_words(2 * d))
    round_trip = round_trip && std::abs((back.value(w) - f.value(w)).to_complex()) <= c.tol;
  report.add({{"check", "state-round-trip"}}, round_trip);

  const GnsRepresentation dirac = gns(dirac_state(presets::polynomial_x(), d));
  report.add({{"check", "dirac-gns"}, {"gram_rank", dirac.gram_rank}},
             dirac.gram_rank == 1 && dirac.matrices[0].norm() == 0);

  std::map<Word, Scalar> bad_table{{Word(), Scalar(1)}, {Word{0, 0}, Scalar(-1)}};
  const auto bad = check_state_axioms(MomentFunctional(presets::polynomial_x(), 1, bad_table), c.seed);
  report.add({{"check", "psd-violation-detected"}, {"summary", bad.summary(*presets::polynomial_x())}},
             !bad.psd && bad.psd_violation == Word{0});

  // Extension to fractions through the Gauss rule of a deeper truncation.
  const std::size_t qd = std::max<std::size_t>(20, d);
  const Quadrature q = gauss_quadrature(gns(gaussian_state(qd)));
  const auto p = presets::polynomial_x();
  const Fraction inv(AlgebraElement::one(p), SProduct::factor(AlgebraElement::generator(p, 0)));
  const double value = integrate(q, inv).real();
  const double reference =
      std::sqrt(M_PI / 2) * std::exp(0.5) * std::erfc(1 / std::sqrt(2.0));
  report.add({{"check", "quadrature-extension"}, {"degree", qd}, {"value", value},
              {"reference", reference}, {"error", std::abs(value - reference)}},
             std::abs(value - reference) <= 1e-2);
  return report;
}

Report fock_integrability(const ScenarioConfig& c) {
  Report report("fock-integrability");
  const FockAssignment fock = FockAssignment::heisenberg();
  const auto& p = fock.presentation();
  const AlgebraElement a = AlgebraElement::generator(p, *p->find("a"));
  const std::string problem = fock.check(32);
  report.add({{"check", "assignment-relations"}, {"problem", problem}}, problem.empty());

  const InversionOptions probe{c.probe_tol, c.max_truncation};
  const std::vector<std::pair<std::string, SProduct>> cases = {
      {"1 + a'*a", SProduct::factor(a)},
      {"(1 + a'*a)^2", SProduct::factor(a) * SProduct::factor(a)},
      {"(1 + a'*a)(1 + (a + a')'*(a + a'))",
       SProduct::factor(a) * SProduct::factor(a + a.dagger())}};
  std::vector<Eigen::VectorXcd> targets;
  std::vector<ExactVector> samples;
  for (std::size_t k = 0; k <= 5; ++k) targets.push_back(basis_vector_d(k, k + 1));
  for (std::size_t k = 0; k <= 8; ++k) samples.push_back(basis_vector(k));
  for (const auto& [name, s] : cases) {
    const auto rep = pi_s_surjectivity_probe(fock, s, targets, probe);
    json residuals = json::array(), sizes = json::array();
    for (const auto& item : rep.items) {
      residuals.push_back(item.residual);
      sizes.push_back(item.truncation_size);
    }
    report.add({{"probe", "surjectivity"}, {"s", name}, {"targets", "e0..e5"},
                {"residuals", residuals}, {"truncation_size", sizes}},
               rep.pass());
    const auto lemma = lemma_pis_equals_S_check(fock, s, samples);
    report.add({{"probe", "lemma-pi-s"}, {"s", name}, {"samples", "e0..e8"}, {"checked", lemma.checked}},
               lemma.pass);
  }
  {
    // A wrong adjoint in the first factor must be detected.
    const SProduct s = cases[2].second;
    std::vector<std::optional<BandedOperator>> wrong(2);
    wrong[0] = BandedOperator::band(-1, Formula::sqrt_poly(QPoly::n() + QPoly(1), -1));
    const auto lemma = lemma_pis_equals_S_check(fock, s, samples, wrong);
    report.add({{"probe", "lemma-perturbation"}, {"s", cases[2].first}}, !lemma.pass);
  }
  {
    Eigen::VectorXcd xi(60);
    for (Eigen::Index n = 0; n < xi.size(); ++n) xi(n) = std::pow(0.5, static_cast<double>(n));
    const auto core = core_density_probe(fock, a, cases[0].second, xi, {1e-6, c.max_truncation});
    report.add({{"probe", "core-density"}, {"a", "a"}, {"s", cases[0].first},
                {"distance", core.distance}, {"truncation_size", core.truncation_size}},
               core.pass);
  }
  {
    const std::size_t d = c.degree ? c.degree : 6;
    const GnsRepresentation r = gns(vacuum_state(fock, d));
    double defect = 0;
    for (Gen g = 0; g < p->num_generators(); ++g) defect = std::max(defect, r.adjoint_defect(g));
    report.add({{"check", "fock-gns-adjoint-window"}, {"degree", d}, {"defect", defect}},
               defect <= c.tol);
    const Gen ga = *p->find("a"), gd = *p->find("a'");
    const Eigen::MatrixXcd number =
        r.matrices[gd].topRows(r.window) * r.matrices[ga].topRows(r.window);
    double err = 0;
    for (Eigen::Index i = 0; i < number.rows(); ++i)
      for (Eigen::Index j = 0; j < number.cols(); ++j)
        err = std::max(err, std::abs(number(i, j) - (i == j ? static_cast<double>(i) : 0.0)));
    report.add({{"check", "number-operator-diagonal"}, {"max_error", err}}, err <= c.tol);
  }
  return report;
}

Report extend(const ScenarioConfig& c) {
  Report report("extend-representation");
  const FockAssignment fock = FockAssignment::heisenberg();
  const auto& p = fock.presentation();
  const AlgebraElement a = AlgebraElement::generator(p, *p->find("a"));
  const SearchBudget budget = budget_of(c);
  const InversionOptions opts{c.probe_tol / 10, c.max_truncation};
  {
    const auto r = extend_representation(fock, Fraction(a, SProduct::factor(a)),
                                         basis_vector_d(3, 4), opts, budget);
    Eigen::VectorXcd expected = Eigen::VectorXcd::Zero(3);
    expected(2) = std::sqrt(3.0) / 4;
    const double err = distance(r.value, expected);
    report.add({{"probe", "extend"}, {"fraction", "(a) / (1 + a'*a)"}, {"xi", "e3"},
                {"value", vector_json(r.value)}, {"error", err},
                {"route_difference", r.route_difference ? *r.route_difference : -1.0}},
               err <= c.tol && r.witness_route && r.routes_agree);
  }
  Rng rng(c.seed);
  const std::size_t wanted = c.samples ? c.samples : 20;
  std::size_t found = 0, attempts = 0, agree = 0;
  double worst = 0;
  std::optional<json> counterexample;
  while (found < wanted && attempts < 20 * wanted) {
    ++attempts;
    const AlgebraElement num = random_element(p, rng, 2);
    AlgebraElement q = random_element(p, rng, 1, 2);
    if (q.degree() == 0) continue;
    const Fraction f(num, SProduct::factor(q));
    Eigen::VectorXcd xi = Eigen::VectorXcd::Zero(6);
    for (int k = 0; k < 6; ++k) xi(k) = random_scalar(rng).to_complex();
    ExtensionResult r;
    try {
      r = extend_representation(fock, f, xi, opts, budget);
    } catch (const TruncationLimit&) {
      continue;
    }
    if (!r.witness_route) continue;
    ++found;
    worst = std::max(worst, *r.route_difference);
    if (*r.route_difference <= c.probe_tol)
      ++agree;
    else if (!counterexample)
      counterexample = describe({{"fraction", format(f)}});
  }
  json rec = {{"probe", "witness-route-agreement"}, {"pairs", found}, {"attempts", attempts},
              {"agree", agree}, {"max_difference", worst}};
  if (counterexample) rec["counterexample"] = *counterexample;
  report.add(std::move(rec), found == wanted && agree == found);
  return report;
}

}  // namespace

Report run_scenario(const std::string& name, const ScenarioConfig& config) {
  config.validate();
  if (name == "ore-axioms") return ore_axioms(config);
  if (name == "involution-proposition") return involution(config);
  if (name == "cofinality") return cofinality(config);
  if (name == "gaussian-gns") return gaussian_gns(config);
  if (name == "fock-integrability") return fock_integrability(config);
  if (name == "extend-representation") return extend(config);
  throw ConfigError("unknown scenario '" + name + "'");
}

}  // namespace ores
