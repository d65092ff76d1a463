// Command-line front end.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "ores/error.hpp"
#include "ores/gns/positivity.hpp"
#include "ores/io/evaluate.hpp"
#include "ores/io/formats.hpp"
#include "ores/io/scenario.hpp"
#include "ores/ops/probes.hpp"

using namespace ores;

namespace {

struct Globals {
  std::string presentation = "cx";
  bool presentation_given = false;
  std::size_t budget_factors = 2;
  std::size_t budget_degree = 2;
  std::size_t regularity_depth = 2;
  double tol = 1e-10;
  std::uint64_t seed = 0;
  std::string out;
};

// Exit status 1 without a usage error.
struct CheckFailed {};

SearchBudget budget(const Globals& g) {
  SearchBudget b;
  b.max_factors = g.budget_factors;
  b.max_degree = g.budget_degree;
  b.regularity_depth = g.regularity_depth;
  return b;
}

void emit(const Globals& g, const std::string& file, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::create_directories(g.out);
  write_text_file((std::filesystem::path(g.out) / file).string(), text);
}

Eigen::VectorXcd parse_vector(const std::string& text) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ConfigError("not a number in vector: '" + item + "'");
    }
  }
  if (values.empty()) throw ConfigError("empty vector");
  Eigen::VectorXcd v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Eigen::Index>(i)) = values[i];
  return v;
}

json vector_json(const Eigen::VectorXcd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i).imag() == 0)
      out.push_back(v(i).real());
    else
      out.push_back({v(i).real(), v(i).imag()});
  }
  return out;
}

// Drops trailing entries below 1e-300 in magnitude.
Eigen::VectorXcd trim(const Eigen::VectorXcd& v) {
  Eigen::Index n = v.size();
  while (n > 0 && std::abs(v(n - 1)) < 1e-300) --n;
  return v.head(n);
}

BandedOperator load_operator(const std::string& spec) {
  if (spec == "annihilation") return annihilation();
  if (spec == "creation") return annihilation().adjoint();
  if (spec == "number") return annihilation().adjoint() * annihilation();
  if (spec == "position") return FockAssignment::position().op(0);
  return operator_from_json(read_json_file(spec));
}

FockAssignment assignment_for(const PresentationPtr& p) {
  if (p == FockAssignment::heisenberg().presentation()) return FockAssignment::heisenberg();
  if (p == FockAssignment::position().presentation()) return FockAssignment::position();
  throw ConfigError("no operator assignment for this presentation; use heisenberg or cx");
}

std::string witness_json(const OreResult& r) {
  if (const auto* w = std::get_if<OreWitness>(&r)) {
    json factors = json::array();
    for (const auto& f : w->t.factors()) factors.push_back(format(f.p));
    return json{{"found", true}, {"t", format(w->t.value())}, {"t_factors", factors},
                {"b", format(w->b)}}
               .dump();
  }
  const auto& n = std::get<NotFoundWithinBudget>(r);
  return json{{"found", false}, {"candidates_tried", n.candidates_tried},
              {"candidates_overflowed", n.candidates_overflowed}}
      .dump();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ore localization of presented *-algebras and their representations"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--presentation", g.presentation, "preset name or presentation file")
      ->each([&](const std::string&) { g.presentation_given = true; });
  app.add_option("--budget-factors", g.budget_factors, "max factors in an Ore candidate");
  app.add_option("--budget-degree", g.budget_degree, "max degree of factor arguments");
  app.add_option("--regularity-depth", g.regularity_depth, "depth of regularity checks");
  app.add_option("--tol", g.tol, "tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--out", g.out, "output directory");

  std::function<void()> action;

  // normalize
  auto* normalize = app.add_subcommand("normalize", "print the normal form of an expression");
  std::string expr;
  normalize->add_option("expr", expr)->required();
  normalize->callback([&] {
    action = [&] {
      std::cout << format(evaluate(expr, load_presentation(g.presentation))) << "\n";
    };
  });

  // ore solve
  auto* ore = app.add_subcommand("ore", "Ore witnesses")->require_subcommand(1);
  auto* solve = ore->add_subcommand("solve", "find (b, t) with a*t = s*b");
  std::string ore_a;
  std::vector<std::string> ore_s;
  bool left = false;
  solve->add_option("--a", ore_a)->required();
  solve->add_option("--s", ore_s, "denominator factor 1 + p'*p (repeatable)")->required();
  solve->add_flag("--left", left, "solve t*a = b*s instead");
  solve->callback([&] {
    action = [&] {
      const auto p = load_presentation(g.presentation);
      std::vector<Expr> fs;
      for (const auto& s : ore_s) fs.push_back(parse(s));
      const SProduct s = evaluate_denominator(fs, p);
      const AlgebraElement a = evaluate(ore_a, p);
      const OreResult r = left ? ore_solve_left(a, s, budget(g)) : ore_solve_right(a, s, budget(g));
      std::cout << witness_json(r) << "\n";
      if (!std::holds_alternative<OreWitness>(r)) throw CheckFailed{};
    };
  });

  // frac
  auto* frac = app.add_subcommand("frac", "fraction arithmetic")->require_subcommand(1);
  std::string f1, f2, lambda = "1";
  auto* add = frac->add_subcommand("add", "lambda*F + G");
  add->add_option("F", f1)->required();
  add->add_option("G", f2)->required();
  add->add_option("--lambda", lambda, "scalar multiplying F");
  auto* mul = frac->add_subcommand("mul", "F*G");
  mul->add_option("F", f1)->required();
  mul->add_option("G", f2)->required();
  auto* dag = frac->add_subcommand("dagger", "F'");
  dag->add_option("F", f1)->required();
  auto* eq = frac->add_subcommand("eq", "decide F ~ G within budget");
  eq->add_option("F", f1)->required();
  eq->add_option("G", f2)->required();
  auto load2 = [&](const PresentationPtr& p) {
    return std::make_pair(evaluate_fraction(f1, p, g.regularity_depth),
                          f2.empty() ? embed(AlgebraElement::one(p))
                                     : evaluate_fraction(f2, p, g.regularity_depth));
  };
  add->callback([&] {
    action = [&] {
      const auto p = load_presentation(g.presentation);
      const auto [f, h] = load2(p);
      const AlgebraElement l = evaluate(lambda, p);
      if (!l.is_scalar()) throw ConfigError("lambda must be a scalar");
      std::cout << format(frac_add(l.coefficient(Word()), f, h, budget(g))) << "\n";
    };
  });
  mul->callback([&] {
    action = [&] {
      const auto p = load_presentation(g.presentation);
      const auto [f, h] = load2(p);
      std::cout << format(frac_mul(f, h, budget(g))) << "\n";
    };
  });
  dag->callback([&] {
    action = [&] {
      const auto p = load_presentation(g.presentation);
      std::cout << format(frac_dagger(evaluate_fraction(f1, p, g.regularity_depth), budget(g)))
                << "\n";
    };
  });
  eq->callback([&] {
    action = [&] {
      const auto p = load_presentation(g.presentation);
      const auto [f, h] = load2(p);
      const EqResult r = eq_fraction(f, h, budget(g));
      if (const auto* e = std::get_if<Equal>(&r)) {
        std::cout << json{{"equal", true}, {"u", format(e->u)}, {"v", format(e->v)},
                          {"su", format(e->su.value())}}
                         .dump()
                  << "\n";
        return;
      }
      std::cout << json{{"equal", false}, {"decided", std::get<NotEqualUpToBudget>(r).decided}}.dump()
                << "\n";
      throw CheckFailed{};
    };
  });

  // cone verify
  auto* cone = app.add_subcommand("cone", "positivity cone")->require_subcommand(1);
  auto* verify = cone->add_subcommand("verify", "check x = sum lambda_i a_i'a_i");
  std::string cone_x;
  std::vector<std::string> cone_terms;
  verify->add_option("--x", cone_x)->required();
  verify->add_option("--term", cone_terms, "LAMBDA:EXPR (repeatable)");
  verify->callback([&] {
    action = [&] {
      const auto p = load_presentation(g.presentation);
      PositivityCertificate cert;
      for (const auto& t : cone_terms) {
        const auto colon = t.find(':');
        if (colon == std::string::npos) throw ConfigError("term must be LAMBDA:EXPR, got " + t);
        const AlgebraElement l = evaluate(t.substr(0, colon), p);
        if (!l.is_scalar()) throw ConfigError("lambda must be a scalar: " + t);
        cert.terms.emplace_back(l.coefficient(Word()), evaluate(t.substr(colon + 1), p));
      }
      const bool ok = verify_certificate(evaluate(cone_x, p), cert);
      std::cout << json{{"valid", ok}}.dump() << "\n";
      if (!ok) throw CheckFailed{};
    };
  });

  // gns build
  auto* gnscmd = app.add_subcommand("gns", "GNS construction")->require_subcommand(1);
  auto* build = gnscmd->add_subcommand("build", "truncated GNS representation of a state");
  std::string moments_file, state = "gaussian";
  std::size_t degree = 4;
  build->add_option("--moments", moments_file, "moment table file");
  build->add_option("--state", state, "built-in state: gaussian, dirac, fock");
  build->add_option("--degree", degree, "truncation degree d");
  build->callback([&] {
    action = [&] {
      std::optional<MomentFunctional> f;
      if (!moments_file.empty())
        f = moments_from_json(read_json_file(moments_file), load_presentation(g.presentation));
      else if (state == "gaussian")
        f = gaussian_state(degree);
      else if (state == "fock")
        f = fock_state(degree);
      else if (state == "dirac")
        f = dirac_state(load_presentation(g.presentation), degree);
      else
        throw ConfigError("unknown state '" + state + "'");
      emit(g, "gns.txt", gns_to_text(gns(*f)));
    };
  });

  // op
  auto* op = app.add_subcommand("op", "banded operators")->require_subcommand(1);
  std::string op_spec = "annihilation", vec;
  auto* apply = op->add_subcommand("apply", "A*xi");
  apply->add_option("--op", op_spec, "operator file or annihilation|creation|number|position");
  apply->add_option("--vector", vec, "comma-separated entries")->required();
  auto* invert = op->add_subcommand("invert", "solve (1 + A*A) x = y");
  invert->add_option("--op", op_spec, "operator file or annihilation|creation|number|position");
  invert->add_option("--vector", vec, "right-hand side y")->required();
  std::size_t max_truncation = 1 << 16;
  invert->add_option("--max-truncation", max_truncation);
  auto* probe = op->add_subcommand("probe", "integrability probes on the Fock assignment");
  std::string kind = "surjectivity", probe_fraction;
  std::vector<std::string> probe_s;
  std::size_t targets = 5;
  probe->add_option("--kind", kind, "surjectivity, lemma, core or extend");
  probe->add_option("--s", probe_s, "denominator factor (repeatable)");
  probe->add_option("--targets", targets, "use e_0 .. e_N");
  probe->add_option("--fraction", probe_fraction, "fraction for --kind extend");
  probe->add_option("--vector", vec, "vector for core and extend probes");
  probe->add_option("--a", ore_a, "element for --kind core");
  apply->callback([&] {
    action = [&] {
      std::cout << json{{"result", vector_json(trim(load_operator(op_spec).apply(parse_vector(vec))))}}
                       .dump()
                << "\n";
    };
  });
  invert->callback([&] {
    action = [&] {
      const auto r = invert_one_plus_AstarA(load_operator(op_spec), parse_vector(vec),
                                            {g.tol, max_truncation});
      json history = json::array();
      for (const auto& [n, res] : r.history) history.push_back({n, res});
      std::cout << json{{"x", vector_json(trim(r.x))}, {"residual", r.residual},
                        {"truncation_size", r.truncation_size}, {"history", history}}
                       .dump()
                << "\n";
    };
  });
  probe->callback([&] {
    action = [&] {
      const auto p = load_presentation(g.presentation_given ? g.presentation : "heisenberg");
      const FockAssignment fock = assignment_for(p);
      std::vector<Expr> fs;
      for (const auto& s : probe_s) fs.push_back(parse(s));
      const SProduct s = evaluate_denominator(fs, p);
      const double tol = g.tol;
      json out = {{"probe", kind}};
      bool pass = false;
      if (kind == "surjectivity") {
        std::vector<Eigen::VectorXcd> ys;
        for (std::size_t k = 0; k <= targets; ++k) ys.push_back(basis_vector_d(k, k + 1));
        const auto r = pi_s_surjectivity_probe(fock, s, ys, {tol, 1 << 16});
        json residuals = json::array(), sizes = json::array();
        for (const auto& item : r.items) {
          residuals.push_back(item.residual);
          sizes.push_back(item.truncation_size);
        }
        out["residuals"] = residuals;
        out["truncation_size"] = sizes;
        pass = r.pass();
      } else if (kind == "lemma") {
        std::vector<ExactVector> samples;
        for (std::size_t k = 0; k <= targets; ++k) samples.push_back(basis_vector(k));
        const auto r = lemma_pis_equals_S_check(fock, s, samples);
        out["checked"] = r.checked;
        pass = r.pass;
      } else if (kind == "core") {
        const auto r = core_density_probe(fock, evaluate(ore_a.empty() ? "0" : ore_a, p), s,
                                          parse_vector(vec), {tol, 1 << 16});
        out["distance"] = r.distance;
        out["truncation_size"] = r.truncation_size;
        pass = r.pass;
      } else if (kind == "extend") {
        const Fraction f = evaluate_fraction(probe_fraction, p, g.regularity_depth);
        const auto r = extend_representation(fock, f, parse_vector(vec), {tol, 1 << 16}, budget(g));
        out["value"] = vector_json(trim(r.value));
        out["residual"] = r.residual;
        if (r.route_difference) out["route_difference"] = *r.route_difference;
        pass = r.routes_agree;
      } else {
        throw ConfigError("unknown probe kind '" + kind + "'");
      }
      out["pass"] = pass;
      std::cout << out.dump() << "\n";
      if (!pass) throw CheckFailed{};
    };
  });

  // scenario run
  auto* scenario = app.add_subcommand("scenario", "shipped scenarios")->require_subcommand(1);
  auto* run = scenario->add_subcommand("run", "run scenarios and write JSON-lines reports");
  std::vector<std::string> names;
  std::string config_file;
  std::size_t samples = 0, sdegree = 0;
  run->add_option("names", names, "scenario names or 'all'")->required();
  run->add_option("--config", config_file, "JSON config file");
  run->add_option("--samples", samples, "sample count (0 = scenario default)");
  run->add_option("--degree", sdegree, "truncation degree (0 = scenario default)");
  run->callback([&] {
    action = [&] {
      ScenarioConfig c = config_file.empty() ? ScenarioConfig{}
                                             : ScenarioConfig::from_json(read_json_file(config_file));
      if (g.presentation_given) c.presentation = g.presentation;
      c.max_factors = g.budget_factors;
      c.max_degree = g.budget_degree;
      c.regularity_depth = g.regularity_depth;
      c.tol = g.tol;
      c.seed = g.seed;
      if (samples) c.samples = samples;
      if (sdegree) c.degree = sdegree;
      if (!g.out.empty()) c.out_dir = g.out;
      c.validate();
      if (names.size() == 1 && names[0] == "all") names = scenario_names();
      bool all_pass = true;
      for (const auto& name : names) {
        const Report r = run_scenario(name, c);
        all_pass = all_pass && r.pass();
        const std::string text = r.jsonl(timestamp_now());
        if (c.out_dir.empty()) {
          std::cout << text;
        } else {
          std::filesystem::create_directories(c.out_dir);
          write_text_file((std::filesystem::path(c.out_dir) / (name + ".jsonl")).string(), text);
          std::cout << name << ": " << (r.pass() ? "pass" : "FAIL") << " (" << r.passed()
                    << " passed, " << r.failed() << " failed)\n";
        }
      }
      if (!all_pass) throw CheckFailed{};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    if (action) action();
    return 0;
  } catch (const CheckFailed&) {
    return 1;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidFormula& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidPresentation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IrregularDenominator& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  }
}
