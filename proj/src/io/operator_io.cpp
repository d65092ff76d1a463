#include "ores/error.hpp"
#include "ores/io/evaluate.hpp"
#include "ores/io/formats.hpp"

namespace ores {

Formula parse_formula(const std::string& text, long offset) {
  const auto space = text.find(' ');
  const std::string kind = text.substr(0, space);
  const std::string body = space == std::string::npos ? "" : text.substr(space + 1);
  if (body.empty()) throw InvalidFormula("formula '" + text + "' has no argument");
  QPoly q;
  try {
    q = evaluate_poly(body);
  } catch (const SyntaxError& e) {
    throw InvalidFormula("formula '" + text + "': " + e.what());
  }
  if (kind == "const") {
    if (!q.is_constant()) throw InvalidFormula("const formula depends on n: " + text);
    return Formula::constant(q.constant(), offset);
  }
  if (kind == "poly") return Formula::poly(q, offset);
  if (kind == "sqrt_poly") return Formula::sqrt_poly(q, offset);
  throw InvalidFormula("unknown formula kind '" + kind + "', expected const, poly or sqrt_poly");
}

json operator_to_json(const BandedOperator& a) {
  json bands = json::array();
  for (const auto& [k, f] : a.bands()) {
    const long base = std::max(0L, -k);
    json band = {{"offset", k}};
    const auto& ts = f.terms();
    if (ts.size() == 1 && ts[0].n_min == base && ts[0].radicand == QPoly(1)) {
      band["formula"] = (ts[0].poly.is_constant() ? "const " : "poly ") + print(to_expr(ts[0].poly));
    } else if (ts.size() == 1 && ts[0].n_min == base && ts[0].poly == QPoly(1)) {
      band["formula"] = "sqrt_poly " + print(to_expr(ts[0].radicand));
    } else {
      json terms = json::array();
      for (const auto& t : ts)
        terms.push_back({{"poly", print(to_expr(t.poly))},
                         {"radicand", print(to_expr(t.radicand))},
                         {"n_min", t.n_min}});
      band["terms"] = terms;
    }
    bands.push_back(band);
  }
  return {{"bands", bands}};
}

BandedOperator operator_from_json(const json& j) {
  try {
    std::map<long, std::vector<FormulaTerm>> lists;
    for (const auto& band : j.at("bands")) {
      const long k = band.at("offset").get<long>();
      if (band.contains("formula")) {
        Formula f = parse_formula(band.at("formula").get<std::string>(), k);
        lists[k].insert(lists[k].end(), f.terms().begin(), f.terms().end());
      } else {
        for (const auto& t : band.at("terms"))
          lists[k].push_back({evaluate_poly(t.at("poly").get<std::string>()),
                              evaluate_poly(t.value("radicand", std::string("1"))),
                              t.value("n_min", 0L)});
      }
    }
    std::map<long, Formula> bands;
    for (auto& [k, terms] : lists) bands.emplace(k, Formula(std::move(terms), k));
    return BandedOperator(std::move(bands));
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed operator spec: ") + e.what());
  }
}

}  // namespace ores
