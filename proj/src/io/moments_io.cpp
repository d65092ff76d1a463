#include "ores/error.hpp"
#include "ores/io/formats.hpp"

namespace ores {

json moments_to_json(const MomentFunctional& f) {
  json table = json::object();
  for (const auto& [w, c] : f.table()) table[word_to_string(*f.presentation(), w)] = scalar_to_json(c);
  return {{"degree", f.degree()}, {"moments", table}};
}

MomentFunctional moments_from_json(const json& j, const PresentationPtr& p) {
  try {
    std::map<Word, Scalar> table;
    for (const auto& [key, value] : j.at("moments").items()) {
      Word w = word_from_string(*p, key);
      if (p->is_reducible(w))
        throw ConfigError("moment key " + key + " is not a normal-form word");
      table.emplace(std::move(w), scalar_from_json(value));
    }
    return MomentFunctional(p, j.at("degree").get<std::size_t>(), std::move(table));
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed moment table: ") + e.what());
  }
}

}  // namespace ores
