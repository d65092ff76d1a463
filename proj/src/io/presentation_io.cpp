#include <fstream>
#include <sstream>

#include "ores/core/presets.hpp"
#include "ores/error.hpp"
#include "ores/io/formats.hpp"

namespace ores {

namespace {

json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0)
      throw ConfigError("not an integer: " + j.get<std::string>());
    return z;
  }
  throw ConfigError("expected an integer, found " + j.dump());
}

}  // namespace

json scalar_to_json(const Scalar& c) {
  return json::array({integer_to_json(c.re().get_num()), integer_to_json(c.re().get_den()),
                      integer_to_json(c.im().get_num()), integer_to_json(c.im().get_den())});
}

Scalar scalar_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4)
    throw ConfigError("scalar must be [re_num, re_den, im_num, im_den], found " + j.dump());
  const mpz_class rd = integer_from_json(j[1]), id = integer_from_json(j[3]);
  if (rd == 0 || id == 0) throw ConfigError("zero denominator in scalar " + j.dump());
  return Scalar(mpq_class(integer_from_json(j[0]), rd), mpq_class(integer_from_json(j[2]), id));
}

std::string word_to_string(const Presentation& p, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < w.degree(); ++k) out += (k ? "." : "") + p.name(w[k]);
  return out;
}

Word word_from_string(const Presentation& p, const std::string& s) {
  if (s == "1") return Word();
  std::vector<Gen> letters;
  std::stringstream in(s);
  std::string name;
  while (std::getline(in, name, '.')) {
    auto g = p.find(name);
    if (!g) throw ConfigError("unknown generator '" + name + "' in word " + s);
    letters.push_back(*g);
  }
  return Word(std::move(letters));
}

json presentation_to_json(const Presentation& p) {
  json j;
  j["generators"] = p.generators();
  json pairs = json::array();
  for (Gen g = 0; g < p.num_generators(); ++g)
    if (p.dagger(g) > g) pairs.push_back({p.name(g), p.name(p.dagger(g))});
  j["dagger_pairs"] = pairs;
  json rels = json::array();
  for (const auto& rule : p.rules()) {
    json rhs = json::array();
    for (const auto& [w, c] : rule.rhs)
      rhs.push_back({{"coeff", scalar_to_json(c)}, {"word", word_to_string(p, w)}});
    rels.push_back({{"lhs", word_to_string(p, rule.lhs)}, {"rhs", rhs}});
  }
  j["relations"] = rels;
  j["degree_cap"] = p.degree_cap();
  return j;
}

PresentationPtr presentation_from_json(const json& j) {
  try {
    std::vector<std::string> names = j.at("generators").get<std::vector<std::string>>();
    for (const auto& n : names)
      if (n.empty() || n == "1" || n.find('.') != std::string::npos)
        throw ConfigError("invalid generator name '" + n + "'");
    std::vector<Gen> dagger(names.size());
    for (Gen g = 0; g < names.size(); ++g) dagger[g] = g;
    auto index = [&](const std::string& n) -> Gen {
      for (Gen g = 0; g < names.size(); ++g)
        if (names[g] == n) return g;
      throw ConfigError("unknown generator '" + n + "' in dagger_pairs");
    };
    if (j.contains("dagger_pairs"))
      for (const auto& pair : j.at("dagger_pairs")) {
        if (!pair.is_array() || pair.size() != 2)
          throw ConfigError("dagger pair must list two generators: " + pair.dump());
        const Gen a = index(pair[0].get<std::string>()), b = index(pair[1].get<std::string>());
        dagger[a] = b;
        dagger[b] = a;
      }
    const std::size_t cap = j.at("degree_cap").get<std::size_t>();
    // Words are resolved against a relation-free presentation first.
    auto bare = Presentation::make(names, dagger, {}, cap);
    std::vector<RewriteRule> rules;
    if (j.contains("relations"))
      for (const auto& rel : j.at("relations")) {
        RewriteRule r{word_from_string(*bare, rel.at("lhs").get<std::string>()), {}};
        for (const auto& t : rel.at("rhs"))
          add_term(r.rhs, word_from_string(*bare, t.at("word").get<std::string>()),
                   scalar_from_json(t.at("coeff")));
        rules.push_back(std::move(r));
      }
    return Presentation::make(std::move(names), std::move(dagger), std::move(rules), cap);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed presentation: ") + e.what());
  }
}

PresentationPtr load_presentation(const std::string& name_or_path) {
  for (const auto& n : presets::names())
    if (n == name_or_path) return presets::by_name(n);
  return presentation_from_json(read_json_file(name_or_path));
}

std::string presentation_hash(const Presentation& p) {
  const std::string text = presentation_to_json(p).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << text;
}

}  // namespace ores
