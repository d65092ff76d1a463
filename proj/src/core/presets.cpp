#include "ores/core/presets.hpp"

#include "ores/error.hpp"

namespace ores::presets {

PresentationPtr polynomial_x() {
  static const PresentationPtr p = Presentation::make({"x"}, {0}, {}, 64);
  return p;
}

PresentationPtr commuting_xy() {
  static const PresentationPtr p =
      Presentation::make({"x", "y"}, {0, 1}, {RewriteRule{Word{1, 0}, {{Word{0, 1}, 1}}}}, 16);
  return p;
}

PresentationPtr heisenberg() {
  // 0 = a', 1 = a
  static const PresentationPtr p = Presentation::make(
      {"a'", "a"}, {1, 0}, {RewriteRule{Word{1, 0}, {{Word{0, 1}, 1}, {Word{}, 1}}}}, 16);
  return p;
}

PresentationPtr free_xy() {
  static const PresentationPtr p = Presentation::make({"x", "y"}, {0, 1}, {}, 8);
  return p;
}

PresentationPtr idempotent() {
  static const PresentationPtr p =
      Presentation::make({"e"}, {0}, {RewriteRule{Word{0, 0}, {{Word{0}, 1}}}}, 8);
  return p;
}

PresentationPtr by_name(const std::string& name) {
  if (name == "cx") return polynomial_x();
  if (name == "cxy") return commuting_xy();
  if (name == "heisenberg") return heisenberg();
  if (name == "free") return free_xy();
  if (name == "idempotent") return idempotent();
  throw ConfigError("unknown preset '" + name + "'");
}

std::vector<std::string> names() { return {"cx", "cxy", "heisenberg", "free", "idempotent"}; }

}  // namespace ores::presets
