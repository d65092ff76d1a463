#pragma once

#include <json.hpp>
#include <string>

#include "ores/gns/gns.hpp"
#include "ores/gns/moments.hpp"
#include "ores/ops/banded.hpp"

namespace ores {

using json = nlohmann::json;

/// [re_num, re_den, im_num, im_den]; entries that do not fit in 64 bits are
/// written as decimal strings.
json scalar_to_json(const Scalar& c);
Scalar scalar_from_json(const json& j);

/// Generator names joined by '.', "1" for the empty word.
std::string word_to_string(const Presentation& p, const Word& w);
Word word_from_string(const Presentation& p, const std::string& s);

/// Presentation file:
///   {"generators": [...], "dagger_pairs": [[g, h], ...],
///    "relations": [{"lhs": "y.x", "rhs": [{"coeff": [...], "word": "x.y"}]}],
///    "degree_cap": N}
/// Generators not listed in a pair are hermitian.
json presentation_to_json(const Presentation& p);
PresentationPtr presentation_from_json(const json& j);

/// A preset name (cx, cxy, heisenberg, free, idempotent) or a file path.
PresentationPtr load_presentation(const std::string& name_or_path);

/// FNV-1a 64 of the compact JSON form.
std::string presentation_hash(const Presentation& p);

/// {"degree": d, "moments": {"x.x": [...], ...}}
json moments_to_json(const MomentFunctional& f);
MomentFunctional moments_from_json(const json& j, const PresentationPtr& p);

/// {"bands": [{"offset": k, "formula": "const c" | "poly p(n)" | "sqrt_poly p(n)"}
///            | {"offset": k, "terms": [{"poly": ..., "radicand": ..., "n_min": m}]}]}
json operator_to_json(const BandedOperator& a);
BandedOperator operator_from_json(const json& j);
/// One band formula in the short text form.
Formula parse_formula(const std::string& text, long offset);

/// Metadata line followed by each generator matrix (rows, then
/// row-major entries at 17 significant digits) and the cyclic vector.
std::string gns_to_text(const GnsRepresentation& r);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace ores
