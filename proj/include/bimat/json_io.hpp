#pragma once

#include <string>

#include "json.hpp"

#include "bimat/bimatroid.hpp"
#include "bimat/construct.hpp"
#include "bimat/matrix.hpp"
#include "bimat/matroid.hpp"
#include "bimat/morphism.hpp"
#include "bimat/polynomial.hpp"
#include "bimat/verify.hpp"

namespace bimat {

// Insertion-ordered JSON everywhere: serializers emit keys in a fixed order
// and dump() is byte-deterministic for identical inputs.
using json = nlohmann::ordered_json;

// Parse with errors mapped to parse_error (CLI exit 1).
json parse_json_text(const std::string& text);
json load_json_file(const std::string& path);

// {"field":"Q"|"Fp","p":...,"entries":[[...]]}; Q entries are "a/b" strings,
// Fp entries plain integers.
json matrix_to_json(const QMatrix& m);
json matrix_to_json(const FpMatrix& m);
bool matrix_json_is_fp(const json& j);
QMatrix qmatrix_from_json(const json& j);
FpMatrix fpmatrix_from_json(const json& j);

// {"ground":[labels],"bases":[[labels],...]}
json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const json& j);

// Minors view: {"view":"minors","rows":[...],"cols":[...],"minors":[{"I":[...],"J":[...]},...]}
json bimatroid_to_json(const Bimatroid& b);
// Alternative views emitted by `convert`; all four re-parse below.
json bimatroid_extended_json(const Bimatroid& b);
json bimatroid_rank_table_json(const Bimatroid& b);
json bimatroid_rectangles_json(const Bimatroid& b, Orientation o);
// Accepts any of the four views.
Bimatroid bimatroid_from_json(const json& j);

// {"rows":[...],"cols":[...],"pairs":[[row,col],...]}
json relation_to_json(const Relation& r);
Relation relation_from_json(const json& j);

// {"source":<matroid>,"target":<matroid>,"map":{src label: dst label,...}}
json morphism_to_json(const MatroidMorphism& phi);
MatroidMorphism morphism_from_json(const json& j);

// The same document without the is-a-morphism validation, for predicates
// that must report rather than reject.
struct MorphismParts {
    Matroid source, target;
    std::vector<int> map;
};
MorphismParts morphism_parts_from_json(const json& j);

// {"vars":[...],"terms":[{"exp":[...],"coef":"a/b"},...]} in canonical
// (lexicographic exponent) order.
json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const json& j);

json report_to_json(const TheoremReport& r);
TheoremReport report_from_json(const json& j);
// One row per check: theorem,seed,part,k,lhs,rhs,holds,verdict.
std::string report_to_csv(const TheoremReport& r);

}  // namespace bimat
