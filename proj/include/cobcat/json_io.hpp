#pragma once

#include <json.hpp>

#include "cobcat/field.hpp"
#include "cobcat/fincat.hpp"
#include "cobcat/frobenius.hpp"
#include "cobcat/matching.hpp"
#include "cobcat/picard.hpp"
#include "cobcat/planar.hpp"
#include "cobcat/presentation.hpp"
#include "cobcat/smith.hpp"
#include "cobcat/surface.hpp"

// Wire format. nlohmann::json keeps object keys sorted, so dump() is
// deterministic. Every parser throws DomainError on malformed input.
namespace cobcat::json_io {

using Json = nlohmann::json;

/// Parses text; syntax errors become DomainError.
Json parse(const std::string& text);

Json integer_to_json(const Integer& v);  // number when it fits, else decimal string
Integer integer_from_json(const Json& j);

Json to_json(const AbelianInvariants& a);
AbelianInvariants invariants_from_json(const Json& j);

Json to_json(const GroupPresentation& p);
GroupPresentation presentation_from_json(const Json& j);

/// {"objects", "morphisms":[{"id","src","tgt"}], "identities", "compose":[[f,g,h]]},
/// each triple meaning g∘f = h. Identity composites may be omitted on input.
Json to_json(const FinCat& c);
FinCat fincat_from_json(const Json& j);

/// {"m": 2, "slices": [["cup", 1], ["cap", 0]]}
Json to_json(const PlanarDiagram& d);
PlanarDiagram diagram_from_json(const Json& j);

/// {"m", "n", "pairs": [[p, q]], "circles"}
Json to_json(const Matching1D& w);
Matching1D matching_from_json(const Json& j);

/// {"m", "n", "injection": [...], "pairs": [[p, q]]}
Json to_json(const RestrictedMorphism& w);
RestrictedMorphism restricted_from_json(const Json& j);

/// Components list circle ids; eps keys are plain ids, or "in:<id>" /
/// "out:<id>" when an id names both a source and a target circle.
Json to_json(const SurfaceCobordism& w);
SurfaceCobordism surface_from_json(const Json& j);
Json to_json(const ClosedSurfaceClass& s);  // list of names

Json to_json(const Field& f);  // "Q" or {"p": 5}
Field field_from_json(const Json& j);
Json scalar_to_json(const Rational& x);  // integer, or "a/b"
Rational scalar_from_json(const Json& j);
Json to_json(const FieldMatrix& m);

/// {"field", "dim", "pairing": [[...]]}
Json to_json(const FrobeniusDatum& t);
FrobeniusDatum frobenius_from_json(const Json& j);

/// {"pi0": {"generators", "orders"}, "pi1": {...},
///  "c": [["x", "y", [coords]]], "h": [["x", "y", "z", [coords]]]}
Json to_json(const FgAbelianGroup& g);
FgAbelianGroup group_from_json(const Json& j);
Json to_json(const PicardData& p);
PicardData picard_from_json(const Json& j);
/// A generator name or a coordinate array.
std::vector<std::int64_t> element_from_json(const FgAbelianGroup& g, const Json& j);
Json element_to_json(const std::vector<std::int64_t>& x);

}  // namespace cobcat::json_io
