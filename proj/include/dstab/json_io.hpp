#ifndef DSTAB_JSON_IO_HPP
#define DSTAB_JSON_IO_HPP

#include "dstab/hom.hpp"
#include "dstab/verifier.hpp"

#include "json.hpp"

#include <string>

namespace dstab {

using Json = nlohmann::json;

// Integers become JSON numbers when they fit in a machine word and decimal
// strings otherwise; every reader accepts both spellings.
Json integer_json(const Integer& x);
Integer integer_from_json(const Json& j);

// {"blocks": [[...],...], "n": k} in canonical order.  Readers validate and
// re-canonicalize, so reading back what was emitted is the identity.
Json to_json(const PartitionDiagram& d);
PartitionDiagram diagram_from_json(const Json& j);

// {"family", "n", "terms": [{"coeff": polynomial string, "diagram": ...}]}.
Json to_json(const AlgebraElement& x);
AlgebraElement element_from_json(const Json& j);

// TL/Br render as {"blob": [dots], "m", "n", "pairs": [[i,j],...]} — the
// matching plus the sorted blob attachments; P as {"blocks", "m", "marked",
// "n"} with marked indices into the canonical block order.  The reader takes
// the family from context since the wire forms carry none.
Json to_json(const HomDiagram& h);
HomDiagram hom_diagram_from_json(Family family, const Json& j);

// {"family", "source", "target", "terms": [{"coeff", "diagram"}]}.
Json to_json(const Morphism& f);
Morphism morphism_from_json(const Json& j);

// {"entries": [{"lambda": [...], "mult": k}], "family", "n"}; the free-text
// context note is display-only and not serialized.
Json to_json(const MultiplicityTable& t);
MultiplicityTable table_from_json(const Json& j);

// {"agree", "count", "delta": "p/q", "family", "m", "n", "rank"} plus "a"
// for two-sided reports.
Json to_json(const RankReport& r);
RankReport rank_report_from_json(const Json& j);

Json to_json(const StabilityReport& r);
StabilityReport stability_report_from_json(const Json& j);

// Structural validation against the vocabulary the shipped schemas/*.json
// use: type, enum, const, required, properties, additionalProperties
// (boolean), items (single schema), minItems/maxItems, minimum, pattern,
// oneOf.  Returns "" when the value conforms, otherwise a one-line
// diagnostic naming the offending path.
std::string schema_violation(const Json& schema, const Json& value);

}  // namespace dstab

#endif
