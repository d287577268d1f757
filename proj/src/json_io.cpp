#include "dstab/json_io.hpp"

#include "dstab/delta_poly.hpp"
#include "dstab/rational.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>
#include <utility>

namespace dstab {

namespace {

// Object readers are strict: every listed key must be present (or in the
// optional set), and nothing else may appear.
void require_fields(const Json& j, const char* what,
                    std::initializer_list<const char*> required,
                    std::initializer_list<const char*> optional = {}) {
  if (!j.is_object())
    throw std::invalid_argument(std::string(what) + ": expected a JSON object");
  for (const char* key : required)
    if (!j.contains(key))
      throw std::invalid_argument(std::string(what) + ": missing field \"" + key + "\"");
  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    auto match = [&key](const char* c) { return key == c; };
    if (!std::any_of(required.begin(), required.end(), match) &&
        !std::any_of(optional.begin(), optional.end(), match))
      throw std::invalid_argument(std::string(what) + ": unexpected field \"" + key + "\"");
  }
}

int int_field(const Json& j, const char* key, const char* what) {
  const Json& v = j.at(key);
  if (!v.is_number_integer())
    throw std::invalid_argument(std::string(what) + ": field \"" + key + "\" must be an integer");
  return v.get<int>();
}

bool bool_field(const Json& j, const char* key, const char* what) {
  const Json& v = j.at(key);
  if (!v.is_boolean())
    throw std::invalid_argument(std::string(what) + ": field \"" + key + "\" must be a boolean");
  return v.get<bool>();
}

std::string string_field(const Json& j, const char* key, const char* what) {
  const Json& v = j.at(key);
  if (!v.is_string())
    throw std::invalid_argument(std::string(what) + ": field \"" + key + "\" must be a string");
  return v.get<std::string>();
}

std::vector<int> int_array(const Json& v, const char* what) {
  if (!v.is_array())
    throw std::invalid_argument(std::string(what) + ": expected an array of integers");
  std::vector<int> out;
  out.reserve(v.size());
  for (const Json& e : v) {
    if (!e.is_number_integer())
      throw std::invalid_argument(std::string(what) + ": expected an array of integers");
    out.push_back(e.get<int>());
  }
  return out;
}

std::vector<std::vector<int>> block_array(const Json& v, const char* what) {
  if (!v.is_array())
    throw std::invalid_argument(std::string(what) + ": expected an array of blocks");
  std::vector<std::vector<int>> out;
  out.reserve(v.size());
  for (const Json& b : v) out.push_back(int_array(b, what));
  return out;
}

Json term_list_json(const std::map<PartitionDiagram, DeltaPolynomial>& terms) {
  Json out = Json::array();
  for (const auto& [d, c] : terms)
    out.push_back(Json{{"coeff", poly_string(c)}, {"diagram", to_json(d)}});
  return out;
}

}  // namespace

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(static_cast<long long>(x.get_si()));
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    const std::string text = j.get<std::string>();
    if (!std::regex_match(text, std::regex("-?[0-9]+")))
      throw std::invalid_argument("not a decimal integer: \"" + text + "\"");
    return Integer(text);
  }
  throw std::invalid_argument("expected an integer or a decimal string");
}

Json to_json(const PartitionDiagram& d) {
  Json blocks = Json::array();
  for (const auto& b : d.blocks) blocks.push_back(b);
  return Json{{"blocks", blocks}, {"n", d.n}};
}

PartitionDiagram diagram_from_json(const Json& j) {
  require_fields(j, "diagram", {"blocks", "n"});
  return make_diagram(int_field(j, "n", "diagram"), block_array(j.at("blocks"), "diagram"));
}

Json to_json(const AlgebraElement& x) {
  return Json{{"family", family_name(x.family)},
              {"n", x.n},
              {"terms", term_list_json(x.terms)}};
}

AlgebraElement element_from_json(const Json& j) {
  require_fields(j, "element", {"family", "n", "terms"});
  const Family family = family_from_name(string_field(j, "family", "element"));
  AlgebraElement x = zero_element(family, int_field(j, "n", "element"));
  const Json& terms = j.at("terms");
  if (!terms.is_array())
    throw std::invalid_argument("element: field \"terms\" must be an array");
  for (const Json& t : terms) {
    require_fields(t, "element term", {"coeff", "diagram"});
    PartitionDiagram d = diagram_from_json(t.at("diagram"));
    if (d.n != x.n)
      throw std::invalid_argument("element: term diagram size differs from the element");
    if (!family_valid(family, d))
      throw std::invalid_argument("element: term diagram is not a " +
                                  std::string(family_name(family)) + " diagram");
    x = add(x, scale(basis_element(family, d),
                     parse_poly(string_field(t, "coeff", "element term"))));
  }
  return x;
}

Json to_json(const HomDiagram& h) {
  if (h.family == Family::P) {
    Json blocks = Json::array();
    for (const auto& b : h.blocks) blocks.push_back(b);
    return Json{{"blocks", blocks}, {"m", h.m}, {"marked", h.marked}, {"n", h.n}};
  }
  Json pairs = Json::array();
  std::vector<int> blob;
  std::size_t next_marked = 0;
  for (std::size_t i = 0; i < h.blocks.size(); ++i) {
    if (next_marked < h.marked.size() &&
        h.marked[next_marked] == static_cast<int>(i)) {
      blob.push_back(h.blocks[i].front());
      ++next_marked;
    } else {
      pairs.push_back(h.blocks[i]);
    }
  }
  std::sort(blob.begin(), blob.end());
  return Json{{"blob", blob}, {"m", h.m}, {"n", h.n}, {"pairs", pairs}};
}

HomDiagram hom_diagram_from_json(Family family, const Json& j) {
  if (family == Family::P) {
    require_fields(j, "hom diagram", {"blocks", "m", "marked", "n"});
    return make_hom_diagram(family, int_field(j, "n", "hom diagram"),
                            int_field(j, "m", "hom diagram"),
                            block_array(j.at("blocks"), "hom diagram"),
                            int_array(j.at("marked"), "hom diagram"));
  }
  require_fields(j, "hom diagram", {"blob", "m", "n", "pairs"});
  std::vector<std::vector<int>> blocks = block_array(j.at("pairs"), "hom diagram");
  std::vector<int> marked;
  for (int dot : int_array(j.at("blob"), "hom diagram")) {
    marked.push_back(static_cast<int>(blocks.size()));
    blocks.push_back({dot});
  }
  return make_hom_diagram(family, int_field(j, "n", "hom diagram"),
                          int_field(j, "m", "hom diagram"), std::move(blocks),
                          std::move(marked));
}

Json to_json(const Morphism& f) {
  Json terms = Json::array();
  for (const auto& [h, c] : f.terms)
    terms.push_back(Json{{"coeff", poly_string(c)}, {"diagram", to_json(h)}});
  return Json{{"family", family_name(f.family)},
              {"source", f.source},
              {"target", f.target},
              {"terms", terms}};
}

Morphism morphism_from_json(const Json& j) {
  require_fields(j, "morphism", {"family", "source", "target", "terms"});
  const Family family = family_from_name(string_field(j, "family", "morphism"));
  Morphism f = zero_morphism(family, int_field(j, "source", "morphism"),
                             int_field(j, "target", "morphism"));
  const Json& terms = j.at("terms");
  if (!terms.is_array())
    throw std::invalid_argument("morphism: field \"terms\" must be an array");
  for (const Json& t : terms) {
    require_fields(t, "morphism term", {"coeff", "diagram"});
    HomDiagram h = hom_diagram_from_json(family, t.at("diagram"));
    if (h.m != f.source || h.n != f.target)
      throw std::invalid_argument("morphism: term diagram has the wrong source or target");
    f = add(f, scale(basis_morphism(h),
                     parse_poly(string_field(t, "coeff", "morphism term"))));
  }
  return f;
}

Json to_json(const MultiplicityTable& t) {
  Json entries = Json::array();
  for (const auto& [lambda, mult] : t.entries)
    entries.push_back(Json{{"lambda", lambda}, {"mult", integer_json(mult)}});
  return Json{{"entries", entries}, {"family", family_name(t.family)}, {"n", t.n}};
}

MultiplicityTable table_from_json(const Json& j) {
  require_fields(j, "multiplicity table", {"entries", "family", "n"});
  MultiplicityTable t;
  t.family = family_from_name(string_field(j, "family", "multiplicity table"));
  t.n = int_field(j, "n", "multiplicity table");
  const Json& entries = j.at("entries");
  if (!entries.is_array())
    throw std::invalid_argument("multiplicity table: field \"entries\" must be an array");
  for (const Json& e : entries) {
    require_fields(e, "table entry", {"lambda", "mult"});
    Partition lambda = int_array(e.at("lambda"), "table entry");
    if (!label_valid({t.family, t.n, lambda}))
      throw std::invalid_argument("multiplicity table: entry is not a valid label");
    if (!t.entries.emplace(std::move(lambda), integer_from_json(e.at("mult"))).second)
      throw std::invalid_argument("multiplicity table: duplicate label");
  }
  return t;
}

Json to_json(const RankReport& r) {
  Json j{{"agree", r.agree},
         {"count", integer_json(r.count)},
         {"delta", rational_string(r.delta0)},
         {"family", family_name(r.family)},
         {"m", r.m},
         {"n", r.n},
         {"rank", integer_json(r.rank)}};
  if (r.a >= 0) j["a"] = r.a;
  return j;
}

RankReport rank_report_from_json(const Json& j) {
  require_fields(j, "rank report", {"agree", "count", "delta", "family", "m", "n", "rank"},
                 {"a"});
  RankReport r;
  r.family = family_from_name(string_field(j, "family", "rank report"));
  r.m = int_field(j, "m", "rank report");
  r.n = int_field(j, "n", "rank report");
  if (j.contains("a")) r.a = int_field(j, "a", "rank report");
  r.delta0 = parse_rational(string_field(j, "delta", "rank report"));
  r.rank = integer_from_json(j.at("rank"));
  r.count = integer_from_json(j.at("count"));
  r.agree = bool_field(j, "agree", "rank report");
  return r;
}

Json to_json(const StabilityReport& r) {
  Json cells = Json::array();
  for (const StabilityCell& c : r.cells)
    cells.push_back(Json{{"a", c.a},
                         {"injective", c.injective},
                         {"n", c.n},
                         {"source_dim", integer_json(c.source_dim)},
                         {"surjective", c.surjective},
                         {"target_dim", integer_json(c.target_dim)},
                         {"vacuous", c.vacuous}});
  Json tables = Json::array();
  for (const auto& [n, table] : r.tables) tables.push_back(to_json(table));
  Json j{{"cells", cells},
         {"conclusive", r.conclusive},
         {"family", family_name(r.family)},
         {"injectivity_onset", r.injectivity_onset},
         {"m", r.m},
         {"n_max", r.n_max},
         {"notes", r.notes},
         {"pass", r.pass},
         {"predicted_injectivity", r.predicted_injectivity},
         {"predicted_stabilization", r.predicted_stabilization},
         {"predicted_surjectivity", r.predicted_surjectivity},
         {"stabilization_onset", r.stabilization_onset},
         {"surjectivity_onset", r.surjectivity_onset},
         {"tables", tables}};
  if (r.a_max >= 0) j["a_max"] = r.a_max;
  return j;
}

StabilityReport stability_report_from_json(const Json& j) {
  require_fields(j, "stability report",
                 {"cells", "conclusive", "family", "injectivity_onset", "m", "n_max",
                  "notes", "pass", "predicted_injectivity", "predicted_stabilization",
                  "predicted_surjectivity", "stabilization_onset", "surjectivity_onset",
                  "tables"},
                 {"a_max"});
  StabilityReport r;
  r.family = family_from_name(string_field(j, "family", "stability report"));
  r.m = int_field(j, "m", "stability report");
  r.n_max = int_field(j, "n_max", "stability report");
  if (j.contains("a_max")) r.a_max = int_field(j, "a_max", "stability report");
  const Json& cells = j.at("cells");
  if (!cells.is_array())
    throw std::invalid_argument("stability report: field \"cells\" must be an array");
  for (const Json& c : cells) {
    require_fields(c, "stability cell",
                   {"a", "injective", "n", "source_dim", "surjective", "target_dim",
                    "vacuous"});
    StabilityCell cell;
    cell.a = int_field(c, "a", "stability cell");
    cell.n = int_field(c, "n", "stability cell");
    cell.source_dim = integer_from_json(c.at("source_dim"));
    cell.target_dim = integer_from_json(c.at("target_dim"));
    cell.injective = bool_field(c, "injective", "stability cell");
    cell.surjective = bool_field(c, "surjective", "stability cell");
    cell.vacuous = bool_field(c, "vacuous", "stability cell");
    r.cells.push_back(cell);
  }
  const Json& tables = j.at("tables");
  if (!tables.is_array())
    throw std::invalid_argument("stability report: field \"tables\" must be an array");
  for (const Json& t : tables) {
    MultiplicityTable table = table_from_json(t);
    const int n = table.n;
    if (!r.tables.emplace(n, std::move(table)).second)
      throw std::invalid_argument("stability report: duplicate table size");
  }
  r.injectivity_onset = int_field(j, "injectivity_onset", "stability report");
  r.surjectivity_onset = int_field(j, "surjectivity_onset", "stability report");
  r.stabilization_onset = int_field(j, "stabilization_onset", "stability report");
  r.predicted_injectivity = int_field(j, "predicted_injectivity", "stability report");
  r.predicted_surjectivity = int_field(j, "predicted_surjectivity", "stability report");
  r.predicted_stabilization = int_field(j, "predicted_stabilization", "stability report");
  r.conclusive = bool_field(j, "conclusive", "stability report");
  r.pass = bool_field(j, "pass", "stability report");
  const Json& notes = j.at("notes");
  if (!notes.is_array())
    throw std::invalid_argument("stability report: field \"notes\" must be an array");
  for (const Json& note : notes) {
    if (!note.is_string())
      throw std::invalid_argument("stability report: notes must be strings");
    r.notes.push_back(note.get<std::string>());
  }
  return r;
}

namespace {

std::string json_type_name(const Json& v) {
  if (v.is_object()) return "object";
  if (v.is_array()) return "array";
  if (v.is_string()) return "string";
  if (v.is_boolean()) return "boolean";
  if (v.is_number_integer()) return "integer";
  if (v.is_number()) return "number";
  return "null";
}

bool type_matches(const std::string& want, const Json& v) {
  if (want == "object") return v.is_object();
  if (want == "array") return v.is_array();
  if (want == "string") return v.is_string();
  if (want == "boolean") return v.is_boolean();
  if (want == "integer") return v.is_number_integer();
  if (want == "number") return v.is_number();
  if (want == "null") return v.is_null();
  throw std::invalid_argument("schema names an unsupported type: " + want);
}

std::string violation_at(const Json& s, const Json& v, const std::string& path) {
  if (!s.is_object()) throw std::invalid_argument("schema nodes must be objects");
  if (s.contains("oneOf")) {
    int matched = 0;
    for (const Json& alt : s.at("oneOf"))
      if (violation_at(alt, v, path).empty()) ++matched;
    if (matched != 1)
      return path + ": matches " + std::to_string(matched) + " of the oneOf alternatives";
  }
  if (s.contains("const") && v != s.at("const"))
    return path + ": must equal " + s.at("const").dump();
  if (s.contains("enum")) {
    const Json& options = s.at("enum");
    if (std::find(options.begin(), options.end(), v) == options.end())
      return path + ": " + v.dump() + " is not one of " + options.dump();
  }
  if (s.contains("type")) {
    const std::string want = s.at("type").get<std::string>();
    if (!type_matches(want, v))
      return path + ": expected " + want + ", got " + json_type_name(v);
  }
  if (s.contains("minimum") && v.is_number_integer() &&
      v.get<long long>() < s.at("minimum").get<long long>())
    return path + ": " + v.dump() + " is below the minimum " + s.at("minimum").dump();
  if (s.contains("pattern") && v.is_string() &&
      !std::regex_match(v.get<std::string>(), std::regex(s.at("pattern").get<std::string>())))
    return path + ": \"" + v.get<std::string>() + "\" does not match " +
           s.at("pattern").get<std::string>();
  if (v.is_object()) {
    if (s.contains("required"))
      for (const Json& key : s.at("required"))
        if (!v.contains(key.get<std::string>()))
          return path + ": missing required field \"" + key.get<std::string>() + "\"";
    const Json* props = s.contains("properties") ? &s.at("properties") : nullptr;
    const bool closed = s.contains("additionalProperties") &&
                        s.at("additionalProperties").is_boolean() &&
                        !s.at("additionalProperties").get<bool>();
    for (const auto& item : v.items()) {
      if (props && props->contains(item.key())) {
        std::string msg = violation_at(props->at(item.key()), item.value(),
                                       path + "." + item.key());
        if (!msg.empty()) return msg;
      } else if (closed) {
        return path + ": unexpected field \"" + item.key() + "\"";
      }
    }
  }
  if (v.is_array()) {
    if (s.contains("minItems") && v.size() < s.at("minItems").get<std::size_t>())
      return path + ": fewer than " + s.at("minItems").dump() + " items";
    if (s.contains("maxItems") && v.size() > s.at("maxItems").get<std::size_t>())
      return path + ": more than " + s.at("maxItems").dump() + " items";
    if (s.contains("items")) {
      const Json& item_schema = s.at("items");
      for (std::size_t i = 0; i < v.size(); ++i) {
        std::string msg =
            violation_at(item_schema, v[i], path + "[" + std::to_string(i) + "]");
        if (!msg.empty()) return msg;
      }
    }
  }
  return "";
}

}  // namespace

std::string schema_violation(const Json& schema, const Json& value) {
  return violation_at(schema, value, "$");
}

}  // namespace dstab
