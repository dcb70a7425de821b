#include "spanbicat/fixture.hpp"

#include <fstream>
#include <sstream>

#include "spanbicat/mutants.hpp"
#include "spanbicat/span.hpp"

namespace spanbicat {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FixtureError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string text_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) throw FixtureError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::size_t count_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned()) throw FixtureError(std::string("field '") + key + "' must be a natural number");
  return v.get<std::size_t>();
}

const json& array_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) throw FixtureError(std::string("field '") + key + "' must be an array");
  return v;
}

template <typename Names>
std::size_t index_of(const Names& names, const std::string& name, const char* what) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  throw FixtureError(std::string("unknown ") + what + " '" + name + "'");
}

std::vector<std::string> one_cell_names(const TableFragment::Tables& t) {
  std::vector<std::string> out;
  for (const auto& c : t.one_cells) out.push_back(c.name);
  return out;
}

std::vector<std::string> two_cell_names(const TableFragment::Tables& t) {
  std::vector<std::string> out;
  for (const auto& c : t.two_cells) out.push_back(c.name);
  return out;
}

std::vector<std::string> morphism_names(const CategoryPresentation& p) {
  std::vector<std::string> out;
  for (const auto& m : p.morphisms) out.push_back(m.name);
  return out;
}

}  // namespace

std::string FixtureDocument::kind() const {
  switch (payload.index()) {
    case 0:
      return "finset-span";
    case 1:
      return "category-presentation";
    case 2:
      return "monoid";
    default:
      return "bicat-fragment";
  }
}

json finfunction_json(const FinFunction& f) {
  return {{"dom", f.dom().size}, {"cod", f.cod().size}, {"image", f.image()}};
}

FinFunction finfunction_from_json(const json& j) {
  std::vector<std::size_t> image;
  for (const json& v : array_field(j, "image")) {
    if (!v.is_number_unsigned()) throw FixtureError("function image entries must be natural numbers");
    image.push_back(v.get<std::size_t>());
  }
  try {
    return FinFunction({count_field(j, "dom")}, {count_field(j, "cod")}, std::move(image));
  } catch (const std::invalid_argument& e) {
    throw FixtureError(e.what());
  }
}

json presentation_json(const CategoryPresentation& p) {
  const auto names = morphism_names(p);
  json morphisms = json::array(), identities = json::array(), composition = json::array(), pullbacks = json::array();
  for (const auto& m : p.morphisms) {
    morphisms.push_back({{"name", m.name}, {"src", p.objects.at(m.src)}, {"tgt", p.objects.at(m.tgt)}});
  }
  for (std::size_t m : p.identities) identities.push_back(names.at(m));
  for (const auto& [k, v] : p.composition) composition.push_back({names.at(k.first), names.at(k.second), names.at(v)});
  for (const auto& e : p.pullbacks) {
    pullbacks.push_back({{"f", names.at(e.f)},
                         {"g", names.at(e.g)},
                         {"apex", p.objects.at(e.apex)},
                         {"p1", names.at(e.p1)},
                         {"p2", names.at(e.p2)}});
  }
  return {{"objects", p.objects},
          {"morphisms", morphisms},
          {"identities", identities},
          {"composition", composition},
          {"pullbacks", pullbacks}};
}

CategoryPresentation presentation_from_json(const json& j) {
  CategoryPresentation p;
  for (const json& o : array_field(j, "objects")) {
    if (!o.is_string()) throw FixtureError("object names must be strings");
    p.objects.push_back(o.get<std::string>());
  }
  for (const json& m : array_field(j, "morphisms")) {
    p.morphisms.push_back({text_field(m, "name"), index_of(p.objects, text_field(m, "src"), "object"),
                           index_of(p.objects, text_field(m, "tgt"), "object")});
  }
  const auto names = morphism_names(p);
  for (const json& m : array_field(j, "identities")) {
    if (!m.is_string()) throw FixtureError("identities must be morphism names");
    p.identities.push_back(index_of(names, m.get<std::string>(), "morphism"));
  }
  for (const json& row : array_field(j, "composition")) {
    if (!row.is_array() || row.size() != 3) throw FixtureError("composition rows are [f, g, f;g]");
    std::size_t f = index_of(names, row[0].get<std::string>(), "morphism");
    std::size_t g = index_of(names, row[1].get<std::string>(), "morphism");
    if (!p.composition.emplace(std::make_pair(f, g), index_of(names, row[2].get<std::string>(), "morphism")).second) {
      throw FixtureError("composition row for " + names[f] + ", " + names[g] + " is repeated");
    }
  }
  if (j.contains("pullbacks")) {
    for (const json& e : array_field(j, "pullbacks")) {
      p.pullbacks.push_back(
          {index_of(names, text_field(e, "f"), "morphism"), index_of(names, text_field(e, "g"), "morphism"),
           index_of(p.objects, text_field(e, "apex"), "object"), index_of(names, text_field(e, "p1"), "morphism"),
           index_of(names, text_field(e, "p2"), "morphism")});
    }
  }
  try {
    p.validate();
  } catch (const ConstructionError& e) {
    throw FixtureError(std::string("invalid category presentation: ") + e.what());
  }
  return p;
}

json monoid_json(const MonoidPresentation& m) {
  json mult = json::array();
  for (const auto& row : m.mult) {
    json r = json::array();
    for (std::size_t v : row) r.push_back(m.elements.at(v));
    mult.push_back(r);
  }
  return {{"elements", m.elements}, {"unit", m.elements.at(m.unit)}, {"mult", mult}};
}

MonoidPresentation monoid_from_json(const json& j) {
  MonoidPresentation m;
  for (const json& e : array_field(j, "elements")) {
    if (!e.is_string()) throw FixtureError("monoid elements must be strings");
    m.elements.push_back(e.get<std::string>());
  }
  m.unit = index_of(m.elements, text_field(j, "unit"), "element");
  for (const json& row : array_field(j, "mult")) {
    if (!row.is_array()) throw FixtureError("mult rows must be arrays");
    std::vector<std::size_t> r;
    for (const json& v : row) {
      if (!v.is_string()) throw FixtureError("mult entries must be element names");
      r.push_back(index_of(m.elements, v.get<std::string>(), "element"));
    }
    m.mult.push_back(std::move(r));
  }
  try {
    m.validate();
  } catch (const ConstructionError& e) {
    throw FixtureError(std::string("invalid monoid: ") + e.what());
  }
  return m;
}

json tables_json(const TableFragment::Tables& t) {
  const auto ones = one_cell_names(t), twos = two_cell_names(t);
  json one_cells = json::array(), two_cells = json::array(), identities = json::object(), identity_two = json::object(),
       vcomp = json::array(), hcomp_one = json::array(), hcomp_two = json::array(), associators = json::array(),
       left_unitors = json::array(), right_unitors = json::array();
  for (const auto& c : t.one_cells) {
    one_cells.push_back({{"name", c.name}, {"src", t.objects.at(c.src)}, {"tgt", t.objects.at(c.tgt)}});
  }
  for (const auto& c : t.two_cells) {
    two_cells.push_back({{"name", c.name}, {"src", ones.at(c.src)}, {"tgt", ones.at(c.tgt)}});
  }
  for (std::size_t x = 0; x < t.identity_one.size(); ++x) identities[t.objects.at(x)] = ones.at(t.identity_one[x]);
  for (std::size_t a = 0; a < t.identity_two.size(); ++a) identity_two[ones.at(a)] = twos.at(t.identity_two[a]);
  for (const auto& [k, v] : t.vcomp) vcomp.push_back({twos.at(k.first), twos.at(k.second), twos.at(v)});
  for (const auto& [k, v] : t.hcomp_one) hcomp_one.push_back({ones.at(k.first), ones.at(k.second), ones.at(v)});
  for (const auto& [k, v] : t.hcomp_two) hcomp_two.push_back({twos.at(k.first), twos.at(k.second), twos.at(v)});
  for (const auto& [k, v] : t.associators) {
    associators.push_back({{"cells", {ones.at(k[0]), ones.at(k[1]), ones.at(k[2])}},
                           {"forward", twos.at(v.forward)},
                           {"inverse", twos.at(v.inverse)}});
  }
  for (const auto& [k, v] : t.left_unitors) {
    left_unitors.push_back({{"cell", ones.at(k)}, {"forward", twos.at(v.forward)}, {"inverse", twos.at(v.inverse)}});
  }
  for (const auto& [k, v] : t.right_unitors) {
    right_unitors.push_back({{"cell", ones.at(k)}, {"forward", twos.at(v.forward)}, {"inverse", twos.at(v.inverse)}});
  }
  return {{"objects", t.objects},         {"one_cells", one_cells},        {"identities", identities},
          {"two_cells", two_cells},       {"identity_two", identity_two},  {"vcomp", vcomp},
          {"hcomp_one", hcomp_one},       {"hcomp_two", hcomp_two},        {"associators", associators},
          {"left_unitors", left_unitors}, {"right_unitors", right_unitors}};
}

TableFragment::Tables tables_from_json(const json& j) {
  TableFragment::Tables t;
  for (const json& o : array_field(j, "objects")) {
    if (!o.is_string()) throw FixtureError("object names must be strings");
    t.objects.push_back(o.get<std::string>());
  }
  for (const json& c : array_field(j, "one_cells")) {
    t.one_cells.push_back({text_field(c, "name"),
                           static_cast<ObjectId>(index_of(t.objects, text_field(c, "src"), "object")),
                           static_cast<ObjectId>(index_of(t.objects, text_field(c, "tgt"), "object"))});
  }
  const auto ones = one_cell_names(t);
  for (const json& c : array_field(j, "two_cells")) {
    t.two_cells.push_back({text_field(c, "name"), index_of(ones, text_field(c, "src"), "1-cell"),
                           index_of(ones, text_field(c, "tgt"), "1-cell")});
  }
  const auto twos = two_cell_names(t);
  const json& ids = field(j, "identities");
  for (const auto& o : t.objects) t.identity_one.push_back(index_of(ones, text_field(ids, o.c_str()), "1-cell"));
  const json& id2 = field(j, "identity_two");
  for (const auto& c : ones) t.identity_two.push_back(index_of(twos, text_field(id2, c.c_str()), "2-cell"));

  auto triples = [&](const char* key, const std::vector<std::string>& names, const char* what,
                     std::map<std::pair<std::size_t, std::size_t>, std::size_t>& out) {
    if (!j.contains(key)) return;
    for (const json& row : array_field(j, key)) {
      if (!row.is_array() || row.size() != 3 || !row[0].is_string() || !row[1].is_string() || !row[2].is_string()) {
        throw FixtureError(std::string(key) + " rows are [a, b, result]");
      }
      std::pair<std::size_t, std::size_t> k{index_of(names, row[0].get<std::string>(), what),
                                            index_of(names, row[1].get<std::string>(), what)};
      if (!out.emplace(k, index_of(names, row[2].get<std::string>(), what)).second) {
        throw FixtureError(std::string(key) + " row for " + names[k.first] + ", " + names[k.second] + " is repeated");
      }
    }
  };
  triples("vcomp", twos, "2-cell", t.vcomp);
  triples("hcomp_one", ones, "1-cell", t.hcomp_one);
  triples("hcomp_two", twos, "2-cell", t.hcomp_two);

  auto invertible = [&](const json& e) {
    return TableFragment::Invertible{index_of(twos, text_field(e, "forward"), "2-cell"),
                                     index_of(twos, text_field(e, "inverse"), "2-cell")};
  };
  if (j.contains("associators")) {
    for (const json& e : array_field(j, "associators")) {
      const json& cells = array_field(e, "cells");
      if (cells.size() != 3) throw FixtureError("associator cells are [a, b, c]");
      std::array<std::size_t, 3> k{};
      for (std::size_t i = 0; i < 3; ++i) k[i] = index_of(ones, cells[i].get<std::string>(), "1-cell");
      t.associators[k] = invertible(e);
    }
  }
  for (const char* key : {"left_unitors", "right_unitors"}) {
    if (!j.contains(key)) continue;
    auto& out = std::string(key) == "left_unitors" ? t.left_unitors : t.right_unitors;
    for (const json& e : array_field(j, key)) out[index_of(ones, text_field(e, "cell"), "1-cell")] = invertible(e);
  }
  try {
    TableFragment check(t);
  } catch (const std::exception& e) {
    throw FixtureError(std::string("invalid fragment tables: ") + e.what());
  }
  return t;
}

namespace {

const std::vector<std::string>& mutation_kinds() {
  static const std::vector<std::string> kinds{"replace-associator", "duplicate-two-cell",      "hide-two-cell",
                                              "drop-one-cells",     "replace-initial-generic", "inject-premise"};
  return kinds;
}

void require_text(const json& j, std::initializer_list<const char*> keys) {
  for (const char* k : keys) text_field(j, k);
}

void validate_mutation(const json& m) {
  const std::string kind = text_field(m, "kind");
  index_of(mutation_kinds(), kind, "mutation kind");
  if (kind == "replace-associator") {
    if (array_field(m, "cells").size() != 3) throw FixtureError("replace-associator needs three cells");
    text_field(m, "with");
  } else if (kind == "duplicate-two-cell") {
    require_text(m, {"source", "target", "cell", "name"});
  } else if (kind == "hide-two-cell") {
    require_text(m, {"source", "target", "cell"});
  } else if (kind == "drop-one-cells") {
    array_field(m, "cells");
  } else if (kind == "replace-initial-generic") {
    require_text(field(m, "delta"), {"source", "left", "right", "cell"});
  } else {
    text_field(m, "lemma");
    if (!field(m, "premise").is_object()) throw FixtureError("inject-premise needs a premise object");
  }
}

}  // namespace

FixtureDocument parse_fixture(const json& j) {
  try {
    if (!j.is_object()) throw FixtureError("fixture must be a JSON object");
    const std::string schema = text_field(j, "schema");
    if (schema != kFixtureSchema) throw FixtureError("unsupported schema '" + schema + "'");
    FixtureDocument doc;
    if (j.contains("name")) doc.name = text_field(j, "name");
    if (j.contains("description")) doc.description = text_field(j, "description");
    if (j.contains("bounds")) {
      const json& b = j.at("bounds");
      doc.bounds.apex_bound = count_field(b, "apex_bound");
      if (b.contains("closure_bound")) doc.bounds.closure_bound = count_field(b, "closure_bound");
    }
    const std::string kind = text_field(j, "kind");
    const json& payload = field(j, "payload");
    if (kind == "finset-span") {
      FinsetSpanPayload p;
      for (const json& o : array_field(payload, "objects")) {
        if (!o.is_number_unsigned()) throw FixtureError("finset-span objects are set sizes");
        p.objects.push_back(o.get<std::size_t>());
      }
      if (p.objects.empty()) throw FixtureError("finset-span needs at least one object");
      doc.payload = std::move(p);
    } else if (kind == "category-presentation") {
      PresentationPayload p{presentation_from_json(field(payload, "category")), true};
      if (payload.contains("complete_pullbacks")) {
        if (!payload.at("complete_pullbacks").is_boolean()) throw FixtureError("complete_pullbacks must be boolean");
        p.complete_pullbacks = payload.at("complete_pullbacks").get<bool>();
      }
      doc.payload = std::move(p);
    } else if (kind == "monoid") {
      doc.payload = monoid_from_json(payload);
    } else if (kind == "bicat-fragment") {
      doc.payload = tables_from_json(payload);
    } else {
      throw FixtureError("unknown fixture kind '" + kind + "'");
    }
    if (j.contains("mutation") && !j.at("mutation").is_null()) {
      validate_mutation(j.at("mutation"));
      doc.mutation = j.at("mutation");
    }
    return doc;
  } catch (const json::exception& e) {
    throw FixtureError(std::string("malformed fixture: ") + e.what());
  }
}

FixtureDocument parse_fixture_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FixtureError(std::string("fixture is not valid JSON: ") + e.what());
  }
  return parse_fixture(j);
}

json serialize_fixture(const FixtureDocument& doc) {
  json j{{"schema", kFixtureSchema}, {"kind", doc.kind()}};
  if (!doc.name.empty()) j["name"] = doc.name;
  if (!doc.description.empty()) j["description"] = doc.description;
  json bounds{{"apex_bound", doc.bounds.apex_bound}};
  if (doc.bounds.closure_bound) bounds["closure_bound"] = *doc.bounds.closure_bound;
  j["bounds"] = bounds;
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, FinsetSpanPayload>) {
          j["payload"] = {{"objects", p.objects}};
        } else if constexpr (std::is_same_v<T, PresentationPayload>) {
          j["payload"] = {{"category", presentation_json(p.category)}, {"complete_pullbacks", p.complete_pullbacks}};
        } else if constexpr (std::is_same_v<T, MonoidPresentation>) {
          j["payload"] = monoid_json(p);
        } else {
          j["payload"] = tables_json(p);
        }
      },
      doc.payload);
  if (!doc.mutation.is_null()) j["mutation"] = doc.mutation;
  return j;
}

std::string fixture_text(const FixtureDocument& doc) { return serialize_fixture(doc).dump(2) + "\n"; }

FixtureDocument load_fixture_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot read fixture '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_fixture_text(ss.str());
}

LoadedFixture build_fixture(const FixtureDocument& doc, const std::optional<FixtureBounds>& bounds) {
  const FixtureBounds b = bounds.value_or(doc.bounds);
  LoadedFixture out;
  try {
    std::visit(
        [&](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, FinsetSpanPayload>) {
            out.fragment = span_fragment(p.objects, b.apex_bound, b.closure_bound);
          } else if constexpr (std::is_same_v<T, PresentationPayload>) {
            out.fragment = span_fragment(p.category, p.complete_pullbacks);
          } else if constexpr (std::is_same_v<T, MonoidPresentation>) {
            out.fragment = monoid_bicat(p);
          } else {
            out.fragment = std::make_shared<TableFragment>(p);
          }
        },
        doc.payload);
  } catch (const ConstructionError& e) {
    throw FixtureError(std::string("cannot build fragment: ") + e.what());
  } catch (const IncompleteBase& e) {
    throw FixtureError(std::string("cannot build fragment: ") + e.what());
  }
  if (doc.mutation.is_null()) return out;

  const json& m = doc.mutation;
  const BicatFragment& f = *out.fragment;
  const std::string kind = m.at("kind").get<std::string>();
  try {
    if (kind == "replace-associator") {
      const json& cells = m.at("cells");
      OneCell a = one_cell_named(f, cells[0].get<std::string>()), bb = one_cell_named(f, cells[1].get<std::string>()),
              c = one_cell_named(f, cells[2].get<std::string>());
      auto original = f.associator(a, bb, c);
      if (!original) throw FixtureError("no associator at the listed cells");
      TwoCell with = two_cell_named(f, original->src, original->tgt, m.at("with").get<std::string>());
      out.fragment = std::make_shared<ReplacedAssociator>(out.fragment, a, bb, c, with);
    } else if (kind == "duplicate-two-cell" || kind == "hide-two-cell") {
      OneCell src = one_cell_named(f, m.at("source").get<std::string>());
      OneCell tgt = one_cell_named(f, m.at("target").get<std::string>());
      TwoCell cell = two_cell_named(f, src, tgt, m.at("cell").get<std::string>());
      if (kind == "duplicate-two-cell") {
        out.fragment = std::make_shared<DuplicatedTwoCell>(out.fragment, cell, m.at("name").get<std::string>());
      } else {
        out.fragment = std::make_shared<HiddenTwoCell>(out.fragment, cell);
      }
    } else if (kind == "drop-one-cells") {
      std::vector<OneCell> cells;
      for (const json& c : m.at("cells")) cells.push_back(one_cell_named(f, c.get<std::string>()));
      out.fragment = std::make_shared<DroppedOneCells>(out.fragment, cells);
    } else if (kind == "replace-initial-generic") {
      out.replaced_generic = element_from_json(f, m.at("delta"));
    } else {
      out.injected_premise = std::make_pair(m.at("lemma").get<std::string>(), m.at("premise"));
    }
  } catch (const ConstructionError& e) {
    throw FixtureError(std::string("cannot apply mutation: ") + e.what());
  } catch (const json::exception& e) {
    throw FixtureError(std::string("malformed mutation: ") + e.what());
  }
  return out;
}

}  // namespace spanbicat
