#pragma once

#include <memory>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spanbicat/bicat.hpp"
#include "spanbicat/category.hpp"
#include "spanbicat/finset.hpp"
#include "spanbicat/table_fragment.hpp"

namespace spanbicat {

inline constexpr const char* kFixtureSchema = "spanbicat-fixture/1";

struct FinsetSpanPayload {
  std::vector<std::size_t> objects;
  friend bool operator==(const FinsetSpanPayload&, const FinsetSpanPayload&) = default;
};

struct PresentationPayload {
  CategoryPresentation category;
  // When false, cospans without a pullback entry simply have no composite.
  bool complete_pullbacks = true;
  friend bool operator==(const PresentationPayload&, const PresentationPayload&) = default;
};

struct FixtureBounds {
  std::size_t apex_bound = 2;
  std::optional<std::size_t> closure_bound;
  friend bool operator==(const FixtureBounds&, const FixtureBounds&) = default;
};

struct FixtureDocument {
  std::string name;
  std::string description;
  FixtureBounds bounds;
  std::variant<FinsetSpanPayload, PresentationPayload, MonoidPresentation, TableFragment::Tables> payload;
  // Null, or one mutation object; see docs/fixture-format.md.
  nlohmann::json mutation;

  std::string kind() const;
  friend bool operator==(const FixtureDocument&, const FixtureDocument&) = default;
};

nlohmann::json finfunction_json(const FinFunction& f);
FinFunction finfunction_from_json(const nlohmann::json& j);

nlohmann::json presentation_json(const CategoryPresentation& p);
CategoryPresentation presentation_from_json(const nlohmann::json& j);

nlohmann::json monoid_json(const MonoidPresentation& m);
MonoidPresentation monoid_from_json(const nlohmann::json& j);

nlohmann::json tables_json(const TableFragment::Tables& t);
TableFragment::Tables tables_from_json(const nlohmann::json& j);

// Throws FixtureError on schema violations, unknown names and invalid tables.
FixtureDocument parse_fixture(const nlohmann::json& j);
FixtureDocument parse_fixture_text(const std::string& text);
nlohmann::json serialize_fixture(const FixtureDocument& doc);
std::string fixture_text(const FixtureDocument& doc);

FixtureDocument load_fixture_file(const std::string& path);

// A fixture turned into a fragment. Mutations that act on the checks rather
// than on the fragment are carried alongside.
struct LoadedFixture {
  std::shared_ptr<const BicatFragment> fragment;
  // replace-initial-generic: the element standing in for its source's witness.
  std::optional<Element> replaced_generic;
  // inject-premise: lemma name and premise instance.
  std::optional<std::pair<std::string, nlohmann::json>> injected_premise;
};

// Bounds given here override the document's.
LoadedFixture build_fixture(const FixtureDocument& doc, const std::optional<FixtureBounds>& bounds = std::nullopt);

}  // namespace spanbicat
