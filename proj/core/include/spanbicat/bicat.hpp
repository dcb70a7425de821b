#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spanbicat/errors.hpp"

namespace spanbicat {

using ObjectId = std::uint32_t;

struct OneCell {
  std::uint64_t id = 0;

  friend auto operator<=>(const OneCell&, const OneCell&) = default;
};

struct TwoCell {
  OneCell src;
  OneCell tgt;
  std::uint64_t local = 0;

  friend auto operator<=>(const TwoCell&, const TwoCell&) = default;
};

// A finite fragment of a bicategory. Composition is in diagrammatic order:
// hcomp(a, b) is "a then b", written a;b. One-cells returned by one_cells()
// are the base cells that quantified checks range over; hcomp may produce
// derived cells outside that list, and returns nullopt when the composite
// lies beyond the fragment's closure bound.
class BicatFragment {
 public:
  virtual ~BicatFragment() = default;

  virtual std::size_t object_count() const = 0;
  virtual std::string object_name(ObjectId x) const = 0;

  virtual ObjectId source(OneCell a) const = 0;
  virtual ObjectId target(OneCell a) const = 0;
  virtual std::vector<OneCell> one_cells(ObjectId x, ObjectId z) const = 0;
  virtual bool is_base(OneCell a) const = 0;
  virtual std::vector<TwoCell> two_cells(OneCell a, OneCell b) const = 0;

  virtual OneCell identity(ObjectId x) const = 0;
  virtual TwoCell identity(OneCell a) const = 0;

  // Throws CompositionError when alpha.tgt != beta.src.
  virtual TwoCell vcomp(const TwoCell& alpha, const TwoCell& beta) const = 0;
  virtual std::optional<OneCell> hcomp(OneCell a, OneCell b) const = 0;
  virtual std::optional<TwoCell> hcomp(const TwoCell& alpha, const TwoCell& beta) const = 0;

  // (a;b);c => a;(b;c) and its inverse.
  virtual std::optional<TwoCell> associator(OneCell a, OneCell b, OneCell c) const = 0;
  virtual std::optional<TwoCell> associator_inverse(OneCell a, OneCell b, OneCell c) const = 0;
  // 1;a => a
  virtual std::optional<TwoCell> left_unitor(OneCell a) const = 0;
  virtual std::optional<TwoCell> left_unitor_inverse(OneCell a) const = 0;
  // a;1 => a
  virtual std::optional<TwoCell> right_unitor(OneCell a) const = 0;
  virtual std::optional<TwoCell> right_unitor_inverse(OneCell a) const = 0;

  virtual std::string name(OneCell a) const = 0;
  virtual std::string name(const TwoCell& alpha) const = 0;
  virtual std::optional<OneCell> parse_one_cell(std::string_view text) const = 0;
  virtual std::optional<TwoCell> parse_two_cell(OneCell src, OneCell tgt, std::string_view text) const = 0;

  // Bounds and sizes the fragment was built with; copied into every report.
  virtual nlohmann::json scope() const = 0;

  std::vector<ObjectId> objects() const;
  bool is_identity(const TwoCell& alpha) const { return alpha == identity(alpha.src); }
};

// Whiskering: a◁β = 1_a * β and α▷b = α * 1_b.
std::optional<TwoCell> whisker_left(const BicatFragment& b, OneCell a, const TwoCell& beta);
std::optional<TwoCell> whisker_right(const BicatFragment& b, const TwoCell& alpha, OneCell c);

// Vertical composite of a chain; nullopt if any link is absent.
std::optional<TwoCell> vcomp_chain(const BicatFragment& b, std::initializer_list<std::optional<TwoCell>> cells);

std::optional<TwoCell> find_inverse(const BicatFragment& b, const TwoCell& alpha);
bool is_invertible(const BicatFragment& b, const TwoCell& alpha);
std::optional<TwoCell> find_invertible(const BicatFragment& b, OneCell a, OneCell c);

// Partition of parallel 1-cells under invertible 2-cells, in order of first member.
std::vector<std::vector<OneCell>> iso_classes(const BicatFragment& b, const std::vector<OneCell>& cells);

// Every base 1-cell, grouped by (source, target) in object order.
std::vector<OneCell> all_base_cells(const BicatFragment& b);

// Unwraps an optional composite, throwing FragmentIncomplete with a message.
OneCell require(const std::optional<OneCell>& a, std::string_view what);
TwoCell require(const std::optional<TwoCell>& a, std::string_view what);

nlohmann::json cell_json(const BicatFragment& b, OneCell a);
nlohmann::json cell_json(const BicatFragment& b, const TwoCell& alpha);

// One triple (a, b, γ: c => a;b) per element of the composition presheaf at (c, y).
struct Element {
  OneCell left;
  OneCell right;
  TwoCell cell;

  friend auto operator<=>(const Element&, const Element&) = default;
};

std::vector<Element> enumerate_2cells_into_composites(const BicatFragment& b, OneCell c, ObjectId y);

nlohmann::json element_json(const BicatFragment& b, const Element& e);

// Name lookups for fixture input; throw FixtureError on unknown names.
OneCell one_cell_named(const BicatFragment& b, const std::string& name);
TwoCell two_cell_named(const BicatFragment& b, OneCell src, OneCell tgt, const std::string& name);
// {"source": c, "left": a, "right": b, "cell": γ} with γ: c => a;b.
Element element_from_json(const BicatFragment& b, const nlohmann::json& j);

}  // namespace spanbicat

template <>
struct std::hash<spanbicat::OneCell> {
  std::size_t operator()(const spanbicat::OneCell& a) const noexcept { return std::hash<std::uint64_t>{}(a.id); }
};

template <>
struct std::hash<spanbicat::TwoCell> {
  std::size_t operator()(const spanbicat::TwoCell& t) const noexcept {
    std::uint64_t h = t.src.id * 0x9E3779B97F4A7C15ULL;
    h ^= t.tgt.id + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    h ^= t.local + 0x85EBCA77C2B2AE63ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};
