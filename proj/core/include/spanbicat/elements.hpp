#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "spanbicat/bicat.hpp"

namespace spanbicat {

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept {
    std::size_t h = std::hash<TwoCell>{}(e.cell);
    h ^= std::hash<std::uint64_t>{}(e.left.id) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<std::uint64_t>{}(e.right.id) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// A pair (u: a => a', v: b => b') taking (a, b, γ) to (a', b', γ·(u*v)).
struct ElementMorphism {
  TwoCell left;
  TwoCell right;

  friend auto operator<=>(const ElementMorphism&, const ElementMorphism&) = default;
};

// 2-cells out of a 1-cell into base 1-cells of the same hom.
using OutCells = std::function<const std::vector<TwoCell>&(OneCell)>;

// The category of elements of B(c, - ; -) restricted to composites through y.
// Objects are stored; morphisms are enumerated on demand from the out-cells
// of the two legs. Components and initial objects are computed at build time
// by exhaustive morphism counting.
class ElementsCategory {
 public:
  ElementsCategory(const BicatFragment& b, OneCell c, ObjectId y, const OutCells& out);

  OneCell source_cell() const { return c_; }
  ObjectId middle() const { return y_; }
  const std::vector<Element>& objects() const { return objects_; }
  std::size_t size() const { return objects_.size(); }
  std::optional<std::size_t> find(const Element& e) const;

  std::size_t component_of(std::size_t i) const { return component_[i]; }
  const std::vector<std::vector<std::size_t>>& components() const { return components_; }
  bool is_initial(std::size_t i) const { return initial_[i]; }
  // Enumeration-least initial object of a component.
  std::optional<std::size_t> canonical_initial(std::size_t component) const { return canonical_[component]; }
  std::vector<std::size_t> initials(std::size_t component) const;
  std::size_t morphism_count() const { return morphism_count_; }

  // Calls fn(morphism, target) for every morphism out of `from`, which need
  // not itself be an object (its legs may be derived 1-cells). The target is
  // nullopt if the resulting triple is not an object of this category.
  void for_each_morphism(const Element& from,
                         const std::function<void(const ElementMorphism&, std::optional<std::size_t>)>& fn) const;
  std::vector<ElementMorphism> morphisms(std::size_t from, std::size_t to) const;
  std::optional<ElementMorphism> unique_morphism(std::size_t from, std::size_t to) const;
  Element apply(const Element& from, const ElementMorphism& m) const;

 private:
  const BicatFragment& b_;
  OneCell c_;
  ObjectId y_;
  OutCells out_;
  std::vector<Element> objects_;
  std::unordered_map<Element, std::size_t, ElementHash> index_;
  std::vector<std::size_t> component_;
  std::vector<std::vector<std::size_t>> components_;
  std::vector<bool> initial_;
  std::vector<std::optional<std::size_t>> canonical_;
  std::size_t morphism_count_ = 0;
};

}  // namespace spanbicat
