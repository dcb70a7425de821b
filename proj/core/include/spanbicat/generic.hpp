#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "spanbicat/analyzer.hpp"
#include "spanbicat/elements.hpp"
#include "spanbicat/report.hpp"

namespace spanbicat {

// A generic γ with the unique morphism from it to every object of its component.
struct GenericWitness {
  Element cell;
  std::size_t index = 0;
  std::size_t component = 0;
  std::vector<std::pair<std::size_t, ElementMorphism>> evidence;
};

// Standalone construction with its own out-cell cache.
ElementsCategory build_elements_category(const BicatFragment& b, OneCell c, ObjectId y);

std::vector<std::vector<std::size_t>> connected_components(const ElementsCategory& e);

std::optional<GenericWitness> is_generic(const ElementsCategory& e, const Element& gamma);

// Every component of every El(c, Y) over base c must have an initial object.
// details.elements lists per-(c, Y) object, component and initial counts.
Report is_generic_bicategory(const Analyzer& an, const CheckOptions& opts = {});

struct GenericFactorization {
  GenericWitness generic;
  ElementMorphism comparison;
};

// The canonical initial of γ's component and the unique comparison to γ.
// Throws NoInitialObject when the component has none.
GenericFactorization factor_through_generic(const ElementsCategory& e, const Element& gamma);

// δ: c => l;(m;r). Left-first: δ = σ1 · (l ◁ σ2) with σ1: c => l;n and
// σ2: n => m;r generic. Right-first: δ = σ1' · (σ2' ▷ r) · assoc with
// σ1': c => n';r and σ2': n' => l;m generic.
struct ThreeAryCell {
  OneCell l;
  OneCell m;
  OneCell r;
  TwoCell cell;

  friend auto operator<=>(const ThreeAryCell&, const ThreeAryCell&) = default;
};

struct ThreeAryGenerics {
  std::set<ThreeAryCell> left_first;
  std::set<ThreeAryCell> right_first;
  std::size_t skipped = 0;
};

// All 3-ary composites of 2-ary generics out of c through y1 then y2. Pairs
// whose target composite is outside the fragment are counted as skipped.
ThreeAryGenerics three_ary_generics(const Analyzer& an, OneCell c, ObjectId y1, ObjectId y2);

struct ThreeAryResult {
  bool left_first = false;
  bool right_first = false;
};

ThreeAryResult is_3ary_generic(const Analyzer& an, const ThreeAryCell& delta);

// The unitor 1_X => 1_X;1_X is an initial generic.
Report check_identity_initial(const Analyzer& an, ObjectId x);

}  // namespace spanbicat
