#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "spanbicat/bicat.hpp"
#include "spanbicat/elements.hpp"

namespace spanbicat {

// γ = P(δ, η) · (α * β) with η: 1_Y => h;k a generic, α: l;h => a, β: k;r => b.
struct Factorization {
  Element eta;
  TwoCell alpha;
  TwoCell beta;

  friend auto operator<=>(const Factorization&, const Factorization&) = default;
};

// The universal property of a candidate δ: c => l;r through Y, checked for
// every target object Y' of the fragment. Uniqueness is checked in two
// layers: exactly one factorization through the canonical generic of each
// component, and every other factorization related to it by the comparison
// isomorphism between generics.
struct UniversalityResult {
  bool universal = true;
  std::size_t checked = 0;
  std::size_t violation_count = 0;
  nlohmann::json violations = nlohmann::json::array();
  // canonical[y'][i]: factorization of object i of El(c, y') through a canonical generic.
  std::vector<std::vector<std::optional<Factorization>>> canonical;
};

struct InitialGenericWitness {
  OneCell cell;
  ObjectId middle = 0;
  Element delta;
  TwoCell delta_inverse;
  std::shared_ptr<const UniversalityResult> universality;
};

struct RejectedCandidate {
  Element delta;
  std::size_t violation_count = 0;
  nlohmann::json violations;
};

struct InitialGenericSearch {
  std::optional<InitialGenericWitness> witness;
  std::vector<RejectedCandidate> rejected;
};

// Shared caches for the checkers. All methods are thread-safe; cached values
// never depend on evaluation order.
class Analyzer {
 public:
  explicit Analyzer(const BicatFragment& b, unsigned jobs = 1);

  const BicatFragment& fragment() const { return b_; }
  unsigned jobs() const { return jobs_; }

  const std::vector<TwoCell>& out_cells(OneCell a) const;
  const ElementsCategory& elements(OneCell c, ObjectId y) const;
  std::optional<TwoCell> inverse(const TwoCell& t) const;

  // Builds El(c, y) for every listed cell and object, in parallel.
  void prepare(const std::vector<OneCell>& cells) const;

  // P(δ, η): c => (l;h);(k;r), reassociated with the stored unitor and associators.
  Element paste(const Element& delta, const Element& eta) const;

  UniversalityResult universality(const Element& delta) const;
  // Memoized universality, shared between callers.
  std::shared_ptr<const UniversalityResult> universality_of(const Element& delta) const;
  // The canonical factorization of γ through δ, if any.
  std::optional<Factorization> factor(const Element& delta, const Element& gamma) const;
  // δ is an object of El(c, y), initial in its component, invertible, and universal.
  bool is_initial_generic(const Element& delta) const;
  const InitialGenericSearch& find_initial_generic(OneCell c) const;

  // The unique morphism between two objects of one elements category.
  std::optional<ElementMorphism> comparison(const ElementsCategory& e, std::size_t from, std::size_t to) const;

 private:
  const BicatFragment& b_;
  unsigned jobs_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<OneCell, std::unique_ptr<std::vector<TwoCell>>> out_;
  mutable std::map<std::pair<OneCell, ObjectId>, std::unique_ptr<ElementsCategory>> elements_;
  mutable std::unordered_map<TwoCell, std::optional<TwoCell>> inverses_;
  mutable std::unordered_map<Element, bool, ElementHash> initial_generic_;
  mutable std::unordered_map<Element, std::shared_ptr<const UniversalityResult>, ElementHash> universality_;
  mutable std::unordered_map<OneCell, std::unique_ptr<InitialGenericSearch>> searches_;
};

}  // namespace spanbicat
