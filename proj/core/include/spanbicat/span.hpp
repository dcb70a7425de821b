#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "spanbicat/bicat.hpp"
#include "spanbicat/category.hpp"
#include "spanbicat/finset.hpp"

namespace spanbicat {

// X <-left- T -right-> Z
struct Span {
  FinSetObj src;
  FinSetObj tgt;
  FinSetObj apex;
  FinFunction left;
  FinFunction right;

  Span() = default;
  Span(FinFunction left_, FinFunction right_);

  friend bool operator==(const Span&, const Span&) = default;
};

struct SpanMorphism {
  Span src_span;
  Span tgt_span;
  FinFunction map;

  SpanMorphism() = default;
  // Throws ConstructionError unless the map commutes with both legs.
  SpanMorphism(Span src, Span tgt, FinFunction map_);

  friend bool operator==(const SpanMorphism&, const SpanMorphism&) = default;
};

Span identity_span(FinSetObj x);
Span compose_spans(const Span& ab, const Span& cd);
SpanMorphism identity_morphism(const Span& s);
SpanMorphism vcomp_span_morphisms(const SpanMorphism& phi, const SpanMorphism& psi);
SpanMorphism hcomp_span_morphisms(const SpanMorphism& phi, const SpanMorphism& psi);
std::vector<SpanMorphism> span_morphisms(const Span& s, const Span& t);

// Canonical isomorphisms between iterated canonical pullbacks.
struct SpanCoherenceCells {
  SpanMorphism forward;
  SpanMorphism inverse;
};
SpanCoherenceCells span_associator(const Span& a, const Span& b, const Span& c);  // (a;b);c => a;(b;c)
SpanCoherenceCells span_left_unitor(const Span& a);                               // 1;a => a
SpanCoherenceCells span_right_unitor(const Span& a);                              // a;1 => a

// The span bicategory over a finite base category with chosen pullbacks.
// One-cells are packed (src, tgt, apex, left code, right code); two-cells
// carry the code of their apex map. Base one-cells have apex among
// apex_objects; composites exist while the chosen pullback exists in the
// base (for FinSet: while the apex fits the closure bound).
class SpanFragment final : public BicatFragment {
 public:
  struct Legs {
    ObjectId src = 0;
    ObjectId tgt = 0;
    Obj apex = 0;
    Arrow left;
    Arrow right;
  };

  SpanFragment(std::shared_ptr<const PullbackCategory> base, std::vector<Obj> objects, std::vector<Obj> apex_objects,
               nlohmann::json scope);

  const PullbackCategory& base() const { return *base_; }
  std::shared_ptr<const PullbackCategory> base_ptr() const { return base_; }
  Obj base_object(ObjectId x) const { return objects_.at(x); }
  std::optional<ObjectId> object_of(Obj base_obj) const;
  const std::vector<Obj>& apex_objects() const { return apex_objects_; }

  Legs legs(OneCell a) const;
  OneCell make_cell(ObjectId src, ObjectId tgt, const Arrow& left, const Arrow& right) const;
  Arrow map(const TwoCell& alpha) const { return Arrow{legs(alpha.src).apex, legs(alpha.tgt).apex, alpha.local}; }
  // Throws ConstructionError unless the map commutes with both legs.
  TwoCell make_two_cell(OneCell src, OneCell tgt, const Arrow& m) const;

  std::size_t object_count() const override { return objects_.size(); }
  std::string object_name(ObjectId x) const override { return base_->object_name(objects_.at(x)); }
  ObjectId source(OneCell a) const override { return static_cast<ObjectId>(a.id >> 56); }
  ObjectId target(OneCell a) const override { return static_cast<ObjectId>((a.id >> 48) & 0xFF); }
  std::vector<OneCell> one_cells(ObjectId x, ObjectId z) const override;
  bool is_base(OneCell a) const override;
  std::vector<TwoCell> two_cells(OneCell a, OneCell b) const override;
  OneCell identity(ObjectId x) const override;
  TwoCell identity(OneCell a) const override;
  TwoCell vcomp(const TwoCell& alpha, const TwoCell& beta) const override;
  std::optional<OneCell> hcomp(OneCell a, OneCell b) const override;
  std::optional<TwoCell> hcomp(const TwoCell& alpha, const TwoCell& beta) const override;
  std::optional<TwoCell> associator(OneCell a, OneCell b, OneCell c) const override;
  std::optional<TwoCell> associator_inverse(OneCell a, OneCell b, OneCell c) const override;
  std::optional<TwoCell> left_unitor(OneCell a) const override;
  std::optional<TwoCell> left_unitor_inverse(OneCell a) const override;
  std::optional<TwoCell> right_unitor(OneCell a) const override;
  std::optional<TwoCell> right_unitor_inverse(OneCell a) const override;
  std::string name(OneCell a) const override;
  std::string name(const TwoCell& alpha) const override;
  std::optional<OneCell> parse_one_cell(std::string_view text) const override;
  std::optional<TwoCell> parse_two_cell(OneCell src, OneCell tgt, std::string_view text) const override;
  nlohmann::json scope() const override { return scope_; }

 private:
  std::optional<Cone> composite_cone(const Legs& a, const Legs& b) const;

  std::shared_ptr<const PullbackCategory> base_;
  std::vector<Obj> objects_;
  std::vector<Obj> apex_objects_;
  std::vector<bool> is_apex_;
  nlohmann::json scope_;
};

// Span(FinSet) on the listed set sizes. Base spans have apex among the listed
// sizes and at most apex_bound; composites up to closure_bound (default apex_bound^2).
std::shared_ptr<SpanFragment> span_fragment(const std::vector<std::size_t>& object_sizes, std::size_t apex_bound,
                                            std::optional<std::size_t> closure_bound = std::nullopt);

// Span(E) for a presented category. All objects are listed; every span is
// base. With require_pullbacks, a cospan lacking a pullback entry raises
// IncompleteBase; otherwise the corresponding composites are absent.
std::shared_ptr<SpanFragment> span_fragment(const CategoryPresentation& p, bool require_pullbacks = true);

// Conversions for FinSet-based fragments.
Span to_span(const SpanFragment& f, OneCell a);
OneCell from_span(const SpanFragment& f, const Span& s);
SpanMorphism to_span_morphism(const SpanFragment& f, const TwoCell& alpha);
TwoCell from_span_morphism(const SpanFragment& f, const SpanMorphism& m);

}  // namespace spanbicat
