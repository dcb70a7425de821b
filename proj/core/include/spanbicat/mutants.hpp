#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "spanbicat/bicat.hpp"
#include "spanbicat/table_fragment.hpp"

namespace spanbicat {

// Forwards every operation to an inner fragment. Mutants override a few.
class FragmentDecorator : public BicatFragment {
 public:
  explicit FragmentDecorator(std::shared_ptr<const BicatFragment> inner) : inner_(std::move(inner)) {}

  const BicatFragment& inner() const { return *inner_; }

  std::size_t object_count() const override { return inner_->object_count(); }
  std::string object_name(ObjectId x) const override { return inner_->object_name(x); }
  ObjectId source(OneCell a) const override { return inner_->source(a); }
  ObjectId target(OneCell a) const override { return inner_->target(a); }
  std::vector<OneCell> one_cells(ObjectId x, ObjectId z) const override { return inner_->one_cells(x, z); }
  bool is_base(OneCell a) const override { return inner_->is_base(a); }
  std::vector<TwoCell> two_cells(OneCell a, OneCell b) const override { return inner_->two_cells(a, b); }
  OneCell identity(ObjectId x) const override { return inner_->identity(x); }
  TwoCell identity(OneCell a) const override { return inner_->identity(a); }
  TwoCell vcomp(const TwoCell& alpha, const TwoCell& beta) const override { return inner_->vcomp(alpha, beta); }
  std::optional<OneCell> hcomp(OneCell a, OneCell b) const override { return inner_->hcomp(a, b); }
  std::optional<TwoCell> hcomp(const TwoCell& alpha, const TwoCell& beta) const override {
    return inner_->hcomp(alpha, beta);
  }
  std::optional<TwoCell> associator(OneCell a, OneCell b, OneCell c) const override {
    return inner_->associator(a, b, c);
  }
  std::optional<TwoCell> associator_inverse(OneCell a, OneCell b, OneCell c) const override {
    return inner_->associator_inverse(a, b, c);
  }
  std::optional<TwoCell> left_unitor(OneCell a) const override { return inner_->left_unitor(a); }
  std::optional<TwoCell> left_unitor_inverse(OneCell a) const override { return inner_->left_unitor_inverse(a); }
  std::optional<TwoCell> right_unitor(OneCell a) const override { return inner_->right_unitor(a); }
  std::optional<TwoCell> right_unitor_inverse(OneCell a) const override { return inner_->right_unitor_inverse(a); }
  std::string name(OneCell a) const override { return inner_->name(a); }
  std::string name(const TwoCell& alpha) const override { return inner_->name(alpha); }
  std::optional<OneCell> parse_one_cell(std::string_view text) const override { return inner_->parse_one_cell(text); }
  std::optional<TwoCell> parse_two_cell(OneCell src, OneCell tgt, std::string_view text) const override {
    return inner_->parse_two_cell(src, tgt, text);
  }
  nlohmann::json scope() const override;

 protected:
  // Recorded under "mutation" in the scope.
  nlohmann::json mutation_;

 private:
  std::shared_ptr<const BicatFragment> inner_;
};

// The associator at (a, b, c) becomes `replacement`; its inverse is left alone.
class ReplacedAssociator final : public FragmentDecorator {
 public:
  ReplacedAssociator(std::shared_ptr<const BicatFragment> inner, OneCell a, OneCell b, OneCell c, TwoCell replacement);
  std::optional<TwoCell> associator(OneCell a, OneCell b, OneCell c) const override;

 private:
  OneCell a_, b_, c_;
  TwoCell replacement_;
};

// A second copy of `original` in its hom-set. The copy composes like the
// original except with identities, where it stays itself.
class DuplicatedTwoCell final : public FragmentDecorator {
 public:
  DuplicatedTwoCell(std::shared_ptr<const BicatFragment> inner, TwoCell original, std::string copy_name);

  TwoCell copy() const { return copy_; }

  std::vector<TwoCell> two_cells(OneCell a, OneCell b) const override;
  using FragmentDecorator::hcomp;
  TwoCell vcomp(const TwoCell& alpha, const TwoCell& beta) const override;
  std::optional<TwoCell> hcomp(const TwoCell& alpha, const TwoCell& beta) const override;
  using FragmentDecorator::name;
  std::string name(const TwoCell& alpha) const override;
  std::optional<TwoCell> parse_two_cell(OneCell src, OneCell tgt, std::string_view text) const override;

 private:
  TwoCell lower(const TwoCell& alpha) const { return alpha == copy_ ? original_ : alpha; }

  TwoCell original_;
  TwoCell copy_;
  std::string copy_name_;
};

// Removes one 2-cell from hom-set enumeration.
class HiddenTwoCell final : public FragmentDecorator {
 public:
  HiddenTwoCell(std::shared_ptr<const BicatFragment> inner, TwoCell hidden);
  std::vector<TwoCell> two_cells(OneCell a, OneCell b) const override;

 private:
  TwoCell hidden_;
};

// Removes base 1-cells from enumeration; composites may still produce them.
class DroppedOneCells final : public FragmentDecorator {
 public:
  DroppedOneCells(std::shared_ptr<const BicatFragment> inner, std::vector<OneCell> dropped);
  std::vector<OneCell> one_cells(ObjectId x, ObjectId z) const override;
  bool is_base(OneCell a) const override;

 private:
  std::set<OneCell> dropped_;
};

// Objects A, M, B; 1-cells u: A -> M, v: M -> B, x = u;v and c: A -> B, with
// g, g': c => x and idempotents p, q on v whose whiskers act by g.(u*p) = g'
// and g'.(u*q) = g. The component {g, g'} among the elements of c through M
// has no initial object.
std::shared_ptr<TableFragment> idempotent_component_fragment();

// Fills in identity associators and unitors wherever the 1-cell composites
// agree, for hand-built tables.
void add_identity_coherence(TableFragment::Tables& t);

}  // namespace spanbicat
