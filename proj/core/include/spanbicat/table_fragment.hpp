#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spanbicat/bicat.hpp"

namespace spanbicat {

// A fragment given by explicit finite tables. Vertical composites with an
// identity are implied; so is hcomp of two identities when the 1-cell
// composite is listed.
class TableFragment final : public BicatFragment {
 public:
  struct OneCellEntry {
    std::string name;
    ObjectId src = 0;
    ObjectId tgt = 0;
    friend bool operator==(const OneCellEntry&, const OneCellEntry&) = default;
  };
  struct TwoCellEntry {
    std::string name;
    std::size_t src = 0;
    std::size_t tgt = 0;
    friend bool operator==(const TwoCellEntry&, const TwoCellEntry&) = default;
  };
  struct Invertible {
    std::size_t forward = 0;
    std::size_t inverse = 0;
    friend bool operator==(const Invertible&, const Invertible&) = default;
  };
  struct Tables {
    std::vector<std::string> objects;
    std::vector<OneCellEntry> one_cells;
    std::vector<TwoCellEntry> two_cells;
    std::vector<std::size_t> identity_one;
    std::vector<std::size_t> identity_two;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> vcomp;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> hcomp_one;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> hcomp_two;
    std::map<std::array<std::size_t, 3>, Invertible> associators;
    std::map<std::size_t, Invertible> left_unitors;
    std::map<std::size_t, Invertible> right_unitors;
    friend bool operator==(const Tables&, const Tables&) = default;
  };

  explicit TableFragment(Tables t);

  const Tables& tables() const { return t_; }

  std::size_t object_count() const override { return t_.objects.size(); }
  std::string object_name(ObjectId x) const override { return t_.objects.at(x); }
  ObjectId source(OneCell a) const override { return t_.one_cells.at(a.id).src; }
  ObjectId target(OneCell a) const override { return t_.one_cells.at(a.id).tgt; }
  std::vector<OneCell> one_cells(ObjectId x, ObjectId z) const override;
  bool is_base(OneCell a) const override { return a.id < t_.one_cells.size(); }
  std::vector<TwoCell> two_cells(OneCell a, OneCell b) const override;
  OneCell identity(ObjectId x) const override { return OneCell{t_.identity_one.at(x)}; }
  TwoCell identity(OneCell a) const override { return cell(t_.identity_two.at(a.id)); }
  TwoCell vcomp(const TwoCell& alpha, const TwoCell& beta) const override;
  std::optional<OneCell> hcomp(OneCell a, OneCell b) const override;
  std::optional<TwoCell> hcomp(const TwoCell& alpha, const TwoCell& beta) const override;
  std::optional<TwoCell> associator(OneCell a, OneCell b, OneCell c) const override;
  std::optional<TwoCell> associator_inverse(OneCell a, OneCell b, OneCell c) const override;
  std::optional<TwoCell> left_unitor(OneCell a) const override;
  std::optional<TwoCell> left_unitor_inverse(OneCell a) const override;
  std::optional<TwoCell> right_unitor(OneCell a) const override;
  std::optional<TwoCell> right_unitor_inverse(OneCell a) const override;
  std::string name(OneCell a) const override { return t_.one_cells.at(a.id).name; }
  std::string name(const TwoCell& alpha) const override { return t_.two_cells.at(alpha.local).name; }
  std::optional<OneCell> parse_one_cell(std::string_view text) const override;
  std::optional<TwoCell> parse_two_cell(OneCell src, OneCell tgt, std::string_view text) const override;
  nlohmann::json scope() const override;

  TwoCell cell(std::size_t index) const;

 private:
  Tables t_;
  std::vector<std::vector<std::vector<std::size_t>>> homs_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> two_homs_;
  std::unordered_map<std::string, std::size_t> one_by_name_;
  std::unordered_map<std::string, std::size_t> two_by_name_;
};

struct MonoidPresentation {
  std::vector<std::string> elements;
  std::vector<std::vector<std::size_t>> mult;
  std::size_t unit = 0;

  // Throws ConstructionError unless mult is a total associative table with two-sided unit.
  void validate() const;

  friend bool operator==(const MonoidPresentation&, const MonoidPresentation&) = default;
};

MonoidPresentation truncated_addition_monoid(std::size_t top);
MonoidPresentation cyclic_group(std::size_t n);
MonoidPresentation trivial_monoid();

// One object, 1-cells the elements, identity 2-cells only, coherence cells identities.
std::shared_ptr<TableFragment> monoid_bicat(const MonoidPresentation& m);

}  // namespace spanbicat
