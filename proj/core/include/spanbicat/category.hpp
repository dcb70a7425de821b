#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spanbicat/finset.hpp"

namespace spanbicat {

using Obj = std::uint32_t;

// A morphism of a finite base category: endpoints plus an index into hom(src, tgt).
struct Arrow {
  Obj src = 0;
  Obj tgt = 0;
  std::uint64_t code = 0;

  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

struct Cone {
  Obj apex = 0;
  Arrow p1;
  Arrow p2;
};

// A finite category with a chosen pullback for (some) cospans.
class PullbackCategory {
 public:
  virtual ~PullbackCategory() = default;

  virtual std::size_t object_count() const = 0;
  virtual std::string object_name(Obj x) const = 0;
  virtual std::uint64_t hom_size(Obj a, Obj b) const = 0;
  virtual Arrow identity(Obj a) const = 0;
  // Diagrammatic order: f then g.
  virtual Arrow compose(const Arrow& f, const Arrow& g) const = 0;
  // The chosen pullback of f: A -> C <- B: g, if it exists in the category.
  virtual std::optional<Cone> pullback(const Arrow& f, const Arrow& g) const = 0;
  virtual std::string arrow_name(const Arrow& f) const = 0;

  // The unique m with m;p1 = x and m;p2 = y.
  virtual Arrow mediate(const Cone& pb, const Arrow& x, const Arrow& y) const;
  // All h: t -> s2.src with h;s2 = s and h;u2 = u.
  virtual std::vector<Arrow> lifts(Obj t, const Arrow& s, const Arrow& u, const Arrow& s2, const Arrow& u2) const;

  virtual std::optional<Obj> parse_object(std::string_view text) const = 0;
  virtual std::optional<Arrow> parse_arrow(Obj src, Obj tgt, std::string_view text) const = 0;

  Arrow arrow(Obj a, Obj b, std::uint64_t code) const;
  std::vector<Arrow> hom(Obj a, Obj b) const;
  std::optional<Arrow> inverse(const Arrow& f) const;
  bool is_iso(const Arrow& f) const { return inverse(f).has_value(); }
};

// Skeletal FinSet restricted to sizes 0..max_size. Object x is the set of size x.
class FinSetCategory final : public PullbackCategory {
 public:
  static constexpr std::size_t kMaxSize = 15;

  explicit FinSetCategory(std::size_t max_size);

  std::size_t max_size() const { return max_size_; }

  std::size_t object_count() const override { return max_size_ + 1; }
  std::string object_name(Obj x) const override { return std::to_string(x); }
  std::uint64_t hom_size(Obj a, Obj b) const override;
  Arrow identity(Obj a) const override;
  Arrow compose(const Arrow& f, const Arrow& g) const override;
  std::optional<Cone> pullback(const Arrow& f, const Arrow& g) const override;
  std::string arrow_name(const Arrow& f) const override;
  Arrow mediate(const Cone& pb, const Arrow& x, const Arrow& y) const override;
  std::vector<Arrow> lifts(Obj t, const Arrow& s, const Arrow& u, const Arrow& s2, const Arrow& u2) const override;

  std::optional<Obj> parse_object(std::string_view text) const override;
  std::optional<Arrow> parse_arrow(Obj src, Obj tgt, std::string_view text) const override;

  Arrow from_function(const FinFunction& f) const;
  FinFunction to_function(const Arrow& f) const;

 private:
  std::size_t max_size_;
};

// A finite category given by explicit tables. Composition is diagrammatic.
struct CategoryPresentation {
  struct Morphism {
    std::string name;
    std::size_t src = 0;
    std::size_t tgt = 0;
  };
  struct PullbackEntry {
    std::size_t f = 0;
    std::size_t g = 0;
    std::size_t apex = 0;
    std::size_t p1 = 0;
    std::size_t p2 = 0;
  };

  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::vector<std::size_t> identities;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> composition;
  std::vector<PullbackEntry> pullbacks;

  std::size_t object_index(const std::string& name) const;
  std::size_t morphism_index(const std::string& name) const;

  // Throws ConstructionError on non-total, non-associative or non-unital
  // composition, and on pullback entries that are not pullbacks.
  void validate() const;

  friend bool operator==(const CategoryPresentation&, const CategoryPresentation&);
};

bool operator==(const CategoryPresentation::Morphism& a, const CategoryPresentation::Morphism& b);
bool operator==(const CategoryPresentation::PullbackEntry& a, const CategoryPresentation::PullbackEntry& b);

class PresentationCategory final : public PullbackCategory {
 public:
  explicit PresentationCategory(CategoryPresentation p);

  const CategoryPresentation& presentation() const { return p_; }

  std::size_t object_count() const override { return p_.objects.size(); }
  std::string object_name(Obj x) const override { return p_.objects.at(x); }
  std::uint64_t hom_size(Obj a, Obj b) const override;
  Arrow identity(Obj a) const override;
  Arrow compose(const Arrow& f, const Arrow& g) const override;
  std::optional<Cone> pullback(const Arrow& f, const Arrow& g) const override;
  std::string arrow_name(const Arrow& f) const override;

  std::optional<Obj> parse_object(std::string_view text) const override;
  std::optional<Arrow> parse_arrow(Obj src, Obj tgt, std::string_view text) const override;

  std::size_t global_index(const Arrow& f) const;
  Arrow from_global(std::size_t m) const;

 private:
  CategoryPresentation p_;
  std::vector<std::vector<std::vector<std::size_t>>> homs_;
  std::vector<std::size_t> local_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pullback_index_;
};

}  // namespace spanbicat
