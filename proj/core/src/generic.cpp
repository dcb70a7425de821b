#include "spanbicat/generic.hpp"

#include <map>
#include <memory>

#include "spanbicat/parallel.hpp"

namespace spanbicat {

ElementsCategory build_elements_category(const BicatFragment& b, OneCell c, ObjectId y) {
  auto cache = std::make_shared<std::map<OneCell, std::vector<TwoCell>>>();
  OutCells out = [&b, cache](OneCell a) -> const std::vector<TwoCell>& {
    auto it = cache->find(a);
    if (it != cache->end()) return it->second;
    std::vector<TwoCell> cells;
    for (OneCell a2 : b.one_cells(b.source(a), b.target(a))) {
      auto hom = b.two_cells(a, a2);
      cells.insert(cells.end(), hom.begin(), hom.end());
    }
    return cache->emplace(a, std::move(cells)).first->second;
  };
  return ElementsCategory(b, c, y, out);
}

std::vector<std::vector<std::size_t>> connected_components(const ElementsCategory& e) { return e.components(); }

std::optional<GenericWitness> is_generic(const ElementsCategory& e, const Element& gamma) {
  auto idx = e.find(gamma);
  if (!idx || !e.is_initial(*idx)) return std::nullopt;
  GenericWitness w{gamma, *idx, e.component_of(*idx), {}};
  e.for_each_morphism(gamma,
                      [&](const ElementMorphism& m, std::optional<std::size_t> t) { w.evidence.emplace_back(*t, m); });
  return w;
}

Report is_generic_bicategory(const Analyzer& an, const CheckOptions& opts) {
  const BicatFragment& b = an.fragment();
  Report rep("generic", b.scope());
  rep.max_witnesses = opts.max_witnesses;
  const auto cells = all_base_cells(b);
  const auto objs = b.objects();
  try {
    an.prepare(cells);
  } catch (const FragmentIncomplete& e) {
    rep.incomplete(e.what());
    return rep;
  }
  nlohmann::json rows = nlohmann::json::array();
  std::size_t total_objects = 0, total_components = 0;
  for (OneCell c : cells) {
    for (ObjectId y : objs) {
      const ElementsCategory& e = an.elements(c, y);
      std::size_t with_initial = 0;
      for (std::size_t k = 0; k < e.components().size(); ++k) {
        ++rep.instances;
        if (e.canonical_initial(k)) {
          ++with_initial;
          continue;
        }
        nlohmann::json comp = nlohmann::json::array();
        for (std::size_t i : e.components()[k]) comp.push_back(element_json(b, e.objects()[i]));
        rep.violation({{"cell", b.name(c)}, {"through", b.object_name(y)}, {"component", comp}});
      }
      total_objects += e.size();
      total_components += e.components().size();
      rows.push_back({{"cell", b.name(c)},
                      {"through", b.object_name(y)},
                      {"objects", e.size()},
                      {"morphisms", e.morphism_count()},
                      {"components", e.components().size()},
                      {"components_with_initial", with_initial}});
    }
  }
  rep.details["elements"] = std::move(rows);
  rep.details["total_objects"] = total_objects;
  rep.details["total_components"] = total_components;
  return rep;
}

GenericFactorization factor_through_generic(const ElementsCategory& e, const Element& gamma) {
  auto idx = e.find(gamma);
  if (!idx) throw FragmentIncomplete("2-cell is not an object of the elements category");
  std::size_t k = e.component_of(*idx);
  auto c0 = e.canonical_initial(k);
  if (!c0) throw NoInitialObject("the component of the given 2-cell has no initial object");
  auto w = is_generic(e, e.objects()[*c0]);
  auto m = e.unique_morphism(*c0, *idx);
  return GenericFactorization{*w, *m};
}

ThreeAryGenerics three_ary_generics(const Analyzer& an, OneCell c, ObjectId y1, ObjectId y2) {
  const BicatFragment& b = an.fragment();
  ThreeAryGenerics out;

  const ElementsCategory& outer_left = an.elements(c, y1);
  for (std::size_t i = 0; i < outer_left.size(); ++i) {
    if (!outer_left.is_initial(i)) continue;
    const Element& s1 = outer_left.objects()[i];
    const ElementsCategory& inner = an.elements(s1.right, y2);
    for (std::size_t j = 0; j < inner.size(); ++j) {
      if (!inner.is_initial(j)) continue;
      const Element& s2 = inner.objects()[j];
      auto cell = vcomp_chain(b, {s1.cell, whisker_left(b, s1.left, s2.cell)});
      if (!cell) {
        ++out.skipped;
        continue;
      }
      out.left_first.insert(ThreeAryCell{s1.left, s2.left, s2.right, *cell});
    }
  }

  const ElementsCategory& outer_right = an.elements(c, y2);
  for (std::size_t i = 0; i < outer_right.size(); ++i) {
    if (!outer_right.is_initial(i)) continue;
    const Element& s1 = outer_right.objects()[i];
    const ElementsCategory& inner = an.elements(s1.left, y1);
    for (std::size_t j = 0; j < inner.size(); ++j) {
      if (!inner.is_initial(j)) continue;
      const Element& s2 = inner.objects()[j];
      auto cell =
          vcomp_chain(b, {s1.cell, whisker_right(b, s2.cell, s1.right), b.associator(s2.left, s2.right, s1.right)});
      if (!cell) {
        ++out.skipped;
        continue;
      }
      out.right_first.insert(ThreeAryCell{s2.left, s2.right, s1.right, *cell});
    }
  }
  return out;
}

ThreeAryResult is_3ary_generic(const Analyzer& an, const ThreeAryCell& delta) {
  const BicatFragment& b = an.fragment();
  auto all = three_ary_generics(an, delta.cell.src, b.target(delta.l), b.target(delta.m));
  return ThreeAryResult{all.left_first.contains(delta), all.right_first.contains(delta)};
}

Report check_identity_initial(const Analyzer& an, ObjectId x) {
  const BicatFragment& b = an.fragment();
  Report rep("identity-initial", b.scope());
  rep.scope["object"] = b.object_name(x);
  const OneCell one = b.identity(x);
  try {
    Element unitor{one, one, require(b.left_unitor_inverse(one), "unitor on an identity")};
    rep.instances = 1;
    const ElementsCategory& e = an.elements(one, x);
    auto idx = e.find(unitor);
    bool initial = idx && e.is_initial(*idx);
    UniversalityResult u = an.universality(unitor);
    rep.details["generic"] = initial;
    rep.details["factorizations_checked"] = u.checked;
    if (!initial || !u.universal) {
      rep.violation({{"unitor", element_json(b, unitor)}, {"generic", initial}, {"violations", u.violations}});
    }
  } catch (const FragmentIncomplete& e) {
    rep.incomplete(e.what());
  }
  return rep;
}

}  // namespace spanbicat
