#include "spanbicat/lemmas.hpp"

#include <set>

namespace spanbicat {

const std::vector<std::string>& lemma_names() {
  static const std::vector<std::string> names{"implies-adjoint",       "parts-are-adjoints",     "generics-are-units",
                                              "unit-implies-generic",  "composite-initial",      "composite-generic",
                                              "generics-are-whiskers", "generics-index-adjoints"};
  return names;
}

bool is_generic_in_fragment(const Analyzer& an, const Element& x) {
  const BicatFragment& b = an.fragment();
  const ElementsCategory& e = an.elements(x.cell.src, b.target(x.left));
  std::vector<std::size_t> hits(e.size(), 0);
  std::optional<std::size_t> component;
  bool ok = true;
  e.for_each_morphism(x, [&](const ElementMorphism&, std::optional<std::size_t> t) {
    if (!t) return;
    if (!component) component = e.component_of(*t);
    if (e.component_of(*t) != *component) ok = false;
    ++hits[*t];
  });
  if (!component || !ok) return false;
  for (std::size_t i : e.components()[*component]) {
    if (hits[i] != 1) return false;
  }
  return true;
}

LemmaPremises build_lemma_premises(const Analyzer& an, const AdjointIndex& adj,
                                   const std::vector<InitialGenericWitness>& witnesses) {
  const BicatFragment& b = an.fragment();
  LemmaPremises p;
  const auto cells = all_base_cells(b);
  const auto objs = b.objects();

  for (OneCell a : cells) {
    const OneCell src = b.identity(b.source(a)), tgt = b.identity(b.target(a));
    if (auto ru = b.right_unitor_inverse(a); ru && an.is_initial_generic(Element{a, tgt, *ru})) {
      p.unitor_initial.push_back({a, UnitorSide::right});
    }
    if (auto lu = b.left_unitor_inverse(a); lu && an.is_initial_generic(Element{src, a, *lu})) {
      p.unitor_initial.push_back({a, UnitorSide::left});
    }
  }

  for (const auto& w : witnesses) p.initial_generics.push_back(w.delta);

  for (ObjectId x : objs) {
    for (ObjectId y : objs) {
      const ElementsCategory& e = an.elements(b.identity(x), y);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e.is_initial(i)) p.identity_generics.push_back(e.objects()[i]);
      }
    }
  }

  std::vector<std::vector<std::vector<Adjunction>>> units(objs.size(),
                                                          std::vector<std::vector<Adjunction>>(objs.size()));
  for (OneCell f : cells) {
    for (const Adjunction& a : adjunctions_with_left(b, f)) {
      p.adjunctions.push_back(a);
      units[b.source(f)][b.target(f)].push_back(a);
    }
  }

  for (ObjectId x : objs) {
    for (ObjectId t : objs) {
      for (ObjectId z : objs) {
        for (OneCell s : adj.right_adjoints(x, t)) {
          for (OneCell u : adj.left_adjoints(t, z)) p.composites.push_back({s, u});
        }
      }
    }
  }

  for (const auto& w : witnesses) {
    for (ObjectId y2 : objs) {
      const ElementsCategory& e = an.elements(b.identity(w.middle), y2);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e.is_initial(i)) p.pastings.push_back({w.delta, e.objects()[i]});
      }
    }
    WhiskerPremise wp{w.delta, {}};
    for (ObjectId y2 : objs) {
      const auto& us = units[w.middle][y2];
      wp.units.insert(wp.units.end(), us.begin(), us.end());
    }
    p.whiskerings.push_back(std::move(wp));
    p.indexing.push_back(w.delta);
  }
  return p;
}

namespace {

Adjunction adjunction_from_json(const BicatFragment& b, const nlohmann::json& j) {
  OneCell f = one_cell_named(b, j.at("left").get<std::string>());
  OneCell g = one_cell_named(b, j.at("right").get<std::string>());
  auto fg = b.hcomp(f, g);
  auto gf = b.hcomp(g, f);
  if (!fg || !gf) throw FixtureError("adjunction composites are outside the fragment");
  return Adjunction{f, g, two_cell_named(b, b.identity(b.source(f)), *fg, j.at("unit").get<std::string>()),
                    two_cell_named(b, *gf, b.identity(b.target(f)), j.at("counit").get<std::string>())};
}

}  // namespace

void inject_premise(const BicatFragment& b, LemmaPremises& p, const std::string& lemma, const nlohmann::json& j) {
  try {
    if (lemma == "implies-adjoint") {
      std::string side = j.at("side").get<std::string>();
      if (side != "left" && side != "right") throw FixtureError("unitor side must be left or right");
      p.unitor_initial.push_back(
          {one_cell_named(b, j.at("cell").get<std::string>()), side == "left" ? UnitorSide::left : UnitorSide::right});
    } else if (lemma == "parts-are-adjoints") {
      p.initial_generics.push_back(element_from_json(b, j));
    } else if (lemma == "generics-are-units") {
      p.identity_generics.push_back(element_from_json(b, j));
    } else if (lemma == "unit-implies-generic") {
      p.adjunctions.push_back(adjunction_from_json(b, j));
    } else if (lemma == "composite-initial") {
      p.composites.push_back({one_cell_named(b, j.at("right_adjoint").get<std::string>()),
                              one_cell_named(b, j.at("left_adjoint").get<std::string>())});
    } else if (lemma == "composite-generic") {
      p.pastings.push_back({element_from_json(b, j.at("delta")), element_from_json(b, j.at("eta"))});
    } else if (lemma == "generics-are-whiskers") {
      WhiskerPremise wp{element_from_json(b, j.at("delta")), {}};
      for (const auto& u : j.at("units")) wp.units.push_back(adjunction_from_json(b, u));
      p.whiskerings.push_back(std::move(wp));
    } else if (lemma == "generics-index-adjoints") {
      p.indexing.push_back(element_from_json(b, j));
    } else {
      throw FixtureError("unknown lemma '" + lemma + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw FixtureError("malformed premise for " + lemma + ": " + e.what());
  }
}

namespace {

class Suite {
 public:
  Suite(const Analyzer& an, const AdjointIndex& adj, const LemmaPremises& p, const CheckOptions& opts)
      : an_(an), b_(an.fragment()), adj_(adj), p_(p), opts_(opts) {}

  Report implies_adjoint() {
    Report r = start("implies-adjoint");
    for (const auto& u : p_.unitor_initial) {
      ++r.instances;
      bool right = u.side == UnitorSide::right;
      if (right ? adj_.is_right_adjoint(u.cell) : adj_.is_left_adjoint(u.cell)) continue;
      r.violation({{"cell", b_.name(u.cell)},
                   {"unitor", right ? "right" : "left"},
                   {"missing", right ? "left adjoint" : "right adjoint"}});
    }
    return r;
  }

  Report parts_are_adjoints() {
    Report r = start("parts-are-adjoints");
    for (const Element& d : p_.initial_generics) {
      ++r.instances;
      bool l = adj_.is_right_adjoint(d.left), rr = adj_.is_left_adjoint(d.right);
      if (l && rr) continue;
      r.violation({{"delta", element_json(b_, d)}, {"left_is_right_adjoint", l}, {"right_is_left_adjoint", rr}});
    }
    return r;
  }

  Report generics_are_units() {
    Report r = start("generics-are-units");
    for (const Element& eta : p_.identity_generics) {
      ++r.instances;
      bool found = false;
      if (auto kh = b_.hcomp(eta.right, eta.left)) {
        for (const TwoCell& eps : b_.two_cells(*kh, b_.identity(b_.target(eta.left)))) {
          if (triangle_identities(b_, Adjunction{eta.left, eta.right, eta.cell, eps}).value_or(false)) {
            found = true;
            break;
          }
        }
      }
      if (!found) r.violation({{"generic", element_json(b_, eta)}, {"missing", "counit"}});
    }
    return r;
  }

  Report unit_implies_generic() {
    Report r = start("unit-implies-generic");
    for (const Adjunction& a : p_.adjunctions) {
      ++r.instances;
      const ElementsCategory& e = an_.elements(b_.identity(b_.source(a.left)), b_.target(a.left));
      auto idx = e.find(Element{a.left, a.right, a.unit});
      if (idx && e.is_initial(*idx)) continue;
      r.violation({{"adjunction", adjunction_json(b_, a)}});
    }
    return r;
  }

  Report composite_initial() {
    Report r = start("composite-initial");
    for (const auto& c : p_.composites) {
      ++r.instances;
      auto st = b_.hcomp(c.right_adjoint, c.left_adjoint);
      if (!st) {
        r.violation({{"right_adjoint", b_.name(c.right_adjoint)},
                     {"left_adjoint", b_.name(c.left_adjoint)},
                     {"missing", "composite"}});
        continue;
      }
      Element id{c.right_adjoint, c.left_adjoint, b_.identity(*st)};
      if (an_.is_initial_generic(id)) continue;
      r.violation({{"right_adjoint", b_.name(c.right_adjoint)}, {"left_adjoint", b_.name(c.left_adjoint)}});
    }
    return r;
  }

  Report composite_generic() {
    Report r = start("composite-generic");
    for (const auto& pp : p_.pastings) {
      ++r.instances;
      Element pasted = an_.paste(pp.delta, pp.eta);
      if (is_generic_in_fragment(an_, pasted)) continue;
      r.violation({{"delta", element_json(b_, pp.delta)}, {"eta", element_json(b_, pp.eta)}});
    }
    return r;
  }

  Report generics_are_whiskers() {
    Report r = start("generics-are-whiskers");
    for (const auto& wp : p_.whiskerings) {
      const OneCell c = wp.delta.cell.src;
      std::map<ObjectId, std::set<std::size_t>> whiskered;
      for (const Adjunction& u : wp.units) {
        const ObjectId y2 = b_.target(u.left);
        const ElementsCategory& e = an_.elements(c, y2);
        e.for_each_morphism(an_.paste(wp.delta, Element{u.left, u.right, u.unit}),
                            [&](const ElementMorphism& m, std::optional<std::size_t> t) {
                              if (t && an_.inverse(m.left) && an_.inverse(m.right)) whiskered[y2].insert(*t);
                            });
      }
      for (ObjectId y2 : b_.objects()) {
        const ElementsCategory& e = an_.elements(c, y2);
        for (std::size_t i = 0; i < e.size(); ++i) {
          ++r.instances;
          bool generic = e.is_initial(i);
          bool whisker = whiskered[y2].contains(i);
          if (generic == whisker) continue;
          r.violation({{"delta", element_json(b_, wp.delta)},
                       {"element", element_json(b_, e.objects()[i])},
                       {"generic", generic},
                       {"whiskered_unit", whisker}});
        }
      }
    }
    return r;
  }

  Report generics_index_adjoints() {
    Report r = start("generics-index-adjoints");
    for (const Element& d : p_.indexing) {
      const ObjectId y = b_.target(d.left);
      for (ObjectId y2 : b_.objects()) {
        ++r.instances;
        std::size_t generics = an_.elements(d.cell.src, y2).components().size();
        std::size_t classes = iso_classes(b_, adj_.left_adjoints(y, y2)).size();
        if (generics == classes) continue;
        r.violation({{"delta", element_json(b_, d)},
                     {"through", b_.object_name(y2)},
                     {"generic_classes", generics},
                     {"left_adjoint_classes", classes}});
      }
    }
    return r;
  }

 private:
  Report start(const char* id) {
    Report r(id, b_.scope());
    r.max_witnesses = opts_.max_witnesses;
    return r;
  }

  const Analyzer& an_;
  const BicatFragment& b_;
  const AdjointIndex& adj_;
  const LemmaPremises& p_;
  const CheckOptions& opts_;
};

}  // namespace

std::vector<Report> check_lemma_suite(const Analyzer& an, const AdjointIndex& adj, const LemmaPremises& premises,
                                      const nlohmann::json& gates, const CheckOptions& opts) {
  Suite s(an, adj, premises, opts);
  using Check = Report (Suite::*)();
  const Check checks[] = {&Suite::implies_adjoint,       &Suite::parts_are_adjoints,     &Suite::generics_are_units,
                          &Suite::unit_implies_generic,  &Suite::composite_initial,      &Suite::composite_generic,
                          &Suite::generics_are_whiskers, &Suite::generics_index_adjoints};
  std::vector<Report> out;
  for (std::size_t i = 0; i < std::size(checks); ++i) {
    Report r;
    try {
      r = (s.*checks[i])();
    } catch (const FragmentIncomplete& e) {
      r = Report(lemma_names()[i], an.fragment().scope());
      r.incomplete(e.what());
    }
    r.details["gates"] = gates;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace spanbicat
