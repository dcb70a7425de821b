#include "spanbicat/axioms.hpp"

#include <set>

#include "spanbicat/parallel.hpp"

namespace spanbicat {

nlohmann::json witness_json(const BicatFragment& b, const InitialGenericWitness& w) {
  return {{"cell", b.name(w.cell)}, {"through", b.object_name(w.middle)}, {"delta", element_json(b, w.delta)}};
}

InitialGenericWitness make_witness(const Analyzer& an, const Element& delta) {
  const BicatFragment& b = an.fragment();
  auto inv = an.inverse(delta.cell);
  return InitialGenericWitness{delta.cell.src, b.target(delta.left), delta, inv.value_or(delta.cell),
                               an.universality_of(delta)};
}

Axiom1Result check_axiom1(const Analyzer& an, const CheckOptions& opts) {
  const BicatFragment& b = an.fragment();
  Axiom1Result out{Report("axiom1", b.scope()), {}};
  Report& rep = out.report;
  rep.max_witnesses = opts.max_witnesses;
  const auto cells = all_base_cells(b);
  try {
    an.prepare(cells);
    parallel_for(cells.size(), an.jobs(), [&](std::size_t i) { an.find_initial_generic(cells[i]); });
  } catch (const FragmentIncomplete& e) {
    rep.incomplete(e.what());
    return out;
  }

  nlohmann::json chosen = nlohmann::json::array();
  std::size_t factorizations = 0;
  for (OneCell c : cells) {
    ++rep.instances;
    const InitialGenericSearch& s = an.find_initial_generic(c);
    if (s.witness) {
      out.witnesses.push_back(*s.witness);
      chosen.push_back(witness_json(b, *s.witness));
      factorizations += s.witness->universality->checked;
      continue;
    }
    nlohmann::json w{
        {"cell", b.name(c)}, {"factorizations", nlohmann::json::array()}, {"rejected", nlohmann::json::array()}};
    for (ObjectId y : b.objects()) {
      for (const Element& e : an.elements(c, y).objects()) w["factorizations"].push_back(element_json(b, e));
    }
    for (const RejectedCandidate& r : s.rejected) {
      w["rejected"].push_back(
          {{"delta", element_json(b, r.delta)}, {"violations", r.violation_count}, {"examples", r.violations}});
    }
    rep.violation(std::move(w));
  }
  rep.details["initial_generics"] = std::move(chosen);
  rep.details["factorizations_checked"] = factorizations;
  return out;
}

Report check_axiom2(const Analyzer& an, const std::vector<InitialGenericWitness>& witnesses, const CheckOptions& opts) {
  const BicatFragment& b = an.fragment();
  Report rep("axiom2", b.scope());
  rep.max_witnesses = opts.max_witnesses;
  std::set<Element> seen;
  std::size_t factorizations = 0;
  try {
    for (const InitialGenericWitness& w : witnesses) {
      const OneCell l = w.delta.left, r = w.delta.right;
      for (const auto& row : w.universality->canonical) {
        for (const auto& f : row) {
          if (!f) continue;
          ++factorizations;
          const Element sides[2] = {
              Element{l, f->eta.left, b.identity(require(b.hcomp(l, f->eta.left), "composite l;h"))},
              Element{f->eta.right, r, b.identity(require(b.hcomp(f->eta.right, r), "composite k;r"))}};
          for (const Element& id : sides) {
            if (!seen.insert(id).second) continue;
            ++rep.instances;
            if (an.is_initial_generic(id)) continue;
            rep.violation({{"cell", b.name(w.cell)},
                           {"delta", element_json(b, w.delta)},
                           {"generic", element_json(b, f->eta)},
                           {"identity", element_json(b, id)}});
          }
        }
      }
    }
  } catch (const FragmentIncomplete& e) {
    rep.incomplete(e.what());
  }
  rep.details["factorizations"] = factorizations;
  rep.details["witnesses"] = witnesses.size();
  return rep;
}

}  // namespace spanbicat
