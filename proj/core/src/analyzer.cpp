#include "spanbicat/analyzer.hpp"

#include "spanbicat/parallel.hpp"

namespace spanbicat {

Analyzer::Analyzer(const BicatFragment& b, unsigned jobs) : b_(b), jobs_(jobs == 0 ? 1 : jobs) {}

const std::vector<TwoCell>& Analyzer::out_cells(OneCell a) const {
  {
    std::lock_guard lock(mutex_);
    auto it = out_.find(a);
    if (it != out_.end()) return *it->second;
  }
  auto cells = std::make_unique<std::vector<TwoCell>>();
  for (OneCell a2 : b_.one_cells(b_.source(a), b_.target(a))) {
    auto hom = b_.two_cells(a, a2);
    cells->insert(cells->end(), hom.begin(), hom.end());
  }
  std::lock_guard lock(mutex_);
  auto [it, inserted] = out_.emplace(a, std::move(cells));
  return *it->second;
}

const ElementsCategory& Analyzer::elements(OneCell c, ObjectId y) const {
  {
    std::lock_guard lock(mutex_);
    auto it = elements_.find({c, y});
    if (it != elements_.end()) return *it->second;
  }
  auto built = std::make_unique<ElementsCategory>(
      b_, c, y, [this](OneCell a) -> const std::vector<TwoCell>& { return out_cells(a); });
  std::lock_guard lock(mutex_);
  auto [it, inserted] = elements_.emplace(std::make_pair(c, y), std::move(built));
  return *it->second;
}

std::optional<TwoCell> Analyzer::inverse(const TwoCell& t) const {
  {
    std::lock_guard lock(mutex_);
    auto it = inverses_.find(t);
    if (it != inverses_.end()) return it->second;
  }
  auto inv = find_inverse(b_, t);
  std::lock_guard lock(mutex_);
  inverses_.emplace(t, inv);
  return inv;
}

void Analyzer::prepare(const std::vector<OneCell>& cells) const {
  const auto objs = b_.objects();
  parallel_for(cells.size() * objs.size(), jobs_,
               [&](std::size_t i) { elements(cells[i / objs.size()], objs[i % objs.size()]); });
}

Element Analyzer::paste(const Element& delta, const Element& eta) const {
  const OneCell l = delta.left, r = delta.right, h = eta.left, k = eta.right;
  auto lu_inv = b_.left_unitor_inverse(r);
  auto eta_r = whisker_right(b_, eta.cell, r);
  auto assoc = b_.associator(h, k, r);
  auto kr = b_.hcomp(k, r);
  auto lh = b_.hcomp(l, h);
  if (!lu_inv || !eta_r || !assoc || !kr || !lh) {
    throw FragmentIncomplete("pasting of " + b_.name(delta.cell) + " with " + b_.name(eta.cell) +
                             " needs composites outside the fragment");
  }
  auto cell = vcomp_chain(b_, {delta.cell, whisker_left(b_, l, *lu_inv), whisker_left(b_, l, *eta_r),
                               whisker_left(b_, l, *assoc), b_.associator_inverse(l, h, *kr)});
  if (!cell) {
    throw FragmentIncomplete("pasting of " + b_.name(delta.cell) + " with " + b_.name(eta.cell) +
                             " needs composites outside the fragment");
  }
  return Element{*lh, *kr, *cell};
}

std::optional<ElementMorphism> Analyzer::comparison(const ElementsCategory& e, std::size_t from, std::size_t to) const {
  return e.unique_morphism(from, to);
}

UniversalityResult Analyzer::universality(const Element& delta) const {
  UniversalityResult res;
  const OneCell c = delta.cell.src;
  const ObjectId y = b_.target(delta.left);
  const OneCell one = b_.identity(y);
  const auto objs = b_.objects();
  res.canonical.resize(objs.size());
  constexpr std::size_t none = static_cast<std::size_t>(-1);

  auto violate = [&](nlohmann::json w) {
    res.universal = false;
    if (res.violations.size() < 12) res.violations.push_back(std::move(w));
    ++res.violation_count;
  };

  for (ObjectId y2 : objs) {
    const ElementsCategory& target = elements(c, y2);
    const ElementsCategory& gens = elements(one, y2);
    auto& canon = res.canonical[y2];
    canon.assign(target.size(), std::nullopt);
    std::vector<std::size_t> count(target.size(), 0), from_component(target.size(), none);

    for (std::size_t k = 0; k < gens.components().size(); ++k) {
      auto c0 = gens.canonical_initial(k);
      if (!c0) {
        violate({{"kind", "non-generic-identity-component"},
                 {"through", b_.object_name(y2)},
                 {"element", element_json(b_, gens.objects()[gens.components()[k].front()])}});
        continue;
      }
      const Element& eta0 = gens.objects()[*c0];
      target.for_each_morphism(paste(delta, eta0), [&](const ElementMorphism& m, std::optional<std::size_t> t) {
        if (!t) throw FragmentIncomplete("factorization target outside the elements category");
        if (count[*t]++ == 0) {
          canon[*t] = Factorization{eta0, m.left, m.right};
          from_component[*t] = k;
        }
      });
    }

    for (std::size_t i = 0; i < target.size(); ++i) {
      ++res.checked;
      if (count[i] == 0) {
        violate({{"kind", "unfactored"},
                 {"through", b_.object_name(y2)},
                 {"element", element_json(b_, target.objects()[i])}});
      } else if (count[i] > 1) {
        violate({{"kind", "ambiguous"},
                 {"through", b_.object_name(y2)},
                 {"element", element_json(b_, target.objects()[i])},
                 {"factorizations", count[i]}});
      }
    }

    for (std::size_t k = 0; k < gens.components().size(); ++k) {
      auto c0 = gens.canonical_initial(k);
      if (!c0) continue;
      for (std::size_t idx : gens.initials(k)) {
        if (idx == *c0) continue;
        const Element& eta1 = gens.objects()[idx];
        auto cmp = comparison(gens, *c0, idx);
        if (!cmp || !inverse(cmp->left) || !inverse(cmp->right)) {
          violate({{"kind", "generics-not-isomorphic"},
                   {"from", element_json(b_, gens.objects()[*c0])},
                   {"to", element_json(b_, eta1)}});
          continue;
        }
        auto theta_l = whisker_left(b_, delta.left, cmp->left);
        auto psi_r = whisker_right(b_, cmp->right, delta.right);
        if (!theta_l || !psi_r) throw FragmentIncomplete("comparison whiskering outside the fragment");
        target.for_each_morphism(paste(delta, eta1), [&](const ElementMorphism& m, std::optional<std::size_t> t) {
          if (!t) throw FragmentIncomplete("factorization target outside the elements category");
          const auto& f = canon[*t];
          bool ok = f && from_component[*t] == k && f->alpha == b_.vcomp(*theta_l, m.left) &&
                    f->beta == b_.vcomp(*psi_r, m.right);
          if (!ok) {
            violate({{"kind", "incoherent-comparison"},
                     {"through", b_.object_name(y2)},
                     {"element", element_json(b_, target.objects()[*t])},
                     {"generic", element_json(b_, eta1)}});
          }
        });
      }
    }
  }
  return res;
}

std::shared_ptr<const UniversalityResult> Analyzer::universality_of(const Element& delta) const {
  {
    std::lock_guard lock(mutex_);
    auto it = universality_.find(delta);
    if (it != universality_.end()) return it->second;
  }
  auto u = std::make_shared<const UniversalityResult>(universality(delta));
  std::lock_guard lock(mutex_);
  return universality_.emplace(delta, u).first->second;
}

std::optional<Factorization> Analyzer::factor(const Element& delta, const Element& gamma) const {
  auto u = universality_of(delta);
  const ObjectId y = b_.target(gamma.left);
  auto idx = elements(gamma.cell.src, y).find(gamma);
  if (!idx) return std::nullopt;
  return u->canonical[y][*idx];
}

bool Analyzer::is_initial_generic(const Element& delta) const {
  {
    std::lock_guard lock(mutex_);
    auto it = initial_generic_.find(delta);
    if (it != initial_generic_.end()) return it->second;
  }
  const ElementsCategory& e = elements(delta.cell.src, b_.target(delta.left));
  auto idx = e.find(delta);
  if (!idx) {
    throw FragmentIncomplete("2-cell " + b_.name(delta.cell) + " into " + b_.name(delta.left) + " ; " +
                             b_.name(delta.right) + " is not an element over base 1-cells");
  }
  bool result = e.is_initial(*idx) && inverse(delta.cell).has_value() && universality_of(delta)->universal;
  std::lock_guard lock(mutex_);
  initial_generic_.emplace(delta, result);
  return result;
}

const InitialGenericSearch& Analyzer::find_initial_generic(OneCell c) const {
  {
    std::lock_guard lock(mutex_);
    auto it = searches_.find(c);
    if (it != searches_.end()) return *it->second;
  }
  auto search = std::make_unique<InitialGenericSearch>();
  for (ObjectId y : b_.objects()) {
    const ElementsCategory& e = elements(c, y);
    for (std::size_t i = 0; i < e.size() && !search->witness; ++i) {
      if (!e.is_initial(i)) continue;
      const Element& d = e.objects()[i];
      auto inv = inverse(d.cell);
      if (!inv) continue;
      auto u = universality_of(d);
      if (u->universal) {
        search->witness = InitialGenericWitness{c, y, d, *inv, u};
      } else {
        search->rejected.push_back(RejectedCandidate{d, u->violation_count, u->violations});
      }
    }
    if (search->witness) break;
  }
  std::lock_guard lock(mutex_);
  if (search->witness) initial_generic_[search->witness->delta] = true;
  for (const auto& r : search->rejected) initial_generic_[r.delta] = false;
  auto [it, inserted] = searches_.emplace(c, std::move(search));
  return *it->second;
}

}  // namespace spanbicat
