#include "spanbicat/elements.hpp"

#include <numeric>

namespace spanbicat {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = b;
  }
};

}  // namespace

ElementsCategory::ElementsCategory(const BicatFragment& b, OneCell c, ObjectId y, const OutCells& out)
    : b_(b), c_(c), y_(y), out_(out) {
  objects_ = enumerate_2cells_into_composites(b, c, y);
  index_.reserve(objects_.size());
  for (std::size_t i = 0; i < objects_.size(); ++i) index_.emplace(objects_[i], i);

  const std::size_t n = objects_.size();
  std::vector<std::vector<std::size_t>> targets(n);
  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i) {
    for_each_morphism(objects_[i], [&](const ElementMorphism& m, std::optional<std::size_t> t) {
      if (!t) {
        Element e = apply(objects_[i], m);
        throw FragmentIncomplete("morphism out of an element lands outside the enumeration: " + b_.name(e.left) +
                                 " ; " + b_.name(e.right));
      }
      targets[i].push_back(*t);
      uf.unite(i, *t);
      ++morphism_count_;
    });
  }

  component_.assign(n, 0);
  std::vector<std::size_t> comp_of_root(n, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = uf.find(i);
    if (comp_of_root[r] == static_cast<std::size_t>(-1)) {
      comp_of_root[r] = components_.size();
      components_.emplace_back();
    }
    component_[i] = comp_of_root[r];
    components_[component_[i]].push_back(i);
  }

  // Initial iff exactly one morphism to each object of the component.
  initial_.assign(n, false);
  canonical_.assign(components_.size(), std::nullopt);
  std::vector<std::size_t> hits(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& comp = components_[component_[i]];
    if (targets[i].size() != comp.size()) continue;
    bool ok = true;
    for (std::size_t t : targets[i]) {
      if (hits[t]++ != 0) ok = false;
    }
    for (std::size_t t : targets[i]) hits[t] = 0;
    if (!ok) continue;
    initial_[i] = true;
    if (!canonical_[component_[i]]) canonical_[component_[i]] = i;
  }
}

std::optional<std::size_t> ElementsCategory::find(const Element& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> ElementsCategory::initials(std::size_t component) const {
  std::vector<std::size_t> out;
  for (std::size_t i : components_.at(component)) {
    if (initial_[i]) out.push_back(i);
  }
  return out;
}

Element ElementsCategory::apply(const Element& from, const ElementMorphism& m) const {
  TwoCell uv = require(b_.hcomp(m.left, m.right), "horizontal composite of an element morphism");
  return Element{m.left.tgt, m.right.tgt, b_.vcomp(from.cell, uv)};
}

void ElementsCategory::for_each_morphism(
    const Element& from, const std::function<void(const ElementMorphism&, std::optional<std::size_t>)>& fn) const {
  const auto& us = out_(from.left);
  const auto& vs = out_(from.right);
  for (const TwoCell& u : us) {
    for (const TwoCell& v : vs) {
      ElementMorphism m{u, v};
      Element e = apply(from, m);
      fn(m, find(e));
    }
  }
}

std::vector<ElementMorphism> ElementsCategory::morphisms(std::size_t from, std::size_t to) const {
  std::vector<ElementMorphism> out;
  for_each_morphism(objects_.at(from), [&](const ElementMorphism& m, std::optional<std::size_t> t) {
    if (t && *t == to) out.push_back(m);
  });
  return out;
}

std::optional<ElementMorphism> ElementsCategory::unique_morphism(std::size_t from, std::size_t to) const {
  auto ms = morphisms(from, to);
  if (ms.size() != 1) return std::nullopt;
  return ms.front();
}

}  // namespace spanbicat
