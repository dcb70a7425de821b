#include "spanbicat/category.hpp"

#include <array>
#include <tuple>

namespace spanbicat {

Arrow PullbackCategory::arrow(Obj a, Obj b, std::uint64_t code) const {
  if (code >= hom_size(a, b)) throw ConstructionError("arrow index out of range");
  return Arrow{a, b, code};
}

std::vector<Arrow> PullbackCategory::hom(Obj a, Obj b) const {
  std::vector<Arrow> out;
  std::uint64_t n = hom_size(a, b);
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(Arrow{a, b, i});
  return out;
}

std::optional<Arrow> PullbackCategory::inverse(const Arrow& f) const {
  for (const Arrow& g : hom(f.tgt, f.src)) {
    if (compose(f, g) == identity(f.src) && compose(g, f) == identity(f.tgt)) return g;
  }
  return std::nullopt;
}

Arrow PullbackCategory::mediate(const Cone& pb, const Arrow& x, const Arrow& y) const {
  std::optional<Arrow> found;
  for (const Arrow& m : hom(x.src, pb.apex)) {
    if (compose(m, pb.p1) == x && compose(m, pb.p2) == y) {
      if (found) throw NoMediatorError("pullback cone is not universal: mediator not unique");
      found = m;
    }
  }
  if (!found) throw NoMediatorError("no mediator for cone " + arrow_name(x) + ", " + arrow_name(y));
  return *found;
}

std::vector<Arrow> PullbackCategory::lifts(Obj t, const Arrow& s, const Arrow& u, const Arrow& s2,
                                           const Arrow& u2) const {
  std::vector<Arrow> out;
  for (const Arrow& h : hom(t, s2.src)) {
    if (compose(h, s2) == s && compose(h, u2) == u) out.push_back(h);
  }
  return out;
}

namespace {

using Digits = std::array<std::uint8_t, FinSetCategory::kMaxSize>;

void decode(std::uint64_t code, std::size_t dom, std::size_t cod, Digits& out) {
  for (std::size_t i = dom; i-- > 0;) {
    out[i] = static_cast<std::uint8_t>(code % cod);
    code /= cod;
  }
}

std::uint64_t encode(const Digits& d, std::size_t dom, std::size_t cod) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < dom; ++i) code = code * cod + d[i];
  return code;
}

}  // namespace

FinSetCategory::FinSetCategory(std::size_t max_size) : max_size_(max_size) {
  if (max_size > kMaxSize) {
    throw ConstructionError("FinSet base limited to sets of size <= " + std::to_string(kMaxSize));
  }
}

std::uint64_t FinSetCategory::hom_size(Obj a, Obj b) const { return function_count({a}, {b}); }

Arrow FinSetCategory::identity(Obj a) const {
  Digits d{};
  for (std::size_t i = 0; i < a; ++i) d[i] = static_cast<std::uint8_t>(i);
  return Arrow{a, a, encode(d, a, a)};
}

Arrow FinSetCategory::compose(const Arrow& f, const Arrow& g) const {
  if (f.tgt != g.src) throw CompositionError("cannot compose " + arrow_name(f) + " with " + arrow_name(g));
  Digits df{}, dg{}, out{};
  decode(f.code, f.src, f.tgt, df);
  decode(g.code, g.src, g.tgt, dg);
  for (std::size_t i = 0; i < f.src; ++i) out[i] = dg[df[i]];
  return Arrow{f.src, g.tgt, encode(out, f.src, g.tgt)};
}

std::optional<Cone> FinSetCategory::pullback(const Arrow& f, const Arrow& g) const {
  if (f.tgt != g.tgt) throw PullbackError("cospan " + arrow_name(f) + ", " + arrow_name(g) + " mismatched");
  Digits df{}, dg{}, l{}, r{};
  decode(f.code, f.src, f.tgt, df);
  decode(g.code, g.src, g.tgt, dg);
  std::size_t k = 0;
  for (std::size_t a = 0; a < f.src; ++a) {
    for (std::size_t b = 0; b < g.src; ++b) {
      if (df[a] != dg[b]) continue;
      if (k >= max_size_) return std::nullopt;
      l[k] = static_cast<std::uint8_t>(a);
      r[k] = static_cast<std::uint8_t>(b);
      ++k;
    }
  }
  Obj apex = static_cast<Obj>(k);
  return Cone{apex, Arrow{apex, f.src, encode(l, k, f.src)}, Arrow{apex, g.src, encode(r, k, g.src)}};
}

Arrow FinSetCategory::mediate(const Cone& pb, const Arrow& x, const Arrow& y) const {
  Digits p1{}, p2{}, dx{}, dy{}, out{};
  decode(pb.p1.code, pb.apex, pb.p1.tgt, p1);
  decode(pb.p2.code, pb.apex, pb.p2.tgt, p2);
  decode(x.code, x.src, x.tgt, dx);
  decode(y.code, y.src, y.tgt, dy);
  for (std::size_t t = 0; t < x.src; ++t) {
    std::size_t idx = 0;
    while (idx < pb.apex && (p1[idx] != dx[t] || p2[idx] != dy[t])) ++idx;
    if (idx == pb.apex) throw NoMediatorError("cone " + arrow_name(x) + ", " + arrow_name(y) + " does not commute");
    out[t] = static_cast<std::uint8_t>(idx);
  }
  return Arrow{x.src, pb.apex, encode(out, x.src, pb.apex)};
}

std::vector<Arrow> FinSetCategory::lifts(Obj t, const Arrow& s, const Arrow& u, const Arrow& s2,
                                         const Arrow& u2) const {
  Digits ds{}, du{}, ds2{}, du2{};
  decode(s.code, s.src, s.tgt, ds);
  decode(u.code, u.src, u.tgt, du);
  decode(s2.code, s2.src, s2.tgt, ds2);
  decode(u2.code, u2.src, u2.tgt, du2);
  Obj apex = s2.src;
  std::array<std::vector<std::uint8_t>, kMaxSize> fibre;
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < apex; ++j) {
      if (ds2[j] == ds[i] && du2[j] == du[i]) fibre[i].push_back(static_cast<std::uint8_t>(j));
    }
    if (fibre[i].empty()) return {};
  }
  // Odometer over the product of fibres; last position varies fastest, so codes come out sorted.
  std::vector<Arrow> out;
  std::array<std::size_t, kMaxSize> pos{};
  Digits cur{};
  while (true) {
    for (std::size_t i = 0; i < t; ++i) cur[i] = fibre[i][pos[i]];
    out.push_back(Arrow{t, apex, encode(cur, t, apex)});
    std::size_t i = t;
    while (i > 0) {
      --i;
      if (++pos[i] < fibre[i].size()) break;
      pos[i] = 0;
      if (i == 0) return out;
    }
    if (t == 0) return out;
  }
}

std::string FinSetCategory::arrow_name(const Arrow& f) const {
  Digits d{};
  decode(f.code, f.src, f.tgt, d);
  std::string s = "[";
  for (std::size_t i = 0; i < f.src; ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s + "]";
}

std::optional<Obj> FinSetCategory::parse_object(std::string_view text) const {
  if (text.empty() || text.size() > 3) return std::nullopt;
  std::size_t v = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') return std::nullopt;
    v = v * 10 + static_cast<std::size_t>(ch - '0');
  }
  if (v > max_size_) return std::nullopt;
  return static_cast<Obj>(v);
}

std::optional<Arrow> FinSetCategory::parse_arrow(Obj src, Obj tgt, std::string_view text) const {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') return std::nullopt;
  text = text.substr(1, text.size() - 2);
  Digits d{};
  std::size_t n = 0;
  while (!text.empty()) {
    std::size_t comma = text.find(',');
    std::string_view tok = text.substr(0, comma);
    std::optional<Obj> v = parse_object(tok);
    if (!v || *v >= tgt || n >= src) return std::nullopt;
    d[n++] = static_cast<std::uint8_t>(*v);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  if (n != src) return std::nullopt;
  return Arrow{src, tgt, encode(d, src, tgt)};
}

Arrow FinSetCategory::from_function(const FinFunction& f) const {
  if (f.dom().size > max_size_ || f.cod().size > max_size_) {
    throw ConstructionError("function " + f.to_string() + " exceeds FinSet base bound");
  }
  return Arrow{static_cast<Obj>(f.dom().size), static_cast<Obj>(f.cod().size), function_index(f)};
}

FinFunction FinSetCategory::to_function(const Arrow& f) const { return function_at({f.src}, {f.tgt}, f.code); }

std::size_t CategoryPresentation::object_index(const std::string& name) const {
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (objects[i] == name) return i;
  }
  throw ConstructionError("unknown object '" + name + "'");
}

std::size_t CategoryPresentation::morphism_index(const std::string& name) const {
  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    if (morphisms[i].name == name) return i;
  }
  throw ConstructionError("unknown morphism '" + name + "'");
}

bool operator==(const CategoryPresentation::Morphism& a, const CategoryPresentation::Morphism& b) {
  return std::tie(a.name, a.src, a.tgt) == std::tie(b.name, b.src, b.tgt);
}

bool operator==(const CategoryPresentation::PullbackEntry& a, const CategoryPresentation::PullbackEntry& b) {
  return std::tie(a.f, a.g, a.apex, a.p1, a.p2) == std::tie(b.f, b.g, b.apex, b.p1, b.p2);
}

bool operator==(const CategoryPresentation& a, const CategoryPresentation& b) {
  return a.objects == b.objects && a.morphisms == b.morphisms && a.identities == b.identities &&
         a.composition == b.composition && a.pullbacks == b.pullbacks;
}

void CategoryPresentation::validate() const {
  const std::size_t n = morphisms.size();
  if (identities.size() != objects.size()) throw ConstructionError("one identity per object required");
  for (std::size_t x = 0; x < objects.size(); ++x) {
    const Morphism& id = morphisms.at(identities[x]);
    if (id.src != x || id.tgt != x) throw ConstructionError("identity of '" + objects[x] + "' has wrong endpoints");
  }
  for (const Morphism& m : morphisms) {
    if (m.src >= objects.size() || m.tgt >= objects.size()) {
      throw ConstructionError("morphism '" + m.name + "' has unknown endpoint");
    }
  }
  auto comp = [&](std::size_t f, std::size_t g) {
    auto it = composition.find({f, g});
    if (it == composition.end()) {
      throw ConstructionError("composite " + morphisms[f].name + ";" + morphisms[g].name + " missing");
    }
    return it->second;
  };
  for (const auto& [fg, h] : composition) {
    const auto& [f, g] = fg;
    if (f >= n || g >= n || h >= n || morphisms[f].tgt != morphisms[g].src || morphisms[h].src != morphisms[f].src ||
        morphisms[h].tgt != morphisms[g].tgt) {
      throw ConstructionError("composition entry with mismatched endpoints");
    }
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (comp(identities[morphisms[f].src], f) != f || comp(f, identities[morphisms[f].tgt]) != f) {
      throw ConstructionError("identity law fails at '" + morphisms[f].name + "'");
    }
    for (std::size_t g = 0; g < n; ++g) {
      if (morphisms[f].tgt != morphisms[g].src) continue;
      for (std::size_t h = 0; h < n; ++h) {
        if (morphisms[g].tgt != morphisms[h].src) continue;
        if (comp(comp(f, g), h) != comp(f, comp(g, h))) {
          throw ConstructionError("associativity fails at " + morphisms[f].name + "," + morphisms[g].name + "," +
                                  morphisms[h].name);
        }
      }
    }
  }
  for (const PullbackEntry& e : pullbacks) {
    if (e.f >= n || e.g >= n || e.p1 >= n || e.p2 >= n || e.apex >= objects.size()) {
      throw ConstructionError("pullback entry refers to unknown cells");
    }
    const Morphism &f = morphisms[e.f], &g = morphisms[e.g], &p1 = morphisms[e.p1], &p2 = morphisms[e.p2];
    if (f.tgt != g.tgt || p1.src != e.apex || p2.src != e.apex || p1.tgt != f.src || p2.tgt != g.src) {
      throw ConstructionError("pullback entry for " + f.name + "," + g.name + " has mismatched endpoints");
    }
    if (comp(e.p1, e.f) != comp(e.p2, e.g)) {
      throw ConstructionError("pullback square for " + f.name + "," + g.name + " does not commute");
    }
    for (std::size_t t = 0; t < objects.size(); ++t) {
      for (std::size_t x = 0; x < n; ++x) {
        if (morphisms[x].src != t || morphisms[x].tgt != f.src) continue;
        for (std::size_t y = 0; y < n; ++y) {
          if (morphisms[y].src != t || morphisms[y].tgt != g.src) continue;
          if (comp(x, e.f) != comp(y, e.g)) continue;
          std::size_t count = 0;
          for (std::size_t m = 0; m < n; ++m) {
            if (morphisms[m].src != t || morphisms[m].tgt != e.apex) continue;
            if (comp(m, e.p1) == x && comp(m, e.p2) == y) ++count;
          }
          if (count != 1) {
            throw ConstructionError("pullback of " + f.name + "," + g.name + " is not universal for cone " +
                                    morphisms[x].name + "," + morphisms[y].name);
          }
        }
      }
    }
  }
}

PresentationCategory::PresentationCategory(CategoryPresentation p) : p_(std::move(p)) {
  p_.validate();
  const std::size_t k = p_.objects.size();
  homs_.assign(k, std::vector<std::vector<std::size_t>>(k));
  local_.resize(p_.morphisms.size());
  for (std::size_t m = 0; m < p_.morphisms.size(); ++m) {
    auto& h = homs_[p_.morphisms[m].src][p_.morphisms[m].tgt];
    local_[m] = h.size();
    h.push_back(m);
  }
  for (std::size_t i = 0; i < p_.pullbacks.size(); ++i) {
    pullback_index_[{p_.pullbacks[i].f, p_.pullbacks[i].g}] = i;
  }
}

std::uint64_t PresentationCategory::hom_size(Obj a, Obj b) const { return homs_.at(a).at(b).size(); }

Arrow PresentationCategory::identity(Obj a) const { return from_global(p_.identities.at(a)); }

std::size_t PresentationCategory::global_index(const Arrow& f) const { return homs_.at(f.src).at(f.tgt).at(f.code); }

Arrow PresentationCategory::from_global(std::size_t m) const {
  const auto& mor = p_.morphisms.at(m);
  return Arrow{static_cast<Obj>(mor.src), static_cast<Obj>(mor.tgt), local_[m]};
}

Arrow PresentationCategory::compose(const Arrow& f, const Arrow& g) const {
  if (f.tgt != g.src) throw CompositionError("cannot compose " + arrow_name(f) + " with " + arrow_name(g));
  return from_global(p_.composition.at({global_index(f), global_index(g)}));
}

std::optional<Cone> PresentationCategory::pullback(const Arrow& f, const Arrow& g) const {
  if (f.tgt != g.tgt) throw PullbackError("cospan " + arrow_name(f) + ", " + arrow_name(g) + " mismatched");
  auto it = pullback_index_.find({global_index(f), global_index(g)});
  if (it == pullback_index_.end()) return std::nullopt;
  const auto& e = p_.pullbacks[it->second];
  return Cone{static_cast<Obj>(e.apex), from_global(e.p1), from_global(e.p2)};
}

std::optional<Obj> PresentationCategory::parse_object(std::string_view text) const {
  for (std::size_t i = 0; i < p_.objects.size(); ++i) {
    if (p_.objects[i] == text) return static_cast<Obj>(i);
  }
  return std::nullopt;
}

std::optional<Arrow> PresentationCategory::parse_arrow(Obj src, Obj tgt, std::string_view text) const {
  for (std::size_t m : homs_.at(src).at(tgt)) {
    if (p_.morphisms[m].name == text) return from_global(m);
  }
  return std::nullopt;
}

std::string PresentationCategory::arrow_name(const Arrow& f) const { return p_.morphisms.at(global_index(f)).name; }

}  // namespace spanbicat
