#include <algorithm>

#include "spanbicat/span.hpp"

namespace spanbicat {

namespace {

constexpr std::uint64_t kCodeBits = 20;
constexpr std::uint64_t kCodeMask = (std::uint64_t{1} << kCodeBits) - 1;

}  // namespace

SpanFragment::SpanFragment(std::shared_ptr<const PullbackCategory> base, std::vector<Obj> objects,
                           std::vector<Obj> apex_objects, nlohmann::json scope)
    : base_(std::move(base)),
      objects_(std::move(objects)),
      apex_objects_(std::move(apex_objects)),
      scope_(std::move(scope)) {
  if (base_->object_count() > 256 || objects_.size() > 256) {
    throw ConstructionError("span fragment supports at most 256 base objects");
  }
  is_apex_.assign(base_->object_count(), false);
  for (Obj t : apex_objects_) is_apex_.at(t) = true;
  for (Obj t = 0; t < base_->object_count(); ++t) {
    for (Obj x : objects_) {
      if (base_->hom_size(t, x) > kCodeMask) {
        throw ConstructionError("hom(" + base_->object_name(t) + "," + base_->object_name(x) +
                                ") too large for the span encoding");
      }
    }
  }
}

std::optional<ObjectId> SpanFragment::object_of(Obj base_obj) const {
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    if (objects_[i] == base_obj) return static_cast<ObjectId>(i);
  }
  return std::nullopt;
}

SpanFragment::Legs SpanFragment::legs(OneCell a) const {
  Legs l;
  l.src = static_cast<ObjectId>(a.id >> 56);
  l.tgt = static_cast<ObjectId>((a.id >> 48) & 0xFF);
  l.apex = static_cast<Obj>((a.id >> 40) & 0xFF);
  l.left = Arrow{l.apex, objects_[l.src], (a.id >> kCodeBits) & kCodeMask};
  l.right = Arrow{l.apex, objects_[l.tgt], a.id & kCodeMask};
  return l;
}

OneCell SpanFragment::make_cell(ObjectId src, ObjectId tgt, const Arrow& left, const Arrow& right) const {
  return OneCell{(std::uint64_t{src} << 56) | (std::uint64_t{tgt} << 48) | (std::uint64_t{left.src} << 40) |
                 (left.code << kCodeBits) | right.code};
}

TwoCell SpanFragment::make_two_cell(OneCell src, OneCell tgt, const Arrow& m) const {
  Legs s = legs(src), t = legs(tgt);
  if (s.src != t.src || s.tgt != t.tgt || m.src != s.apex || m.tgt != t.apex || base_->compose(m, t.left) != s.left ||
      base_->compose(m, t.right) != s.right) {
    throw ConstructionError("apex map " + base_->arrow_name(m) + " is not a span morphism " + name(src) + " => " +
                            name(tgt));
  }
  return TwoCell{src, tgt, m.code};
}

std::vector<OneCell> SpanFragment::one_cells(ObjectId x, ObjectId z) const {
  std::vector<OneCell> out;
  for (Obj t : apex_objects_) {
    std::uint64_t nl = base_->hom_size(t, objects_[x]), nr = base_->hom_size(t, objects_[z]);
    for (std::uint64_t l = 0; l < nl; ++l) {
      for (std::uint64_t r = 0; r < nr; ++r) {
        out.push_back(make_cell(x, z, Arrow{t, objects_[x], l}, Arrow{t, objects_[z], r}));
      }
    }
  }
  return out;
}

bool SpanFragment::is_base(OneCell a) const { return is_apex_[legs(a).apex]; }

std::vector<TwoCell> SpanFragment::two_cells(OneCell a, OneCell b) const {
  Legs s = legs(a), t = legs(b);
  std::vector<TwoCell> out;
  if (s.src != t.src || s.tgt != t.tgt) return out;
  for (const Arrow& m : base_->lifts(s.apex, s.left, s.right, t.left, t.right)) out.push_back(TwoCell{a, b, m.code});
  return out;
}

OneCell SpanFragment::identity(ObjectId x) const {
  Arrow id = base_->identity(objects_[x]);
  return make_cell(x, x, id, id);
}

TwoCell SpanFragment::identity(OneCell a) const { return TwoCell{a, a, base_->identity(legs(a).apex).code}; }

TwoCell SpanFragment::vcomp(const TwoCell& alpha, const TwoCell& beta) const {
  if (alpha.tgt != beta.src) {
    throw CompositionError("vertical composite " + name(alpha.src) + " => " + name(alpha.tgt) + " then " +
                           name(beta.src) + " => " + name(beta.tgt) + " has mismatched endpoints");
  }
  return TwoCell{alpha.src, beta.tgt, base_->compose(map(alpha), map(beta)).code};
}

std::optional<Cone> SpanFragment::composite_cone(const Legs& a, const Legs& b) const {
  return base_->pullback(a.right, b.left);
}

std::optional<OneCell> SpanFragment::hcomp(OneCell a, OneCell b) const {
  Legs la = legs(a), lb = legs(b);
  if (la.tgt != lb.src) throw CompositionError("1-cells " + name(a) + ", " + name(b) + " not composable");
  auto pb = composite_cone(la, lb);
  if (!pb) return std::nullopt;
  return make_cell(la.src, lb.tgt, base_->compose(pb->p1, la.left), base_->compose(pb->p2, lb.right));
}

std::optional<TwoCell> SpanFragment::hcomp(const TwoCell& alpha, const TwoCell& beta) const {
  Legs a = legs(alpha.src), b = legs(beta.src), a2 = legs(alpha.tgt), b2 = legs(beta.tgt);
  if (a.tgt != b.src) throw CompositionError("2-cells not horizontally composable");
  auto src = composite_cone(a, b);
  auto tgt = composite_cone(a2, b2);
  if (!src || !tgt) return std::nullopt;
  OneCell s = make_cell(a.src, b.tgt, base_->compose(src->p1, a.left), base_->compose(src->p2, b.right));
  OneCell t = make_cell(a.src, b.tgt, base_->compose(tgt->p1, a2.left), base_->compose(tgt->p2, b2.right));
  Arrow m = base_->mediate(*tgt, base_->compose(src->p1, map(alpha)), base_->compose(src->p2, map(beta)));
  return TwoCell{s, t, m.code};
}

std::optional<TwoCell> SpanFragment::associator(OneCell a, OneCell b, OneCell c) const {
  auto ab = hcomp(a, b), bc = hcomp(b, c);
  if (!ab || !bc) return std::nullopt;
  auto lhs = hcomp(*ab, c), rhs = hcomp(a, *bc);
  if (!lhs || !rhs) return std::nullopt;
  Legs la = legs(a), lb = legs(b), lc = legs(c), lab = legs(*ab), lbc = legs(*bc);
  Cone p_ab = *composite_cone(la, lb), p_abc = *composite_cone(lab, lc);
  Cone p_bc = *composite_cone(lb, lc), p_a_bc = *composite_cone(la, lbc);
  Arrow inner = base_->mediate(p_bc, base_->compose(p_abc.p1, p_ab.p2), p_abc.p2);
  Arrow m = base_->mediate(p_a_bc, base_->compose(p_abc.p1, p_ab.p1), inner);
  return TwoCell{*lhs, *rhs, m.code};
}

std::optional<TwoCell> SpanFragment::associator_inverse(OneCell a, OneCell b, OneCell c) const {
  auto ab = hcomp(a, b), bc = hcomp(b, c);
  if (!ab || !bc) return std::nullopt;
  auto lhs = hcomp(*ab, c), rhs = hcomp(a, *bc);
  if (!lhs || !rhs) return std::nullopt;
  Legs la = legs(a), lb = legs(b), lc = legs(c), lab = legs(*ab), lbc = legs(*bc);
  Cone p_ab = *composite_cone(la, lb), p_abc = *composite_cone(lab, lc);
  Cone p_bc = *composite_cone(lb, lc), p_a_bc = *composite_cone(la, lbc);
  Arrow inner = base_->mediate(p_ab, p_a_bc.p1, base_->compose(p_a_bc.p2, p_bc.p1));
  Arrow m = base_->mediate(p_abc, inner, base_->compose(p_a_bc.p2, p_bc.p2));
  return TwoCell{*rhs, *lhs, m.code};
}

std::optional<TwoCell> SpanFragment::left_unitor(OneCell a) const {
  Legs l = legs(a);
  OneCell one = identity(l.src);
  auto src = hcomp(one, a);
  if (!src) return std::nullopt;
  Cone pb = *composite_cone(legs(one), l);
  return TwoCell{*src, a, pb.p2.code};
}

std::optional<TwoCell> SpanFragment::left_unitor_inverse(OneCell a) const {
  Legs l = legs(a);
  OneCell one = identity(l.src);
  auto src = hcomp(one, a);
  if (!src) return std::nullopt;
  Cone pb = *composite_cone(legs(one), l);
  return TwoCell{a, *src, base_->mediate(pb, l.left, base_->identity(l.apex)).code};
}

std::optional<TwoCell> SpanFragment::right_unitor(OneCell a) const {
  Legs l = legs(a);
  OneCell one = identity(l.tgt);
  auto src = hcomp(a, one);
  if (!src) return std::nullopt;
  Cone pb = *composite_cone(l, legs(one));
  return TwoCell{*src, a, pb.p1.code};
}

std::optional<TwoCell> SpanFragment::right_unitor_inverse(OneCell a) const {
  Legs l = legs(a);
  OneCell one = identity(l.tgt);
  auto src = hcomp(a, one);
  if (!src) return std::nullopt;
  Cone pb = *composite_cone(l, legs(one));
  return TwoCell{a, *src, base_->mediate(pb, base_->identity(l.apex), l.right).code};
}

std::string SpanFragment::name(OneCell a) const {
  Legs l = legs(a);
  return object_name(l.src) + ">" + object_name(l.tgt) + ":" + base_->object_name(l.apex) + ":" +
         base_->arrow_name(l.left) + "/" + base_->arrow_name(l.right);
}

std::string SpanFragment::name(const TwoCell& alpha) const { return base_->arrow_name(map(alpha)); }

std::optional<OneCell> SpanFragment::parse_one_cell(std::string_view text) const {
  std::size_t gt = text.find('>');
  std::size_t c1 = text.find(':');
  if (gt == std::string_view::npos || c1 == std::string_view::npos || gt > c1) return std::nullopt;
  std::size_t c2 = text.find(':', c1 + 1);
  if (c2 == std::string_view::npos) return std::nullopt;
  std::string_view rest = text.substr(c2 + 1);
  std::size_t slash = rest.find('/');
  if (slash == std::string_view::npos) return std::nullopt;
  auto xs = base_->parse_object(text.substr(0, gt));
  auto zs = base_->parse_object(text.substr(gt + 1, c1 - gt - 1));
  auto t = base_->parse_object(text.substr(c1 + 1, c2 - c1 - 1));
  if (!xs || !zs || !t) return std::nullopt;
  auto x = object_of(*xs), z = object_of(*zs);
  if (!x || !z) return std::nullopt;
  auto l = base_->parse_arrow(*t, *xs, rest.substr(0, slash));
  auto r = base_->parse_arrow(*t, *zs, rest.substr(slash + 1));
  if (!l || !r) return std::nullopt;
  return make_cell(*x, *z, *l, *r);
}

std::optional<TwoCell> SpanFragment::parse_two_cell(OneCell src, OneCell tgt, std::string_view text) const {
  auto m = base_->parse_arrow(legs(src).apex, legs(tgt).apex, text);
  if (!m) return std::nullopt;
  try {
    return make_two_cell(src, tgt, *m);
  } catch (const ConstructionError&) {
    return std::nullopt;
  }
}

std::shared_ptr<SpanFragment> span_fragment(const std::vector<std::size_t>& object_sizes, std::size_t apex_bound,
                                            std::optional<std::size_t> closure_bound) {
  if (object_sizes.empty()) throw ConstructionError("span fragment needs at least one object");
  std::size_t closure = closure_bound.value_or(apex_bound * apex_bound);
  std::size_t largest = *std::max_element(object_sizes.begin(), object_sizes.end());
  closure = std::max({closure, apex_bound, largest});
  auto base = std::make_shared<FinSetCategory>(closure);
  std::vector<Obj> objs, apexes;
  for (std::size_t s : object_sizes) {
    if (std::find(objs.begin(), objs.end(), static_cast<Obj>(s)) != objs.end()) {
      throw ConstructionError("duplicate object size " + std::to_string(s));
    }
    objs.push_back(static_cast<Obj>(s));
  }
  for (std::size_t t = 0; t <= apex_bound; ++t) {
    if (std::find(objs.begin(), objs.end(), static_cast<Obj>(t)) != objs.end()) apexes.push_back(static_cast<Obj>(t));
  }
  nlohmann::json scope{
      {"kind", "span-finset"}, {"objects", object_sizes}, {"apex_bound", apex_bound}, {"closure_bound", closure}};
  return std::make_shared<SpanFragment>(std::move(base), std::move(objs), std::move(apexes), std::move(scope));
}

std::shared_ptr<SpanFragment> span_fragment(const CategoryPresentation& p, bool require_pullbacks) {
  auto base = std::make_shared<PresentationCategory>(p);
  std::vector<Obj> objs;
  for (std::size_t i = 0; i < p.objects.size(); ++i) objs.push_back(static_cast<Obj>(i));
  if (require_pullbacks) {
    for (const auto& f : p.morphisms) {
      for (const auto& g : p.morphisms) {
        if (f.tgt != g.tgt) continue;
        if (!base->pullback(*base->parse_arrow(f.src, f.tgt, f.name), *base->parse_arrow(g.src, g.tgt, g.name))) {
          throw IncompleteBase("presentation lacks a pullback for the cospan " + f.name + ", " + g.name);
        }
      }
    }
  }
  nlohmann::json scope{{"kind", "span-presentation"},
                       {"objects", p.objects},
                       {"morphisms", p.morphisms.size()},
                       {"require_pullbacks", require_pullbacks}};
  return std::make_shared<SpanFragment>(std::move(base), objs, objs, std::move(scope));
}

Span to_span(const SpanFragment& f, OneCell a) {
  const auto* fs = dynamic_cast<const FinSetCategory*>(&f.base());
  if (!fs) throw ConstructionError("to_span needs a FinSet-based fragment");
  auto l = f.legs(a);
  return Span(fs->to_function(l.left), fs->to_function(l.right));
}

OneCell from_span(const SpanFragment& f, const Span& s) {
  const auto* fs = dynamic_cast<const FinSetCategory*>(&f.base());
  if (!fs) throw ConstructionError("from_span needs a FinSet-based fragment");
  auto x = f.object_of(static_cast<Obj>(s.src.size)), z = f.object_of(static_cast<Obj>(s.tgt.size));
  if (!x || !z) throw ConstructionError("span endpoints are not objects of the fragment");
  return f.make_cell(*x, *z, fs->from_function(s.left), fs->from_function(s.right));
}

SpanMorphism to_span_morphism(const SpanFragment& f, const TwoCell& alpha) {
  const auto* fs = dynamic_cast<const FinSetCategory*>(&f.base());
  if (!fs) throw ConstructionError("to_span_morphism needs a FinSet-based fragment");
  return SpanMorphism(to_span(f, alpha.src), to_span(f, alpha.tgt), fs->to_function(f.map(alpha)));
}

TwoCell from_span_morphism(const SpanFragment& f, const SpanMorphism& m) {
  const auto* fs = dynamic_cast<const FinSetCategory*>(&f.base());
  if (!fs) throw ConstructionError("from_span_morphism needs a FinSet-based fragment");
  return f.make_two_cell(from_span(f, m.src_span), from_span(f, m.tgt_span), fs->from_function(m.map));
}

}  // namespace spanbicat
