#include "spanbicat/span.hpp"

namespace spanbicat {

Span::Span(FinFunction left_, FinFunction right_)
    : src(left_.cod()), tgt(right_.cod()), apex(left_.dom()), left(std::move(left_)), right(std::move(right_)) {
  if (left.dom() != right.dom()) throw ConstructionError("span legs have different domains");
}

SpanMorphism::SpanMorphism(Span src, Span tgt, FinFunction map_)
    : src_span(std::move(src)), tgt_span(std::move(tgt)), map(std::move(map_)) {
  if (src_span.src != tgt_span.src || src_span.tgt != tgt_span.tgt) {
    throw ConstructionError("span morphism between non-parallel spans");
  }
  if (map.dom() != src_span.apex || map.cod() != tgt_span.apex) {
    throw ConstructionError("span morphism map has wrong endpoints");
  }
  if (compose_fn(map, tgt_span.left) != src_span.left || compose_fn(map, tgt_span.right) != src_span.right) {
    throw ConstructionError("span morphism map " + map.to_string() + " does not commute with the legs");
  }
}

Span identity_span(FinSetObj x) { return Span(FinFunction::identity(x), FinFunction::identity(x)); }

Span compose_spans(const Span& ab, const Span& cd) {
  if (ab.tgt != cd.src) throw CompositionError("spans are not composable");
  PullbackResult pb = pullback(ab.right, cd.left);
  return Span(compose_fn(pb.p1, ab.left), compose_fn(pb.p2, cd.right));
}

SpanMorphism identity_morphism(const Span& s) { return SpanMorphism(s, s, FinFunction::identity(s.apex)); }

SpanMorphism vcomp_span_morphisms(const SpanMorphism& phi, const SpanMorphism& psi) {
  if (phi.tgt_span != psi.src_span) throw CompositionError("span morphisms are not vertically composable");
  return SpanMorphism(phi.src_span, psi.tgt_span, compose_fn(phi.map, psi.map));
}

SpanMorphism hcomp_span_morphisms(const SpanMorphism& phi, const SpanMorphism& psi) {
  if (phi.src_span.tgt != psi.src_span.src) throw CompositionError("span morphisms are not horizontally composable");
  PullbackResult src = pullback(phi.src_span.right, psi.src_span.left);
  PullbackResult tgt = pullback(phi.tgt_span.right, psi.tgt_span.left);
  FinFunction m = pullback_mediator(tgt, compose_fn(src.p1, phi.map), compose_fn(src.p2, psi.map));
  return SpanMorphism(compose_spans(phi.src_span, psi.src_span), compose_spans(phi.tgt_span, psi.tgt_span), m);
}

std::vector<SpanMorphism> span_morphisms(const Span& s, const Span& t) {
  std::vector<SpanMorphism> out;
  if (s.src != t.src || s.tgt != t.tgt) return out;
  for (const FinFunction& h : all_functions(s.apex, t.apex)) {
    if (compose_fn(h, t.left) == s.left && compose_fn(h, t.right) == s.right) out.emplace_back(s, t, h);
  }
  return out;
}

SpanCoherenceCells span_associator(const Span& a, const Span& b, const Span& c) {
  PullbackResult ab = pullback(a.right, b.left);
  Span sab(compose_fn(ab.p1, a.left), compose_fn(ab.p2, b.right));
  PullbackResult ab_c = pullback(sab.right, c.left);
  PullbackResult bc = pullback(b.right, c.left);
  Span sbc(compose_fn(bc.p1, b.left), compose_fn(bc.p2, c.right));
  PullbackResult a_bc = pullback(a.right, sbc.left);
  Span lhs(compose_fn(ab_c.p1, sab.left), compose_fn(ab_c.p2, c.right));
  Span rhs(compose_fn(a_bc.p1, a.left), compose_fn(a_bc.p2, sbc.right));
  FinFunction fwd =
      pullback_mediator(a_bc, compose_fn(ab_c.p1, ab.p1), pullback_mediator(bc, compose_fn(ab_c.p1, ab.p2), ab_c.p2));
  FinFunction inv =
      pullback_mediator(ab_c, pullback_mediator(ab, a_bc.p1, compose_fn(a_bc.p2, bc.p1)), compose_fn(a_bc.p2, bc.p2));
  return {SpanMorphism(lhs, rhs, fwd), SpanMorphism(rhs, lhs, inv)};
}

SpanCoherenceCells span_left_unitor(const Span& a) {
  PullbackResult pb = pullback(FinFunction::identity(a.src), a.left);
  Span one_a(pb.p1, compose_fn(pb.p2, a.right));
  FinFunction inv = pullback_mediator(pb, a.left, FinFunction::identity(a.apex));
  return {SpanMorphism(one_a, a, pb.p2), SpanMorphism(a, one_a, inv)};
}

SpanCoherenceCells span_right_unitor(const Span& a) {
  PullbackResult pb = pullback(a.right, FinFunction::identity(a.tgt));
  Span a_one(compose_fn(pb.p1, a.left), pb.p2);
  FinFunction inv = pullback_mediator(pb, FinFunction::identity(a.apex), a.right);
  return {SpanMorphism(a_one, a, pb.p1), SpanMorphism(a, a_one, inv)};
}

}  // namespace spanbicat
