#include "spanbicat/span.hpp"

#include <doctest.h>

#include "oracles.hpp"
#include "spanbicat/coherence.hpp"

using namespace spanbicat;

namespace {

oracle::SpanData data_of(const Span& s) { return {s.apex.size, s.left.image(), s.right.image()}; }

}  // namespace

TEST_CASE("span composition takes the pullback apex") {
  for (std::size_t x : {1, 2}) {
    for (std::size_t y : {1, 2}) {
      for (std::size_t z : {1, 2}) {
        for (const auto& s : oracle::spans(x, y, {1, 2})) {
          for (const auto& t : oracle::spans(y, z, {1, 2})) {
            Span a(FinFunction({s.apex}, {x}, s.left), FinFunction({s.apex}, {y}, s.right));
            Span b(FinFunction({t.apex}, {y}, t.left), FinFunction({t.apex}, {z}, t.right));
            Span ab = compose_spans(a, b);
            CHECK(ab.apex.size == oracle::composite_apex(s, t));
            CHECK(ab.src.size == x);
            CHECK(ab.tgt.size == z);
          }
        }
      }
    }
  }
}

TEST_CASE("the fragment enumerates spans with apex among the objects") {
  auto f = span_fragment({1, 2}, 2);
  for (ObjectId x : f->objects()) {
    for (ObjectId z : f->objects()) {
      const std::size_t xs = x + 1, zs = z + 1;
      const auto expected = oracle::spans(xs, zs, {1, 2});
      const auto cells = f->one_cells(x, z);
      REQUIRE(cells.size() == expected.size());
      for (OneCell a : cells) {
        CHECK(f->is_base(a));
        CHECK(f->parse_one_cell(f->name(a)) == a);
      }
    }
  }
}

TEST_CASE("2-cells between base spans are exactly the commuting apex maps") {
  auto f = span_fragment({1, 2}, 2);
  for (ObjectId x : f->objects()) {
    for (ObjectId z : f->objects()) {
      for (OneCell a : f->one_cells(x, z)) {
        for (OneCell b : f->one_cells(x, z)) {
          const auto cells = f->two_cells(a, b);
          CHECK(cells.size() == oracle::span_morphism_count(data_of(to_span(*f, a)), data_of(to_span(*f, b))));
          for (const TwoCell& t : cells) {
            CHECK(f->parse_two_cell(a, b, f->name(t)) == t);
            CHECK(from_span_morphism(*f, to_span_morphism(*f, t)) == t);
          }
        }
      }
    }
  }
}

TEST_CASE("composites beyond the closure bound are absent") {
  auto f = span_fragment({2}, 2, 2);
  OneCell a = *f->parse_one_cell("2>2:2:[0,0]/[0,0]");
  CHECK_FALSE(f->hcomp(a, a).has_value());
  OneCell id = f->identity(ObjectId{0});
  CHECK(f->hcomp(id, id).has_value());
}

TEST_CASE("coherence holds on the smallest span fragment") {
  auto f = span_fragment({1}, 1);
  Report r = check_coherence(*f);
  CHECK(r.status == Status::pass);
  CHECK(r.instances > 0);
}

TEST_CASE("structural cells of spans are mutually inverse") {
  Span a(FinFunction({2}, {1}, {0, 0}), FinFunction({2}, {2}, {0, 1}));
  Span b(FinFunction({2}, {2}, {1, 0}), FinFunction({2}, {1}, {0, 0}));
  Span c(FinFunction({1}, {1}, {0}), FinFunction({1}, {2}, {1}));
  auto assoc = span_associator(a, b, c);
  CHECK(vcomp_span_morphisms(assoc.forward, assoc.inverse) == identity_morphism(assoc.forward.src_span));
  CHECK(vcomp_span_morphisms(assoc.inverse, assoc.forward) == identity_morphism(assoc.forward.tgt_span));
  auto lu = span_left_unitor(a);
  CHECK(lu.forward.tgt_span == a);
  CHECK(vcomp_span_morphisms(lu.forward, lu.inverse) == identity_morphism(lu.forward.src_span));
}
