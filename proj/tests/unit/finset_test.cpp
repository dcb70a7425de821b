#include "spanbicat/finset.hpp"

#include <doctest.h>

#include "oracles.hpp"

using namespace spanbicat;

namespace {

FinFunction fn(std::size_t cod, std::vector<std::size_t> image) {
  const std::size_t dom = image.size();
  return FinFunction({dom}, {cod}, std::move(image));
}

}  // namespace

TEST_CASE("composition is diagrammatic") {
  FinFunction f = fn(3, {2, 0});
  FinFunction g = fn(2, {1, 1, 0});
  CHECK(compose_fn(f, g).image() == std::vector<std::size_t>{0, 1});
  CHECK(compose_fn(FinFunction::identity({2}), f) == f);
  CHECK(compose_fn(f, FinFunction::identity({3})) == f);
  CHECK_THROWS_AS(compose_fn(g, g), CompositionError);
}

TEST_CASE("out-of-range images are rejected") { CHECK_THROWS(fn(2, {0, 2})); }

TEST_CASE("function indexing follows lexicographic image order") {
  for (std::size_t m = 0; m <= 3; ++m) {
    for (std::size_t n = 0; n <= 3; ++n) {
      const auto expected = oracle::functions(m, n);
      REQUIRE(function_count({m}, {n}) == expected.size());
      const auto all = all_functions({m}, {n});
      REQUIRE(all.size() == expected.size());
      for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].image() == expected[i]);
        CHECK(function_index(all[i]) == i);
        CHECK(function_at({m}, {n}, i) == all[i]);
      }
    }
  }
}

TEST_CASE("pullbacks agree with the pair filter and mediate uniquely") {
  for (std::size_t a = 0; a <= 2; ++a) {
    for (std::size_t b = 0; b <= 2; ++b) {
      for (std::size_t c = 1; c <= 2; ++c) {
        for (const auto& f : all_functions({a}, {c})) {
          for (const auto& g : all_functions({b}, {c})) {
            PullbackResult pb = pullback(f, g);
            const auto pairs = oracle::pullback_pairs(f.image(), g.image());
            REQUIRE(pb.apex.size == pairs.size());
            for (std::size_t i = 0; i < pairs.size(); ++i) {
              CHECK(pb.p1(i) == pairs[i].first);
              CHECK(pb.p2(i) == pairs[i].second);
            }
            // Every cone out of a one-point set factors through exactly one element.
            for (std::size_t i = 0; i < pairs.size(); ++i) {
              FinFunction x = fn(a, {pairs[i].first}), y = fn(b, {pairs[i].second});
              CHECK(pullback_mediator(pb, x, y).image() == std::vector<std::size_t>{i});
            }
          }
        }
      }
    }
  }
}

TEST_CASE("a non-commuting cone has no mediator") {
  PullbackResult pb = pullback(fn(2, {0, 1}), fn(2, {0, 1}));
  CHECK_THROWS_AS(pullback_mediator(pb, fn(2, {0}), fn(2, {1})), NoMediatorError);
}

TEST_CASE("bijections and inverses") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& f : all_functions({n}, {n})) {
      const bool bij = oracle::bijective(f.image(), n);
      CHECK(is_bijection(f) == bij);
      auto inv = inverse(f);
      CHECK(inv.has_value() == bij);
      if (inv) CHECK(compose_fn(f, *inv) == FinFunction::identity({n}));
    }
  }
  CHECK_FALSE(is_bijection(fn(3, {0, 1})));
}
