#include "spanbicat/adjunction.hpp"

#include <doctest.h>

#include <memory>

#include "spanbicat/mutants.hpp"
#include "spanbicat/span.hpp"

using namespace spanbicat;

TEST_CASE("a span is a left adjoint exactly when its left leg is invertible") {
  auto f = span_fragment({1, 2}, 2);
  AdjointIndex adj(*f, 4);
  std::size_t lefts = 0;
  for (OneCell a : all_base_cells(*f)) {
    const bool bij = is_bijection(to_span(*f, a).left);
    CHECK(adj.is_left_adjoint(a) == bij);
    CHECK(adj.is_right_adjoint(a) == is_bijection(to_span(*f, a).right));
    if (auto r = adj.right_adjoint(a)) {
      ++lefts;
      CHECK(triangle_identities(*f, *r) == true);
      // The right adjoint of (s, t) is (t, s) up to isomorphism.
      Span s = to_span(*f, a);
      OneCell flipped = from_span(*f, Span(s.right, s.left));
      CHECK(find_invertible(*f, r->right, flipped).has_value());
    }
  }
  CHECK(lefts == 13);
}

TEST_CASE("identity mates are identities") {
  auto f = span_fragment({1}, 1);
  OneCell one = f->identity(ObjectId{0});
  Adjunction id{one, one, require(f->left_unitor_inverse(one), "unit"), require(f->left_unitor(one), "counit")};
  REQUIRE(triangle_identities(*f, id) == true);
  auto onep = require(f->hcomp(one, one), "1;1");
  for (const TwoCell& alpha : f->two_cells(onep, onep)) {
    auto beta = mate(*f, alpha, id, id, one, one);
    REQUIRE(beta.has_value());
    CHECK(*beta == alpha);
  }
}

TEST_CASE("mates are mutually inverse on spans") {
  auto f = span_fragment({1, 2}, 2);
  AdjointIndex adj(*f, 4);
  Report r = check_mates(adj, {4, 25});
  CHECK(r.status == Status::pass);
  CHECK(r.instances > 10000);
}

TEST_CASE("2-cells between left adjoints are unique and invertible") {
  auto f = span_fragment({1, 2}, 2);
  AdjointIndex adj(*f);
  CHECK(check_left_adjoint_2cell_uniqueness(adj).status == Status::pass);
  CHECK(check_left_adjoint_2cell_invertibility(adj).status == Status::pass);
}

TEST_CASE("a duplicated 2-cell breaks uniqueness between left adjoints") {
  std::shared_ptr<const BicatFragment> f = span_fragment({1, 2}, 2);
  OneCell a = one_cell_named(*f, "1>2:1:[0]/[0]");
  auto dup = std::make_shared<DuplicatedTwoCell>(f, f->identity(a), "[0]'");
  AdjointIndex adj(*dup);
  Report r = check_left_adjoint_2cell_uniqueness(adj);
  REQUIRE(r.status == Status::fail);
  CHECK(r.witnesses.at(0).at("cells") == nlohmann::json{"[0]", "[0]'"});
}

TEST_CASE("a hidden inverse breaks invertibility between left adjoints") {
  std::shared_ptr<const BicatFragment> f = span_fragment({1, 2}, 2);
  OneCell a = one_cell_named(*f, "2>1:2:[1,0]/[0,0]"), b = one_cell_named(*f, "2>1:2:[0,1]/[0,0]");
  auto hidden = std::make_shared<HiddenTwoCell>(f, two_cell_named(*f, a, b, "[1,0]"));
  AdjointIndex adj(*hidden);
  Report r = check_left_adjoint_2cell_invertibility(adj);
  REQUIRE(r.status == Status::fail);
  CHECK(r.witnesses.at(0).at("cell") == "[1,0]");
}
