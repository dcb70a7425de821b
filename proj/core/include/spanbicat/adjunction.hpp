#pragma once

#include <map>
#include <optional>
#include <vector>

#include "spanbicat/bicat.hpp"
#include "spanbicat/report.hpp"

namespace spanbicat {

// left ⊣ right with unit 1_X => left;right and counit right;left => 1_Y.
struct Adjunction {
  OneCell left;
  OneCell right;
  TwoCell unit;
  TwoCell counit;

  friend auto operator<=>(const Adjunction&, const Adjunction&) = default;
};

// nullopt when a composite needed by either triangle is outside the fragment.
std::optional<bool> triangle_identities(const BicatFragment& b, const Adjunction& adj);

// Search order: partner 1-cell, then unit, then counit, each in enumeration order.
std::optional<Adjunction> find_right_adjoint(const BicatFragment& b, OneCell f);
std::optional<Adjunction> find_left_adjoint(const BicatFragment& b, OneCell g);
std::vector<Adjunction> adjunctions_with_left(const BicatFragment& b, OneCell f);

// For f1 ⊣ g1 (A -> C), f2 ⊣ g2 (B -> D), p: A -> B and q: C -> D:
//   mate:        α: p;f2 => f1;q   |->   β: g1;p => q;g2
//   mate_inverse β |-> α
// nullopt when some composite of the pasting is outside the fragment.
std::optional<TwoCell> mate(const BicatFragment& b, const TwoCell& alpha, const Adjunction& adj1,
                            const Adjunction& adj2, OneCell p, OneCell q);
std::optional<TwoCell> mate_inverse(const BicatFragment& b, const TwoCell& beta, const Adjunction& adj1,
                                    const Adjunction& adj2, OneCell p, OneCell q);

// Adjoint search results for every base 1-cell.
class AdjointIndex {
 public:
  AdjointIndex(const BicatFragment& b, unsigned jobs = 1);

  const std::optional<Adjunction>& right_adjoint(OneCell f) const { return right_.at(f); }
  const std::optional<Adjunction>& left_adjoint(OneCell g) const { return left_.at(g); }
  bool is_left_adjoint(OneCell f) const { return right_adjoint(f).has_value(); }
  bool is_right_adjoint(OneCell g) const { return left_adjoint(g).has_value(); }
  // Base left adjoints X -> Y in enumeration order.
  std::vector<OneCell> left_adjoints(ObjectId x, ObjectId y) const;
  std::vector<OneCell> right_adjoints(ObjectId x, ObjectId y) const;
  const BicatFragment& fragment() const { return b_; }

 private:
  const BicatFragment& b_;
  std::map<OneCell, std::optional<Adjunction>> right_;
  std::map<OneCell, std::optional<Adjunction>> left_;
};

Report check_left_adjoint_2cell_uniqueness(const AdjointIndex& adj, const CheckOptions& opts = {});
Report check_left_adjoint_2cell_invertibility(const AdjointIndex& adj, const CheckOptions& opts = {});

// mate_inverse(mate(α)) = α and mate(mate_inverse(β)) = β for every square
// framed by two left adjoints of the index and base 1-cells p, q.
Report check_mates(const AdjointIndex& adj, const CheckOptions& opts = {});

nlohmann::json adjunction_json(const BicatFragment& b, const Adjunction& adj);

}  // namespace spanbicat
