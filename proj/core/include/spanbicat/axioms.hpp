#pragma once

#include <vector>

#include "spanbicat/analyzer.hpp"
#include "spanbicat/report.hpp"

namespace spanbicat {

struct Axiom1Result {
  Report report;
  // One per base 1-cell that has an initial generic, in enumeration order.
  std::vector<InitialGenericWitness> witnesses;
};

// Every base 1-cell has an invertible generic through which every 2-cell out
// of it factors, uniquely up to the comparison isomorphisms. Failing cells are
// reported with all their factorizations and every rejected candidate.
Axiom1Result check_axiom1(const Analyzer& an, const CheckOptions& opts = {});

// For each stored factorization (η: 1_Y => h;k, α, β) the identities on l;h
// and k;r are initial generics.
Report check_axiom2(const Analyzer& an, const std::vector<InitialGenericWitness>& witnesses,
                    const CheckOptions& opts = {});

// A witness for an arbitrary candidate δ, with its universality recomputed.
InitialGenericWitness make_witness(const Analyzer& an, const Element& delta);

nlohmann::json witness_json(const BicatFragment& b, const InitialGenericWitness& w);

}  // namespace spanbicat
