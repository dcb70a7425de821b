#pragma once

#include <string>

#include "spanbicat/analyzer.hpp"
#include "spanbicat/span.hpp"

namespace spanbicat {

// Graphviz digraphs; nodes are objects and apexes, edges are legs.

// X <- T -> Z: three nodes.
std::string span_dot(const SpanFragment& f, OneCell a);

// Two spans over the same ends with the apex map dashed.
std::string span_morphism_dot(const SpanFragment& f, const TwoCell& alpha);

// X <- S -> Y <- T -> Z with the chosen pullback P over S -> Y <- T. The
// projections are solid; the cone leg P -> Y is dashed.
std::string composite_dot(const SpanFragment& f, OneCell a, OneCell b);

// γ: (s,t) => a;b through its generic (s,t) => (s,h);(h,t): apex T above the
// composite apex M, with the dotted map T -> M and the two legs' apexes below.
std::string factorization_dot(const Analyzer& an, const Element& gamma);

}  // namespace spanbicat
