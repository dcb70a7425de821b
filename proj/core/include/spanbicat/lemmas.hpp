#pragma once

#include <string>
#include <vector>

#include "spanbicat/adjunction.hpp"
#include "spanbicat/analyzer.hpp"
#include "spanbicat/report.hpp"

namespace spanbicat {

enum class UnitorSide { left, right };

struct UnitorPremise {
  OneCell cell;
  UnitorSide side = UnitorSide::right;
};

struct CompositePremise {
  OneCell right_adjoint;
  OneCell left_adjoint;
};

struct PastingPremise {
  Element delta;
  Element eta;
};

struct WhiskerPremise {
  Element delta;
  std::vector<Adjunction> units;
};

// The instances each lemma checker quantifies over. Every list is produced by
// an earlier analysis stage and taken as given: a checker verifies its
// conclusion on each instance without re-establishing the hypotheses.
struct LemmaPremises {
  std::vector<UnitorPremise> unitor_initial;  // implies-adjoint
  std::vector<Element> initial_generics;      // parts-are-adjoints
  std::vector<Element> identity_generics;     // generics-are-units
  std::vector<Adjunction> adjunctions;        // unit-implies-generic
  std::vector<CompositePremise> composites;   // composite-initial
  std::vector<PastingPremise> pastings;       // composite-generic
  std::vector<WhiskerPremise> whiskerings;    // generics-are-whiskers
  std::vector<Element> indexing;              // generics-index-adjoints
};

const std::vector<std::string>& lemma_names();

LemmaPremises build_lemma_premises(const Analyzer& an, const AdjointIndex& adj,
                                   const std::vector<InitialGenericWitness>& witnesses);

// Appends one instance, given in fixture notation, to the named lemma's list.
void inject_premise(const BicatFragment& b, LemmaPremises& premises, const std::string& lemma,
                    const nlohmann::json& instance);

// One report per lemma, in lemma_names() order. `gates` is copied into each
// report's details.
std::vector<Report> check_lemma_suite(const Analyzer& an, const AdjointIndex& adj, const LemmaPremises& premises,
                                      const nlohmann::json& gates, const CheckOptions& opts = {});

// Generic within the fragment: x reaches one component of El(c, Y) and has
// exactly one morphism to each of its objects. The legs of x may be derived.
bool is_generic_in_fragment(const Analyzer& an, const Element& x);

}  // namespace spanbicat
