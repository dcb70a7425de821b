#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "spanbicat/adjunction.hpp"
#include "spanbicat/analyzer.hpp"
#include "spanbicat/category.hpp"
#include "spanbicat/finset.hpp"
#include "spanbicat/report.hpp"
#include "spanbicat/span.hpp"

namespace spanbicat {

// The 1-category of iso-classes of base left adjoints. Objects are the
// fragment's objects; the representative of a class is its first member.
class LeftAdjointCategory {
 public:
  LeftAdjointCategory(const BicatFragment& b, const AdjointIndex& adj);

  std::size_t object_count() const { return classes_.size(); }
  std::size_t hom_size(ObjectId x, ObjectId y) const { return classes_[x][y].size(); }
  const std::vector<OneCell>& members(ObjectId x, ObjectId y, std::size_t k) const { return classes_[x][y][k]; }
  OneCell representative(ObjectId x, ObjectId y, std::size_t k) const { return classes_[x][y][k].front(); }
  std::size_t identity(ObjectId x) const { return identity_[x]; }
  // Class of any 1-cell x -> y isomorphic to a base left adjoint.
  std::optional<std::size_t> classify(OneCell f) const;
  // Class of rep(i);rep(j), if that composite is in the fragment and classified.
  std::optional<std::size_t> compose(ObjectId x, ObjectId y, ObjectId z, std::size_t i, std::size_t j) const;

  // Composition well-definedness, unit and associativity on classes.
  const Report& report() const { return report_; }

  // E as a presentation; pullback entries are added by the composition check.
  CategoryPresentation presentation(const std::vector<CategoryPresentation::PullbackEntry>& pullbacks = {}) const;
  std::size_t global_index(ObjectId x, ObjectId y, std::size_t k) const;

 private:
  const BicatFragment& b_;
  std::vector<std::vector<std::vector<std::vector<OneCell>>>> classes_;
  std::vector<std::size_t> identity_;
  std::map<std::array<std::size_t, 5>, std::optional<std::size_t>> compose_;
  std::map<OneCell, std::size_t> base_class_;
  Report report_;
};

// A span X <- T -> Z in E, legs given by class indices into E(T, X) and E(T, Z).
struct ESpan {
  ObjectId apex = 0;
  std::size_t left = 0;
  std::size_t right = 0;

  friend auto operator<=>(const ESpan&, const ESpan&) = default;
};

// Gate reports the reconstruction requires to pass, in order.
struct ReconstructionGates {
  Report generic;
  Report axiom1;
  Report axiom2;
  Report uniqueness;
  Report invertibility;

  std::vector<const Report*> all() const { return {&generic, &axiom1, &axiom2, &uniqueness, &invertibility}; }
};

// Everything fixed by choice: initial generics per base 1-cell, chosen
// adjunctions, and E.
class Reconstruction {
 public:
  // Throws GateFailure naming the first gate that did not pass.
  Reconstruction(const Analyzer& an, const AdjointIndex& adj, const std::vector<InitialGenericWitness>& witnesses,
                 const ReconstructionGates& gates);

  const Analyzer& analyzer() const { return an_; }
  const BicatFragment& fragment() const { return an_.fragment(); }
  const AdjointIndex& adjoints() const { return adj_; }
  const LeftAdjointCategory& category() const { return *e_; }
  const InitialGenericWitness& chosen(OneCell c) const { return chosen_.at(c); }

  // The image of c: (Y; [l_*], [r]) from the chosen c => l;r.
  std::optional<ESpan> image(OneCell c) const;
  // E-form spans X -> Z.
  std::vector<ESpan> spans(ObjectId x, ObjectId z) const;
  // [h] with [h];[s'] = [s] and [h];[t'] = [t].
  std::vector<std::size_t> span_morphisms(ObjectId x, ObjectId z, const ESpan& from, const ESpan& to) const;
  // s*;t for an E-form span, with s* the chosen right adjoint of rep(s).
  std::optional<OneCell> realize(ObjectId x, ObjectId z, const ESpan& s) const;

 private:
  const Analyzer& an_;
  const AdjointIndex& adj_;
  std::map<OneCell, InitialGenericWitness> chosen_;
  std::unique_ptr<LeftAdjointCategory> e_;
};

// One 2-cell α: c => c' and its image [h], with the pasting data used.
struct HomFunctorEntry {
  TwoCell alpha;
  Factorization factorization;
  std::size_t h_class = 0;
};

struct HomFunctorData {
  ObjectId x = 0;
  ObjectId z = 0;
  std::map<OneCell, ESpan> on_cells;
  std::vector<HomFunctorEntry> on_two_cells;
  // Totality, span-morphism equations and functoriality.
  Report report;
};

HomFunctorData build_hom_functor(const Reconstruction& r, ObjectId x, ObjectId z, const CheckOptions& opts = {});

// Full faithfulness (with the mates-based inverse) and essential surjectivity.
Report check_hom_equivalence(const Reconstruction& r, const HomFunctorData& f, const CheckOptions& opts = {});

// Interprets a class of E(x, y) as a function, for cross-checks against FinSet.
using ClassFunction = std::function<FinFunction(ObjectId, ObjectId, std::size_t)>;

struct PullbackCheck {
  Report report;
  std::vector<CategoryPresentation::PullbackEntry> pullbacks;
};

// For every composable pair of E-form spans, verifies the bijection between
// 2-cells s*;t => (a*;b);(c*;d) and cones over (b, c) for every E-form test
// span, naturally in the test span, and extracts the limiting cone where its
// apex is an object of E.
PullbackCheck check_composition_is_pullback(const Reconstruction& r, const ClassFunction& as_function = nullptr,
                                            const CheckOptions& opts = {});

struct RoundtripResult {
  std::vector<Report> reports;
  std::optional<CategoryPresentation> category;
  bool passed() const;
};

// Gates, E, every hom functor and equivalence, and composition by pullback.
RoundtripResult reconstruct_fragment(const BicatFragment& b, const CheckOptions& opts = {},
                                     const ClassFunction& as_function = nullptr);

// reconstruct_fragment on a FinSet span fragment, plus |E(m, n)| = n^m and the
// class-to-function bijection.
RoundtripResult roundtrip_span(const SpanFragment& f, const CheckOptions& opts = {});

// Runs the gate checks on an analyzer.
ReconstructionGates run_gates(const Analyzer& an, const AdjointIndex& adj,
                              std::vector<InitialGenericWitness>* witnesses, const CheckOptions& opts = {});

}  // namespace spanbicat
