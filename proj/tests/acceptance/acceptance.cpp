// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "commands.hpp"
#include "oracles.hpp"
#include "spanbicat/adjunction.hpp"
#include "spanbicat/axioms.hpp"
#include "spanbicat/coherence.hpp"
#include "spanbicat/generic.hpp"
#include "spanbicat/lemmas.hpp"
#include "spanbicat/reconstruct.hpp"
#include "spanbicat/span.hpp"

using namespace spanbicat;
using nlohmann::json;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) note << what;
    ok = ok && cond;
  }
};

using Criterion = std::function<void(Outcome&)>;

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string fixture_path(const std::string& name) { return std::string(SPANBICAT_FIXTURE_DIR) + "/" + name + ".json"; }

void pullback_oracle(Outcome& out) {
  std::size_t cospans = 0;
  for (std::size_t c = 0; c <= 4; ++c) {
    for (std::size_t a = 0; a <= 4; ++a) {
      const auto fs = oracle::functions(a, c);
      for (std::size_t b = 0; b <= 4; ++b) {
        const auto gs = oracle::functions(b, c);
        for (const auto& f : fs) {
          const FinFunction ff({a}, {c}, f);
          for (const auto& g : gs) {
            ++cospans;
            const PullbackResult pb = pullback(ff, FinFunction({b}, {c}, g));
            const auto pairs = oracle::pullback_pairs(f, g);
            bool same = pb.apex.size == pairs.size();
            for (std::size_t i = 0; same && i < pairs.size(); ++i) {
              same = pb.p1(i) == pairs[i].first && pb.p2(i) == pairs[i].second;
            }
            if (!same) {
              out.require(false, "pullback of " + ff.to_string() + " differs from the pair filter");
              return;
            }
          }
        }
      }
    }
  }
  out.note << cospans << " cospans";
}

std::shared_ptr<SpanFragment> span_fragment_12() { return span_fragment({1, 2}, 2); }

void coherence(Outcome& out) {
  auto f = span_fragment_12();
  Report r = check_coherence(*f, {jobs(), 25});
  out.require(r.status == Status::pass && r.violations == 0, "coherence: " + r.to_json().dump());
  out.note << r.instances << " instances";
}

void generic_structure(Outcome& out) {
  auto f = span_fragment_12();
  Analyzer an(*f, jobs());
  Report r = is_generic_bicategory(an, {jobs(), 25});
  out.require(r.status == Status::pass, "is_generic_bicategory: " + r.to_json().dump());
  std::size_t pairs = 0;
  for (OneCell c : all_base_cells(*f)) {
    const std::size_t apex = to_span(*f, c).apex.size;
    for (ObjectId y : f->objects()) {
      const std::size_t ysize = std::stoul(f->object_name(y));
      const ElementsCategory& e = an.elements(c, y);
      std::size_t classes = 0;
      for (std::size_t k = 0; k < e.components().size(); ++k) classes += e.canonical_initial(k).has_value();
      ++pairs;
      out.require(classes == e.components().size() && classes == oracle::power(ysize, apex),
                  f->name(c) + " through " + f->object_name(y) + ": " + std::to_string(classes) +
                      " generic classes, expected " + std::to_string(oracle::power(ysize, apex)));
    }
  }
  out.note << pairs << " (span, Y) pairs";
}

// δ: (s,t) => (s,σ);(σ,t) for some bijection σ from the apex onto Y.
bool unit_shaped(const SpanFragment& f, const InitialGenericWitness& w) {
  const Span c = to_span(f, w.cell);
  const std::size_t t = c.apex.size;
  if (std::stoul(f.object_name(w.middle)) != t) return false;
  if (!is_invertible(f, w.delta.cell)) return false;
  for (const auto& sigma : oracle::bijections(t)) {
    const FinFunction s({t}, {t}, sigma);
    const OneCell l = from_span(f, Span(c.left, s)), r = from_span(f, Span(s, c.right));
    if (find_invertible(f, w.delta.left, l) && find_invertible(f, w.delta.right, r)) return true;
  }
  return false;
}

void axioms_positive(Outcome& out) {
  auto f = span_fragment_12();
  Analyzer an(*f, jobs());
  Axiom1Result a1 = check_axiom1(an, {jobs(), 25});
  out.require(a1.report.status == Status::pass, "axiom1: " + a1.report.to_json().dump());
  Report a2 = check_axiom2(an, a1.witnesses, {jobs(), 25});
  out.require(a2.status == Status::pass, "axiom2: " + a2.to_json().dump());
  const auto cells = all_base_cells(*f);
  out.require(a1.witnesses.size() == cells.size(), "not every span has a witness");
  for (const auto& w : a1.witnesses) {
    out.require(unit_shaped(*f, w), "witness for " + f->name(w.cell) + " is " + element_json(*f, w.delta).dump());
  }
  out.note << a1.witnesses.size() << " witnesses of the form (s,t) => (s,1);(1,t)";
}

void axioms_negative(Outcome& out) {
  auto b = monoid_bicat(truncated_addition_monoid(2));
  Analyzer an(*b);
  Report g = is_generic_bicategory(an);
  out.require(g.status == Status::pass, "is_generic_bicategory should pass");
  Axiom1Result a1 = check_axiom1(an);
  out.require(a1.report.status == Status::fail, "axiom1 should fail");
  const json* w2 = nullptr;
  std::vector<std::string> cells;
  for (const json& w : a1.report.witnesses) {
    cells.push_back(w.at("cell"));
    if (w.at("cell") == "2") w2 = &w;
  }
  out.require(w2 != nullptr, "no witness for c = 2");
  if (w2) {
    std::set<std::pair<std::string, std::string>> seen;
    for (const json& e : w2->at("factorizations"))
      seen.insert({e.at("left").get<std::string>(), e.at("right").get<std::string>()});
    for (const auto& named : {std::pair<std::string, std::string>{"0", "2"}, {"1", "1"}, {"2", "0"}}) {
      out.require(seen.contains(named), "c = 2 lacks the factorization (" + named.first + "," + named.second + ")");
    }
    // Every a + b capped at 2 that reaches 2, by direct enumeration of the table.
    std::set<std::pair<std::string, std::string>> expected;
    for (std::size_t a = 0; a <= 2; ++a) {
      for (std::size_t b = 0; b <= 2; ++b) {
        if (std::min<std::size_t>(a + b, 2) == 2) expected.insert({std::to_string(a), std::to_string(b)});
      }
    }
    out.require(seen == expected && w2->at("factorizations").size() == expected.size(),
                "c = 2 factorizations are " + w2->at("factorizations").dump());
  }
  out.note << "witnesses c =";
  for (const auto& c : cells) out.note << " " << c;
}

std::vector<std::string> failing_reports(const json& bundle) {
  std::vector<std::string> out;
  for (const json& r : bundle.at("reports")) {
    if (r.at("status") != "pass") out.push_back(r.at("id"));
  }
  return out;
}

void lemma_suite(Outcome& out) {
  const cli::RunOptions run{std::nullopt, std::nullopt, jobs(), 0};
  json clean = cli::cmd_check(load_fixture_file(fixture_path("span-1-2")), "lemmas", run).bundle;
  out.require(failing_reports(clean).empty(), "span fragment fails lemmas");
  out.require(clean.at("reports").size() == lemma_names().size(), "lemma report count");
  for (const std::string& lemma : lemma_names()) {
    FixtureDocument doc = load_fixture_file(fixture_path("mutants/inject-" + lemma));
    out.require(doc.mutation.at("lemma") == lemma, "mutant fixture targets another lemma");
    json b = cli::cmd_check(doc, "lemmas", run).bundle;
    const auto failing = failing_reports(b);
    out.require(failing == std::vector<std::string>{lemma}, "inject-" + lemma + " fails " + json(failing).dump());
  }
  out.note << lemma_names().size() << " lemmas, " << lemma_names().size() << " mutants";
}

void mates(Outcome& out) {
  auto f = span_fragment_12();
  AdjointIndex adj(*f, jobs());
  Report m = check_mates(adj, {jobs(), 25});
  out.require(m.status == Status::pass && m.instances > 0, "mates: " + m.to_json().dump());

  auto g = span_fragment({1, 2, 3}, 3, 9);
  AdjointIndex adj3(*g, jobs());
  std::size_t spans = 0;
  for (ObjectId x : g->objects()) {
    for (ObjectId z : g->objects()) {
      for (OneCell a : g->one_cells(x, z)) {
        ++spans;
        const Span s = to_span(*g, a);
        const bool bij = oracle::bijective(s.left.image(), s.src.size);
        out.require(adj3.is_left_adjoint(a) == bij, g->name(a) + " adjoint detection disagrees");
      }
    }
  }
  std::size_t expected = 0;
  for (std::size_t x = 1; x <= 3; ++x) {
    for (std::size_t z = 1; z <= 3; ++z) expected += oracle::spans(x, z, {1, 2, 3}).size();
  }
  out.require(spans == expected, "span count " + std::to_string(spans) + " vs " + std::to_string(expected));
  out.note << m.instances << " mate round trips, " << spans << " spans with apex <= 3";
}

void roundtrip(Outcome& out) {
  auto f = span_fragment_12();
  RoundtripResult r = roundtrip_span(*f, {jobs(), 25});
  out.require(r.passed(), "roundtrip_span failed");
  for (const Report& rep : r.reports) {
    out.require(rep.status == Status::pass, rep.id + " " + rep.to_json().dump().substr(0, 400));
  }
  out.require(r.category.has_value(), "no category");
  if (!r.category) return;
  const auto& p = *r.category;
  const std::vector<std::size_t> sizes{1, 2};
  for (std::size_t m = 0; m < 2; ++m) {
    for (std::size_t n = 0; n < 2; ++n) {
      std::size_t count = 0;
      for (const auto& mor : p.morphisms) count += mor.src == m && mor.tgt == n;
      const auto expected = oracle::functions(sizes[m], sizes[n]).size();
      out.require(count == expected,
                  "|E(" + std::to_string(sizes[m]) + "," + std::to_string(sizes[n]) + ")| = " + std::to_string(count));
    }
  }

  // Composable E-span pairs and which of them have a pullback apex among the objects.
  std::size_t pairs = 0, inside = 0;
  for (std::size_t x : sizes) {
    for (std::size_t y : sizes) {
      for (std::size_t z : sizes) {
        for (const auto& s : oracle::spans(x, y, sizes)) {
          for (const auto& t : oracle::spans(y, z, sizes)) {
            ++pairs;
            const std::size_t apex = oracle::composite_apex(s, t);
            inside += apex == 1 || apex == 2;
          }
        }
      }
    }
  }
  const Report* pb = nullptr;
  for (const Report& rep : r.reports) {
    if (rep.id == "composition-is-pullback") pb = &rep;
  }
  out.require(pb != nullptr, "no composition-is-pullback report");
  if (!pb) return;
  const json& d = pb->details;
  out.require(d.at("span_pairs") == pairs, "span pairs " + d.at("span_pairs").dump());
  out.require(d.at("limiting_cones") == inside, "limiting cones " + d.at("limiting_cones").dump());
  out.require(d.at("apex_outside_objects") == pairs - inside, "outside " + d.at("apex_outside_objects").dump());
  out.require(d.at("skipped_outside_closure") == 0, "pairs skipped");
  out.note << pairs << " span pairs, " << inside << " limiting cones, " << d.at("bijections") << " bijections";
}

void determinism(Outcome& out) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::recursive_directory_iterator(SPANBICAT_FIXTURE_DIR)) {
    if (e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& p : files) {
    const FixtureDocument doc = load_fixture_file(p.string());
    const std::string a = cli::cmd_check(doc, "all", {std::nullopt, std::nullopt, 1, 0}).bundle.dump(2);
    const std::string b = cli::cmd_check(doc, "all", {std::nullopt, std::nullopt, 4, 0}).bundle.dump(2);
    out.require(a == b, p.filename().string() + " differs between runs");
  }
  out.note << files.size() << " fixtures";
}

}  // namespace

int main() {
  struct Entry {
    int number;
    const char* title;
    double limit_seconds;
    Criterion run;
  };
  const std::vector<Entry> entries{
      {1, "pullback oracle equivalence", 10, pullback_oracle},
      {2, "span bicategory coherence", 60, coherence},
      {3, "generic structure of spans", 120, generic_structure},
      {4, "axiom checkers, positive", 0, axioms_positive},
      {5, "axiom checkers, negative", 1, axioms_negative},
      {6, "lemma suite and mutants", 0, lemma_suite},
      {7, "mates and adjoint detection", 0, mates},
      {8, "reconstruction round trip", 300, roundtrip},
      {9, "determinism", 0, determinism},
  };
  bool all = true;
  for (const Entry& e : entries) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      e.run(out);
    } catch (const std::exception& ex) {
      out.require(false, std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (e.limit_seconds > 0 && secs >= e.limit_seconds) {
      out.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(e.limit_seconds) + " s");
    }
    all = all && out.ok;
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << secs;
    std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << e.number << " (" << e.title << ", " << time.str()
              << " s): " << out.note.str() << std::endl;
  }
  return all ? 0 : 1;
}
