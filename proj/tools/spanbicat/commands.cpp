#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "spanbicat/adjunction.hpp"
#include "spanbicat/axioms.hpp"
#include "spanbicat/coherence.hpp"
#include "spanbicat/dot.hpp"
#include "spanbicat/generic.hpp"
#include "spanbicat/lemmas.hpp"
#include "spanbicat/mutants.hpp"
#include "spanbicat/reconstruct.hpp"

namespace spanbicat::cli {

using nlohmann::json;

namespace {

std::optional<FixtureBounds> bounds_override(const FixtureDocument& doc, const RunOptions& opts) {
  if (!opts.apex_bound && !opts.closure_bound) return std::nullopt;
  FixtureBounds b = doc.bounds;
  if (opts.apex_bound) {
    b.apex_bound = *opts.apex_bound;
    if (!opts.closure_bound) b.closure_bound.reset();
  }
  if (opts.closure_bound) b.closure_bound = opts.closure_bound;
  return b;
}

json fixture_header(const FixtureDocument& doc) { return {{"name", doc.name}, {"kind", doc.kind()}}; }

std::string overall_status(int code) {
  switch (code) {
    case kExitPass:
      return "pass";
    case kExitViolation:
      return "fail";
    default:
      return "incomplete";
  }
}

std::size_t parse_suffix(const std::string& table, const std::string& prefix) {
  const std::string rest = table.substr(prefix.size());
  if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw std::invalid_argument("table '" + table + "' needs a numeric suffix");
  }
  return std::stoul(rest);
}

}  // namespace

const std::vector<std::string>& check_suites() {
  static const std::vector<std::string> suites{"coherence", "generic", "axiom1", "axiom2", "lemmas", "all"};
  return suites;
}

int exit_code_for(const json& reports) {
  bool incomplete = false;
  for (const json& r : reports) {
    const std::string s = r.at("status").get<std::string>();
    if (s == "fail") return kExitViolation;
    if (s == "incomplete") incomplete = true;
  }
  return incomplete ? kExitIncomplete : kExitPass;
}

FixtureDocument cmd_generate(const std::string& kind, const GenerateParams& params) {
  FixtureDocument doc;
  if (kind == "span-finset" || kind == "finset-span") {
    if (params.objects.empty()) throw std::invalid_argument("--objects needs at least one size");
    doc.payload = FinsetSpanPayload{params.objects};
    doc.bounds = {params.apex_bound, params.closure_bound};
    std::string sizes;
    for (std::size_t o : params.objects) sizes += (sizes.empty() ? "" : "-") + std::to_string(o);
    doc.name = "span-finset-" + sizes + "-apex" + std::to_string(params.apex_bound);
  } else if (kind == "monoid") {
    MonoidPresentation m;
    if (params.table.rfind("trunc-add-", 0) == 0) {
      std::size_t n = parse_suffix(params.table, "trunc-add-");
      if (n == 0) throw std::invalid_argument("trunc-add needs at least one element");
      m = truncated_addition_monoid(n - 1);
    } else if (params.table.rfind("cyclic-", 0) == 0) {
      std::size_t n = parse_suffix(params.table, "cyclic-");
      if (n == 0) throw std::invalid_argument("cyclic needs at least one element");
      m = cyclic_group(n);
    } else if (params.table == "trivial") {
      m = trivial_monoid();
    } else {
      throw std::invalid_argument("unknown monoid table '" + params.table + "'");
    }
    doc.payload = std::move(m);
    doc.name = params.table;
  } else if (kind == "bicat-fragment") {
    if (params.table != "idempotent-component") {
      throw std::invalid_argument("unknown bicat-fragment table '" + params.table + "'");
    }
    doc.payload = idempotent_component_fragment()->tables();
    doc.name = params.table;
  } else {
    throw std::invalid_argument("cannot generate fixtures of kind '" + kind + "'");
  }
  return doc;
}

CommandResult cmd_check(const FixtureDocument& doc, const std::string& suite, const RunOptions& opts) {
  const auto& suites = check_suites();
  if (std::find(suites.begin(), suites.end(), suite) == suites.end()) {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  LoadedFixture lf = build_fixture(doc, bounds_override(doc, opts));
  const BicatFragment& b = *lf.fragment;
  const CheckOptions co{std::max(1u, opts.jobs), CheckOptions{}.max_witnesses};
  const bool all = suite == "all";
  json reports = json::array();
  auto add = [&](const Report& r) { reports.push_back(r.to_json()); };

  // A check that runs into a missing cell reports incomplete under its own id.
  auto guarded = [&](const std::string& id, const std::function<Report()>& run) {
    try {
      return run();
    } catch (const FragmentIncomplete& e) {
      Report r(id, b.scope());
      r.incomplete(e.what());
      return r;
    }
  };

  if (all || suite == "coherence") add(guarded("coherence", [&] { return check_coherence(b, co); }));
  if (suite != "coherence") {
    Analyzer an(b, co.jobs);
    if (all || suite == "generic") add(guarded("generic", [&] { return is_generic_bicategory(an, co); }));
    if (all) {
      for (ObjectId x : b.objects()) {
        add(guarded("identity-initial", [&] { return check_identity_initial(an, x); }));
      }
    }
    if (suite != "generic") {
      Axiom1Result a1;
      try {
        a1 = check_axiom1(an, co);
      } catch (const FragmentIncomplete& e) {
        a1.report = Report("axiom1", b.scope());
        a1.report.incomplete(e.what());
      }
      std::vector<InitialGenericWitness> witnesses = a1.witnesses;
      if (lf.replaced_generic) {
        const Element& d = *lf.replaced_generic;
        auto it = std::find_if(witnesses.begin(), witnesses.end(),
                               [&](const InitialGenericWitness& w) { return w.cell == d.cell.src; });
        if (it != witnesses.end()) {
          *it = make_witness(an, d);
        } else {
          witnesses.push_back(make_witness(an, d));
        }
      }
      if (all || suite == "axiom1") add(a1.report);
      Report a2 = guarded("axiom2", [&] { return check_axiom2(an, witnesses, co); });
      if (a1.report.status == Status::incomplete && a2.status == Status::pass) {
        a2.incomplete("initial generics are missing for some 1-cells");
      }
      if (all || suite == "axiom2") add(a2);
      if (all || suite == "lemmas") {
        AdjointIndex adj(b, co.jobs);
        Report uniq =
            guarded("left-adjoint-2cell-uniqueness", [&] { return check_left_adjoint_2cell_uniqueness(adj, co); });
        Report inv = guarded("left-adjoint-2cell-invertibility",
                             [&] { return check_left_adjoint_2cell_invertibility(adj, co); });
        if (all) {
          add(uniq);
          add(inv);
          add(guarded("mates", [&] { return check_mates(adj, co); }));
        }
        json gates{{"axiom1", to_string(a1.report.status)},
                   {"axiom2", to_string(a2.status)},
                   {"left-adjoint-2cell-uniqueness", to_string(uniq.status)},
                   {"left-adjoint-2cell-invertibility", to_string(inv.status)}};
        try {
          LemmaPremises premises = build_lemma_premises(an, adj, witnesses);
          if (lf.injected_premise) {
            inject_premise(b, premises, lf.injected_premise->first, lf.injected_premise->second);
          }
          for (const Report& r : check_lemma_suite(an, adj, premises, gates, co)) add(r);
        } catch (const FragmentIncomplete& e) {
          for (const std::string& name : lemma_names()) {
            Report r(name, b.scope());
            r.incomplete(e.what());
            r.details["gates"] = gates;
            add(r);
          }
        }
      }
    }
  }

  CommandResult out;
  out.exit_code = exit_code_for(reports);
  out.bundle = {{"command", "check"},
                {"suite", suite},
                {"fixture", fixture_header(doc)},
                {"scope", b.scope()},
                {"status", overall_status(out.exit_code)},
                {"exit_code", out.exit_code},
                {"reports", reports}};
  return out;
}

CommandResult cmd_factor(const FixtureDocument& doc, const json& cell, const RunOptions& opts) {
  LoadedFixture lf = build_fixture(doc, bounds_override(doc, opts));
  const BicatFragment& b = *lf.fragment;
  Analyzer an(b, std::max(1u, opts.jobs));
  const Element gamma = element_from_json(b, cell);
  const ObjectId y = b.target(gamma.left);

  Report rep("factor", b.scope());
  rep.instances = 1;
  json data{{"gamma", element_json(b, gamma)}};
  try {
    const auto& el = an.elements(gamma.cell.src, y);
    try {
      GenericFactorization g = factor_through_generic(el, gamma);
      data["generic"] = element_json(b, g.generic.cell);
      data["comparison"] = {{"left", cell_json(b, g.comparison.left)}, {"right", cell_json(b, g.comparison.right)}};
    } catch (const NoInitialObject& e) {
      rep.violation({{"diagnostic", "no-initial-object"}, {"reason", e.what()}});
    }
    const auto& search = an.find_initial_generic(gamma.cell.src);
    if (!search.witness) {
      rep.violation({{"diagnostic", "no-initial-generic"}, {"cell", b.name(gamma.cell.src)}});
    } else {
      const Element& delta = search.witness->delta;
      data["delta"] = element_json(b, delta);
      auto fac = an.factor(delta, gamma);
      if (!fac) {
        rep.violation({{"diagnostic", "no-factorization"}, {"delta", element_json(b, delta)}});
      } else {
        const Element pasted = an.paste(delta, fac->eta);
        auto whole = b.hcomp(fac->alpha, fac->beta);
        bool verified = whole && b.vcomp(pasted.cell, *whole) == gamma.cell;
        data["eta"] = element_json(b, fac->eta);
        data["h"] = b.name(fac->eta.left);
        data["k"] = b.name(fac->eta.right);
        data["alpha"] = cell_json(b, fac->alpha);
        data["beta"] = cell_json(b, fac->beta);
        data["pasting"] = element_json(b, pasted);
        data["verified"] = verified;
        if (!verified) rep.violation({{"diagnostic", "pasting-mismatch"}});
      }
    }
  } catch (const FragmentIncomplete& e) {
    rep.incomplete(e.what());
  }
  rep.details = data;
  CommandResult out;
  json reports = json::array({rep.to_json()});
  out.exit_code = exit_code_for(reports);
  out.bundle = {{"command", "factor"},        {"fixture", fixture_header(doc)},
                {"scope", b.scope()},         {"status", overall_status(out.exit_code)},
                {"exit_code", out.exit_code}, {"reports", reports}};
  return out;
}

CommandResult cmd_reconstruct(const FixtureDocument& doc, const RunOptions& opts) {
  LoadedFixture lf = build_fixture(doc, bounds_override(doc, opts));
  const CheckOptions co{std::max(1u, opts.jobs), CheckOptions{}.max_witnesses};
  RoundtripResult res;
  const auto* span = dynamic_cast<const SpanFragment*>(lf.fragment.get());
  if (span && dynamic_cast<const FinSetCategory*>(&span->base())) {
    res = roundtrip_span(*span, co);
  } else {
    res = reconstruct_fragment(*lf.fragment, co);
  }
  json reports = json::array();
  for (const Report& r : res.reports) reports.push_back(r.to_json());
  CommandResult out;
  out.exit_code = res.passed() ? kExitPass : exit_code_for(reports);
  if (out.exit_code == kExitPass && !res.passed()) out.exit_code = kExitViolation;
  out.bundle = {{"command", "reconstruct"},      {"fixture", fixture_header(doc)},
                {"scope", lf.fragment->scope()}, {"status", overall_status(out.exit_code)},
                {"exit_code", out.exit_code},    {"reports", reports}};
  if (res.category) {
    FixtureDocument e;
    e.name = (doc.name.empty() ? std::string("fragment") : doc.name) + "-E";
    e.description = "category of left adjoints reconstructed from " + (doc.name.empty() ? "a fragment" : doc.name);
    e.payload = PresentationPayload{*res.category, false};
    out.bundle["category"] = serialize_fixture(e);
  }
  return out;
}

std::string cmd_export_dot(const FixtureDocument& doc, const DotSelector& selector, const RunOptions& opts) {
  LoadedFixture lf = build_fixture(doc, bounds_override(doc, opts));
  const auto* f = dynamic_cast<const SpanFragment*>(lf.fragment.get());
  if (!f) throw FixtureError("DOT export needs a span fixture");
  const int chosen = int(selector.span.has_value()) + int(selector.composite.has_value()) +
                     int(selector.morphism.has_value()) + int(selector.factor.has_value());
  if (chosen != 1) throw FixtureError("choose exactly one of span, composite, morphism or factor");
  try {
    if (selector.span) return span_dot(*f, one_cell_named(*f, *selector.span));
    if (selector.composite) {
      return composite_dot(*f, one_cell_named(*f, selector.composite->first),
                           one_cell_named(*f, selector.composite->second));
    }
    if (selector.morphism) {
      const auto& m = *selector.morphism;
      if (m.size() != 3) throw FixtureError("morphism selector is source, target, cell");
      OneCell src = one_cell_named(*f, m[0]), tgt = one_cell_named(*f, m[1]);
      return span_morphism_dot(*f, two_cell_named(*f, src, tgt, m[2]));
    }
    Analyzer an(*f, std::max(1u, opts.jobs));
    return factorization_dot(an, element_from_json(*f, *selector.factor));
  } catch (const CompositionError& e) {
    throw FixtureError(e.what());
  } catch (const NoInitialObject& e) {
    throw FixtureError(e.what());
  }
}

std::string render_text(const json& bundle) {
  std::ostringstream out;
  out << bundle.value("command", "") << " " << bundle.at("fixture").value("name", "") << ": "
      << bundle.value("status", "") << "\n";
  for (const json& r : bundle.at("reports")) {
    out << "  " << r.at("id").get<std::string>();
    if (r.at("scope").contains("hom")) out << " " << r.at("scope").at("hom").dump();
    out << ": " << r.at("status").get<std::string>() << " (" << r.at("instances").get<std::size_t>() << " instances, "
        << r.at("violations").get<std::size_t>() << " violations)\n";
    if (!r.at("witnesses").empty()) out << "    first witness: " << r.at("witnesses").front().dump() << "\n";
    const json& d = r.at("details");
    if (d.contains("verified")) {
      for (const char* key : {"delta", "eta", "alpha", "beta"})
        out << "    " << key << ": " << d.at(key).dump() << "\n";
      out << "    h: " << d.at("h").get<std::string>() << "\n    k: " << d.at("k").get<std::string>() << "\n";
      out << "    pasting verified: " << (d.at("verified").get<bool>() ? "yes" : "no") << "\n";
    }
    if (d.contains("incomplete")) {
      out << "    incomplete: " << d.at("incomplete").get<std::string>() << "\n";
    }
  }
  return out.str();
}

std::optional<std::string> report_destination(const std::optional<std::string>& report_flag,
                                              const std::string& default_name) {
  const char* dir = std::getenv("SPANBICAT_REPORT_DIR");
  if (dir && *dir) {
    std::filesystem::path name =
        report_flag ? std::filesystem::path(*report_flag).filename() : std::filesystem::path(default_name);
    return (std::filesystem::path(dir) / name).string();
  }
  return report_flag;
}

}  // namespace spanbicat::cli
