#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "commands.hpp"
#include "spanbicat/errors.hpp"

namespace {

using namespace spanbicat;
using namespace spanbicat::cli;

struct Common {
  std::optional<std::size_t> apex_bound;
  std::optional<std::size_t> closure_bound;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  std::optional<std::string> report;
  std::string format = "json";

  RunOptions run() const { return {apex_bound, closure_bound, jobs, seed}; }
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--apex-bound", c.apex_bound, "largest apex kept in a span fragment");
  app->add_option("--closure-bound", c.closure_bound, "largest apex kept for composites");
  app->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
  app->add_option("--seed", c.seed, "reserved");
  app->add_option("--report", c.report, "write the report bundle to this path");
  app->add_option("--format", c.format, "stdout format")->check(CLI::IsMember({"json", "text"}));
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FixtureError("cannot write '" + path + "'");
  out << text;
  if (!out) throw FixtureError("failed writing '" + path + "'");
}

int emit(const CommandResult& res, const Common& c, const std::string& default_name) {
  const std::string text = res.bundle.dump(2) + "\n";
  if (auto dest = report_destination(c.report, default_name)) write_file(*dest, text);
  std::cout << (c.format == "text" ? render_text(res.bundle) : text);
  return res.exit_code;
}

std::string stem(const FixtureDocument& doc) { return doc.name.empty() ? std::string("fixture") : doc.name; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spanbicat: finite fragments of bicategories of spans"};
  app.require_subcommand(1);

  Common common;
  std::string fixture_path;

  auto* gen = app.add_subcommand("generate", "emit a fixture");
  std::string gen_kind;
  GenerateParams gen_params;
  std::optional<std::string> gen_out;
  gen->add_option("kind", gen_kind, "span-finset | finset-span | monoid | bicat-fragment")->required();
  gen->add_option("--objects", gen_params.objects, "object sizes")->delimiter(',');
  gen->add_option("--apex-bound", gen_params.apex_bound, "largest apex");
  gen->add_option("--closure-bound", gen_params.closure_bound, "largest apex for composites");
  gen->add_option("--table", gen_params.table, "trunc-add-N | cyclic-N | trivial | idempotent-component");
  gen->add_option("-o,--output", gen_out, "write the fixture here instead of stdout");

  auto* check = app.add_subcommand("check", "run a check suite");
  std::string suite = "all";
  check->add_option("fixture", fixture_path, "fixture file")->required();
  check->add_option("--suite", suite, "suite")->check(CLI::IsMember(check_suites()));
  add_common(check, common);

  auto* factor = app.add_subcommand("factor", "factor a 2-cell through the initial generic");
  std::vector<std::string> factor_cell;
  factor->add_option("fixture", fixture_path, "fixture file")->required();
  factor->add_option("--cell", factor_cell, "source left right cell")->expected(4)->allow_extra_args(false)->required();
  add_common(factor, common);

  auto* recon = app.add_subcommand("reconstruct", "reconstruct the category of left adjoints");
  std::optional<std::string> category_out;
  recon->add_option("fixture", fixture_path, "fixture file")->required();
  recon->add_option("--category", category_out, "write E as a fixture here");
  add_common(recon, common);

  auto* dot = app.add_subcommand("export-dot", "render a span diagram as DOT");
  std::optional<std::string> dot_span;
  std::vector<std::string> dot_composite, dot_morphism, dot_factor;
  dot->add_option("fixture", fixture_path, "fixture file")->required();
  dot->add_option("--span", dot_span, "1-cell");
  dot->add_option("--composite", dot_composite, "two 1-cells")->expected(2)->allow_extra_args(false);
  dot->add_option("--morphism", dot_morphism, "source target cell")->expected(3)->allow_extra_args(false);
  dot->add_option("--factor", dot_factor, "source left right cell")->expected(4)->allow_extra_args(false);
  add_common(dot, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitIncomplete;
  }

  auto element = [](const std::vector<std::string>& v) {
    return nlohmann::json{{"source", v[0]}, {"left", v[1]}, {"right", v[2]}, {"cell", v[3]}};
  };

  try {
    if (gen->parsed()) {
      const std::string text = fixture_text(cmd_generate(gen_kind, gen_params));
      if (gen_out) {
        write_file(*gen_out, text);
      } else {
        std::cout << text;
      }
      return kExitPass;
    }
    const FixtureDocument doc = load_fixture_file(fixture_path);
    if (check->parsed()) {
      return emit(cmd_check(doc, suite, common.run()), common, stem(doc) + "." + suite + ".json");
    }
    if (factor->parsed()) {
      return emit(cmd_factor(doc, element(factor_cell), common.run()), common, stem(doc) + ".factor.json");
    }
    if (recon->parsed()) {
      CommandResult res = cmd_reconstruct(doc, common.run());
      if (category_out && res.bundle.contains("category")) {
        write_file(*category_out, res.bundle.at("category").dump(2) + "\n");
      }
      return emit(res, common, stem(doc) + ".reconstruct.json");
    }
    DotSelector sel;
    sel.span = dot_span;
    if (!dot_composite.empty()) sel.composite = std::make_pair(dot_composite[0], dot_composite[1]);
    if (!dot_morphism.empty()) sel.morphism = dot_morphism;
    if (!dot_factor.empty()) sel.factor = element(dot_factor);
    std::cout << cmd_export_dot(doc, sel, common.run());
    return kExitPass;
  } catch (const std::exception& e) {
    std::cerr << "spanbicat: " << e.what() << "\n";
    return kExitIncomplete;
  }
}
