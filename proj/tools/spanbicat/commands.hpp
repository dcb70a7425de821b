#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "spanbicat/fixture.hpp"

namespace spanbicat::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitIncomplete = 2;

struct RunOptions {
  std::optional<std::size_t> apex_bound;
  std::optional<std::size_t> closure_bound;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
};

struct GenerateParams {
  std::vector<std::size_t> objects{1, 2};
  std::size_t apex_bound = 2;
  std::optional<std::size_t> closure_bound;
  // monoid: trunc-add-N (elements 0..N-1, sums capped), cyclic-N, trivial.
  // bicat-fragment: idempotent-component.
  std::string table;
};

struct CommandResult {
  int exit_code = kExitPass;
  // Deterministic report bundle: no timings, no paths.
  nlohmann::json bundle;
};

const std::vector<std::string>& check_suites();

// Throws std::invalid_argument on unknown kinds or tables.
FixtureDocument cmd_generate(const std::string& kind, const GenerateParams& params);

CommandResult cmd_check(const FixtureDocument& doc, const std::string& suite, const RunOptions& opts = {});

// γ given as {"source", "left", "right", "cell"}.
CommandResult cmd_factor(const FixtureDocument& doc, const nlohmann::json& cell, const RunOptions& opts = {});

// The bundle carries E as a category-presentation fixture under "category".
CommandResult cmd_reconstruct(const FixtureDocument& doc, const RunOptions& opts = {});

struct DotSelector {
  std::optional<std::string> span;
  std::optional<std::pair<std::string, std::string>> composite;
  // source, target, cell
  std::optional<std::vector<std::string>> morphism;
  // {"source", "left", "right", "cell"}
  std::optional<nlohmann::json> factor;
};

// Throws FixtureError when the selector does not resolve.
std::string cmd_export_dot(const FixtureDocument& doc, const DotSelector& selector, const RunOptions& opts = {});

// Exit code for a list of reports: any fail gives 1, else any incomplete gives 2.
int exit_code_for(const nlohmann::json& reports);

std::string render_text(const nlohmann::json& bundle);

// --report path, redirected into SPANBICAT_REPORT_DIR when that is set.
std::optional<std::string> report_destination(const std::optional<std::string>& report_flag,
                                              const std::string& default_name);

}  // namespace spanbicat::cli
