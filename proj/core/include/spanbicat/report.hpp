#pragma once

#include <cstddef>
#include <nlohmann/json.hpp>
#include <string>

namespace spanbicat {

enum class Status { pass, fail, incomplete, skipped };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

// Outcome of one quantified scan. Witnesses beyond max_witnesses are counted
// but not stored.
struct Report {
  std::string id;
  Status status = Status::pass;
  nlohmann::json scope = nlohmann::json::object();
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::size_t max_witnesses = 25;
  nlohmann::json witnesses = nlohmann::json::array();
  nlohmann::json details = nlohmann::json::object();

  Report() = default;
  Report(std::string id_, nlohmann::json scope_) : id(std::move(id_)), scope(std::move(scope_)) {}

  void violation(nlohmann::json witness);
  void incomplete(const std::string& reason);
  bool passed() const { return status == Status::pass; }

  nlohmann::json to_json() const;
};

struct CheckOptions {
  unsigned jobs = 1;
  std::size_t max_witnesses = 25;
};

}  // namespace spanbicat
