#include "spanbicat/report.hpp"

#include <stdexcept>

namespace spanbicat {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::incomplete:
      return "incomplete";
    case Status::skipped:
      return "skipped";
  }
  return "unknown";
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "incomplete") return Status::incomplete;
  if (s == "skipped") return Status::skipped;
  throw std::invalid_argument("unknown status '" + s + "'");
}

void Report::violation(nlohmann::json witness) {
  ++violations;
  if (status != Status::incomplete) status = Status::fail;
  if (witnesses.size() < max_witnesses) witnesses.push_back(std::move(witness));
}

void Report::incomplete(const std::string& reason) {
  status = Status::incomplete;
  details["incomplete"] = reason;
}

nlohmann::json Report::to_json() const {
  return nlohmann::json{{"id", id},
                        {"status", to_string(status)},
                        {"scope", scope},
                        {"instances", instances},
                        {"violations", violations},
                        {"witnesses", witnesses},
                        {"details", details}};
}

}  // namespace spanbicat
