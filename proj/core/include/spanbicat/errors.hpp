#pragma once

#include <stdexcept>
#include <string>

namespace spanbicat {

class CompositionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PullbackError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NoMediatorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A composite or cell needed by a scan lies outside the fragment.
class FragmentIncomplete : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A base category presentation is missing a pullback that span composition needs.
class IncompleteBase : public FragmentIncomplete {
 public:
  using FragmentIncomplete::FragmentIncomplete;
};

class NoInitialObject : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GateFailure : public std::runtime_error {
 public:
  GateFailure(std::string gate, std::string detail)
      : std::runtime_error("gate '" + gate + "' failed: " + detail), gate_(std::move(gate)) {}
  const std::string& gate() const { return gate_; }

 private:
  std::string gate_;
};

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spanbicat
