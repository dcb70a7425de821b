#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spanbicat/errors.hpp"

namespace spanbicat {

// The finite set {0, ..., size-1}.
struct FinSetObj {
  std::size_t size = 0;

  friend auto operator<=>(const FinSetObj&, const FinSetObj&) = default;
};

class FinFunction {
 public:
  FinFunction() = default;
  FinFunction(FinSetObj dom, FinSetObj cod, std::vector<std::size_t> image);

  static FinFunction identity(FinSetObj x);
  static FinFunction constant(FinSetObj dom, FinSetObj cod, std::size_t value);

  FinSetObj dom() const { return dom_; }
  FinSetObj cod() const { return cod_; }
  const std::vector<std::size_t>& image() const { return image_; }
  std::size_t operator()(std::size_t i) const { return image_[i]; }

  std::string to_string() const;

  friend bool operator==(const FinFunction&, const FinFunction&) = default;
  friend auto operator<=>(const FinFunction&, const FinFunction&) = default;

 private:
  FinSetObj dom_;
  FinSetObj cod_;
  std::vector<std::size_t> image_;
};

// Diagrammatic order: apply f, then g.
FinFunction compose_fn(const FinFunction& f, const FinFunction& g);

struct PullbackResult {
  FinSetObj apex;
  FinFunction p1;
  FinFunction p2;
  FinFunction f;
  FinFunction g;
};

// Apex enumerates pairs (a, b) with f(a) = g(b) in lexicographic order.
PullbackResult pullback(const FinFunction& f, const FinFunction& g);

FinFunction pullback_mediator(const PullbackResult& pb, const FinFunction& x, const FinFunction& y);

bool is_bijection(const FinFunction& f);

// Functions dom -> cod are indexed by reading the image as a big-endian
// base-cod numeral, which is lexicographic order on image sequences.
std::uint64_t function_count(FinSetObj dom, FinSetObj cod);
std::uint64_t function_index(const FinFunction& f);
FinFunction function_at(FinSetObj dom, FinSetObj cod, std::uint64_t index);
std::vector<FinFunction> all_functions(FinSetObj dom, FinSetObj cod);

std::optional<FinFunction> inverse(const FinFunction& f);

}  // namespace spanbicat
