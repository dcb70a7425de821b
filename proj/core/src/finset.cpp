#include "spanbicat/finset.hpp"

#include <limits>
#include <sstream>

namespace spanbicat {

FinFunction::FinFunction(FinSetObj dom, FinSetObj cod, std::vector<std::size_t> image)
    : dom_(dom), cod_(cod), image_(std::move(image)) {
  if (image_.size() != dom_.size) {
    throw ConstructionError("function image has " + std::to_string(image_.size()) + " entries but domain has size " +
                            std::to_string(dom_.size));
  }
  for (std::size_t v : image_) {
    if (v >= cod_.size) {
      throw ConstructionError("function value " + std::to_string(v) + " outside codomain of size " +
                              std::to_string(cod_.size));
    }
  }
}

FinFunction FinFunction::identity(FinSetObj x) {
  std::vector<std::size_t> img(x.size);
  for (std::size_t i = 0; i < x.size; ++i) img[i] = i;
  return FinFunction(x, x, std::move(img));
}

FinFunction FinFunction::constant(FinSetObj dom, FinSetObj cod, std::size_t value) {
  return FinFunction(dom, cod, std::vector<std::size_t>(dom.size, value));
}

std::string FinFunction::to_string() const {
  std::ostringstream os;
  os << dom_.size << "->" << cod_.size << "[";
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (i) os << ",";
    os << image_[i];
  }
  os << "]";
  return os.str();
}

FinFunction compose_fn(const FinFunction& f, const FinFunction& g) {
  if (f.cod() != g.dom()) {
    throw CompositionError("cannot compose " + f.to_string() + " with " + g.to_string());
  }
  std::vector<std::size_t> img(f.dom().size);
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = g(f(i));
  return FinFunction(f.dom(), g.cod(), std::move(img));
}

PullbackResult pullback(const FinFunction& f, const FinFunction& g) {
  if (f.cod() != g.cod()) {
    throw PullbackError("cospan " + f.to_string() + ", " + g.to_string() + " has mismatched codomains");
  }
  std::vector<std::size_t> left, right;
  for (std::size_t a = 0; a < f.dom().size; ++a) {
    for (std::size_t b = 0; b < g.dom().size; ++b) {
      if (f(a) == g(b)) {
        left.push_back(a);
        right.push_back(b);
      }
    }
  }
  FinSetObj apex{left.size()};
  return PullbackResult{apex, FinFunction(apex, f.dom(), std::move(left)), FinFunction(apex, g.dom(), std::move(right)),
                        f, g};
}

FinFunction pullback_mediator(const PullbackResult& pb, const FinFunction& x, const FinFunction& y) {
  if (x.dom() != y.dom() || x.cod() != pb.f.dom() || y.cod() != pb.g.dom()) {
    throw NoMediatorError("cone legs " + x.to_string() + ", " + y.to_string() + " do not match the cospan");
  }
  // Index of pair (a, b) in the apex: pairs are sorted, so count those before it.
  std::vector<std::size_t> img(x.dom().size);
  for (std::size_t t = 0; t < img.size(); ++t) {
    std::size_t a = x(t), b = y(t);
    if (pb.f(a) != pb.g(b)) {
      throw NoMediatorError("cone " + x.to_string() + ", " + y.to_string() + " does not commute at " +
                            std::to_string(t));
    }
    std::size_t idx = 0;
    while (pb.p1(idx) != a || pb.p2(idx) != b) ++idx;
    img[t] = idx;
  }
  return FinFunction(x.dom(), pb.apex, std::move(img));
}

bool is_bijection(const FinFunction& f) {
  if (f.dom() != f.cod()) return false;
  std::vector<bool> seen(f.cod().size, false);
  for (std::size_t v : f.image()) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::uint64_t function_count(FinSetObj dom, FinSetObj cod) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < dom.size; ++i) {
    if (cod.size != 0 && n > std::numeric_limits<std::uint64_t>::max() / cod.size) {
      throw ConstructionError("function set " + std::to_string(dom.size) + "->" + std::to_string(cod.size) +
                              " too large to index");
    }
    n *= cod.size;
  }
  return n;
}

std::uint64_t function_index(const FinFunction& f) {
  std::uint64_t code = 0;
  for (std::size_t v : f.image()) code = code * f.cod().size + v;
  return code;
}

FinFunction function_at(FinSetObj dom, FinSetObj cod, std::uint64_t index) {
  if (index >= function_count(dom, cod)) {
    throw ConstructionError("function index out of range");
  }
  std::vector<std::size_t> img(dom.size);
  for (std::size_t i = dom.size; i-- > 0;) {
    img[i] = static_cast<std::size_t>(index % cod.size);
    index /= cod.size;
  }
  return FinFunction(dom, cod, std::move(img));
}

std::vector<FinFunction> all_functions(FinSetObj dom, FinSetObj cod) {
  std::vector<FinFunction> out;
  std::uint64_t n = function_count(dom, cod);
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(function_at(dom, cod, i));
  return out;
}

std::optional<FinFunction> inverse(const FinFunction& f) {
  if (!is_bijection(f)) return std::nullopt;
  std::vector<std::size_t> img(f.dom().size);
  for (std::size_t i = 0; i < img.size(); ++i) img[f(i)] = i;
  return FinFunction(f.cod(), f.dom(), std::move(img));
}

}  // namespace spanbicat
