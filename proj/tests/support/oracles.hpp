#pragma once

// Brute-force reference computations. None of these call into the library's
// finset or span code; they work on plain vectors.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Fn = std::vector<std::size_t>;

inline std::uint64_t power(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

// Every function {0..m-1} -> {0..n-1}, in lexicographic order of images.
inline std::vector<Fn> functions(std::size_t m, std::size_t n) {
  std::vector<Fn> out;
  if (m == 0) {
    out.push_back({});
    return out;
  }
  if (n == 0) return out;
  Fn f(m, 0);
  while (true) {
    out.push_back(f);
    std::size_t i = m;
    while (i > 0 && f[i - 1] == n - 1) f[--i] = 0;
    if (i == 0) break;
    ++f[i - 1];
  }
  return out;
}

// Pairs (a, b) with f(a) = g(b), lexicographic.
inline std::vector<std::pair<std::size_t, std::size_t>> pullback_pairs(const Fn& f, const Fn& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < f.size(); ++a) {
    for (std::size_t b = 0; b < g.size(); ++b) {
      if (f[a] == g[b]) out.emplace_back(a, b);
    }
  }
  return out;
}

inline bool bijective(const Fn& f, std::size_t cod) {
  if (f.size() != cod) return false;
  std::set<std::size_t> seen(f.begin(), f.end());
  return seen.size() == cod;
}

inline std::vector<Fn> bijections(std::size_t n) {
  Fn p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Fn> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// x then y.
inline Fn compose(const Fn& x, const Fn& y) {
  Fn out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = y[x[i]];
  return out;
}

// Spans X <- T -> Z with |T| drawn from apex_sizes.
struct SpanData {
  std::size_t apex;
  Fn left;
  Fn right;
};

inline std::vector<SpanData> spans(std::size_t x, std::size_t z, const std::vector<std::size_t>& apex_sizes) {
  std::vector<SpanData> out;
  for (std::size_t t : apex_sizes) {
    for (const Fn& l : functions(t, x)) {
      for (const Fn& r : functions(t, z)) out.push_back({t, l, r});
    }
  }
  return out;
}

// Maps m: S -> T with m;left_t = left_s and m;right_t = right_s.
inline std::size_t span_morphism_count(const SpanData& s, const SpanData& t) {
  std::size_t n = 0;
  for (const Fn& m : functions(s.apex, t.apex)) {
    if (compose(m, t.left) == s.left && compose(m, t.right) == s.right) ++n;
  }
  return n;
}

// Composite apex of s;t is the pullback of s.right and t.left.
inline std::size_t composite_apex(const SpanData& s, const SpanData& t) {
  return pullback_pairs(s.right, t.left).size();
}

}  // namespace oracle
