#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

#include "skewgb/error.hpp"

namespace skewgb {

// Exponent vector of a standard monomial x_1^{a_1} ... x_n^{a_n}.
using Exponent = std::vector<std::uint32_t>;

inline std::uint32_t total_degree(const Exponent& a) {
  return std::accumulate(a.begin(), a.end(), std::uint32_t{0});
}

inline void require_same_length(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size())
    throw invalid_argument_error("exponent length mismatch");
}

inline Exponent exp_add(const Exponent& a, const Exponent& b) {
  require_same_length(a, b);
  Exponent r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
  return r;
}

// Componentwise divisibility a | b.
inline bool exp_divides(const Exponent& a, const Exponent& b) {
  require_same_length(a, b);
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

// b - a; requires exp_divides(a, b).
inline Exponent exp_sub(const Exponent& b, const Exponent& a) {
  require_same_length(a, b);
  Exponent r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) throw invalid_argument_error("exponent subtraction underflow");
    r[k] = b[k] - a[k];
  }
  return r;
}

inline Exponent exp_lcm(const Exponent& a, const Exponent& b) {
  require_same_length(a, b);
  Exponent r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] > b[k] ? a[k] : b[k];
  return r;
}

// Fixed internal term order: degrevlex with the natural variable priority.
// Polynomials are stored sorted under this, independent of whatever order a
// computation runs with.
inline std::strong_ordering canonical_compare(const Exponent& a, const Exponent& b) {
  require_same_length(a, b);
  const std::uint32_t da = total_degree(a), db = total_degree(b);
  if (da != db) return da <=> db;
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] != b[k]) return a[k] < b[k] ? std::strong_ordering::greater
                                         : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

struct CanonicalExpLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    return canonical_compare(a, b) < 0;
  }
};

}  // namespace skewgb
