#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "skewgb/algebra.hpp"
#include "skewgb/error.hpp"
#include "skewgb/exponent.hpp"

namespace skewgb {

enum class OrderKind { deglex, degrevlex };

// Degree-compatible total order on standard monomials. Only deglex and
// degrevlex are offered; both compare total degree first, so 1 is minimal and
// the standard filtration machinery applies. The priority permutation lists
// variable indices from most to least significant.
class MonomialOrder {
public:
  MonomialOrder(OrderKind kind, std::size_t nvars)
      : kind_(kind), priority_(nvars) {
    for (std::size_t k = 0; k < nvars; ++k) priority_[k] = static_cast<unsigned>(k);
  }

  MonomialOrder(OrderKind kind, std::vector<unsigned> priority)
      : kind_(kind), priority_(std::move(priority)) {
    std::vector<bool> seen(priority_.size(), false);
    for (unsigned v : priority_) {
      if (v >= priority_.size() || seen[v])
        throw invalid_argument_error("variable priority is not a permutation");
      seen[v] = true;
    }
  }

  OrderKind kind() const { return kind_; }
  std::size_t nvars() const { return priority_.size(); }
  const std::vector<unsigned>& priority() const { return priority_; }

  std::strong_ordering compare(const Exponent& a, const Exponent& b) const {
    if (a.size() != priority_.size() || b.size() != priority_.size())
      throw invalid_argument_error("exponent length does not match the order");
    const std::uint32_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da <=> db;
    if (kind_ == OrderKind::deglex) {
      for (unsigned v : priority_)
        if (a[v] != b[v]) return a[v] <=> b[v];
    } else {
      for (std::size_t k = priority_.size(); k-- > 0;) {
        const unsigned v = priority_[k];
        if (a[v] != b[v])
          return a[v] < b[v] ? std::strong_ordering::greater : std::strong_ordering::less;
      }
    }
    return std::strong_ordering::equal;
  }

  bool operator==(const MonomialOrder&) const = default;

private:
  OrderKind kind_;
  std::vector<unsigned> priority_;
};

inline std::strong_ordering compare(const MonomialOrder& o, const Exponent& a,
                                    const Exponent& b) {
  return o.compare(a, b);
}

inline std::pair<Scalar, Exponent> leading_term(const Polynomial& f,
                                                const MonomialOrder& o) {
  if (f.is_zero()) throw zero_polynomial_error("leading term of the zero polynomial");
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it)
    if (o.compare(it->first, best->first) > 0) best = it;
  return {best->second, best->first};
}

inline Exponent leading_exponent(const Polynomial& f, const MonomialOrder& o) {
  return leading_term(f, o).second;
}

inline Scalar leading_coeff(const Polynomial& f, const MonomialOrder& o) {
  return leading_term(f, o).first;
}

// A standard monomial of the free module A^m: x^a in component comp.
struct ModuleMonomial {
  std::size_t component = 0;
  Exponent exp;

  bool operator==(const ModuleMonomial&) const = default;
};

enum class ModuleScheme { top, pot };

// Degree-compatible module order on Mon(A^m). Degree is compared first under
// either scheme; at equal degree TOP breaks ties by the base order and then by
// component, POT by component and then by the base order. The component
// priority lists components from most to least significant.
class ModuleOrder {
public:
  ModuleOrder(ModuleScheme scheme, MonomialOrder base, std::size_t rank)
      : scheme_(scheme), base_(std::move(base)), rank_of_(rank) {
    for (std::size_t k = 0; k < rank; ++k) rank_of_[k] = k;
  }

  ModuleOrder(ModuleScheme scheme, MonomialOrder base, std::vector<std::size_t> priority)
      : scheme_(scheme), base_(std::move(base)), rank_of_(priority.size()) {
    std::vector<bool> seen(priority.size(), false);
    for (std::size_t pos = 0; pos < priority.size(); ++pos) {
      const std::size_t comp = priority[pos];
      if (comp >= priority.size() || seen[comp])
        throw invalid_argument_error("component priority is not a permutation");
      seen[comp] = true;
      rank_of_[comp] = pos;
    }
  }

  ModuleScheme scheme() const { return scheme_; }
  const MonomialOrder& base() const { return base_; }
  std::size_t rank() const { return rank_of_.size(); }

  std::strong_ordering compare(const ModuleMonomial& x, const ModuleMonomial& y) const {
    if (x.component >= rank_of_.size() || y.component >= rank_of_.size())
      throw invalid_argument_error("module component out of range");
    const std::uint32_t dx = total_degree(x.exp), dy = total_degree(y.exp);
    if (dx != dy) return dx <=> dy;
    // Lower rank_of_ position means a greater component.
    const auto comp_cmp = rank_of_[y.component] <=> rank_of_[x.component];
    if (scheme_ == ModuleScheme::top) {
      const auto base_cmp = base_.compare(x.exp, y.exp);
      if (base_cmp != 0) return base_cmp;
      return comp_cmp;
    }
    if (comp_cmp != 0) return comp_cmp;
    return base_.compare(x.exp, y.exp);
  }

  bool operator==(const ModuleOrder&) const = default;

private:
  ModuleScheme scheme_;
  MonomialOrder base_;
  std::vector<std::size_t> rank_of_;  // component -> priority position
};

inline std::strong_ordering module_compare(const ModuleOrder& o, const ModuleMonomial& x,
                                           const ModuleMonomial& y) {
  return o.compare(x, y);
}

// The induced order on Mon(Gr(A)): exponents index both bases, so the
// comparison data carries over unchanged.
inline MonomialOrder induce_graded_order(const MonomialOrder& o) { return o; }

inline ModuleOrder induce_graded_module_order(const ModuleOrder& o) { return o; }

}  // namespace skewgb
