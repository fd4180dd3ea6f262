#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "skewgb/algebra.hpp"
#include "skewgb/error.hpp"
#include "skewgb/graded.hpp"
#include "skewgb/groebner.hpp"
#include "skewgb/orders.hpp"

namespace skewgb {

// An element of the free left module A^m, stored componentwise. Rank is fixed
// at construction; components are ordinary polynomials over one presentation.
class VectorPoly {
public:
  VectorPoly() = default;

  VectorPoly(AlgebraRef algebra, std::size_t rank) : algebra_(std::move(algebra)) {
    if (rank == 0) throw invalid_argument_error("module rank must be at least 1");
    comps_.assign(rank, Polynomial(algebra_));
  }

  explicit VectorPoly(std::vector<Polynomial> components)
      : comps_(std::move(components)) {
    if (comps_.empty()) throw invalid_argument_error("module rank must be at least 1");
    algebra_ = comps_.front().algebra();
    for (const Polynomial& p : comps_)
      if (!same_algebra(p.algebra(), algebra_))
        throw algebra_mismatch_error("vector components over different presentations");
  }

  static VectorPoly monomial(AlgebraRef a, std::size_t rank, std::size_t component,
                             Exponent e, const Scalar& coeff) {
    VectorPoly v(std::move(a), rank);
    v.add_term(component, e, coeff);
    return v;
  }

  const AlgebraRef& algebra() const { return algebra_; }
  std::size_t rank() const { return comps_.size(); }
  const std::vector<Polynomial>& components() const { return comps_; }

  const Polynomial& component(std::size_t k) const {
    if (k >= comps_.size()) throw invalid_argument_error("module component out of range");
    return comps_[k];
  }

  bool is_zero() const {
    for (const Polynomial& p : comps_)
      if (!p.is_zero()) return false;
    return true;
  }

  void add_term(std::size_t component, const Exponent& e, const Scalar& coeff) {
    if (component >= comps_.size())
      throw invalid_argument_error("module component out of range");
    comps_[component].add_term(e, coeff);
  }

  bool operator==(const VectorPoly& other) const {
    return comps_ == other.comps_;
  }

private:
  AlgebraRef algebra_;
  std::vector<Polynomial> comps_;
};

inline void require_same_module(const VectorPoly& f, const VectorPoly& g) {
  if (f.rank() != g.rank()) throw invalid_argument_error("module rank mismatch");
  if (!same_algebra(f.algebra(), g.algebra()))
    throw algebra_mismatch_error("vectors over different presentations");
}

inline VectorPoly vec_add(const VectorPoly& f, const VectorPoly& g) {
  require_same_module(f, g);
  std::vector<Polynomial> comps;
  comps.reserve(f.rank());
  for (std::size_t k = 0; k < f.rank(); ++k)
    comps.push_back(poly_add(f.component(k), g.component(k)));
  return VectorPoly(std::move(comps));
}

inline VectorPoly vec_neg(const VectorPoly& f) {
  std::vector<Polynomial> comps;
  comps.reserve(f.rank());
  for (std::size_t k = 0; k < f.rank(); ++k) comps.push_back(poly_neg(f.component(k)));
  return VectorPoly(std::move(comps));
}

inline VectorPoly vec_sub(const VectorPoly& f, const VectorPoly& g) {
  return vec_add(f, vec_neg(g));
}

inline VectorPoly vec_scale(const Scalar& c, const VectorPoly& f) {
  std::vector<Polynomial> comps;
  comps.reserve(f.rank());
  for (std::size_t k = 0; k < f.rank(); ++k) comps.push_back(poly_scale(c, f.component(k)));
  return VectorPoly(std::move(comps));
}

// The left action of A on A^m: multiply every component on the left.
inline VectorPoly act(const Polynomial& a, const VectorPoly& f) {
  if (!same_algebra(a.algebra(), f.algebra()))
    throw algebra_mismatch_error("scalar polynomial over a different presentation");
  std::vector<Polynomial> comps;
  comps.reserve(f.rank());
  for (std::size_t k = 0; k < f.rank(); ++k) comps.push_back(poly_mul(a, f.component(k)));
  return VectorPoly(std::move(comps));
}

// Degree for the natural filtration of A^m; nullopt is -infinity.
inline std::optional<std::uint32_t> module_degree(const VectorPoly& f) {
  std::optional<std::uint32_t> d;
  for (std::size_t k = 0; k < f.rank(); ++k) {
    const auto dk = degree(f.component(k));
    if (dk && (!d || *dk > *d)) d = dk;
  }
  return d;
}

inline std::pair<Scalar, ModuleMonomial> module_leading_term(const VectorPoly& f,
                                                             const ModuleOrder& o) {
  if (f.rank() != o.rank()) throw invalid_argument_error("module rank mismatch");
  std::optional<std::pair<Scalar, ModuleMonomial>> best;
  for (std::size_t k = 0; k < f.rank(); ++k)
    for (const auto& [e, s] : f.component(k).terms()) {
      ModuleMonomial m{k, e};
      if (!best || o.compare(m, best->second) > 0) best = {s, std::move(m)};
    }
  if (!best) throw zero_polynomial_error("leading term of the zero vector");
  return *std::move(best);
}

// Homogeneous vector over the graded algebra: all terms of all components
// share one total degree.
class GradedVectorPoly {
public:
  explicit GradedVectorPoly(VectorPoly v) : vec_(std::move(v)) {
    const auto d = module_degree(vec_);
    if (!d) return;
    for (std::size_t k = 0; k < vec_.rank(); ++k)
      for (const auto& [e, s] : vec_.component(k).terms()) {
        (void)s;
        if (total_degree(e) != *d)
          throw invalid_argument_error("vector is not homogeneous");
      }
  }

  const VectorPoly& vec() const { return vec_; }
  std::optional<std::uint32_t> degree() const { return module_degree(vec_); }

  bool operator==(const GradedVectorPoly&) const = default;

private:
  VectorPoly vec_;
};

// Principal symbol of a vector: the terms of top total degree across all
// components, read over Gr(A).
inline GradedVectorPoly module_symbol(const GradedAlgebra& gr, const VectorPoly& f) {
  if (!same_algebra(f.algebra(), gr.source()))
    throw algebra_mismatch_error("vector is not over the graded algebra's source");
  VectorPoly top(gr.presentation(), f.rank());
  const auto d = module_degree(f);
  if (!d) return GradedVectorPoly(std::move(top));
  for (std::size_t k = 0; k < f.rank(); ++k)
    for (const auto& [e, s] : f.component(k).terms())
      if (total_degree(e) == *d) top.add_term(k, e, s);
  return GradedVectorPoly(std::move(top));
}

// Test hook, the module analogue of symbol_lm_check.
inline bool module_symbol_lm_check(const GradedAlgebra& gr, const VectorPoly& f,
                                   const ModuleOrder& o) {
  if (f.is_zero()) throw zero_polynomial_error("module_symbol_lm_check of zero");
  const ModuleMonomial in_a = module_leading_term(f, o).second;
  const ModuleMonomial in_gr =
      module_leading_term(module_symbol(gr, f).vec(), induce_graded_module_order(o)).second;
  return in_a == in_gr;
}

// Test hook for the Gr(A)-action on Gr(M): the symbol of r applied to the
// symbol of f equals the symbol of r*f when no degree collapse occurs, and 0
// otherwise. Over a field the collapse branch never fires for nonzero inputs.
inline bool graded_action_check(const GradedAlgebra& gr, const Polynomial& r,
                                const VectorPoly& f) {
  if (r.is_zero() || f.is_zero())
    throw invalid_argument_error("graded_action_check requires nonzero inputs");
  const Polynomial sym_r = principal_symbol(gr, r).poly();
  const VectorPoly lhs = act(sym_r, module_symbol(gr, f).vec());
  const VectorPoly rf = act(r, f);
  const auto expected = *degree(r) + *module_degree(f);
  VectorPoly rhs(gr.presentation(), f.rank());
  if (module_degree(rf) && *module_degree(rf) == expected)
    rhs = module_symbol(gr, rf).vec();
  return lhs == rhs;
}

struct ModuleReductionTrace {
  VectorPoly remainder;
  std::vector<Polynomial> cofactors;  // parallel to the divisor list
};

// Left division in A^m. A divisor applies only when its leading module
// monomial sits in the same component and its exponent divides; otherwise the
// step mirrors the ring case.
inline ModuleReductionTrace module_reduce(const VectorPoly& f,
                                          std::span<const VectorPoly> g,
                                          const ModuleOrder& o, ReduceMode mode) {
  ModuleReductionTrace trace;
  const AlgebraRef& a = f.algebra();
  trace.remainder = VectorPoly(a, f.rank());
  trace.cofactors.assign(g.size(), Polynomial(a));
  for (const VectorPoly& gi : g)
    if (!gi.is_zero()) require_same_module(f, gi);
  struct LeadData {
    bool zero;
    Scalar lc;
    ModuleMonomial lm;
  };
  std::vector<LeadData> leads;
  leads.reserve(g.size());
  for (const VectorPoly& gi : g) {
    if (gi.is_zero())
      leads.push_back({true, Scalar(), ModuleMonomial{}});
    else {
      auto [lc, lm] = module_leading_term(gi, o);
      leads.push_back({false, std::move(lc), std::move(lm)});
    }
  }
  VectorPoly h = f;
  while (!h.is_zero()) {
    const auto [hc, hm] = module_leading_term(h, o);
    std::size_t t = g.size();
    Exponent gamma;
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (leads[k].zero || leads[k].lm.component != hm.component) continue;
      if (auto q = divides(leads[k].lm.exp, hm.exp)) {
        t = k;
        gamma = std::move(*q);
        break;
      }
    }
    if (t == g.size()) {
      if (mode == ReduceMode::top) {
        trace.remainder = vec_add(trace.remainder, h);
        break;
      }
      trace.remainder.add_term(hm.component, hm.exp, hc);
      h.add_term(hm.component, hm.exp, -hc);
      continue;
    }
    const ProductData pd = monomial_product_data(a, gamma, leads[t].lm.exp);
    const Scalar u = hc * (leads[t].lc * pd.coeff).inverse();
    h = vec_sub(h, act(Polynomial::monomial(a, gamma, u), g[t]));
    trace.cofactors[t].add_term(gamma, u);
  }
  return trace;
}

inline ModuleReductionTrace module_reduce(const VectorPoly& f,
                                          const std::vector<VectorPoly>& g,
                                          const ModuleOrder& o, ReduceMode mode) {
  return module_reduce(f, std::span<const VectorPoly>(g.data(), g.size()), o, mode);
}

// S-vector of two elements whose leading module monomials share a component.
inline VectorPoly module_s_vector(const VectorPoly& f, const VectorPoly& g,
                                  const ModuleOrder& o) {
  if (f.is_zero() || g.is_zero())
    throw zero_polynomial_error("s-vector of a zero vector");
  require_same_module(f, g);
  const AlgebraRef& a = f.algebra();
  const auto [fc, fm] = module_leading_term(f, o);
  const auto [gc, gm] = module_leading_term(g, o);
  if (fm.component != gm.component)
    throw invalid_argument_error("s-vector requires a shared leading component");
  const Exponent lcm = exp_lcm(fm.exp, gm.exp);
  const Exponent gf = exp_sub(lcm, fm.exp), gg = exp_sub(lcm, gm.exp);
  const Scalar uf = (fc * monomial_product_data(a, gf, fm.exp).coeff).inverse();
  const Scalar ug = (gc * monomial_product_data(a, gg, gm.exp).coeff).inverse();
  return vec_sub(act(Polynomial::monomial(a, gf, uf), f),
                 act(Polynomial::monomial(a, gg, ug), g));
}

class ModuleGroebnerBasis {
public:
  ModuleGroebnerBasis(std::vector<VectorPoly> generators, ModuleOrder order,
                      bool verified = false, bool reduced = false)
      : generators_(std::move(generators)),
        order_(std::move(order)),
        verified_(verified),
        reduced_(reduced) {
    for (const VectorPoly& g : generators_) {
      if (g.is_zero())
        throw invalid_argument_error("module basis generators must be nonzero");
      if (g.rank() != order_.rank())
        throw invalid_argument_error("generator rank does not match the module order");
      if (!same_algebra(g.algebra(), generators_.front().algebra()))
        throw algebra_mismatch_error("generators over different presentations");
    }
  }

  const std::vector<VectorPoly>& generators() const { return generators_; }
  const ModuleOrder& order() const { return order_; }
  bool verified() const { return verified_; }
  bool reduced() const { return reduced_; }

  AlgebraRef algebra() const {
    return generators_.empty() ? nullptr : generators_.front().algebra();
  }

private:
  std::vector<VectorPoly> generators_;
  ModuleOrder order_;
  bool verified_;
  bool reduced_;
};

inline VectorPoly make_monic(const VectorPoly& f, const ModuleOrder& o) {
  const Scalar lc = module_leading_term(f, o).first;
  return lc.is_one() ? f : vec_scale(lc.inverse(), f);
}

inline bool module_is_groebner(std::span<const VectorPoly> g, const ModuleOrder& o) {
  for (const VectorPoly& gi : g)
    if (gi.is_zero())
      throw invalid_argument_error("module_is_groebner expects nonzero elements");
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (module_leading_term(g[i], o).second.component !=
          module_leading_term(g[j], o).second.component)
        continue;
      const VectorPoly s = module_s_vector(g[i], g[j], o);
      if (s.is_zero()) continue;
      if (!module_reduce(s, g, o, ReduceMode::full).remainder.is_zero()) return false;
    }
  return true;
}

inline bool module_is_groebner(const std::vector<VectorPoly>& g, const ModuleOrder& o) {
  return module_is_groebner(std::span<const VectorPoly>(g.data(), g.size()), o);
}

// Buchberger completion for submodules of A^m. Pairs form only between
// generators whose leading monomials share a component; everything else
// mirrors the ring case, including determinism.
inline ModuleGroebnerBasis module_buchberger(const std::vector<VectorPoly>& input,
                                             const ModuleOrder& o) {
  std::vector<VectorPoly> gens;
  for (const VectorPoly& f : input)
    if (!f.is_zero()) gens.push_back(f);
  if (gens.empty()) return ModuleGroebnerBasis({}, o, true, true);
  const AlgebraRef a = gens.front().algebra();
  for (const VectorPoly& f : gens) {
    if (!same_algebra(f.algebra(), a))
      throw algebra_mismatch_error("generators over different presentations");
    if (f.rank() != o.rank())
      throw invalid_argument_error("generator rank does not match the module order");
  }
  if (!a->consistency_verified())
    throw inconsistent_presentation_error(
        "run consistency_check before Groebner computations");

  std::vector<VectorPoly> basis;
  std::vector<ModuleMonomial> lead;
  for (VectorPoly& f : gens) {
    basis.push_back(make_monic(f, o));
    lead.push_back(module_leading_term(basis.back(), o).second);
  }
  using Pair = std::tuple<std::uint32_t, std::size_t, std::size_t>;
  std::set<Pair> queue;
  const auto push_pairs = [&](std::size_t t) {
    for (std::size_t s = 0; s < t; ++s) {
      if (lead[s].component != lead[t].component) continue;
      queue.insert({total_degree(exp_lcm(lead[s].exp, lead[t].exp)), s, t});
    }
  };
  for (std::size_t t = 1; t < basis.size(); ++t) push_pairs(t);
  while (!queue.empty()) {
    const auto [deg, i, j] = *queue.begin();
    (void)deg;
    queue.erase(queue.begin());
    const VectorPoly s = module_s_vector(basis[i], basis[j], o);
    if (s.is_zero()) continue;
    VectorPoly r = module_reduce(s, basis, o, ReduceMode::full).remainder;
    if (r.is_zero()) continue;
    basis.push_back(make_monic(r, o));
    lead.push_back(module_leading_term(basis.back(), o).second);
    push_pairs(basis.size() - 1);
  }
  return ModuleGroebnerBasis(std::move(basis), o, true, false);
}

inline ModuleGroebnerBasis module_autoreduce(const ModuleGroebnerBasis& gb) {
  if (!gb.verified())
    throw unverified_basis_error("autoreduce requires a verified basis");
  const ModuleOrder& o = gb.order();
  std::vector<VectorPoly> gens;
  for (const VectorPoly& g : gb.generators()) gens.push_back(make_monic(g, o));
  std::vector<bool> dropped(gens.size(), false);
  const auto lm_divides = [](const ModuleMonomial& x, const ModuleMonomial& y) {
    return x.component == y.component && exp_divides(x.exp, y.exp);
  };
  std::vector<ModuleMonomial> lms;
  for (const VectorPoly& g : gens) lms.push_back(module_leading_term(g, o).second);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j || dropped[j]) continue;
      if (!lm_divides(lms[j], lms[i])) continue;
      if (lms[j] == lms[i] && j > i) continue;
      dropped[i] = true;
      break;
    }
  std::vector<VectorPoly> minimal;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!dropped[i]) minimal.push_back(gens[i]);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<VectorPoly> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      VectorPoly r = module_reduce(minimal[i], others, o, ReduceMode::full).remainder;
      r = make_monic(r, o);
      if (!(r == minimal[i])) {
        minimal[i] = std::move(r);
        changed = true;
      }
    }
  }
  std::sort(minimal.begin(), minimal.end(), [&](const VectorPoly& f, const VectorPoly& g) {
    return o.compare(module_leading_term(f, o).second, module_leading_term(g, o).second) > 0;
  });
  return ModuleGroebnerBasis(std::move(minimal), o, true, true);
}

inline std::pair<bool, ModuleReductionTrace> module_membership(const VectorPoly& f,
                                                               const ModuleGroebnerBasis& gb) {
  if (!gb.verified())
    throw unverified_basis_error("module membership requires a verified basis");
  ModuleReductionTrace trace = module_reduce(f, gb.generators(), gb.order(), ReduceMode::full);
  const bool member = trace.remainder.is_zero();
  return {member, std::move(trace)};
}

// Module analogue of transfer_to_graded.
inline ModuleGroebnerBasis module_transfer_to_graded(const GradedAlgebra& gr,
                                                     const ModuleGroebnerBasis& gb) {
  if (!gb.verified())
    throw unverified_basis_error("transfer requires a verified basis");
  std::vector<VectorPoly> symbols;
  symbols.reserve(gb.generators().size());
  for (const VectorPoly& g : gb.generators())
    symbols.push_back(module_symbol(gr, g).vec());
  const ModuleOrder go = induce_graded_module_order(gb.order());
  if (!module_is_groebner(symbols, go))
    throw internal_error("symbols of a verified module basis failed the graded-side check");
  return ModuleGroebnerBasis(std::move(symbols), go, true, gb.reduced());
}

// Module analogue of transfer_from_graded; the lifts' membership in the target
// submodule remains the caller's obligation.
inline ModuleGroebnerBasis module_transfer_from_graded(const GradedAlgebra& gr,
                                                       const ModuleGroebnerBasis& graded_basis,
                                                       std::vector<VectorPoly> lifts,
                                                       const ModuleOrder& o) {
  if (!graded_basis.verified())
    throw unverified_basis_error("transfer requires a verified graded basis");
  if (graded_basis.generators().size() != lifts.size())
    throw invalid_argument_error("one lift per graded basis element is required");
  for (std::size_t t = 0; t < lifts.size(); ++t) {
    const VectorPoly& gbar = graded_basis.generators()[t];
    (void)GradedVectorPoly(gbar);  // rejects non-homogeneous input
    if (!(module_symbol(gr, lifts[t]).vec() == gbar))
      throw invalid_argument_error("lift " + std::to_string(t + 1) +
                                   " does not have the required symbol");
  }
  const bool ok = module_is_groebner(lifts, o);
  return ModuleGroebnerBasis(std::move(lifts), o, ok, false);
}

}  // namespace skewgb
