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
#include "skewgb/exponent.hpp"
#include "skewgb/orders.hpp"

namespace skewgb {

// Componentwise divisibility with the quotient exponent on success.
inline std::optional<Exponent> divides(const Exponent& alpha, const Exponent& beta) {
  if (!exp_divides(alpha, beta)) return std::nullopt;
  return exp_sub(beta, alpha);
}

enum class ReduceMode { top, full };

// Certificate of one left division: input = sum_t cofactors[t] * G[t] +
// remainder, exactly, with every intermediate leading monomial bounded by the
// input's.
struct ReductionTrace {
  Polynomial remainder;
  std::vector<Polynomial> cofactors;  // parallel to the divisor list
};

namespace detail {
// coeff * x^gamma * g, the single step used throughout division.
inline Polynomial monomial_times(const Scalar& coeff, const Exponent& gamma,
                                 const Polynomial& g) {
  return poly_mul(Polynomial::monomial(g.algebra(), gamma, coeff), g);
}
}  // namespace detail

// Left division of f by the list G. Each step cancels the current leading term
// against the first divisor in list order, using the product constant from
// monomial_product_data. Top mode stops as soon as the leading monomial has no
// divisor; full mode keeps reducing the lower terms, so the remainder has no
// term divisible by any leading monomial of G.
inline ReductionTrace reduce(const Polynomial& f, std::span<const Polynomial> g,
                             const MonomialOrder& o, ReduceMode mode) {
  ReductionTrace trace;
  const AlgebraRef& a = f.algebra();
  trace.remainder = Polynomial(a);
  trace.cofactors.assign(g.size(), Polynomial(a));
  for (const Polynomial& gi : g) {
    if (!gi.is_zero()) require_same_algebra(f, gi);
  }
  struct LeadData {
    bool zero;
    Scalar lc;
    Exponent le;
  };
  std::vector<LeadData> leads;
  leads.reserve(g.size());
  for (const Polynomial& gi : g) {
    if (gi.is_zero())
      leads.push_back({true, Scalar(), Exponent()});
    else {
      auto [lc, le] = leading_term(gi, o);
      leads.push_back({false, std::move(lc), std::move(le)});
    }
  }
  Polynomial h = f;
  while (!h.is_zero()) {
    const auto [hc, he] = leading_term(h, o);
    std::size_t t = g.size();
    Exponent gamma;
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (leads[k].zero) continue;
      if (auto q = divides(leads[k].le, he)) {
        t = k;
        gamma = std::move(*q);
        break;
      }
    }
    if (t == g.size()) {
      if (mode == ReduceMode::top) {
        trace.remainder = poly_add(trace.remainder, h);
        break;
      }
      trace.remainder.add_term(he, hc);
      h.add_term(he, -hc);
      continue;
    }
    const ProductData pd = monomial_product_data(a, gamma, leads[t].le);
    const Scalar u = hc * (leads[t].lc * pd.coeff).inverse();
    h = poly_sub(h, detail::monomial_times(u, gamma, g[t]));
    trace.cofactors[t].add_term(gamma, u);
  }
  return trace;
}

inline ReductionTrace reduce(const Polynomial& f, const std::vector<Polynomial>& g,
                             const MonomialOrder& o, ReduceMode mode) {
  return reduce(f, std::span<const Polynomial>(g.data(), g.size()), o, mode);
}

// S-polynomial: both scaled multiples carry coefficient 1 at the least common
// multiple of the leading exponents, so the top terms cancel exactly.
inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                               const MonomialOrder& o) {
  if (f.is_zero() || g.is_zero())
    throw zero_polynomial_error("s-polynomial of a zero polynomial");
  require_same_algebra(f, g);
  const AlgebraRef& a = f.algebra();
  const auto [fc, fe] = leading_term(f, o);
  const auto [gc, ge] = leading_term(g, o);
  const Exponent lcm = exp_lcm(fe, ge);
  const Exponent gf = exp_sub(lcm, fe), gg = exp_sub(lcm, ge);
  const Scalar uf = (fc * monomial_product_data(a, gf, fe).coeff).inverse();
  const Scalar ug = (gc * monomial_product_data(a, gg, ge).coeff).inverse();
  return poly_sub(detail::monomial_times(uf, gf, f), detail::monomial_times(ug, gg, g));
}

// A generating set for a left ideal together with the order it was computed
// under. verified means every S-polynomial reduces to zero over the
// generators; reduced additionally means monic, minimal and tail-reduced.
class GroebnerBasis {
public:
  GroebnerBasis(std::vector<Polynomial> generators, MonomialOrder order,
                bool verified = false, bool reduced = false)
      : generators_(std::move(generators)),
        order_(std::move(order)),
        verified_(verified),
        reduced_(reduced) {
    for (const Polynomial& g : generators_) {
      if (g.is_zero())
        throw invalid_argument_error("Groebner basis generators must be nonzero");
      if (!same_algebra(g.algebra(), generators_.front().algebra()))
        throw algebra_mismatch_error("generators over different presentations");
    }
  }

  const std::vector<Polynomial>& generators() const { return generators_; }
  const MonomialOrder& order() const { return order_; }
  bool verified() const { return verified_; }
  bool reduced() const { return reduced_; }

  AlgebraRef algebra() const {
    return generators_.empty() ? nullptr : generators_.front().algebra();
  }

private:
  std::vector<Polynomial> generators_;
  MonomialOrder order_;
  bool verified_;
  bool reduced_;
};

inline Polynomial make_monic(const Polynomial& f, const MonomialOrder& o) {
  const Scalar lc = leading_coeff(f, o);
  return lc.is_one() ? f : poly_scale(lc.inverse(), f);
}

inline bool is_groebner(std::span<const Polynomial> g, const MonomialOrder& o) {
  for (const Polynomial& gi : g)
    if (gi.is_zero()) throw invalid_argument_error("is_groebner expects nonzero elements");
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const Polynomial s = s_polynomial(g[i], g[j], o);
      if (s.is_zero()) continue;
      if (!reduce(s, g, o, ReduceMode::full).remainder.is_zero()) return false;
    }
  return true;
}

inline bool is_groebner(const std::vector<Polynomial>& g, const MonomialOrder& o) {
  return is_groebner(std::span<const Polynomial>(g.data(), g.size()), o);
}

// Buchberger completion for left ideals. Deterministic: generators keep their
// input order, pairs are processed by (lcm degree, i, j), and reduction always
// picks the earliest divisor. The coprime-lcm skip is applied only on honestly
// commutative presentations: nonzero remainders d_ij intertwine the lower
// terms, and even with d = 0 a product constant q != 1 breaks the criterion
// (over GF(7) with y*x = 3*x*y, the skipped pair of {x^3 + 2, y + 4} hides
// that the ideal contains 1).
inline GroebnerBasis buchberger(const std::vector<Polynomial>& input,
                                const MonomialOrder& o) {
  std::vector<Polynomial> gens;
  for (const Polynomial& f : input)
    if (!f.is_zero()) gens.push_back(f);
  if (gens.empty()) return GroebnerBasis({}, o, true, true);
  const AlgebraRef a = gens.front().algebra();
  for (const Polynomial& f : gens)
    if (!same_algebra(f.algebra(), a))
      throw algebra_mismatch_error("generators over different presentations");
  if (o.nvars() != a->nvars())
    throw invalid_argument_error("order does not match the presentation");
  if (!a->consistency_verified())
    throw inconsistent_presentation_error(
        "run consistency_check before Groebner computations");
  const bool commutative = is_commutative(a);

  std::vector<Polynomial> basis;
  std::vector<Exponent> lead;
  for (Polynomial& f : gens) {
    basis.push_back(make_monic(f, o));
    lead.push_back(leading_exponent(basis.back(), o));
  }

  using Pair = std::tuple<std::uint32_t, std::size_t, std::size_t>;
  std::set<Pair> queue;
  const auto coprime = [](const Exponent& x, const Exponent& y) {
    for (std::size_t k = 0; k < x.size(); ++k)
      if (x[k] > 0 && y[k] > 0) return false;
    return true;
  };
  const auto push_pairs = [&](std::size_t t) {
    for (std::size_t s = 0; s < t; ++s) {
      if (commutative && coprime(lead[s], lead[t])) continue;
      queue.insert({total_degree(exp_lcm(lead[s], lead[t])), s, t});
    }
  };
  for (std::size_t t = 1; t < basis.size(); ++t) push_pairs(t);

  while (!queue.empty()) {
    const auto [deg, i, j] = *queue.begin();
    (void)deg;
    queue.erase(queue.begin());
    const Polynomial s = s_polynomial(basis[i], basis[j], o);
    if (s.is_zero()) continue;
    Polynomial r = reduce(s, basis, o, ReduceMode::full).remainder;
    if (r.is_zero()) continue;
    basis.push_back(make_monic(r, o));
    lead.push_back(leading_exponent(basis.back(), o));
    push_pairs(basis.size() - 1);
  }
  return GroebnerBasis(std::move(basis), o, true, false);
}

// Minimal, monic, pairwise tail-reduced form of a verified basis. The result
// is the unique reduced basis for the ideal and order, printed largest leading
// monomial first.
inline GroebnerBasis autoreduce(const GroebnerBasis& gb) {
  if (!gb.verified())
    throw unverified_basis_error("autoreduce requires a verified basis");
  const MonomialOrder& o = gb.order();
  std::vector<Polynomial> gens;
  for (const Polynomial& g : gb.generators()) gens.push_back(make_monic(g, o));

  // Drop generators whose leading monomial another one divides; on leading
  // ties the earlier element survives.
  std::vector<bool> dropped(gens.size(), false);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Exponent le = leading_exponent(gens[i], o);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j || dropped[j]) continue;
      const Exponent lj = leading_exponent(gens[j], o);
      if (!exp_divides(lj, le)) continue;
      if (lj == le && j > i) continue;
      dropped[i] = true;
      break;
    }
  }
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!dropped[i]) minimal.push_back(gens[i]);

  // Tail-reduce to a fixpoint.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Polynomial r = reduce(minimal[i], others, o, ReduceMode::full).remainder;
      r = make_monic(r, o);
      if (!(r == minimal[i])) {
        minimal[i] = std::move(r);
        changed = true;
      }
    }
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& f, const Polynomial& g) {
    return o.compare(leading_exponent(f, o), leading_exponent(g, o)) > 0;
  });
  return GroebnerBasis(std::move(minimal), o, true, true);
}

// Membership of f in the left ideal of a verified basis, with the reduction
// trace as certificate: f is a member iff the full remainder vanishes.
inline std::pair<bool, ReductionTrace> ideal_membership(const Polynomial& f,
                                                        const GroebnerBasis& gb) {
  if (!gb.verified())
    throw unverified_basis_error("ideal membership requires a verified basis");
  ReductionTrace trace = reduce(f, gb.generators(), gb.order(), ReduceMode::full);
  const bool member = trace.remainder.is_zero();
  return {member, std::move(trace)};
}

}  // namespace skewgb
