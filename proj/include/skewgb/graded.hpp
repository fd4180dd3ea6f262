#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "skewgb/algebra.hpp"
#include "skewgb/error.hpp"
#include "skewgb/groebner.hpp"
#include "skewgb/orders.hpp"

namespace skewgb {

// Total degree of f, the order function of the standard filtration: f lies in
// F_p exactly when degree(f) <= p. nullopt stands for -infinity (the zero
// polynomial).
inline std::optional<std::uint32_t> degree(const Polynomial& f) {
  if (f.is_zero()) return std::nullopt;
  // Canonical term order is degree compatible, so the last term is maximal.
  return total_degree(f.terms().rbegin()->first);
}

// The associated graded algebra of a presentation: same field, variables and
// product constants, all remainders zero. Quasi-commutative presentations are
// their own graded algebra.
class GradedAlgebra {
public:
  const AlgebraRef& presentation() const { return presentation_; }
  const AlgebraRef& source() const { return source_; }

  friend GradedAlgebra associated_graded(const AlgebraRef&);

private:
  GradedAlgebra(AlgebraRef presentation, AlgebraRef source)
      : presentation_(std::move(presentation)), source_(std::move(source)) {}

  AlgebraRef presentation_;
  AlgebraRef source_;
};

inline GradedAlgebra associated_graded(const AlgebraRef& a) {
  if (!a->consistency_verified()) ensure_consistent(a);
  if (is_quasi_commutative(a)) return GradedAlgebra(a, a);
  std::vector<Relation> relations;
  const unsigned n = static_cast<unsigned>(a->nvars());
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j)
      relations.push_back({j, i, a->c(i, j), LinearRemainder(a->field())});
  AlgebraRef gr = make_presentation(a->field(), a->var_names(), relations);
  if (!consistency_check(gr).empty())
    throw internal_error("quasi-commutative constants failed the overlap check");
  return GradedAlgebra(gr, a);
}

// A single homogeneous component of the graded algebra: a polynomial over
// Gr(A) all of whose exponents share one total degree. The zero polynomial is
// allowed and has no degree.
class HomogeneousPolynomial {
public:
  explicit HomogeneousPolynomial(Polynomial p) : poly_(std::move(p)) {
    if (poly_.is_zero()) return;
    const std::uint32_t d = total_degree(poly_.terms().begin()->first);
    for (const auto& [e, s] : poly_.terms()) {
      (void)s;
      if (total_degree(e) != d)
        throw invalid_argument_error("polynomial is not homogeneous");
    }
  }

  const Polynomial& poly() const { return poly_; }
  std::optional<std::uint32_t> degree() const { return skewgb::degree(poly_); }

  bool operator==(const HomogeneousPolynomial&) const = default;

private:
  Polynomial poly_;
};

// The principal symbol: the top-degree part of f, read in Gr(A). Degree and
// leading coefficient are preserved; the symbol vanishes only for f = 0.
inline HomogeneousPolynomial principal_symbol(const GradedAlgebra& gr,
                                              const Polynomial& f) {
  if (!same_algebra(f.algebra(), gr.source()))
    throw algebra_mismatch_error("polynomial is not over the graded algebra's source");
  Polynomial top(gr.presentation());
  if (f.is_zero()) return HomogeneousPolynomial(std::move(top));
  const std::uint32_t d = *degree(f);
  for (const auto& [e, s] : f.terms())
    if (total_degree(e) == d) top.add_term(e, s);
  return HomogeneousPolynomial(std::move(top));
}

// Test hook: the symbol of a product of monomials equals the product of the
// symbols. Always true on presentations that pass the overlap check.
inline bool symbol_of_product_check(const GradedAlgebra& gr, const Exponent& alpha,
                                    const Exponent& beta) {
  const AlgebraRef& a = gr.source();
  const Scalar one = Scalar::one(a->field());
  const Polynomial in_a =
      poly_mul(Polynomial::monomial(a, alpha, one), Polynomial::monomial(a, beta, one));
  const Polynomial lhs = principal_symbol(gr, in_a).poly();
  const AlgebraRef& g = gr.presentation();
  const Polynomial rhs =
      poly_mul(Polynomial::monomial(g, alpha, one), Polynomial::monomial(g, beta, one));
  return lhs == rhs;
}

// Test hook: the symbol of the leading monomial is the leading monomial of the
// symbol, under the induced order.
inline bool symbol_lm_check(const GradedAlgebra& gr, const Polynomial& f,
                            const MonomialOrder& o) {
  if (f.is_zero()) throw zero_polynomial_error("symbol_lm_check of zero");
  const Exponent in_a = leading_exponent(f, o);
  const Exponent in_gr =
      leading_exponent(principal_symbol(gr, f).poly(), induce_graded_order(o));
  return in_a == in_gr;
}

// Symbols of a verified basis. These generate the graded ideal Gr(I), and in
// fact form a Groebner basis of it; see transfer_to_graded for the verified
// packaging.
inline std::vector<HomogeneousPolynomial> gr_ideal_generators(const GradedAlgebra& gr,
                                                              const GroebnerBasis& gb) {
  if (!gb.verified())
    throw unverified_basis_error("graded ideal generators require a verified basis");
  std::vector<HomogeneousPolynomial> out;
  out.reserve(gb.generators().size());
  for (const Polynomial& g : gb.generators()) out.push_back(principal_symbol(gr, g));
  return out;
}

// Filtered-to-graded transfer: the symbols of a verified basis, packaged under
// the induced order. The graded-side verification run must come back clean; a
// failure would contradict the transfer theorem and is reported as an internal
// error.
inline GroebnerBasis transfer_to_graded(const GradedAlgebra& gr, const GroebnerBasis& gb) {
  if (!gb.verified())
    throw unverified_basis_error("transfer requires a verified basis");
  std::vector<Polynomial> symbols;
  symbols.reserve(gb.generators().size());
  for (const Polynomial& g : gb.generators())
    symbols.push_back(principal_symbol(gr, g).poly());
  const MonomialOrder go = induce_graded_order(gb.order());
  if (!is_groebner(symbols, go))
    throw internal_error("symbols of a verified basis failed the graded-side check");
  return GroebnerBasis(std::move(symbols), go, true, gb.reduced());
}

// Graded-to-filtered transfer: lifts of a homogeneous verified basis of the
// graded ideal. Each lift must have the matching basis element as its symbol;
// that the lifts lie in the intended ideal is the caller's obligation and is
// not checkable here. The result is verified by an explicit Groebner check of
// the lifts.
inline GroebnerBasis transfer_from_graded(const GradedAlgebra& gr,
                                          const GroebnerBasis& graded_basis,
                                          std::vector<Polynomial> lifts,
                                          const MonomialOrder& o) {
  if (!graded_basis.verified())
    throw unverified_basis_error("transfer requires a verified graded basis");
  if (graded_basis.generators().size() != lifts.size())
    throw invalid_argument_error("one lift per graded basis element is required");
  for (std::size_t t = 0; t < lifts.size(); ++t) {
    const Polynomial& gbar = graded_basis.generators()[t];
    (void)HomogeneousPolynomial(gbar);  // rejects non-homogeneous input
    if (!(principal_symbol(gr, lifts[t]).poly() == gbar))
      throw invalid_argument_error("lift " + std::to_string(t + 1) +
                                   " does not have the required symbol");
  }
  const bool ok = is_groebner(lifts, o);
  return GroebnerBasis(std::move(lifts), o, ok, false);
}

// Evidence that symbols of mere generators can fail to generate the graded
// ideal: one basis element of Gr(I) with a nonzero remainder against the
// ideal generated by the generators' symbols.
struct GapCertificate {
  Polynomial element;          // basis element of Gr(I)
  Polynomial naive_remainder;  // its full remainder against the naive ideal
  bool in_graded_ideal;        // membership in Gr(I), for the record
};

struct GapReport {
  GroebnerBasis basis;                      // reduced basis of the ideal
  GroebnerBasis graded_basis;               // its symbols: a basis of Gr(I)
  std::vector<Polynomial> naive_generators; // symbols of the input generators
  GroebnerBasis naive_basis;                // basis of the ideal they generate
  std::vector<GapCertificate> gap;          // Gr(I) elements missing above
};

inline GapReport naive_transfer_gap_demo(const AlgebraRef& a,
                                         const std::vector<Polynomial>& generators,
                                         const MonomialOrder& o) {
  ensure_consistent(a);
  const GradedAlgebra gr = associated_graded(a);
  GroebnerBasis basis = autoreduce(buchberger(generators, o));
  GroebnerBasis graded = transfer_to_graded(gr, basis);
  std::vector<Polynomial> naive;
  for (const Polynomial& f : generators)
    if (!f.is_zero()) naive.push_back(principal_symbol(gr, f).poly());
  const MonomialOrder go = induce_graded_order(o);
  GroebnerBasis naive_basis = autoreduce(buchberger(naive, go));
  std::vector<GapCertificate> gap;
  for (const Polynomial& e : graded.generators()) {
    auto [member, trace] = ideal_membership(e, naive_basis);
    if (!member)
      gap.push_back({e, std::move(trace.remainder),
                     ideal_membership(e, graded).first});
  }
  return GapReport{std::move(basis), std::move(graded), std::move(naive),
                   std::move(naive_basis), std::move(gap)};
}

}  // namespace skewgb
