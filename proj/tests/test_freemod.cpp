#include <catch2/catch_amalgamated.hpp>

#include "skewgb/freemod.hpp"
#include "skewgb/parser.hpp"
#include "skewgb/printer.hpp"

#include "support/commutative_oracle.hpp"
#include "support/random_inputs.hpp"

#include <random>

using namespace skewgb;
using testsupport::Rng;

namespace {

Polynomial pp(const AlgebraRef& a, const std::string& text) {
  return parse_polynomial(text, a);
}

VectorPoly vv(const AlgebraRef& a, const std::string& text) {
  return parse_vector_poly(text, a);
}

void check_module_trace(const VectorPoly& f, const std::vector<VectorPoly>& g,
                        const ModuleReductionTrace& trace, const ModuleOrder& o) {
  VectorPoly recombined = trace.remainder;
  for (std::size_t t = 0; t < g.size(); ++t)
    recombined = vec_add(recombined, act(trace.cofactors[t], g[t]));
  CHECK(recombined == f);
  if (f.is_zero()) return;
  const ModuleMonomial bound = module_leading_term(f, o).second;
  for (std::size_t t = 0; t < g.size(); ++t) {
    if (trace.cofactors[t].is_zero()) continue;
    const VectorPoly piece = act(trace.cofactors[t], g[t]);
    CHECK(o.compare(module_leading_term(piece, o).second, bound) <= 0);
  }
}

oracle::VPoly to_oracle(const VectorPoly& v) {
  oracle::VPoly p;
  for (std::size_t k = 0; k < v.rank(); ++k)
    for (const auto& [e, s] : v.component(k).terms())
      p.emplace(oracle::VMono{unsigned(k), oracle::Mono(e.begin(), e.end())},
                s.rational_value());
  return p;
}

}  // namespace

TEST_CASE("vector construction and arithmetic") {
  const AlgebraRef a = testsupport::weyl1();
  const VectorPoly f = vv(a, "[x, 0]");
  CHECK(f.rank() == 2);
  CHECK(f.component(0) == pp(a, "x"));
  CHECK(f.component(1).is_zero());
  CHECK_THROWS_AS(VectorPoly(a, 0), invalid_argument_error);
  CHECK_THROWS_AS(f.component(2), invalid_argument_error);

  SECTION("the module action applies componentwise on the left") {
    CHECK(act(pp(a, "y"), f) == vv(a, "[x*y + 1, 0]"));
    const VectorPoly g = vv(a, "[x*y^2 - 1, y]");
    CHECK(act(Polynomial::one(a), g) == g);
    CHECK(vec_add(g, vec_scale(Scalar::from_int(a->field(), -1), g)).is_zero());
  }
  SECTION("rank mismatches are rejected") {
    CHECK_THROWS_AS(vec_add(f, vv(a, "[x, 0, 0]")), invalid_argument_error);
  }
}

TEST_CASE("module degree") {
  const AlgebraRef a = testsupport::weyl1();
  CHECK(module_degree(vv(a, "[x*y + 1, 0]")) == 2u);
  CHECK_FALSE(module_degree(VectorPoly(a, 2)).has_value());
  CHECK(module_degree(vv(a, "[x, y^2]")) == 2u);
}

TEST_CASE("module symbol") {
  const AlgebraRef a = testsupport::weyl1();
  REQUIRE(consistency_check(a).empty());
  const GradedAlgebra gr = associated_graded(a);
  const AlgebraRef g = gr.presentation();
  CHECK(module_symbol(gr, vv(a, "[x*y + 1, y]")).vec() == vv(g, "[x*y, 0]"));
  CHECK(module_symbol(gr, vv(a, "[x, y]")).vec() == vv(g, "[x, y]"));
  CHECK(module_symbol(gr, VectorPoly(a, 2)).vec().is_zero());

  SECTION("homogeneity is validated") {
    CHECK_THROWS_AS(GradedVectorPoly(vv(g, "[x*y + 1, 0]")), invalid_argument_error);
    CHECK_NOTHROW(GradedVectorPoly(vv(g, "[x*y, y^2]")));
  }
  SECTION("symbol commutes with module leading monomials") {
    Rng rng(60001);
    for (const AlgebraRef& alg : {testsupport::weyl1(), testsupport::quantum_plane_gf7()}) {
      REQUIRE(consistency_check(alg).empty());
      const GradedAlgebra galg = associated_graded(alg);
      for (const ModuleScheme scheme : {ModuleScheme::top, ModuleScheme::pot}) {
        const ModuleOrder mo(scheme, MonomialOrder(OrderKind::deglex, alg->nvars()), 2);
        for (int trial = 0; trial < 80; ++trial)
          CHECK(module_symbol_lm_check(
              galg, testsupport::random_nonzero_vector_poly(alg, 2, 4, 4, rng), mo));
      }
    }
  }
}

TEST_CASE("the graded action agrees with the case formula") {
  const AlgebraRef a = testsupport::weyl1();
  REQUIRE(consistency_check(a).empty());
  const GradedAlgebra gr = associated_graded(a);
  CHECK(graded_action_check(gr, pp(a, "y"), vv(a, "[x, 0]")));
  CHECK(graded_action_check(gr, Polynomial::one(a), vv(a, "[x*y - 1, y]")));
  CHECK_THROWS_AS(graded_action_check(gr, Polynomial::zero(a), vv(a, "[x, 0]")),
                  invalid_argument_error);

  SECTION("no degree collapse on random nonzero inputs") {
    Rng rng(60002);
    for (const AlgebraRef& alg : {testsupport::weyl1(), testsupport::heisenberg()}) {
      REQUIRE(consistency_check(alg).empty());
      const GradedAlgebra galg = associated_graded(alg);
      for (int trial = 0; trial < 60; ++trial) {
        const Polynomial r = testsupport::random_nonzero_polynomial(alg, 3, 3, rng);
        const VectorPoly f = testsupport::random_nonzero_vector_poly(alg, 2, 3, 3, rng);
        CHECK(graded_action_check(galg, r, f));
        CHECK(*module_degree(act(r, f)) == *degree(r) + *module_degree(f));
      }
    }
  }
}

TEST_CASE("module reduction") {
  const AlgebraRef a = testsupport::weyl1();
  REQUIRE(consistency_check(a).empty());
  const ModuleOrder o(ModuleScheme::top, MonomialOrder(OrderKind::deglex, 2), 2);
  SECTION("single step with the Weyl relation") {
    const std::vector<VectorPoly> g{vv(a, "[y, 0]")};
    const VectorPoly f = vv(a, "[x*y + 1, 0]");
    const ModuleReductionTrace trace = module_reduce(f, g, o, ReduceMode::full);
    CHECK(trace.remainder == vv(a, "[1, 0]"));
    CHECK(trace.cofactors[0] == pp(a, "x"));
    check_module_trace(f, g, trace, o);
  }
  SECTION("no divisor in a different component") {
    const std::vector<VectorPoly> g{vv(a, "[y, 0]")};
    const VectorPoly f = vv(a, "[0, y^2]");
    const ModuleReductionTrace top = module_reduce(f, g, o, ReduceMode::top);
    CHECK(top.remainder == f);
  }
  SECTION("self reduction") {
    const VectorPoly g = vv(a, "[x*y, y]");
    const ModuleReductionTrace trace = module_reduce(g, {g}, o, ReduceMode::full);
    CHECK(trace.remainder.is_zero());
    CHECK(trace.cofactors[0] == Polynomial::one(a));
  }
  SECTION("trace identity on random inputs") {
    Rng rng(60003);
    for (int trial = 0; trial < 30; ++trial) {
      const VectorPoly f = testsupport::random_vector_poly(a, 2, 3, 4, rng);
      std::vector<VectorPoly> g;
      for (int k = 0; k < 2; ++k)
        g.push_back(testsupport::random_nonzero_vector_poly(a, 2, 2, 3, rng));
      for (const ReduceMode mode : {ReduceMode::top, ReduceMode::full})
        check_module_trace(f, g, module_reduce(f, g, o, mode), o);
    }
  }
}

TEST_CASE("module Buchberger") {
  const AlgebraRef a = testsupport::weyl1();
  REQUIRE(consistency_check(a).empty());
  const ModuleOrder o(ModuleScheme::top, MonomialOrder(OrderKind::deglex, 2), 2);
  SECTION("distinct components produce no pairs") {
    const std::vector<VectorPoly> f{vv(a, "[y, 0]"), vv(a, "[0, x]")};
    const ModuleGroebnerBasis gb = module_buchberger(f, o);
    CHECK(gb.verified());
    CHECK(gb.generators() == f);
  }
  SECTION("the rank-one embedding of the Weyl ideal") {
    const AlgebraRef a2 = testsupport::weyl2();
    REQUIRE(consistency_check(a2).empty());
    const ModuleOrder o2(ModuleScheme::top, MonomialOrder(OrderKind::deglex, 4), 2);
    const ModuleGroebnerBasis red = module_autoreduce(module_buchberger(
        {vv(a2, "[x1*y1, 0]"), vv(a2, "[x2*y1^2 - y1, 0]")}, o2));
    REQUIRE(red.generators().size() == 1);
    CHECK(red.generators()[0] == vv(a2, "[y1, 0]"));
  }
  SECTION("random commutative instances match the module oracle") {
    Rng rng(60004);
    const AlgebraRef c = testsupport::commutative(2);
    REQUIRE(consistency_check(c).empty());
    const ModuleOrder oc(ModuleScheme::top, MonomialOrder(OrderKind::deglex, 2), 2);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<VectorPoly> gens;
      const int g = 1 + int(rng() % 3);
      for (int k = 0; k < g; ++k)
        gens.push_back(testsupport::random_vector_poly(c, 2, 3, 3, rng));
      const ModuleGroebnerBasis red = module_autoreduce(module_buchberger(gens, oc));
      std::vector<oracle::VPoly> ogens;
      for (const VectorPoly& v : gens) ogens.push_back(to_oracle(v));
      const auto expected = oracle::vreduced_groebner(oracle::OrderName::deglex, ogens);
      REQUIRE(red.generators().size() == expected.size());
      for (std::size_t k = 0; k < expected.size(); ++k)
        CHECK(to_oracle(red.generators()[k]) == expected[k]);
    }
  }
}

TEST_CASE("module transfers") {
  const AlgebraRef a = testsupport::weyl1();
  REQUIRE(consistency_check(a).empty());
  const GradedAlgebra gr = associated_graded(a);
  const AlgebraRef g = gr.presentation();
  const ModuleOrder o(ModuleScheme::top, MonomialOrder(OrderKind::deglex, 2), 2);

  SECTION("homogeneous singleton maps to itself") {
    const AlgebraRef a2 = testsupport::weyl2();
    REQUIRE(consistency_check(a2).empty());
    const GradedAlgebra gr2 = associated_graded(a2);
    const ModuleOrder o2(ModuleScheme::top, MonomialOrder(OrderKind::deglex, 4), 2);
    const ModuleGroebnerBasis gb({vv(a2, "[y1, 0]")}, o2, true);
    const ModuleGroebnerBasis graded = module_transfer_to_graded(gr2, gb);
    CHECK(graded.verified());
    CHECK(graded.generators()[0] == vv(gr2.presentation(), "[y1, 0]"));
  }
  SECTION("symbols drop the lower terms") {
    const ModuleGroebnerBasis gb({vv(a, "[x*y + x, 0]")}, o, true);
    const ModuleGroebnerBasis graded = module_transfer_to_graded(gr, gb);
    CHECK(graded.verified());
    CHECK(graded.generators()[0] == vv(g, "[x*y, 0]"));
  }
  SECTION("mixed components, cross-checked against the oracle") {
    const AlgebraRef c = testsupport::commutative(2);
    REQUIRE(consistency_check(c).empty());
    const GradedAlgebra grc = associated_graded(c);
    const ModuleOrder oc(ModuleScheme::top, MonomialOrder(OrderKind::deglex, 2), 2);
    const std::vector<VectorPoly> gens{vv(c, "[x*y - 1, y]"), vv(c, "[0, x^2 + y]")};
    const ModuleGroebnerBasis red = module_autoreduce(module_buchberger(gens, oc));
    const ModuleGroebnerBasis graded = module_transfer_to_graded(grc, red);
    CHECK(graded.verified());
    // The symbols, recomputed independently.
    for (std::size_t k = 0; k < red.generators().size(); ++k)
      CHECK(graded.generators()[k] == module_symbol(grc, red.generators()[k]).vec());
  }
  SECTION("lifting back with matching symbols") {
    const ModuleGroebnerBasis gbar({vv(g, "[x*y, 0]")},
                                   induce_graded_module_order(o), true);
    const ModuleGroebnerBasis lifted =
        module_transfer_from_graded(gr, gbar, {vv(a, "[x*y + x, 0]")}, o);
    CHECK(lifted.verified());
    const ModuleGroebnerBasis identity =
        module_transfer_from_graded(gr, gbar, {vv(a, "[x*y, 0]")}, o);
    CHECK(identity.verified());
    CHECK_THROWS_AS(
        module_transfer_from_graded(gr, gbar, {vv(a, "[x*y + y^2, 0]")}, o),
        invalid_argument_error);
    const ModuleGroebnerBasis raw({vv(g, "[x*y, 0]")}, induce_graded_module_order(o),
                                  false);
    CHECK_THROWS_AS(module_transfer_from_graded(gr, raw, {vv(a, "[x*y, 0]")}, o),
                    unverified_basis_error);
  }
  SECTION("perturbed lifts still verify") {
    Rng rng(60005);
    for (const AlgebraRef& alg : {testsupport::weyl1(), testsupport::quantum_plane_q2()}) {
      REQUIRE(consistency_check(alg).empty());
      const GradedAlgebra galg = associated_graded(alg);
      const ModuleOrder mo(ModuleScheme::top, MonomialOrder(OrderKind::deglex, 2), 2);
      for (int trial = 0; trial < 8; ++trial) {
        std::vector<VectorPoly> gens;
        for (int k = 0; k < 2; ++k)
          gens.push_back(testsupport::random_vector_poly(alg, 2, 3, 3, rng));
        const ModuleGroebnerBasis gb = module_autoreduce(module_buchberger(gens, mo));
        if (gb.generators().empty()) continue;
        const ModuleGroebnerBasis graded = module_transfer_to_graded(galg, gb);
        std::vector<VectorPoly> lifts;
        for (const VectorPoly& f : gb.generators()) {
          VectorPoly lift = f;
          const std::uint32_t df = *module_degree(f);
          for (const VectorPoly& h : gb.generators()) {
            if (*module_degree(h) >= df) continue;
            const std::uint32_t room = df - 1 - *module_degree(h);
            lift = vec_add(lift,
                           act(testsupport::random_polynomial(alg, room, 2, rng), h));
          }
          lifts.push_back(std::move(lift));
        }
        const ModuleGroebnerBasis relifted =
            module_transfer_from_graded(galg, graded, lifts, mo);
        CHECK(relifted.verified());
      }
    }
  }
}

TEST_CASE("rank-one coherence with the ideal operations") {
  Rng rng(60006);
  for (const AlgebraRef& a : {testsupport::weyl1(), testsupport::usl2()}) {
    REQUIRE(consistency_check(a).empty());
    const GradedAlgebra gr = associated_graded(a);
    const MonomialOrder base(OrderKind::deglex, a->nvars());
    const ModuleOrder o(ModuleScheme::top, base, 1);
    for (int trial = 0; trial < 25; ++trial) {
      const Polynomial f = testsupport::random_polynomial(a, 3, 3, rng);
      const VectorPoly fv(std::vector<Polynomial>{f});
      // Degree and symbol coincide.
      CHECK(module_degree(fv) == degree(f));
      if (!f.is_zero())
        CHECK(module_symbol(gr, fv).vec().component(0) ==
              principal_symbol(gr, f).poly());
      // Reduction coincides.
      std::vector<Polynomial> g;
      std::vector<VectorPoly> gv;
      for (int k = 0; k < 2; ++k) {
        g.push_back(testsupport::random_nonzero_polynomial(a, 2, 3, rng));
        gv.push_back(VectorPoly(std::vector<Polynomial>{g.back()}));
      }
      const ReductionTrace rt = reduce(f, g, base, ReduceMode::full);
      const ModuleReductionTrace mt = module_reduce(fv, gv, o, ReduceMode::full);
      CHECK(mt.remainder.component(0) == rt.remainder);
      CHECK(mt.cofactors == rt.cofactors);
      // Completion coincides.
      const GroebnerBasis gb = autoreduce(buchberger(g, base));
      const ModuleGroebnerBasis mgb = module_autoreduce(module_buchberger(gv, o));
      REQUIRE(gb.generators().size() == mgb.generators().size());
      for (std::size_t k = 0; k < gb.generators().size(); ++k)
        CHECK(mgb.generators()[k].component(0) == gb.generators()[k]);
    }
  }
}
