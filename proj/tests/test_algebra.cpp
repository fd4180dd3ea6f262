#include <catch2/catch_amalgamated.hpp>

#include "skewgb/algebra.hpp"
#include "skewgb/orders.hpp"
#include "skewgb/parser.hpp"

#include "support/operator_oracles.hpp"
#include "support/random_inputs.hpp"

#include <random>

using namespace skewgb;
using testsupport::Rng;

namespace {

Polynomial pp(const AlgebraRef& a, const std::string& text) {
  return parse_polynomial(text, a);
}

}  // namespace

TEST_CASE("make_presentation validates its input") {
  const FieldSpec q = FieldSpec::rationals();
  CHECK_THROWS_AS(make_presentation(q, {"x", "x"}), invalid_argument_error);
  CHECK_THROWS_AS(make_presentation(q, {"x", ""}), invalid_argument_error);
  CHECK_THROWS_AS(
      make_presentation(q, {"x", "y"}, {{1, 0, Scalar::zero(q), LinearRemainder(q)}}),
      invalid_argument_error);
  CHECK_THROWS_AS(
      make_presentation(q, {"x", "y"}, {{0, 1, Scalar::one(q), LinearRemainder(q)}}),
      invalid_argument_error);
  CHECK_THROWS_AS(
      make_presentation(q, {"x", "y"},
                        {{1, 0, Scalar::one(q), LinearRemainder(q)},
                         {1, 0, Scalar::one(q), LinearRemainder(q)}}),
      invalid_argument_error);

  // Defaults: unspecified pairs commute.
  const AlgebraRef c3 = make_presentation(q, {"x", "y", "z"});
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = i + 1; j < 3; ++j) {
      CHECK(c3->c(i, j).is_one());
      CHECK(c3->d(i, j).is_zero());
    }
  CHECK(is_quasi_commutative(c3));
}

TEST_CASE("quasi-commutativity predicate") {
  CHECK_FALSE(is_quasi_commutative(testsupport::weyl1()));
  CHECK(is_quasi_commutative(testsupport::quantum_plane_q2()));
  CHECK(is_quasi_commutative(testsupport::commutative(3)));
}

TEST_CASE("normalize_word on the Weyl algebra") {
  const AlgebraRef a = testsupport::weyl1();
  // y*x -> x*y + 1
  CHECK(normalize_word(a, Word{1, 0}) == pp(a, "x*y + 1"));
  // y*y*x -> x*y^2 + 2*y
  CHECK(normalize_word(a, Word{1, 1, 0}) == pp(a, "x*y^2 + 2*y"));
  // Empty word is 1.
  CHECK(normalize_word(a, Word{}) == Polynomial::one(a));
}

TEST_CASE("normalize_word against the operator model") {
  const AlgebraRef a = testsupport::weyl1();
  Rng rng(7011);
  std::uniform_int_distribution<int> len(0, 7), letter(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    Word w;
    const int l = len(rng);
    for (int k = 0; k < l; ++k) w.push_back(letter(rng));
    const Polynomial nf = normalize_word(a, w);
    // Compare the operators on t^0 .. t^6.
    for (unsigned p = 0; p < 7; ++p) {
      testsupport::DensePoly test(p + 1, mpq_class(0));
      test[p] = 1;
      const auto direct = testsupport::apply_weyl_word(w, test);
      const auto via_nf = testsupport::apply_polynomial(nf, test, testsupport::apply_weyl_word);
      CHECK(direct == via_nf);
    }
  }
}

TEST_CASE("normalize_word on the quantum plane") {
  const AlgebraRef a = testsupport::quantum_plane_q2();
  CHECK(normalize_word(a, Word{1, 0}) == pp(a, "2*x*y"));
  Rng rng(7012);
  std::uniform_int_distribution<int> len(0, 7), letter(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    Word w;
    const int l = len(rng);
    for (int k = 0; k < l; ++k) w.push_back(letter(rng));
    const Polynomial nf = normalize_word(a, w);
    for (unsigned p = 0; p < 5; ++p) {
      testsupport::DensePoly test(p + 1, mpq_class(0));
      test[p] = 1;
      const auto apply = [](const Word& word, const testsupport::DensePoly& dp) {
        return testsupport::apply_qplane_word(word, dp, mpq_class(2));
      };
      CHECK(apply(w, test) == testsupport::apply_polynomial(nf, test, apply));
    }
  }
}

TEST_CASE("normalize_word is confluent under other strategies") {
  // Normalizing with randomly chosen rewrite positions must agree with the
  // deterministic leftmost strategy on consistency-checked presentations.
  const auto normalize_random = [](const AlgebraRef& a, const Word& input, Rng& rng) {
    Polynomial acc(a);
    std::vector<std::pair<Word, Scalar>> work{{input, Scalar::one(a->field())}};
    while (!work.empty()) {
      auto [w, c] = std::move(work.back());
      work.pop_back();
      std::vector<std::size_t> positions;
      for (std::size_t t = 0; t + 1 < w.size(); ++t)
        if (w[t] > w[t + 1]) positions.push_back(t);
      if (positions.empty()) {
        acc.add_term(sorted_word_exponent(a, w), c);
        continue;
      }
      std::uniform_int_distribution<std::size_t> pick(0, positions.size() - 1);
      for (auto& [w2, s] : rewrite_word_at(a, w, positions[pick(rng)]))
        work.emplace_back(std::move(w2), c * s);
    }
    return acc;
  };

  Rng rng(7013);
  for (const AlgebraRef& a : {testsupport::weyl2(), testsupport::usl2(),
                              testsupport::heisenberg(), testsupport::quantum_plane_gf7()}) {
    REQUIRE(consistency_check(a).empty());
    std::uniform_int_distribution<int> len(0, 6);
    std::uniform_int_distribution<unsigned> letter(0, unsigned(a->nvars() - 1));
    for (int trial = 0; trial < 60; ++trial) {
      Word w;
      const int l = len(rng);
      for (int k = 0; k < l; ++k) w.push_back(letter(rng));
      CHECK(normalize_word(a, w) == normalize_random(a, w, rng));
    }
  }
}

TEST_CASE("normalize_word degree bound and leading content") {
  const MonomialOrder deglex(OrderKind::deglex, 3);
  Rng rng(7014);
  for (const AlgebraRef& a : {testsupport::usl2(), testsupport::heisenberg()}) {
    REQUIRE(consistency_check(a).empty());
    std::uniform_int_distribution<int> len(1, 7);
    std::uniform_int_distribution<unsigned> letter(0, 2);
    for (int trial = 0; trial < 80; ++trial) {
      Word w;
      const int l = len(rng);
      for (int k = 0; k < l; ++k) w.push_back(letter(rng));
      const Polynomial nf = normalize_word(a, w);
      Exponent content(3, 0);
      for (unsigned idx : w) ++content[idx];
      const auto [lc, le] = leading_term(nf, deglex);
      CHECK(le == content);
      CHECK(!lc.is_zero());
      for (const auto& [e, s] : nf.terms()) {
        (void)s;
        CHECK(total_degree(e) <= w.size());
      }
    }
  }
}

TEST_CASE("polynomial addition and scaling") {
  const AlgebraRef a = testsupport::weyl1();
  CHECK(poly_add(pp(a, "x*y + 1"), pp(a, "-x*y")) == Polynomial::one(a));
  CHECK(poly_scale(Scalar::zero(a->field()), pp(a, "x + y")).is_zero());
  CHECK(poly_scale(Scalar::from_int(a->field(), 2), pp(a, "x + y")) == pp(a, "2*x + 2*y"));
  const AlgebraRef b = testsupport::quantum_plane_q2();
  CHECK_THROWS_AS(poly_add(pp(a, "x"), pp(b, "x")), algebra_mismatch_error);
}

TEST_CASE("poly_mul on the Weyl algebra") {
  const AlgebraRef a = testsupport::weyl1();
  CHECK(poly_mul(pp(a, "y"), pp(a, "x")) == pp(a, "x*y + 1"));
  CHECK(poly_mul(pp(a, "x*y"), pp(a, "x*y")) == pp(a, "x^2*y^2 + x*y"));
  const Polynomial f = pp(a, "x*y^2 - 3*x + 1/2");
  CHECK(poly_mul(f, Polynomial::one(a)) == f);
  CHECK(poly_mul(Polynomial::one(a), f) == f);
}

TEST_CASE("poly_mul is associative and distributive") {
  Rng rng(7015);
  for (const AlgebraRef& a : {testsupport::weyl1(), testsupport::usl2(),
                              testsupport::quantum_plane_gf7()}) {
    REQUIRE(consistency_check(a).empty());
    for (int trial = 0; trial < 25; ++trial) {
      const Polynomial f = testsupport::random_polynomial(a, 2, 3, rng);
      const Polynomial g = testsupport::random_polynomial(a, 2, 3, rng);
      const Polynomial h = testsupport::random_polynomial(a, 2, 3, rng);
      CHECK(poly_mul(poly_mul(f, g), h) == poly_mul(f, poly_mul(g, h)));
      CHECK(poly_mul(f, poly_add(g, h)) == poly_add(poly_mul(f, g), poly_mul(f, h)));
      CHECK(poly_mul(poly_add(f, g), h) == poly_add(poly_mul(f, h), poly_mul(g, h)));
    }
  }
}

TEST_CASE("monomial product data") {
  const AlgebraRef a = testsupport::weyl1();
  SECTION("empty factors") {
    const Exponent zero{0, 0};
    const auto pd = monomial_product_data(a, zero, Exponent{2, 1});
    CHECK(pd.coeff.is_one());
    CHECK(pd.tail.is_zero());
    const auto pd2 = monomial_product_data(a, Exponent{2, 1}, zero);
    CHECK(pd2.coeff.is_one());
    CHECK(pd2.tail.is_zero());
  }
  SECTION("Weyl relation pair") {
    const auto pd = monomial_product_data(a, Exponent{0, 1}, Exponent{1, 0});
    CHECK(pd.coeff.is_one());
    CHECK(pd.tail == Polynomial::one(a));
  }
  SECTION("quantum plane powers") {
    const AlgebraRef b = testsupport::quantum_plane_q2();
    const auto pd = monomial_product_data(b, Exponent{0, 2}, Exponent{1, 0});
    CHECK(pd.coeff == Scalar::from_int(b->field(), 4));
    CHECK(pd.tail.is_zero());
  }
  SECTION("agreement with poly_mul and the degree bound") {
    Rng rng(7016);
    for (const AlgebraRef& alg : {testsupport::weyl2(), testsupport::usl2()}) {
      REQUIRE(consistency_check(alg).empty());
      for (int trial = 0; trial < 40; ++trial) {
        const Exponent alpha = testsupport::random_exponent(alg->nvars(), 3, rng);
        const Exponent beta = testsupport::random_exponent(alg->nvars(), 3, rng);
        const auto pd = monomial_product_data(alg, alpha, beta);
        const Scalar one = Scalar::one(alg->field());
        const Polynomial lhs = poly_mul(Polynomial::monomial(alg, alpha, one),
                                        Polynomial::monomial(alg, beta, one));
        Polynomial rhs = pd.tail;
        rhs.add_term(exp_add(alpha, beta), pd.coeff);
        CHECK(lhs == rhs);
        if (!pd.tail.is_zero())
          CHECK(*degree(pd.tail) < total_degree(alpha) + total_degree(beta));
      }
    }
  }
  SECTION("quasi-commutative tails vanish") {
    Rng rng(7017);
    for (const AlgebraRef& alg :
         {testsupport::quantum_plane_q2(), testsupport::quantum_plane_gf7(),
          testsupport::commutative(3)}) {
      for (int trial = 0; trial < 40; ++trial) {
        const Exponent alpha = testsupport::random_exponent(alg->nvars(), 4, rng);
        const Exponent beta = testsupport::random_exponent(alg->nvars(), 4, rng);
        CHECK(monomial_product_data(alg, alpha, beta).tail.is_zero());
      }
    }
  }
}

TEST_CASE("consistency check accepts the standard examples") {
  CHECK(consistency_check(testsupport::weyl1()).empty());
  CHECK(consistency_check(testsupport::weyl2()).empty());
  CHECK(consistency_check(testsupport::heisenberg()).empty());
  CHECK(consistency_check(testsupport::usl2()).empty());
  CHECK(testsupport::weyl2()->consistency_verified() == false);  // fresh copy, unflagged
  const AlgebraRef a = testsupport::weyl2();
  consistency_check(a);
  CHECK(a->consistency_verified());
}

TEST_CASE("consistency check reports the documented failure") {
  const FieldSpec q = FieldSpec::rationals();
  // y*x = x*y + 1, z*x = x*z, z*y = y*z + y
  std::map<unsigned, Scalar> dy{{1u, Scalar::one(q)}};
  const AlgebraRef a = make_presentation(
      q, {"x", "y", "z"},
      {{1, 0, Scalar::one(q), LinearRemainder(Scalar::one(q), {})},
       {2, 0, Scalar::one(q), LinearRemainder(q)},
       {2, 1, Scalar::one(q), LinearRemainder(Scalar::zero(q), dy)}});
  const auto failures = consistency_check(a);
  REQUIRE(failures.size() == 1);
  CHECK(failures[0].i == 0);
  CHECK(failures[0].j == 1);
  CHECK(failures[0].k == 2);
  // The two normal forms differ by the constant 1.
  CHECK(poly_sub(failures[0].resolve_kj_first, failures[0].resolve_ji_first) ==
        Polynomial::one(a));
  CHECK_FALSE(a->consistency_verified());
  CHECK_THROWS_AS(ensure_consistent(a), inconsistent_presentation_error);
}

TEST_CASE("n = 0 presentations collapse to the field") {
  const AlgebraRef k = make_presentation(FieldSpec::rationals(), {});
  CHECK(consistency_check(k).empty());
  const Polynomial one = Polynomial::one(k);
  CHECK(poly_mul(one, one) == one);
  CHECK(normalize_word(k, Word{}) == one);
}
