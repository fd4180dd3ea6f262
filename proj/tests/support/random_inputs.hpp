#pragma once

// Deterministic random generators for property tests. Every suite seeds its
// own engine so failures reproduce.

#include <random>
#include <vector>

#include "skewgb/skewgb.hpp"

namespace testsupport {

using Rng = std::mt19937_64;

inline skewgb::Scalar random_nonzero_scalar(const skewgb::FieldSpec& f, Rng& rng) {
  if (f.kind() == skewgb::FieldKind::rationals) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    int n = num(rng);
    while (n == 0) n = num(rng);
    return skewgb::Scalar::from_mpq(f, mpq_class(n, den(rng)));
  }
  std::uniform_int_distribution<std::uint32_t> res(1, f.characteristic() - 1);
  return skewgb::Scalar::from_int(f, res(rng));
}

inline skewgb::Scalar random_scalar(const skewgb::FieldSpec& f, Rng& rng) {
  std::uniform_int_distribution<int> zero(0, 4);
  if (zero(rng) == 0) return skewgb::Scalar::zero(f);
  return random_nonzero_scalar(f, rng);
}

inline skewgb::Exponent random_exponent(std::size_t nvars, unsigned max_degree, Rng& rng) {
  skewgb::Exponent e(nvars, 0);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, nvars ? nvars - 1 : 0);
  const unsigned d = deg(rng);
  for (unsigned k = 0; k < d && nvars > 0; ++k) ++e[var(rng)];
  return e;
}

inline skewgb::Polynomial random_polynomial(const skewgb::AlgebraRef& a,
                                            unsigned max_degree, unsigned max_terms,
                                            Rng& rng) {
  skewgb::Polynomial p(a);
  std::uniform_int_distribution<unsigned> terms(1, max_terms);
  const unsigned t = terms(rng);
  for (unsigned k = 0; k < t; ++k)
    p.add_term(random_exponent(a->nvars(), max_degree, rng),
               random_nonzero_scalar(a->field(), rng));
  return p;
}

inline skewgb::Polynomial random_nonzero_polynomial(const skewgb::AlgebraRef& a,
                                                    unsigned max_degree,
                                                    unsigned max_terms, Rng& rng) {
  for (;;) {
    skewgb::Polynomial p = random_polynomial(a, max_degree, max_terms, rng);
    if (!p.is_zero()) return p;
  }
}

inline skewgb::VectorPoly random_vector_poly(const skewgb::AlgebraRef& a, std::size_t rank,
                                             unsigned max_degree, unsigned max_terms,
                                             Rng& rng) {
  skewgb::VectorPoly v(a, rank);
  std::uniform_int_distribution<unsigned> terms(1, max_terms);
  std::uniform_int_distribution<std::size_t> comp(0, rank - 1);
  const unsigned t = terms(rng);
  for (unsigned k = 0; k < t; ++k)
    v.add_term(comp(rng), random_exponent(a->nvars(), max_degree, rng),
               random_nonzero_scalar(a->field(), rng));
  return v;
}

inline skewgb::VectorPoly random_nonzero_vector_poly(const skewgb::AlgebraRef& a,
                                                     std::size_t rank, unsigned max_degree,
                                                     unsigned max_terms, Rng& rng) {
  for (;;) {
    skewgb::VectorPoly v = random_vector_poly(a, rank, max_degree, max_terms, rng);
    if (!v.is_zero()) return v;
  }
}

// The algebras most tests run over.

inline skewgb::AlgebraRef weyl1() {
  using namespace skewgb;
  const FieldSpec q = FieldSpec::rationals();
  LinearRemainder d(Scalar::one(q), {});
  return make_presentation(q, {"x", "y"}, {{1, 0, Scalar::one(q), d}});
}

inline skewgb::AlgebraRef weyl2() {
  using namespace skewgb;
  const FieldSpec q = FieldSpec::rationals();
  LinearRemainder d(Scalar::one(q), {});
  return make_presentation(q, {"x1", "x2", "y1", "y2"},
                           {{2, 0, Scalar::one(q), d}, {3, 1, Scalar::one(q), d}});
}

inline skewgb::AlgebraRef quantum_plane_q2() {
  using namespace skewgb;
  const FieldSpec q = FieldSpec::rationals();
  return make_presentation(q, {"x", "y"},
                           {{1, 0, Scalar::from_int(q, 2), LinearRemainder(q)}});
}

inline skewgb::AlgebraRef quantum_plane_gf7() {
  using namespace skewgb;
  const FieldSpec f = FieldSpec::prime_field(7);
  return make_presentation(f, {"x", "y"},
                           {{1, 0, Scalar::from_int(f, 3), LinearRemainder(f)}});
}

inline skewgb::AlgebraRef heisenberg() {
  using namespace skewgb;
  const FieldSpec q = FieldSpec::rationals();
  std::map<unsigned, Scalar> lin{{0u, Scalar::one(q)}};
  return make_presentation(
      q, {"x", "y", "z"},
      {{2, 1, Scalar::one(q), LinearRemainder(Scalar::zero(q), lin)}});
}

inline skewgb::AlgebraRef usl2() {
  using namespace skewgb;
  const FieldSpec q = FieldSpec::rationals();
  std::map<unsigned, Scalar> d_fe{{2u, -Scalar::one(q)}};
  std::map<unsigned, Scalar> d_he{{0u, Scalar::from_int(q, 2)}};
  std::map<unsigned, Scalar> d_hf{{1u, Scalar::from_int(q, -2)}};
  return make_presentation(q, {"e", "f", "h"},
                           {{1, 0, Scalar::one(q), LinearRemainder(Scalar::zero(q), d_fe)},
                            {2, 0, Scalar::one(q), LinearRemainder(Scalar::zero(q), d_he)},
                            {2, 1, Scalar::one(q), LinearRemainder(Scalar::zero(q), d_hf)}});
}

inline skewgb::AlgebraRef commutative(std::size_t nvars,
                                      skewgb::FieldSpec f = skewgb::FieldSpec::rationals()) {
  static const std::vector<std::string> letters{"x", "y", "z", "w"};
  std::vector<std::string> names;
  for (std::size_t k = 0; k < nvars; ++k)
    names.push_back(k < letters.size() ? letters[k] : "x" + std::to_string(k + 1));
  return skewgb::make_presentation(f, names);
}

}  // namespace testsupport
