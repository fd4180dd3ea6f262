#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "skewgb/error.hpp"

namespace skewgb {

enum class FieldKind { rationals, prime_field };

// The coefficient field k: exact rationals or GF(p) for an odd or even prime
// p < 2^31. Characteristic 0 encodes the rationals.
class FieldSpec {
public:
  static FieldSpec rationals() { return FieldSpec(FieldKind::rationals, 0); }

  static FieldSpec prime_field(std::uint32_t p) {
    if (p > 0x7fffffffu)
      throw invalid_argument_error("prime field characteristic must be < 2^31");
    if (!is_prime(p))
      throw invalid_argument_error("prime field characteristic must be prime, got " +
                                   std::to_string(p));
    return FieldSpec(FieldKind::prime_field, p);
  }

  FieldKind kind() const { return kind_; }
  std::uint32_t characteristic() const { return char_; }

  bool operator==(const FieldSpec&) const = default;

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
      if (n % d == 0) return false;
    return true;
  }

private:
  FieldSpec(FieldKind kind, std::uint32_t characteristic)
      : kind_(kind), char_(characteristic) {}

  FieldKind kind_;
  std::uint32_t char_;
};

// An element of the coefficient field. Rationals are kept reduced with a
// positive denominator (GMP canonical form); prime-field residues live in
// [0, p). Scalars are immutable values.
class Scalar {
public:
  Scalar() : field_(FieldSpec::rationals()) {}

  static Scalar zero(const FieldSpec& f) { return Scalar(f, mpq_class(0), 0); }

  static Scalar one(const FieldSpec& f) {
    return f.kind() == FieldKind::rationals ? Scalar(f, mpq_class(1), 0)
                                            : Scalar(f, mpq_class(0), 1 % f.characteristic());
  }

  static Scalar from_int(const FieldSpec& f, long v) {
    return from_mpq(f, mpq_class(v));
  }

  // Interprets an exact rational in the field; over GF(p) this is
  // num * den^{-1} mod p and the denominator must be a unit mod p.
  static Scalar from_mpq(const FieldSpec& f, mpq_class q) {
    q.canonicalize();
    if (f.kind() == FieldKind::rationals) return Scalar(f, std::move(q), 0);
    const std::uint32_t p = f.characteristic();
    std::uint32_t num = static_cast<std::uint32_t>(
        mpz_fdiv_ui(q.get_num().get_mpz_t(), p));
    std::uint32_t den = static_cast<std::uint32_t>(
        mpz_fdiv_ui(q.get_den().get_mpz_t(), p));
    if (den == 0)
      throw division_by_zero_error("denominator vanishes modulo " + std::to_string(p));
    return Scalar(f, mpq_class(0), mul_mod(num, inv_mod(den, p), p));
  }

  const FieldSpec& field() const { return field_; }

  bool is_zero() const {
    return field_.kind() == FieldKind::rationals ? rat_ == 0 : res_ == 0;
  }

  bool is_one() const {
    return field_.kind() == FieldKind::rationals ? rat_ == 1 : res_ == 1 % field_.characteristic();
  }

  // Valid over the rationals only.
  const mpq_class& rational_value() const { return rat_; }

  // Valid over a prime field only.
  std::uint32_t residue_value() const { return res_; }

  Scalar operator-() const {
    if (field_.kind() == FieldKind::rationals) return Scalar(field_, -rat_, 0);
    const std::uint32_t p = field_.characteristic();
    return Scalar(field_, mpq_class(0), res_ == 0 ? 0 : p - res_);
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    a.require_same_field(b);
    if (a.field_.kind() == FieldKind::rationals)
      return Scalar(a.field_, a.rat_ + b.rat_, 0);
    const std::uint64_t p = a.field_.characteristic();
    return Scalar(a.field_, mpq_class(0),
                  static_cast<std::uint32_t>((std::uint64_t(a.res_) + b.res_) % p));
  }

  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    a.require_same_field(b);
    if (a.field_.kind() == FieldKind::rationals)
      return Scalar(a.field_, a.rat_ * b.rat_, 0);
    return Scalar(a.field_, mpq_class(0),
                  mul_mod(a.res_, b.res_, a.field_.characteristic()));
  }

  Scalar inverse() const {
    if (is_zero()) throw division_by_zero_error("inverse of zero");
    if (field_.kind() == FieldKind::rationals)
      return Scalar(field_, 1 / rat_, 0);
    return Scalar(field_, mpq_class(0), inv_mod(res_, field_.characteristic()));
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  bool operator==(const Scalar& other) const {
    if (field_ != other.field_) return false;
    return field_.kind() == FieldKind::rationals ? rat_ == other.rat_
                                                 : res_ == other.res_;
  }

  std::string str() const {
    return field_.kind() == FieldKind::rationals ? rat_.get_str()
                                                 : std::to_string(res_);
  }

private:
  Scalar(FieldSpec f, mpq_class rat, std::uint32_t res)
      : field_(f), rat_(std::move(rat)), res_(res) {}

  void require_same_field(const Scalar& other) const {
    if (field_ != other.field_)
      throw field_mismatch_error("scalars over different coefficient fields");
  }

  static std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p);
  }

  static std::uint32_t pow_mod(std::uint32_t base, std::uint32_t e, std::uint32_t p) {
    std::uint64_t acc = 1 % p, b = base % p;
    while (e) {
      if (e & 1) acc = (acc * b) % p;
      b = (b * b) % p;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
  }

  static std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // p prime, a != 0 mod p: Fermat.
    return pow_mod(a % p, p - 2, p);
  }

  FieldSpec field_;
  mpq_class rat_;      // used iff rationals
  std::uint32_t res_;  // used iff prime field
};

inline Scalar scalar_add(const Scalar& a, const Scalar& b) { return a + b; }
inline Scalar scalar_mul(const Scalar& a, const Scalar& b) { return a * b; }
inline Scalar scalar_inv(const Scalar& a) { return a.inverse(); }

}  // namespace skewgb
