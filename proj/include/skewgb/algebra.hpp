#pragma once

#include <atomic>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skewgb/error.hpp"
#include "skewgb/exponent.hpp"
#include "skewgb/field.hpp"

namespace skewgb {

// The at-most-linear remainder d of a defining relation
//   x_j * x_i = c * x_i * x_j + d,   d = constant + sum_k coeff_k * x_k.
class LinearRemainder {
public:
  explicit LinearRemainder(const FieldSpec& f) : constant_(Scalar::zero(f)) {}

  LinearRemainder(Scalar constant, std::map<unsigned, Scalar> coeffs)
      : constant_(std::move(constant)) {
    for (auto& [k, s] : coeffs) {
      if (s.field() != constant_.field())
        throw field_mismatch_error("remainder coefficients over mixed fields");
      if (!s.is_zero()) coeffs_.emplace(k, std::move(s));
    }
  }

  const Scalar& constant() const { return constant_; }
  const std::map<unsigned, Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return constant_.is_zero() && coeffs_.empty(); }

  bool operator==(const LinearRemainder&) const = default;

private:
  Scalar constant_;
  std::map<unsigned, Scalar> coeffs_;  // variable index -> nonzero scalar
};

// One defining relation handed to make_presentation:
//   x_high * x_low = coeff * x_low * x_high + tail,  with low < high.
struct Relation {
  unsigned high = 0;
  unsigned low = 0;
  Scalar coeff;
  LinearRemainder tail;
};

class AlgebraPresentation;
using AlgebraRef = std::shared_ptr<const AlgebraPresentation>;

// A word in the generators, by variable index. Not necessarily sorted.
using Word = std::vector<unsigned>;

// The finite data of a bijective skew PBW extension of the field k: variable
// names and, for each pair i < j, the unit c(i,j) and remainder d(i,j) of
// x_j x_i = c(i,j) x_i x_j + d(i,j). Pairs not mentioned commute. Immutable
// after construction; always handled through AlgebraRef.
class AlgebraPresentation {
public:
  AlgebraPresentation(const AlgebraPresentation&) = delete;
  AlgebraPresentation& operator=(const AlgebraPresentation&) = delete;

  const FieldSpec& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& var_names() const { return names_; }

  const std::string& var_name(unsigned i) const {
    if (i >= names_.size()) throw invalid_argument_error("variable index out of range");
    return names_[i];
  }

  std::optional<unsigned> var_index(std::string_view name) const {
    for (unsigned i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  // Both accessors require i < j.
  const Scalar& c(unsigned i, unsigned j) const { return c_[pair_index(i, j)]; }
  const LinearRemainder& d(unsigned i, unsigned j) const { return d_[pair_index(i, j)]; }

  // Set once consistency_check() has come back empty.
  bool consistency_verified() const { return consistent_.load(std::memory_order_relaxed); }
  void mark_consistent() const { consistent_.store(true, std::memory_order_relaxed); }

  bool operator==(const AlgebraPresentation& other) const {
    return field_ == other.field_ && names_ == other.names_ && c_ == other.c_ &&
           d_ == other.d_;
  }

  friend AlgebraRef make_presentation(const FieldSpec&, std::vector<std::string>,
                                      const std::vector<Relation>&);

private:
  AlgebraPresentation(FieldSpec f, std::vector<std::string> names)
      : field_(f), names_(std::move(names)) {
    const std::size_t n = names_.size();
    c_.assign(n * (n - 1) / 2, Scalar::one(field_));
    d_.assign(n * (n - 1) / 2, LinearRemainder(field_));
  }

  std::size_t pair_index(unsigned i, unsigned j) const {
    if (!(i < j) || j >= names_.size())
      throw invalid_argument_error("relation pair indices must satisfy i < j < n");
    // Row-major upper triangle without the diagonal.
    const std::size_t n = names_.size();
    return (std::size_t(i) * (2 * n - i - 1)) / 2 + (j - i - 1);
  }

  FieldSpec field_;
  std::vector<std::string> names_;
  std::vector<Scalar> c_;
  std::vector<LinearRemainder> d_;
  mutable std::atomic<bool> consistent_{false};
};

inline bool same_algebra(const AlgebraRef& a, const AlgebraRef& b) {
  if (a.get() == b.get()) return true;
  return a && b && *a == *b;
}

inline AlgebraRef make_presentation(const FieldSpec& field,
                                    std::vector<std::string> var_names,
                                    const std::vector<Relation>& relations = {}) {
  for (std::size_t i = 0; i < var_names.size(); ++i) {
    if (var_names[i].empty()) throw invalid_argument_error("empty variable name");
    for (std::size_t j = i + 1; j < var_names.size(); ++j)
      if (var_names[i] == var_names[j])
        throw invalid_argument_error("duplicate variable name '" + var_names[i] + "'");
  }
  auto a = std::shared_ptr<AlgebraPresentation>(
      new AlgebraPresentation(field, std::move(var_names)));
  std::vector<bool> seen(a->nvars() * a->nvars(), false);
  for (const Relation& r : relations) {
    if (!(r.low < r.high) || r.high >= a->nvars())
      throw invalid_argument_error("relation pair indices must satisfy i < j < n");
    if (seen[r.low * a->nvars() + r.high])
      throw invalid_argument_error("duplicate relation for pair (" +
                                   a->var_name(r.low) + ", " + a->var_name(r.high) + ")");
    seen[r.low * a->nvars() + r.high] = true;
    if (r.coeff.field() != field || r.tail.constant().field() != field)
      throw field_mismatch_error("relation data over a different field");
    if (r.coeff.is_zero())
      throw invalid_argument_error("relation constant c must be nonzero");
    for (const auto& [k, s] : r.tail.coeffs()) {
      (void)s;
      if (k >= a->nvars())
        throw invalid_argument_error("remainder references an unknown variable");
    }
    a->c_[a->pair_index(r.low, r.high)] = r.coeff;
    a->d_[a->pair_index(r.low, r.high)] = r.tail;
  }
  return a;
}

inline bool is_quasi_commutative(const AlgebraPresentation& a) {
  for (unsigned i = 0; i < a.nvars(); ++i)
    for (unsigned j = i + 1; j < a.nvars(); ++j)
      if (!a.d(i, j).is_zero()) return false;
  return true;
}

inline bool is_quasi_commutative(const AlgebraRef& a) { return is_quasi_commutative(*a); }

// All c(i,j) = 1 and all d(i,j) = 0: an honest commutative polynomial ring.
inline bool is_commutative(const AlgebraPresentation& a) {
  for (unsigned i = 0; i < a.nvars(); ++i)
    for (unsigned j = i + 1; j < a.nvars(); ++j)
      if (!a.c(i, j).is_one() || !a.d(i, j).is_zero()) return false;
  return true;
}

inline bool is_commutative(const AlgebraRef& a) { return is_commutative(*a); }

// An element of the extension written in the standard-monomial basis: a finite
// association from exponents to nonzero scalars. The zero polynomial stores no
// terms. Values; all arithmetic is pure.
class Polynomial {
public:
  using TermMap = std::map<Exponent, Scalar, CanonicalExpLess>;

  Polynomial() = default;
  explicit Polynomial(AlgebraRef algebra) : algebra_(std::move(algebra)) {}

  static Polynomial zero(AlgebraRef a) { return Polynomial(std::move(a)); }

  static Polynomial constant(AlgebraRef a, const Scalar& s) {
    Polynomial p(std::move(a));
    p.add_term(Exponent(p.algebra_->nvars(), 0), s);
    return p;
  }

  static Polynomial one(AlgebraRef a) {
    const FieldSpec f = a->field();
    return constant(std::move(a), Scalar::one(f));
  }

  static Polynomial monomial(AlgebraRef a, Exponent e, const Scalar& coeff) {
    if (e.size() != a->nvars())
      throw invalid_argument_error("exponent length does not match the presentation");
    Polynomial p(std::move(a));
    p.add_term(e, coeff);
    return p;
  }

  static Polynomial variable(AlgebraRef a, unsigned index) {
    if (index >= a->nvars()) throw invalid_argument_error("variable index out of range");
    Exponent e(a->nvars(), 0);
    e[index] = 1;
    const FieldSpec f = a->field();
    return monomial(std::move(a), std::move(e), Scalar::one(f));
  }

  const AlgebraRef& algebra() const { return algebra_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Scalar coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar::zero(algebra_->field()) : it->second;
  }

  // Accumulates coeff onto the term at e, pruning a resulting zero.
  void add_term(const Exponent& e, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    if (e.size() != algebra_->nvars())
      throw invalid_argument_error("exponent length does not match the presentation");
    auto [it, inserted] = terms_.try_emplace(e, coeff);
    if (!inserted) {
      it->second = it->second + coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  bool operator==(const Polynomial& other) const {
    if (!algebra_ || !other.algebra_) return !algebra_ && !other.algebra_ && terms_.empty() && other.terms_.empty();
    if (!same_algebra(algebra_, other.algebra_)) return false;
    return terms_ == other.terms_;
  }

private:
  AlgebraRef algebra_;
  TermMap terms_;
};

inline void require_same_algebra(const Polynomial& f, const Polynomial& g) {
  if (!same_algebra(f.algebra(), g.algebra()))
    throw algebra_mismatch_error("polynomials over different presentations");
}

inline Polynomial poly_add(const Polynomial& f, const Polynomial& g) {
  require_same_algebra(f, g);
  Polynomial r = f;
  for (const auto& [e, s] : g.terms()) r.add_term(e, s);
  return r;
}

inline Polynomial poly_neg(const Polynomial& f) {
  Polynomial r(f.algebra());
  for (const auto& [e, s] : f.terms()) r.add_term(e, -s);
  return r;
}

inline Polynomial poly_sub(const Polynomial& f, const Polynomial& g) {
  return poly_add(f, poly_neg(g));
}

inline Polynomial poly_scale(const Scalar& c, const Polynomial& f) {
  if (c.field() != f.algebra()->field())
    throw field_mismatch_error("scale factor over a different field");
  Polynomial r(f.algebra());
  if (c.is_zero()) return r;
  for (const auto& [e, s] : f.terms()) r.add_term(e, c * s);
  return r;
}

inline Word word_of_exponent(const Exponent& e) {
  Word w;
  for (unsigned k = 0; k < e.size(); ++k)
    for (std::uint32_t t = 0; t < e[k]; ++t) w.push_back(k);
  return w;
}

// Requires a nondecreasing word.
inline Exponent sorted_word_exponent(const AlgebraRef& a, const Word& w) {
  Exponent e(a->nvars(), 0);
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (t + 1 < w.size() && w[t] > w[t + 1])
      throw invalid_argument_error("word is not sorted");
    ++e[w[t]];
  }
  return e;
}

// Applies the defining relation once at position pos (which must hold a
// descending pair) and returns the resulting words with their scalar weights:
// the swapped word weighted by c, plus one shorter word per remainder term.
inline std::vector<std::pair<Word, Scalar>> rewrite_word_at(const AlgebraRef& a,
                                                            const Word& w,
                                                            std::size_t pos) {
  if (pos + 1 >= w.size() || w[pos] <= w[pos + 1])
    throw invalid_argument_error("rewrite position does not hold a descending pair");
  const unsigned j = w[pos], i = w[pos + 1];
  std::vector<std::pair<Word, Scalar>> out;
  Word swapped = w;
  std::swap(swapped[pos], swapped[pos + 1]);
  out.emplace_back(std::move(swapped), a->c(i, j));
  const LinearRemainder& d = a->d(i, j);
  const auto splice = [&](std::optional<unsigned> mid) {
    Word u(w.begin(), w.begin() + pos);
    if (mid) u.push_back(*mid);
    u.insert(u.end(), w.begin() + pos + 2, w.end());
    return u;
  };
  for (const auto& [k, s] : d.coeffs()) out.emplace_back(splice(k), s);
  if (!d.constant().is_zero()) out.emplace_back(splice(std::nullopt), d.constant());
  return out;
}

// Expands a product of generators into the standard-monomial basis by
// repeatedly rewriting the leftmost descending pair. Terminates: each step
// lowers (degree, inversion count) lexicographically. The empty word is 1.
inline Polynomial normalize_word(const AlgebraRef& a, std::span<const unsigned> word) {
  for (unsigned idx : word)
    if (idx >= a->nvars()) throw invalid_argument_error("variable index out of range");
  Polynomial acc(a);
  std::vector<std::pair<Word, Scalar>> work;
  work.emplace_back(Word(word.begin(), word.end()), Scalar::one(a->field()));
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    std::size_t pos = w.size();
    for (std::size_t t = 0; t + 1 < w.size(); ++t)
      if (w[t] > w[t + 1]) {
        pos = t;
        break;
      }
    if (pos == w.size()) {
      acc.add_term(sorted_word_exponent(a, w), c);
      continue;
    }
    for (auto& [w2, s] : rewrite_word_at(a, w, pos))
      work.emplace_back(std::move(w2), c * s);
  }
  return acc;
}

inline Polynomial normalize_word(const AlgebraRef& a, const Word& word) {
  return normalize_word(a, std::span<const unsigned>(word.data(), word.size()));
}

inline Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
  require_same_algebra(f, g);
  const AlgebraRef& a = f.algebra();
  Polynomial out(a);
  for (const auto& [ea, ca] : f.terms()) {
    // x^ea * g, one generator at a time from the right: each step normalizes
    // a word with a single out-of-place letter, which keeps the worklist
    // small. By confluence this agrees with normalizing the whole word.
    Polynomial h = g;
    const Word word = word_of_exponent(ea);
    for (std::size_t k = word.size(); k-- > 0;) {
      Polynomial next(a);
      for (const auto& [eb, cb] : h.terms()) {
        Word w;
        const Word tail = word_of_exponent(eb);
        w.reserve(1 + tail.size());
        w.push_back(word[k]);
        w.insert(w.end(), tail.begin(), tail.end());
        const Polynomial m = normalize_word(a, w);
        for (const auto& [e, cm] : m.terms()) next.add_term(e, cb * cm);
      }
      h = std::move(next);
    }
    for (const auto& [e, ch] : h.terms()) out.add_term(e, ca * ch);
  }
  return out;
}

inline Polynomial operator+(const Polynomial& f, const Polynomial& g) { return poly_add(f, g); }
inline Polynomial operator-(const Polynomial& f, const Polynomial& g) { return poly_sub(f, g); }
inline Polynomial operator-(const Polynomial& f) { return poly_neg(f); }
inline Polynomial operator*(const Polynomial& f, const Polynomial& g) { return poly_mul(f, g); }
inline Polynomial operator*(const Scalar& c, const Polynomial& f) { return poly_scale(c, f); }

// x^a x^b = coeff * x^{a+b} + tail, with coeff nonzero and tail either zero or
// of strictly smaller degree.
struct ProductData {
  Scalar coeff;
  Polynomial tail;
};

inline ProductData monomial_product_data(const AlgebraRef& a, const Exponent& alpha,
                                         const Exponent& beta) {
  Word w = word_of_exponent(alpha);
  const Word right = word_of_exponent(beta);
  w.insert(w.end(), right.begin(), right.end());
  Polynomial p = normalize_word(a, w);
  const Exponent sum = exp_add(alpha, beta);
  const Scalar c = p.coefficient(sum);
  if (c.is_zero())
    throw internal_error("monomial product lost its top term");
  Polynomial tail = p;
  tail.add_term(sum, -c);
  for (const auto& [e, s] : tail.terms()) {
    (void)s;
    if (total_degree(e) >= total_degree(sum))
      throw internal_error("monomial product tail is not of lower degree");
  }
  return ProductData{c, std::move(tail)};
}

// One cubic overlap x_k x_j x_i whose two one-step resolutions normalize to
// different elements, reported with both normal forms.
struct OverlapFailure {
  unsigned i = 0, j = 0, k = 0;
  Polynomial resolve_kj_first;
  Polynomial resolve_ji_first;
};

namespace detail {
inline Polynomial expand_after_step(const AlgebraRef& a, const Word& w, std::size_t pos) {
  Polynomial acc(a);
  for (const auto& [w2, s] : rewrite_word_at(a, w, pos))
    acc = poly_add(acc, poly_scale(s, normalize_word(a, w2)));
  return acc;
}
}  // namespace detail

// Diamond-lemma check over all cubic overlaps. An empty result means the
// standard monomials really form a basis for the given relations; the
// presentation is then flagged so Groebner routines will accept it.
inline std::vector<OverlapFailure> consistency_check(const AlgebraRef& a) {
  std::vector<OverlapFailure> failures;
  const unsigned n = static_cast<unsigned>(a->nvars());
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j)
      for (unsigned k = j + 1; k < n; ++k) {
        const Word w = {k, j, i};
        Polynomial kj_first = detail::expand_after_step(a, w, 0);
        Polynomial ji_first = detail::expand_after_step(a, w, 1);
        if (!(kj_first == ji_first))
          failures.push_back({i, j, k, std::move(kj_first), std::move(ji_first)});
      }
  if (failures.empty()) a->mark_consistent();
  return failures;
}

inline void ensure_consistent(const AlgebraRef& a) {
  if (a->consistency_verified()) return;
  const auto failures = consistency_check(a);
  if (!failures.empty())
    throw inconsistent_presentation_error(
        "presentation fails the overlap check on " + std::to_string(failures.size()) +
        " cubic overlap(s)");
}

}  // namespace skewgb
