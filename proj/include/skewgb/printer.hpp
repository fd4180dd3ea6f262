#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "skewgb/algebra.hpp"
#include "skewgb/freemod.hpp"
#include "skewgb/orders.hpp"

namespace skewgb {

inline std::string to_string(const Scalar& s) { return s.str(); }

inline std::string monomial_string(const AlgebraRef& a, const Exponent& e) {
  std::string out;
  for (unsigned k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += a->var_name(k);
    if (e[k] > 1) out += '^' + std::to_string(e[k]);
  }
  return out;
}

namespace detail {
// One printed term: sign split off for the rationals so that output reads
// "x*y - 1/2*y" rather than "x*y + -1/2*y". Prime-field residues have no sign.
struct PrintedTerm {
  bool negative;
  std::string body;
};

inline PrintedTerm printed_term(const AlgebraRef& a, const Exponent& e, const Scalar& c) {
  bool negative = false;
  Scalar mag = c;
  if (c.field().kind() == FieldKind::rationals && c.rational_value() < 0) {
    negative = true;
    mag = -c;
  }
  const std::string mono = monomial_string(a, e);
  if (mono.empty()) return {negative, mag.str()};
  if (mag.is_one()) return {negative, mono};
  return {negative, mag.str() + '*' + mono};
}
}  // namespace detail

// Canonical text: terms descending under the given order, unit coefficients
// and zero exponents omitted. Parses back to the same polynomial.
inline std::string to_string(const Polynomial& f, const MonomialOrder& o) {
  if (f.is_zero()) return "0";
  std::vector<const Exponent*> exps;
  exps.reserve(f.term_count());
  for (const auto& [e, s] : f.terms()) {
    (void)s;
    exps.push_back(&e);
  }
  std::sort(exps.begin(), exps.end(),
            [&](const Exponent* x, const Exponent* y) { return o.compare(*x, *y) > 0; });
  std::string out;
  for (const Exponent* e : exps) {
    const auto t = detail::printed_term(f.algebra(), *e, f.terms().at(*e));
    if (out.empty())
      out = (t.negative ? "-" : "") + t.body;
    else
      out += (t.negative ? " - " : " + ") + t.body;
  }
  return out;
}

inline std::string to_string(const VectorPoly& v, const MonomialOrder& base) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.rank(); ++k) {
    if (k) out += ", ";
    out += to_string(v.component(k), base);
  }
  return out + "]";
}

inline std::string to_string(const VectorPoly& v, const ModuleOrder& o) {
  return to_string(v, o.base());
}

inline std::string to_string(const MonomialOrder& o, const AlgebraRef& a) {
  std::string out = o.kind() == OrderKind::deglex ? "deglex" : "degrevlex";
  bool identity = true;
  for (unsigned k = 0; k < o.priority().size(); ++k)
    if (o.priority()[k] != k) identity = false;
  if (!identity) {
    out += ':';
    for (std::size_t k = 0; k < o.priority().size(); ++k) {
      if (k) out += '>';
      out += a->var_name(o.priority()[k]);
    }
  }
  return out;
}

inline std::string to_string(const ModuleOrder& o, const AlgebraRef& a) {
  return std::string(o.scheme() == ModuleScheme::top ? "top:" : "pot:") +
         to_string(o.base(), a);
}

// Presentation in the same line-oriented format the loader reads.
inline std::string to_presentation_text(const AlgebraRef& a) {
  std::string out;
  if (a->field().kind() == FieldKind::rationals)
    out += "field QQ\n";
  else
    out += "field GF " + std::to_string(a->field().characteristic()) + "\n";
  out += "vars";
  for (const std::string& name : a->var_names()) out += ' ' + name;
  out += '\n';
  const MonomialOrder canon(OrderKind::degrevlex, a->nvars());
  for (unsigned i = 0; i < a->nvars(); ++i)
    for (unsigned j = i + 1; j < a->nvars(); ++j) {
      const Scalar& c = a->c(i, j);
      const LinearRemainder& d = a->d(i, j);
      if (c.is_one() && d.is_zero()) continue;
      Polynomial rhs(a);
      Exponent e(a->nvars(), 0);
      e[i] = e[j] = 1;
      rhs.add_term(e, c);
      rhs.add_term(Exponent(a->nvars(), 0), d.constant());
      for (const auto& [k, s] : d.coeffs()) {
        Exponent ek(a->nvars(), 0);
        ek[k] = 1;
        rhs.add_term(ek, s);
      }
      out += "rel " + a->var_name(j) + "*" + a->var_name(i) + " = " +
             to_string(rhs, canon) + "\n";
    }
  return out;
}

}  // namespace skewgb
