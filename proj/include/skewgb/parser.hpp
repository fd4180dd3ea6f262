#pragma once

#include <cctype>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skewgb/algebra.hpp"
#include "skewgb/error.hpp"
#include "skewgb/freemod.hpp"
#include "skewgb/orders.hpp"

namespace skewgb {
namespace detail {

enum class TokKind {
  ident,
  number,
  plus,
  minus,
  star,
  caret,
  slash,
  lparen,
  rparen,
  lbracket,
  rbracket,
  comma,
  equals,
  end
};

struct Token {
  TokKind kind;
  std::string text;  // ident name or digit string
  std::size_t line, column;
};

// Hand-rolled lexer for the expression grammar. Positions are 1-based;
// the line offset lets presentation files report file line numbers.
class Lexer {
public:
  explicit Lexer(std::string_view text, std::size_t line = 1, std::size_t column = 1)
      : text_(text), line_(line), column_(column) {
    advance();
  }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& message, const Token& at) const {
    throw parse_error(message, at.line, at.column);
  }

private:
  void advance() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) step();
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= text_.size()) {
      current_.kind = TokKind::end;
      current_.text.clear();
      return;
    }
    const char ch = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        name += text_[pos_];
        step();
      }
      current_.kind = TokKind::ident;
      current_.text = std::move(name);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits += text_[pos_];
        step();
      }
      current_.kind = TokKind::number;
      current_.text = std::move(digits);
      return;
    }
    step();
    current_.text.assign(1, ch);
    switch (ch) {
      case '+': current_.kind = TokKind::plus; return;
      case '-': current_.kind = TokKind::minus; return;
      case '*': current_.kind = TokKind::star; return;
      case '^': current_.kind = TokKind::caret; return;
      case '/': current_.kind = TokKind::slash; return;
      case '(': current_.kind = TokKind::lparen; return;
      case ')': current_.kind = TokKind::rparen; return;
      case '[': current_.kind = TokKind::lbracket; return;
      case ']': current_.kind = TokKind::rbracket; return;
      case ',': current_.kind = TokKind::comma; return;
      case '=': current_.kind = TokKind::equals; return;
      default:
        throw parse_error("unexpected character '" + std::string(1, ch) + "'",
                          current_.line, current_.column);
    }
  }

  void step() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_, column_;
  Token current_{};
};

// Recursive-descent parser, generic over the value domain so the same grammar
// drives both normalized algebra elements and the restricted free form used
// for relation right-hand sides.
//
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := primary ['^' NUMBER]
//   primary:= IDENT | NUMBER ['/' NUMBER] | '(' expr ')'
//
// Multiplication is noncommutative and evaluated in written order;
// juxtaposition is not multiplication.
template <typename Domain>
class ExprParser {
public:
  ExprParser(Lexer& lex, Domain& domain) : lex_(lex), domain_(domain) {}

  typename Domain::Value parse_expression() {
    bool negate = false;
    if (lex_.peek().kind == TokKind::minus) {
      lex_.next();
      negate = true;
    }
    auto acc = parse_term();
    if (negate) acc = domain_.neg(std::move(acc));
    while (lex_.peek().kind == TokKind::plus || lex_.peek().kind == TokKind::minus) {
      const bool minus = lex_.next().kind == TokKind::minus;
      auto rhs = parse_term();
      acc = minus ? domain_.sub(std::move(acc), std::move(rhs))
                  : domain_.add(std::move(acc), std::move(rhs));
    }
    return acc;
  }

private:
  typename Domain::Value parse_term() {
    auto acc = parse_factor();
    while (lex_.peek().kind == TokKind::star) {
      lex_.next();
      acc = domain_.mul(std::move(acc), parse_factor());
    }
    return acc;
  }

  typename Domain::Value parse_factor() {
    auto base = parse_primary();
    if (lex_.peek().kind != TokKind::caret) return base;
    lex_.next();
    const Token t = lex_.peek();
    if (t.kind != TokKind::number)
      lex_.fail("expected a nonnegative integer exponent", t);
    lex_.next();
    unsigned long e = 0;
    try {
      e = std::stoul(t.text);
    } catch (const std::exception&) {
      lex_.fail("exponent out of range", t);
    }
    auto acc = domain_.one();
    for (unsigned long k = 0; k < e; ++k) acc = domain_.mul(std::move(acc), base);
    return acc;
  }

  typename Domain::Value parse_primary() {
    const Token t = lex_.peek();
    switch (t.kind) {
      case TokKind::ident: {
        lex_.next();
        return domain_.variable(t);
      }
      case TokKind::number: {
        lex_.next();
        mpz_class num(t.text);
        mpz_class den(1);
        if (lex_.peek().kind == TokKind::slash) {
          lex_.next();
          const Token d = lex_.peek();
          if (d.kind != TokKind::number)
            lex_.fail("expected an integer denominator", d);
          lex_.next();
          den = mpz_class(d.text);
          if (den == 0) lex_.fail("zero denominator", d);
        }
        return domain_.number(mpq_class(num, den), t);
      }
      case TokKind::lparen: {
        lex_.next();
        auto inner = parse_expression();
        if (lex_.peek().kind != TokKind::rparen)
          lex_.fail("expected ')'", lex_.peek());
        lex_.next();
        return inner;
      }
      default:
        lex_.fail("expected an identifier, number or '('", t);
    }
  }

  Lexer& lex_;
  Domain& domain_;
};

// Evaluation through the algebra: products run through poly_mul, so the
// result is already in normal form.
struct AlgebraDomain {
  using Value = Polynomial;
  AlgebraRef algebra;

  Value one() const { return Polynomial::one(algebra); }
  Value neg(Value v) const { return poly_neg(v); }
  Value add(Value a, Value b) const { return poly_add(a, b); }
  Value sub(Value a, Value b) const { return poly_sub(a, b); }
  Value mul(Value a, Value b) const { return poly_mul(a, b); }

  Value number(const mpq_class& q, const Token& at) const {
    try {
      return Polynomial::constant(algebra, Scalar::from_mpq(algebra->field(), q));
    } catch (const division_by_zero_error& e) {
      throw parse_error(e.what(), at.line, at.column);
    }
  }

  Value variable(const Token& t) const {
    const auto idx = algebra->var_index(t.text);
    if (!idx) throw parse_error("unknown identifier '" + t.text + "'", t.line, t.column);
    return Polynomial::variable(algebra, *idx);
  }
};

// Evaluation in the free word algebra, used for relation right-hand sides
// where the presentation does not exist yet. Products concatenate words;
// whether each word is a standard monomial is checked by the caller.
struct FreeDomain {
  using Value = std::map<Word, Scalar>;
  FieldSpec field;
  const std::vector<std::string>* names;

  Value one() const { return {{Word{}, Scalar::one(field)}}; }

  Value neg(Value v) const {
    for (auto& [w, s] : v) s = -s;
    return v;
  }

  Value add(Value a, const Value& b) const {
    for (const auto& [w, s] : b) accumulate(a, w, s);
    return a;
  }

  Value sub(Value a, Value b) const { return add(std::move(a), neg(std::move(b))); }

  Value mul(const Value& a, const Value& b) const {
    Value out;
    for (const auto& [wa, sa] : a)
      for (const auto& [wb, sb] : b) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        accumulate(out, w, sa * sb);
      }
    return out;
  }

  Value number(const mpq_class& q, const Token& at) const {
    try {
      return {{Word{}, Scalar::from_mpq(field, q)}};
    } catch (const division_by_zero_error& e) {
      throw parse_error(e.what(), at.line, at.column);
    }
  }

  Value variable(const Token& t) const {
    for (unsigned i = 0; i < names->size(); ++i)
      if ((*names)[i] == t.text) return {{Word(1, i), Scalar::one(field)}};
    throw parse_error("unknown identifier '" + t.text + "'", t.line, t.column);
  }

  static void accumulate(Value& v, const Word& w, const Scalar& s) {
    if (s.is_zero()) return;
    auto [it, inserted] = v.try_emplace(w, s);
    if (!inserted) {
      it->second = it->second + s;
      if (it->second.is_zero()) v.erase(it);
    }
  }
};

}  // namespace detail

// Parses one polynomial expression over the presentation. Noncommutative
// products are evaluated in written order through the rewriting system.
inline Polynomial parse_polynomial(std::string_view text, const AlgebraRef& a) {
  detail::Lexer lex(text);
  detail::AlgebraDomain domain{a};
  detail::ExprParser<detail::AlgebraDomain> parser(lex, domain);
  Polynomial p = parser.parse_expression();
  if (lex.peek().kind != detail::TokKind::end)
    lex.fail("unexpected trailing input", lex.peek());
  return p;
}

// Parses a vector literal "[f1, ..., fm]"; a bare expression is accepted as a
// rank-1 vector.
inline VectorPoly parse_vector_poly(std::string_view text, const AlgebraRef& a) {
  detail::Lexer lex(text);
  detail::AlgebraDomain domain{a};
  detail::ExprParser<detail::AlgebraDomain> parser(lex, domain);
  std::vector<Polynomial> comps;
  if (lex.peek().kind == detail::TokKind::lbracket) {
    lex.next();
    comps.push_back(parser.parse_expression());
    while (lex.peek().kind == detail::TokKind::comma) {
      lex.next();
      comps.push_back(parser.parse_expression());
    }
    if (lex.peek().kind != detail::TokKind::rbracket) lex.fail("expected ']'", lex.peek());
    lex.next();
  } else {
    comps.push_back(parser.parse_expression());
  }
  if (lex.peek().kind != detail::TokKind::end)
    lex.fail("unexpected trailing input", lex.peek());
  return VectorPoly(std::move(comps));
}

namespace detail {

inline std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

inline bool blank(const std::string& line) {
  for (char c : line)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace detail

// Loads a presentation from the line-oriented text format:
//
//   field QQ            (or: field GF <p>)
//   vars x y ...
//   rel y*x = 2*x*y + 1   # one per noncommuting pair, higher variable first
//
// '#' starts a comment. Relation right-hand sides must be written in normal
// form: a nonzero multiple of the ascending product plus an at most linear
// remainder.
inline AlgebraRef load_presentation_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::optional<FieldSpec> field;
  std::vector<std::string> names;
  bool have_vars = false;
  std::vector<Relation> relations;
  std::vector<std::pair<unsigned, unsigned>> seen_pairs;

  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = detail::strip_comment(line);
    if (detail::blank(body)) continue;
    std::istringstream ls(body);
    std::string keyword;
    ls >> keyword;
    if (keyword == "field") {
      if (field) throw parse_error("duplicate field line", lineno, 1);
      std::string which;
      ls >> which;
      if (which == "QQ") {
        field = FieldSpec::rationals();
      } else if (which == "GF") {
        unsigned long p = 0;
        if (!(ls >> p)) throw parse_error("expected a prime after GF", lineno, 1);
        try {
          field = FieldSpec::prime_field(static_cast<std::uint32_t>(p));
        } catch (const invalid_argument_error& e) {
          throw parse_error(e.what(), lineno, 1);
        }
      } else {
        throw parse_error("field must be QQ or GF <p>", lineno, 1);
      }
    } else if (keyword == "vars") {
      if (!field) throw parse_error("field line must come before vars", lineno, 1);
      if (have_vars) throw parse_error("duplicate vars line", lineno, 1);
      std::string name;
      while (ls >> name) names.push_back(name);
      have_vars = true;
    } else if (keyword == "rel") {
      if (!have_vars) throw parse_error("vars line must come before rel", lineno, 1);
      const auto eq = body.find('=');
      if (eq == std::string::npos) throw parse_error("rel line needs '='", lineno, 1);
      // Left side: namej*namei.
      const std::size_t lhs_begin = body.find("rel") + 3;
      detail::Lexer lhs(std::string_view(body).substr(lhs_begin, eq - lhs_begin), lineno,
                        lhs_begin + 1);
      const detail::Token tj = lhs.next();
      const detail::Token star = lhs.next();
      const detail::Token ti = lhs.next();
      if (tj.kind != detail::TokKind::ident || star.kind != detail::TokKind::star ||
          ti.kind != detail::TokKind::ident || lhs.peek().kind != detail::TokKind::end)
        throw parse_error("rel left side must be <var>*<var>", lineno, lhs_begin + 1);
      const auto find = [&](const detail::Token& t) -> unsigned {
        for (unsigned k = 0; k < names.size(); ++k)
          if (names[k] == t.text) return k;
        throw parse_error("unknown variable '" + t.text + "'", t.line, t.column);
      };
      const unsigned j = find(tj), i = find(ti);
      if (!(i < j))
        throw parse_error("rel must write the higher variable first: expected " +
                              names[std::max(i, j)] + "*" + names[std::min(i, j)],
                          lineno, lhs_begin + 1);
      for (const auto& [pi, pj] : seen_pairs)
        if (pi == i && pj == j)
          throw parse_error("duplicate rel for pair " + names[j] + "*" + names[i], lineno, 1);
      seen_pairs.emplace_back(i, j);
      // Right side: evaluated over free words, then split into c and d.
      detail::Lexer rhs(std::string_view(body).substr(eq + 1), lineno, eq + 2);
      detail::FreeDomain domain{*field, &names};
      detail::ExprParser<detail::FreeDomain> parser(rhs, domain);
      auto value = parser.parse_expression();
      if (rhs.peek().kind != detail::TokKind::end)
        rhs.fail("unexpected trailing input", rhs.peek());
      Scalar c = Scalar::zero(*field);
      Scalar constant = Scalar::zero(*field);
      std::map<unsigned, Scalar> linear;
      for (const auto& [w, s] : value) {
        if (w == Word{i, j}) {
          c = s;
        } else if (w.empty()) {
          constant = s;
        } else if (w.size() == 1) {
          linear.emplace(w[0], s);
        } else {
          throw parse_error(
              "rel right side must be c*" + names[i] + "*" + names[j] +
                  " plus an at most linear remainder",
              lineno, eq + 2);
        }
      }
      if (c.is_zero())
        throw parse_error("rel right side must contain a nonzero multiple of " +
                              names[i] + "*" + names[j],
                          lineno, eq + 2);
      relations.push_back(Relation{j, i, c, LinearRemainder(constant, std::move(linear))});
    } else {
      throw parse_error("unknown directive '" + keyword + "'", lineno, 1);
    }
  }
  if (!field) throw parse_error("missing field line", lineno ? lineno : 1, 1);
  if (!have_vars) throw parse_error("missing vars line", lineno ? lineno : 1, 1);
  try {
    return make_presentation(*field, names, relations);
  } catch (const error& e) {
    throw parse_error(e.what(), lineno ? lineno : 1, 1);
  }
}

inline AlgebraRef load_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_argument_error("cannot open presentation file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_presentation_text(buffer.str());
}

// Order names: "deglex" or "degrevlex", optionally ":x>y>..." listing all
// variables from most to least significant.
inline MonomialOrder parse_monomial_order(std::string_view text, const AlgebraRef& a) {
  std::string spec(text);
  std::string name = spec;
  std::string prio;
  if (const auto colon = spec.find(':'); colon != std::string::npos) {
    name = spec.substr(0, colon);
    prio = spec.substr(colon + 1);
  }
  OrderKind kind;
  if (name == "deglex")
    kind = OrderKind::deglex;
  else if (name == "degrevlex")
    kind = OrderKind::degrevlex;
  else
    throw invalid_argument_error("unknown order '" + name + "' (deglex or degrevlex)");
  if (prio.empty()) return MonomialOrder(kind, a->nvars());
  std::vector<unsigned> priority;
  std::size_t start = 0;
  while (start <= prio.size()) {
    const auto gt = prio.find('>', start);
    const std::string var = prio.substr(start, gt == std::string::npos ? gt : gt - start);
    const auto idx = a->var_index(var);
    if (!idx) throw invalid_argument_error("unknown variable '" + var + "' in order");
    priority.push_back(*idx);
    if (gt == std::string::npos) break;
    start = gt + 1;
  }
  if (priority.size() != a->nvars())
    throw invalid_argument_error("order priority must list every variable");
  return MonomialOrder(kind, std::move(priority));
}

// Module orders: "top:<base>" or "pot:<base>".
inline ModuleOrder parse_module_order(std::string_view text, const AlgebraRef& a,
                                      std::size_t rank) {
  std::string spec(text);
  ModuleScheme scheme;
  if (spec.rfind("top:", 0) == 0)
    scheme = ModuleScheme::top;
  else if (spec.rfind("pot:", 0) == 0)
    scheme = ModuleScheme::pot;
  else
    throw invalid_argument_error("module order must start with top: or pot:");
  return ModuleOrder(scheme, parse_monomial_order(spec.substr(4), a), rank);
}

}  // namespace skewgb
