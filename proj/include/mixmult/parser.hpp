#pragma once

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mixmult/ideal_ops.hpp"

namespace mixmult {

/// Problem files:
///
///   # comment
///   field Q                      | field F 32003
///   ring R vars x:(1,0) y:(0,1)  | ring S vars a:1 b:1
///   ideal I in R = x*y ; x^2 - 3/2*y^2
///   ideal K in R = intersect I I2
///
/// A statement starts with `field`, `ring` or `ideal` as the first word of a
/// line and may continue over the following lines. Polynomials are parsed
/// over the rationals and mapped into the working field later.

struct VarDecl {
  std::string name;
  Bidegree degree;
};

struct RingDecl {
  std::string name;
  std::vector<VarDecl> vars;
  RingPtr<RationalField> ring;
  int line = 0;
};

struct IdealDecl {
  std::string name;
  std::string ring;
  std::vector<Polynomial<RationalField>> gens;
  std::vector<std::string> intersect_of;  // nonempty for `intersect`
  int line = 0;
};

struct ProblemFile {
  bool rational = true;
  std::uint32_t prime = 0;
  std::vector<RingDecl> rings;
  std::vector<IdealDecl> ideals;
  std::string digest;

  const RingDecl* find_ring(std::string_view name) const {
    for (const auto& r : rings)
      if (r.name == name) return &r;
    return nullptr;
  }
  const IdealDecl* find_ideal(std::string_view name) const {
    for (const auto& i : ideals)
      if (i.name == name) return &i;
    return nullptr;
  }
};

/// FNV-1a, 64 bit, as 16 hex digits.
inline std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : text) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace detail {

struct Token {
  enum Kind { ident, number, symbol, end } kind = end;
  std::string text;
  int line = 0, column = 0;
  bool line_start = false;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  bool fresh_line = true;
  std::size_t i = 0;
  auto advance = [&] {
    if (src[i] == '\n') {
      ++line;
      col = 1;
      fresh_line = true;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    t.line_start = fresh_line;
    fresh_line = false;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Token::ident;
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
        t.text += src[i];
        advance();
      }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::number;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        t.text += src[i];
        advance();
      }
    } else if (std::string_view("+-*/^(),:;=").find(c) != std::string_view::npos) {
      t.kind = Token::symbol;
      t.text = c;
      advance();
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back(std::move(t));
  }
  Token e;
  e.line = line;
  e.column = col;
  e.line_start = true;
  out.push_back(e);
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ProblemFile run() {
    ProblemFile pf;
    bool field_seen = false;
    while (peek().kind != Token::end) {
      const Token& t = peek();
      if (t.kind != Token::ident || !t.line_start) throw err(t, "expected 'field', 'ring' or 'ideal' at the start of a line");
      if (t.text == "field") {
        if (field_seen) throw err(t, "duplicate field declaration");
        field_seen = true;
        parse_field(pf);
      } else if (t.text == "ring") {
        parse_ring(pf);
      } else if (t.text == "ideal") {
        parse_ideal(pf);
      } else {
        throw err(t, "unknown statement '" + t.text + "'");
      }
      if (!at_statement_end()) throw err(peek(), "unexpected '" + peek().text + "'");
    }
    return pf;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
  bool at_statement_end() const {
    const Token& t = peek();
    return t.kind == Token::end ||
           (t.line_start && t.kind == Token::ident && (t.text == "field" || t.text == "ring" || t.text == "ideal"));
  }
  static ParseError err(const Token& t, const std::string& msg) { return ParseError(msg, t.line, t.column); }

  bool accept_symbol(char c) {
    if (peek().kind == Token::symbol && peek().text[0] == c && !at_statement_end()) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect_symbol(char c) {
    if (!accept_symbol(c)) throw err(peek(), std::string("expected '") + c + "'");
  }
  std::string expect_ident(const char* what) {
    if (peek().kind != Token::ident || at_statement_end()) throw err(peek(), std::string("expected ") + what);
    return next().text;
  }
  void expect_keyword(const char* kw) {
    if (peek().kind != Token::ident || peek().text != kw) throw err(peek(), std::string("expected '") + kw + "'");
    ++pos_;
  }
  long expect_number(const char* what) {
    if (peek().kind != Token::number || at_statement_end()) throw err(peek(), std::string("expected ") + what);
    const Token& t = next();
    if (t.text.size() > 9) throw err(t, "number too large");
    return std::stol(t.text);
  }

  void parse_field(ProblemFile& pf) {
    ++pos_;
    const Token& t = peek();
    std::string kind = expect_ident("'Q' or 'F'");
    if (kind == "Q") {
      pf.rational = true;
    } else if (kind == "F") {
      const Token& nt = peek();
      long p = expect_number("a prime");
      if (!is_prime(static_cast<std::uint64_t>(p)) || p >= (1l << 31)) throw err(nt, std::to_string(p) + " is not a prime below 2^31");
      pf.rational = false;
      pf.prime = static_cast<std::uint32_t>(p);
    } else {
      throw err(t, "expected 'Q' or 'F'");
    }
  }

  void check_fresh_name(const ProblemFile& pf, const Token& t) const {
    if (pf.find_ring(t.text) || pf.find_ideal(t.text)) throw err(t, "duplicate name '" + t.text + "'");
  }

  void parse_ring(ProblemFile& pf) {
    RingDecl rd;
    rd.line = next().line;
    const Token& nt = peek();
    rd.name = expect_ident("a ring name");
    check_fresh_name(pf, nt);
    expect_keyword("vars");
    while (!at_statement_end()) {
      const Token& vt = peek();
      VarDecl v;
      v.name = expect_ident("a variable name");
      for (const auto& o : rd.vars)
        if (o.name == v.name) throw err(vt, "duplicate variable '" + v.name + "'");
      expect_symbol(':');
      if (accept_symbol('(')) {
        v.degree.d1 = static_cast<int>(expect_number("a degree"));
        expect_symbol(',');
        v.degree.d2 = static_cast<int>(expect_number("a degree"));
        expect_symbol(')');
      } else {
        v.degree = {static_cast<int>(expect_number("a degree")), 0};
      }
      rd.vars.push_back(std::move(v));
    }
    if (rd.vars.empty()) throw err(peek(), "a ring needs at least one variable");
    if (rd.vars.size() > kMaxVars) throw ParseError("too many variables", rd.line, 1);
    std::vector<Variable> vars;
    for (const auto& v : rd.vars) vars.push_back({v.name, v.degree});
    rd.ring = make_ring(rd.name, std::move(vars), RationalField{});
    pf.rings.push_back(std::move(rd));
  }

  void parse_ideal(ProblemFile& pf) {
    IdealDecl id;
    id.line = next().line;
    const Token& nt = peek();
    id.name = expect_ident("an ideal name");
    check_fresh_name(pf, nt);
    expect_keyword("in");
    const Token& rt = peek();
    id.ring = expect_ident("a ring name");
    const RingDecl* rd = pf.find_ring(id.ring);
    if (!rd) throw err(rt, "unknown ring '" + id.ring + "'");
    expect_symbol('=');
    if (peek().kind == Token::ident && peek().text == "intersect") {
      ++pos_;
      while (!at_statement_end()) {
        const Token& it = peek();
        std::string ref = expect_ident("an ideal name");
        const IdealDecl* other = pf.find_ideal(ref);
        if (!other) throw err(it, "unknown ideal '" + ref + "'");
        if (other->ring != id.ring) throw err(it, "ideal '" + ref + "' lives in ring " + other->ring);
        id.intersect_of.push_back(ref);
      }
      if (id.intersect_of.empty()) throw err(peek(), "intersect needs at least one ideal");
    } else {
      ring_ = rd->ring;
      for (;;) {
        auto f = expr();
        if (!f.is_zero()) id.gens.push_back(std::move(f));
        if (!accept_symbol(';')) break;
      }
    }
    pf.ideals.push_back(std::move(id));
  }

  using QPoly = Polynomial<RationalField>;

  QPoly expr() {
    QPoly acc = term();
    for (;;) {
      if (accept_symbol('+')) acc += term();
      else if (accept_symbol('-')) acc -= term();
      else return acc;
    }
  }

  QPoly term() {
    QPoly acc = factor();
    for (;;) {
      if (accept_symbol('*')) {
        acc *= factor();
      } else if (peek().kind == Token::symbol && peek().text == "/" && !at_statement_end()) {
        const Token& t = next();
        QPoly d = factor();
        if (d.is_zero()) throw err(t, "division by zero");
        if (!d.leading_monomial().is_one()) throw err(t, "division by a non-constant");
        acc = acc.scaled(RationalField{}.inv(d.leading_coeff()));
      } else {
        return acc;
      }
    }
  }

  QPoly factor() {
    if (accept_symbol('-')) return -factor();
    if (accept_symbol('+')) return factor();
    QPoly base = atom();
    if (peek().kind == Token::symbol && peek().text == "^" && !at_statement_end()) {
      ++pos_;
      const Token& et = peek();
      long e = expect_number("an exponent");
      if (e > 1000) throw err(et, "exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  QPoly atom() {
    const Token& t = peek();
    if (at_statement_end()) throw err(t, "expected a polynomial");
    if (t.kind == Token::number) {
      ++pos_;
      return QPoly::constant(ring_, Rational(Integer(t.text)));
    }
    if (t.kind == Token::ident) {
      ++pos_;
      auto idx = ring_->index_of(t.text);
      if (idx < 0) throw err(t, "unknown variable '" + t.text + "' in ring " + ring_->name());
      return QPoly::variable(ring_, static_cast<std::size_t>(idx));
    }
    if (accept_symbol('(')) {
      QPoly e = expr();
      expect_symbol(')');
      return e;
    }
    throw err(t, "unexpected '" + t.text + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  RingPtr<RationalField> ring_;
};

}  // namespace detail

inline ProblemFile parse_problem(std::string_view text) {
  auto pf = detail::Parser(detail::tokenize(text)).run();
  pf.digest = fnv1a_hex(text);
  return pf;
}

/// Canonical text; parse_problem(print_problem(p)) is structurally equal to p.
inline std::string print_problem(const ProblemFile& pf) {
  std::string out = pf.rational ? "field Q\n" : "field F " + std::to_string(pf.prime) + "\n";
  for (const auto& r : pf.rings) {
    out += "ring " + r.name + " vars";
    for (const auto& v : r.vars)
      out += " " + v.name + ":(" + std::to_string(v.degree.d1) + "," + std::to_string(v.degree.d2) + ")";
    out += "\n";
  }
  for (const auto& i : pf.ideals) {
    out += "ideal " + i.name + " in " + i.ring + " =";
    if (!i.intersect_of.empty()) {
      out += " intersect";
      for (const auto& n : i.intersect_of) out += " " + n;
    } else if (i.gens.empty()) {
      out += " 0";
    } else {
      for (std::size_t k = 0; k < i.gens.size(); ++k) out += (k ? " ; " : " ") + to_string(i.gens[k]);
    }
    out += "\n";
  }
  return out;
}

/// Structural equality (digests and line numbers ignored).
inline bool same_structure(const ProblemFile& a, const ProblemFile& b) {
  if (a.rational != b.rational || a.prime != b.prime) return false;
  if (a.rings.size() != b.rings.size() || a.ideals.size() != b.ideals.size()) return false;
  for (std::size_t k = 0; k < a.rings.size(); ++k) {
    const auto &x = a.rings[k], &y = b.rings[k];
    if (x.name != y.name || x.vars.size() != y.vars.size()) return false;
    for (std::size_t v = 0; v < x.vars.size(); ++v)
      if (x.vars[v].name != y.vars[v].name || !(x.vars[v].degree == y.vars[v].degree)) return false;
  }
  for (std::size_t k = 0; k < a.ideals.size(); ++k) {
    const auto &x = a.ideals[k], &y = b.ideals[k];
    if (x.name != y.name || x.ring != y.ring || x.intersect_of != y.intersect_of || x.gens.size() != y.gens.size())
      return false;
    for (std::size_t g = 0; g < x.gens.size(); ++g)
      if (to_string(x.gens[g]) != to_string(y.gens[g])) return false;
  }
  return true;
}

/// Rings and ideals of a problem over a concrete field.
template <class Field>
class Problem {
 public:
  Problem(const ProblemFile& pf, const Field& field) : file_(pf) {
    for (const auto& r : pf.rings) {
      std::vector<Variable> vars;
      for (const auto& v : r.vars) vars.push_back({v.name, v.degree});
      rings_.emplace(r.name, make_ring(r.name, std::move(vars), field));
    }
  }

  const ProblemFile& file() const { return file_; }

  const RingPtr<Field>& ring(const std::string& name) const {
    auto it = rings_.find(name);
    if (it == rings_.end()) throw UsageError("unknown ring '" + name + "'");
    return it->second;
  }

  /// Materializes (and caches) a named ideal; intersections are computed here.
  const Ideal<Field>& ideal(const std::string& name) {
    if (auto it = ideals_.find(name); it != ideals_.end()) return it->second;
    const IdealDecl* d = file_.find_ideal(name);
    if (!d) throw UsageError("unknown ideal '" + name + "'");
    const auto& ring = this->ring(d->ring);
    Ideal<Field> out;
    if (!d->intersect_of.empty()) {
      std::vector<Ideal<Field>> parts;
      for (const auto& n : d->intersect_of) parts.push_back(ideal(n));
      out = ideal_intersection(parts);
    } else {
      const Field& F = ring->field();
      std::vector<Polynomial<Field>> gens;
      for (const auto& g : d->gens) {
        std::vector<Term<Field>> terms;
        for (const auto& t : g.terms()) terms.push_back({t.mono, F.from_rational(t.coeff)});
        gens.emplace_back(ring, std::move(terms));
      }
      out = Ideal<Field>(ring, std::move(gens));
    }
    return ideals_.emplace(name, std::move(out)).first->second;
  }

  /// Generators of a named ideal, read as polynomials (for sequences).
  std::vector<Polynomial<Field>> generators(const std::string& name) {
    const IdealDecl* d = file_.find_ideal(name);
    if (!d) throw UsageError("unknown ideal '" + name + "'");
    if (!d->intersect_of.empty()) return ideal(name).groebner_basis();
    return ideal(name).generators();
  }

 private:
  ProblemFile file_;
  std::map<std::string, RingPtr<Field>> rings_;
  std::map<std::string, Ideal<Field>> ideals_;
};

}  // namespace mixmult
