#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mixmult/ring.hpp"

namespace mixmult {

template <class Field>
struct Term {
  Monomial mono;
  typename Field::Element coeff;
};

/// Sparse polynomial in canonical form: terms strictly decreasing in the ring's
/// monomial order, no zero coefficients.
template <class Field>
class Polynomial {
 public:
  using Element = typename Field::Element;
  using TermT = Term<Field>;

  Polynomial() = default;
  explicit Polynomial(RingPtr<Field> ring) : ring_(std::move(ring)) {}

  /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  Polynomial(RingPtr<Field> ring, std::vector<TermT> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    normalize();
  }

  static Polynomial constant(RingPtr<Field> ring, Element c) {
    Polynomial p(ring);
    if (!ring->field().is_zero(c)) p.terms_.push_back({Monomial{}, std::move(c)});
    return p;
  }
  static Polynomial one(RingPtr<Field> ring) { return constant(ring, ring->field().one()); }
  static Polynomial monomial(RingPtr<Field> ring, const Monomial& m, Element c) {
    Polynomial p(ring);
    if (!ring->field().is_zero(c)) p.terms_.push_back({m, std::move(c)});
    return p;
  }
  static Polynomial variable(RingPtr<Field> ring, std::size_t i) {
    if (i >= ring->size()) throw UsageError("variable index out of range");
    return monomial(ring, Monomial::variable(i), ring->field().one());
  }
  static Polynomial variable(RingPtr<Field> ring, const std::string& name) {
    auto i = ring->index_of(name);
    if (i < 0) throw UsageError("unknown variable '" + name + "' in ring " + ring->name());
    return variable(ring, static_cast<std::size_t>(i));
  }

  const RingPtr<Field>& ring() const { return ring_; }
  const Field& field() const { return ring_->field(); }
  const std::vector<TermT>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Element& leading_coeff() const { return terms_.front().coeff; }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree);
    return d;
  }

  bool operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (!(terms_[i].mono == o.terms_[i].mono) || !(terms_[i].coeff == o.terms_[i].coeff)) return false;
    return true;
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
    return r;
  }

  Polynomial operator+(const Polynomial& o) const { return combine(o, false); }
  Polynomial operator-(const Polynomial& o) const { return combine(o, true); }

  Polynomial operator*(const Polynomial& o) const {
    check_ring(o);
    if (is_zero() || o.is_zero()) return Polynomial(ring_);
    const Field& F = field();
    std::unordered_map<Monomial, Element, MonomialHash> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_) {
      for (const auto& b : o.terms_) {
        Monomial m = a.mono * b.mono;
        auto [it, inserted] = acc.try_emplace(m, F.zero());
        it->second = F.add(it->second, F.mul(a.coeff, b.coeff));
      }
    }
    std::vector<TermT> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!F.is_zero(c)) out.push_back({m, std::move(c)});
    Polynomial r(ring_);
    r.terms_ = std::move(out);
    r.sort_terms();
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Element& c) const {
    if (field().is_zero(c)) return Polynomial(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = field().mul(t.coeff, c);
    return r;
  }

  /// c * m * this, order preserved because the monomial order is multiplicative.
  Polynomial mul_term(const Monomial& m, const Element& c) const {
    if (field().is_zero(c)) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field().mul(t.coeff, c)});
    return r;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(field().inv(leading_coeff()));
  }

  Polynomial pow(unsigned e) const {
    Polynomial r = one(ring_);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  /// this - c * m * g, merging in one pass.
  Polynomial sub_mul(const Element& c, const Monomial& m, const Polynomial& g) const {
    const Field& F = field();
    const auto& ord = ring_->order();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        r.terms_.push_back(terms_[i++]);
        continue;
      }
      Monomial gm = g.terms_[j].mono * m;
      if (i == terms_.size()) {
        r.terms_.push_back({gm, F.neg(F.mul(c, g.terms_[j].coeff))});
        ++j;
        continue;
      }
      int cmp = ord.compare(terms_[i].mono, gm);
      if (cmp > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        r.terms_.push_back({gm, F.neg(F.mul(c, g.terms_[j].coeff))});
        ++j;
      } else {
        Element v = F.sub(terms_[i].coeff, F.mul(c, g.terms_[j].coeff));
        if (!F.is_zero(v)) r.terms_.push_back({gm, std::move(v)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  /// Same terms viewed in another ring with the same variables (different order or degrees).
  Polynomial rebased(RingPtr<Field> target) const {
    return Polynomial(std::move(target), terms_);
  }

 private:
  void check_ring(const Polynomial& o) const {
    if (ring_ != o.ring_) throw UsageError("ring mismatch in polynomial arithmetic");
  }

  Polynomial combine(const Polynomial& o, bool subtract) const {
    check_ring(o);
    const Field& F = field();
    const auto& ord = ring_->order();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      int cmp = i == terms_.size() ? -1 : j == o.terms_.size() ? 1 : ord.compare(terms_[i].mono, o.terms_[j].mono);
      if (cmp > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        const auto& t = o.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? F.neg(t.coeff) : t.coeff});
      } else {
        Element v = subtract ? F.sub(terms_[i].coeff, o.terms_[j].coeff) : F.add(terms_[i].coeff, o.terms_[j].coeff);
        if (!F.is_zero(v)) r.terms_.push_back({terms_[i].mono, std::move(v)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void sort_terms() {
    const auto& ord = ring_->order();
    std::sort(terms_.begin(), terms_.end(),
              [&](const TermT& a, const TermT& b) { return ord.compare(a.mono, b.mono) > 0; });
  }

  void normalize() {
    for (const auto& t : terms_)
      for (std::size_t i = ring_->size(); i < kMaxVars; ++i)
        if (t.mono.exp[i] != 0) throw UsageError("monomial uses a variable outside the ring");
    sort_terms();
    const Field& F = field();
    std::vector<TermT> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff = F.add(out.back().coeff, t.coeff);
      } else {
        if (!out.empty() && F.is_zero(out.back().coeff)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && F.is_zero(out.back().coeff)) out.pop_back();
    terms_ = std::move(out);
  }

  RingPtr<Field> ring_;
  std::vector<TermT> terms_;
};

/// Common bidegree of all terms; nullopt when the polynomial is not bihomogeneous.
template <class Field>
std::optional<Bidegree> bidegree_of(const Polynomial<Field>& f) {
  if (f.is_zero()) throw UsageError("bidegree of the zero polynomial is undefined");
  const auto& ring = *f.ring();
  Bidegree d = ring.bidegree(f.terms().front().mono);
  for (const auto& t : f.terms())
    if (!(ring.bidegree(t.mono) == d)) return std::nullopt;
  return d;
}

template <class Field>
bool is_bihomogeneous(const Polynomial<Field>& f) {
  return f.is_zero() || bidegree_of(f).has_value();
}

/// Homogeneous for the total grading d1 + d2.
template <class Field>
bool is_homogeneous(const Polynomial<Field>& f) {
  if (f.is_zero()) return true;
  const auto& ring = *f.ring();
  auto tot = [&](const Monomial& m) {
    auto b = ring.bidegree(m);
    return b.d1 + b.d2;
  };
  int d = tot(f.terms().front().mono);
  for (const auto& t : f.terms())
    if (tot(t.mono) != d) return false;
  return true;
}

/// Exact quotient f / g; throws when g does not divide f.
template <class Field>
Polynomial<Field> exact_divide(const Polynomial<Field>& f, const Polynomial<Field>& g) {
  if (g.is_zero()) throw MathError("division by the zero polynomial");
  const Field& F = f.field();
  Polynomial<Field> rem = f;
  std::vector<Term<Field>> quot;
  auto inv = F.inv(g.leading_coeff());
  while (!rem.is_zero()) {
    const auto& lm = rem.leading_monomial();
    if (!g.leading_monomial().divides(lm)) throw MathError("exact division failed: remainder is not zero");
    Monomial q = g.leading_monomial().quotient_of(lm);
    auto c = F.mul(rem.leading_coeff(), inv);
    quot.push_back({q, c});
    rem = rem.sub_mul(c, q, g);
  }
  return Polynomial<Field>(f.ring(), std::move(quot));
}

/// Monomial in the canonical printed form, e.g. x^2*y.
template <class Field>
std::string monomial_to_string(const Ring<Field>& ring, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.variable(i).name;
    if (m.exp[i] > 1) out += "^" + std::to_string(m.exp[i]);
  }
  return out.empty() ? "1" : out;
}

/// Canonical infix rendering accepted back by the problem-file parser.
template <class Field>
std::string to_string(const Polynomial<Field>& f) {
  if (f.is_zero()) return "0";
  const Field& F = f.field();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::string c = F.to_string(t.coeff);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c = c.substr(1);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += monomial_to_string(*f.ring(), t.mono);
    }
  }
  return out;
}

}  // namespace mixmult
