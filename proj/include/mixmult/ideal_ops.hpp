#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "mixmult/groebner.hpp"

namespace mixmult {

/// Copy of `base` with `tags` fresh variables in front, ordered so that the
/// tag block is eliminated first. Tag variables carry bidegree (0,0).
template <class Field>
RingPtr<Field> tagged_ring(const RingPtr<Field>& base, std::size_t tags) {
  std::vector<Variable> vars;
  for (std::size_t i = 0; i < tags; ++i) vars.push_back({"_tag" + std::to_string(i), {0, 0}});
  for (const auto& v : base->variables()) vars.push_back(v);
  return make_ring(base->name() + "+tags", std::move(vars), base->field(), MonomialOrder{tags});
}

/// Embeds f into a ring whose last variables are the variables of f's ring.
template <class Field>
Polynomial<Field> shift_into(const Polynomial<Field>& f, const RingPtr<Field>& target, std::size_t offset) {
  std::vector<Term<Field>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i + offset < kMaxVars; ++i) m.exp[i + offset] = t.mono.exp[i];
    m.degree = t.mono.degree;
    terms.push_back({m, t.coeff});
  }
  return Polynomial<Field>(target, std::move(terms));
}

/// Inverse of shift_into; nullopt when f involves one of the first `offset` variables.
template <class Field>
std::optional<Polynomial<Field>> shift_out(const Polynomial<Field>& f, const RingPtr<Field>& target, std::size_t offset) {
  std::vector<Term<Field>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < offset; ++i)
      if (t.mono.exp[i] != 0) return std::nullopt;
    Monomial m;
    for (std::size_t i = offset; i < kMaxVars; ++i) m.exp[i - offset] = t.mono.exp[i];
    m.degree = t.mono.degree;
    terms.push_back({m, t.coeff});
  }
  return Polynomial<Field>(target, std::move(terms));
}

/// Elements of a basis (in a ring with an elimination block of size `offset`)
/// free of the block, mapped to `target`.
template <class Field>
Ideal<Field> eliminate_block(const RingPtr<Field>& tagged, const std::vector<Polynomial<Field>>& gens,
                             const RingPtr<Field>& target, std::size_t offset) {
  auto basis = buchberger(tagged, gens);
  std::vector<Polynomial<Field>> kept;
  for (const auto& g : basis)
    if (auto p = shift_out(g, target, offset)) kept.push_back(std::move(*p));
  return Ideal<Field>(target, std::move(kept));
}

template <class Field>
Ideal<Field> ideal_sum(const Ideal<Field>& a, const Ideal<Field>& b) {
  if (a.ring() != b.ring()) throw UsageError("ring mismatch in ideal sum");
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal<Field>(a.ring(), std::move(gens));
}

template <class Field>
Ideal<Field> ideal_sum(const Ideal<Field>& a, const std::vector<Polynomial<Field>>& extra) {
  auto gens = a.generators();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal<Field>(a.ring(), std::move(gens));
}

template <class Field>
Ideal<Field> ideal_product(const Ideal<Field>& a, const Ideal<Field>& b) {
  if (a.ring() != b.ring()) throw UsageError("ring mismatch in ideal product");
  std::vector<Polynomial<Field>> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) {
      auto h = (f * g).monic();
      if (std::find(gens.begin(), gens.end(), h) == gens.end()) gens.push_back(std::move(h));
    }
  return Ideal<Field>(a.ring(), std::move(gens));
}

template <class Field>
Ideal<Field> ideal_power(const Ideal<Field>& a, unsigned n) {
  Ideal<Field> r = Ideal<Field>::unit(a.ring());
  for (unsigned i = 0; i < n; ++i) r = ideal_product(r, a);
  return r;
}

/// I ∩ J through one tag variable t: (t·I + (1−t)·J) with t eliminated.
template <class Field>
Ideal<Field> ideal_intersection(const Ideal<Field>& a, const Ideal<Field>& b) {
  if (a.ring() != b.ring()) throw UsageError("ring mismatch in ideal intersection");
  if (a.is_zero() || b.is_zero()) return Ideal<Field>::zero(a.ring());
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  const auto& ring = a.ring();
  auto tagged = tagged_ring(ring, 1);
  using Poly = Polynomial<Field>;
  Poly t = Poly::variable(tagged, 0);
  Poly one_minus_t = Poly::one(tagged) - t;
  std::vector<Poly> gens;
  for (const auto& f : a.groebner_basis()) gens.push_back(t * shift_into(f, tagged, 1));
  for (const auto& g : b.groebner_basis()) gens.push_back(one_minus_t * shift_into(g, tagged, 1));
  return eliminate_block(tagged, gens, ring, 1);
}

template <class Field>
Ideal<Field> ideal_intersection(const std::vector<Ideal<Field>>& parts) {
  if (parts.empty()) throw UsageError("intersection of an empty family");
  Ideal<Field> r = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) r = ideal_intersection(r, parts[i]);
  return r;
}

/// I : g = {f | f·g ∈ I}, computed as (I ∩ (g)) / g.
template <class Field>
Ideal<Field> ideal_quotient(const Ideal<Field>& a, const Polynomial<Field>& g) {
  if (g.is_zero()) throw UsageError("colon by the zero polynomial");
  if (g.ring() != a.ring()) throw UsageError("ring mismatch in ideal quotient");
  if (a.contains(g)) return Ideal<Field>::unit(a.ring());
  auto meet = ideal_intersection(a, Ideal<Field>(a.ring(), {g}));
  std::vector<Polynomial<Field>> gens;
  for (const auto& h : meet.groebner_basis()) gens.push_back(exact_divide(h, g));
  return Ideal<Field>(a.ring(), std::move(gens));
}

/// I : J = ∩_j I : g_j.
template <class Field>
Ideal<Field> ideal_quotient(const Ideal<Field>& a, const Ideal<Field>& b) {
  if (a.ring() != b.ring()) throw UsageError("ring mismatch in ideal quotient");
  if (b.is_zero()) return Ideal<Field>::unit(a.ring());
  std::vector<Ideal<Field>> parts;
  for (const auto& g : b.generators()) {
    auto q = ideal_quotient(a, g);
    if (!q.is_unit()) parts.push_back(std::move(q));
  }
  if (parts.empty()) return Ideal<Field>::unit(a.ring());
  return ideal_intersection(parts);
}

/// I : J^∞ by iterated colon until the reduced basis stabilizes.
template <class Field>
Ideal<Field> saturation(const Ideal<Field>& a, const Ideal<Field>& b) {
  Ideal<Field> cur = a;
  for (;;) {
    if (cur.is_unit()) return cur;
    Ideal<Field> next = ideal_quotient(cur, b);
    if (next == cur) return next;
    cur = std::move(next);
  }
}

namespace detail {

/// Minimum number of variables meeting every support (a hitting set).
inline int min_hitting_set(const std::vector<std::uint32_t>& supports, std::uint32_t chosen, int size, int best) {
  if (size >= best) return best;
  const std::uint32_t* open = nullptr;
  for (const auto& s : supports)
    if ((s & chosen) == 0) {
      if (open == nullptr || __builtin_popcount(s) < __builtin_popcount(*open)) open = &s;
    }
  if (open == nullptr) return size;
  for (std::uint32_t bits = *open; bits != 0; bits &= bits - 1) {
    std::uint32_t v = bits & (~bits + 1);
    best = min_hitting_set(supports, chosen | v, size + 1, best);
  }
  return best;
}

}  // namespace detail

/// Krull dimension of ring/I: the largest set of variables containing no
/// support of a minimal leading monomial; −1 for the unit ideal.
template <class Field>
int krull_dim(const Ideal<Field>& ideal) {
  if (ideal.is_unit()) return -1;
  const int n = static_cast<int>(ideal.ring()->size());
  std::vector<std::uint32_t> supports;
  for (const auto& m : ideal.leading_monomials()) {
    std::uint32_t s = 0;
    for (int i = 0; i < n; ++i)
      if (m.exp[i] != 0) s |= 1u << i;
    supports.push_back(s);
  }
  return n - detail::min_hitting_set(supports, 0, 0, n + 1);
}

/// f is a non-zerodivisor modulo I exactly when I : f = I.
template <class Field>
bool is_nzd(const Polynomial<Field>& f, const Ideal<Field>& ideal) {
  if (f.is_zero()) return ideal.is_unit();
  return ideal_quotient(ideal, f) == ideal;
}

/// Every reduced-basis element is bihomogeneous.
template <class Field>
bool has_bihomogeneous_basis(const Ideal<Field>& ideal) {
  for (const auto& g : ideal.groebner_basis())
    if (!is_bihomogeneous(g)) return false;
  return true;
}

template <class Field>
bool generators_bihomogeneous(const Ideal<Field>& ideal) {
  for (const auto& g : ideal.generators())
    if (!is_bihomogeneous(g)) return false;
  return true;
}

template <class Field>
bool generators_homogeneous(const Ideal<Field>& ideal) {
  for (const auto& g : ideal.generators())
    if (!is_homogeneous(g)) return false;
  return true;
}

/// Same generators viewed in a ring with identical variable list but
/// different bidegrees or order.
template <class Field>
Ideal<Field> rebase(const Ideal<Field>& ideal, const RingPtr<Field>& target) {
  if (target->size() != ideal.ring()->size()) throw UsageError("rebase needs the same number of variables");
  std::vector<Polynomial<Field>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.rebased(target));
  return Ideal<Field>(target, std::move(gens));
}

/// Minimal generating set of a homogeneous ideal: generators in order of
/// degree, each kept only if outside the ideal of those kept before it.
template <class Field>
Ideal<Field> minimal_generators(const Ideal<Field>& ideal) {
  if (!generators_homogeneous(ideal)) throw UsageError("minimal generators need a homogeneous ideal");
  auto gens = ideal.generators();
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Polynomial<Field>& a, const Polynomial<Field>& b) { return a.total_degree() < b.total_degree(); });
  std::vector<Polynomial<Field>> kept;
  for (auto& g : gens) {
    if (!kept.empty() && Ideal<Field>(ideal.ring(), kept).contains(g)) continue;
    kept.push_back(g.monic());
  }
  return Ideal<Field>(ideal.ring(), std::move(kept));
}

}  // namespace mixmult
