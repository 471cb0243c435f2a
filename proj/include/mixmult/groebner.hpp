#pragma once

#include <algorithm>
#include <memory>
#include <mutex>
#include <vector>

#include "mixmult/polynomial.hpp"

namespace mixmult {

namespace detail {

template <class Field>
const Polynomial<Field>* find_reducer(const Monomial& m, const std::vector<const Polynomial<Field>*>& basis) {
  for (const auto* g : basis)
    if (g->leading_monomial().divides(m)) return g;
  return nullptr;
}

}  // namespace detail

/// Full reduction of f modulo a list of monic polynomials. The result has no
/// term divisible by a leading monomial of the list.
template <class Field>
Polynomial<Field> reduce_full(Polynomial<Field> f, const std::vector<const Polynomial<Field>*>& basis) {
  const Field& F = f.field();
  std::vector<Term<Field>> rem;
  while (!f.is_zero()) {
    const auto* g = detail::find_reducer(f.leading_monomial(), basis);
    if (g != nullptr) {
      Monomial q = g->leading_monomial().quotient_of(f.leading_monomial());
      auto c = F.div(f.leading_coeff(), g->leading_coeff());
      f = f.sub_mul(c, q, *g);
    } else {
      rem.push_back(f.terms().front());
      std::vector<Term<Field>> tail(f.terms().begin() + 1, f.terms().end());
      f = Polynomial<Field>(f.ring(), std::move(tail));
    }
  }
  // Remainder terms were emitted in decreasing order already.
  return Polynomial<Field>(f.ring(), std::move(rem));
}

template <class Field>
Polynomial<Field> s_polynomial(const Polynomial<Field>& f, const Polynomial<Field>& g) {
  const Field& F = f.field();
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  auto a = f.mul_term(f.leading_monomial().quotient_of(l), F.inv(f.leading_coeff()));
  auto b = g.mul_term(g.leading_monomial().quotient_of(l), F.inv(g.leading_coeff()));
  return a - b;
}

/// Buchberger's algorithm with the coprime and chain criteria (Gebauer-Moeller
/// bookkeeping) and the normal selection strategy. Returns the reduced basis,
/// monic, sorted by increasing leading monomial.
template <class Field>
std::vector<Polynomial<Field>> buchberger(const RingPtr<Field>& ring, const std::vector<Polynomial<Field>>& input) {
  using Poly = Polynomial<Field>;
  const auto& ord = ring->order();

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };

  std::vector<Poly> store;
  std::vector<std::size_t> active;
  std::vector<Pair> pairs;

  auto active_ptrs = [&] {
    std::vector<const Poly*> v;
    v.reserve(active.size());
    for (auto k : active) v.push_back(&store[k]);
    return v;
  };

  auto update = [&](Poly h) {
    std::size_t k = store.size();
    store.push_back(std::move(h));
    const Monomial& lh = store[k].leading_monomial();

    std::vector<Pair> fresh;
    for (auto g : active) fresh.push_back({g, k, store[g].leading_monomial().lcm(lh)});

    std::vector<Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const auto& p = fresh[a];
      bool keep = store[p.i].leading_monomial().coprime(lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < fresh.size() && keep; ++b)
          if (fresh[b].lcm.divides(p.lcm)) keep = false;
        for (std::size_t b = 0; b < kept.size() && keep; ++b)
          if (kept[b].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }

    std::vector<Pair> next;
    for (const auto& p : pairs) {
      if (!lh.divides(p.lcm) || store[p.i].leading_monomial().lcm(lh) == p.lcm ||
          store[p.j].leading_monomial().lcm(lh) == p.lcm) {
        next.push_back(p);
      }
    }
    for (const auto& p : kept)
      if (!store[p.i].leading_monomial().coprime(lh)) next.push_back(p);
    pairs = std::move(next);

    std::vector<std::size_t> still;
    for (auto g : active)
      if (!lh.divides(store[g].leading_monomial())) still.push_back(g);
    still.push_back(k);
    active = std::move(still);
  };

  for (const auto& f : input) {
    if (f.ring() != ring) throw UsageError("generator lives in a different ring");
    auto h = reduce_full(f, active_ptrs());
    if (h.is_zero()) continue;
    h = h.monic();
    if (h.leading_monomial().is_one()) return {Poly::one(ring)};
    update(std::move(h));
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t a = 1; a < pairs.size(); ++a)
      if (ord.compare(pairs[a].lcm, pairs[best].lcm) < 0) best = a;
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    auto h = reduce_full(s_polynomial(store[p.i], store[p.j]), active_ptrs());
    if (h.is_zero()) continue;
    h = h.monic();
    if (h.leading_monomial().is_one()) return {Poly::one(ring)};
    update(std::move(h));
  }

  // Interreduce the minimal basis.
  std::vector<Poly> basis;
  for (auto k : active) basis.push_back(store[k]);
  std::sort(basis.begin(), basis.end(),
            [&](const Poly& a, const Poly& b) { return ord.compare(a.leading_monomial(), b.leading_monomial()) < 0; });
  for (std::size_t a = 0; a < basis.size(); ++a) {
    std::vector<const Poly*> others;
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (b != a) others.push_back(&basis[b]);
    // Leading term is not reducible (minimal basis), so this only touches the tail.
    basis[a] = reduce_full(basis[a], others).monic();
  }
  return basis;
}

/// Buchberger certificate: every S-polynomial reduces to zero.
template <class Field>
bool is_groebner_basis(const std::vector<Polynomial<Field>>& basis) {
  std::vector<const Polynomial<Field>*> ptrs;
  for (const auto& g : basis) ptrs.push_back(&g);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!reduce_full(s_polynomial(basis[i], basis[j]), ptrs).is_zero()) return false;
  return true;
}

/// Ideal given by generators, with a lazily computed reduced Groebner basis
/// under the ring's monomial order. Copies share the cache.
template <class Field>
class Ideal {
 public:
  using Poly = Polynomial<Field>;

  Ideal() = default;

  Ideal(RingPtr<Field> ring, std::vector<Poly> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
      if (g.ring() != ring_) throw UsageError("generator lives in a different ring than the ideal");
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  static Ideal zero(RingPtr<Field> ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr<Field> ring) {
    auto one = Poly::one(ring);
    return Ideal(std::move(ring), {one});
  }
  /// Ideal generated by the listed variables.
  static Ideal of_variables(RingPtr<Field> ring, const std::vector<std::size_t>& idx) {
    std::vector<Poly> g;
    for (auto i : idx) g.push_back(Poly::variable(ring, i));
    return Ideal(std::move(ring), std::move(g));
  }
  /// The maximal graded ideal.
  static Ideal maximal(RingPtr<Field> ring) {
    std::vector<std::size_t> idx(ring->size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return of_variables(std::move(ring), idx);
  }

  const RingPtr<Field>& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }

  const std::vector<Poly>& groebner_basis() const {
    std::call_once(cache_->flag, [&] { cache_->basis = buchberger(ring_, gens_); });
    return cache_->basis;
  }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const {
    const auto& gb = groebner_basis();
    return gb.size() == 1 && gb[0].leading_monomial().is_one();
  }

  Poly normal_form(const Poly& f) const {
    if (f.ring() != ring_) throw UsageError("ring mismatch in normal form");
    std::vector<const Poly*> ptrs;
    for (const auto& g : groebner_basis()) ptrs.push_back(&g);
    return reduce_full(f, ptrs);
  }

  bool contains(const Poly& f) const { return normal_form(f).is_zero(); }
  bool contains(const Ideal& other) const {
    for (const auto& g : other.generators())
      if (!contains(g)) return false;
    return true;
  }

  /// Equality of ideals via reduced bases (unique for the fixed order).
  bool operator==(const Ideal& other) const {
    if (ring_ != other.ring_) throw UsageError("comparing ideals of different rings");
    const auto& a = groebner_basis();
    const auto& b = other.groebner_basis();
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!(a[i] == b[i])) return false;
    return true;
  }

  /// Minimal generators of the leading-term ideal.
  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : groebner_basis()) out.push_back(g.leading_monomial());
    return out;
  }

  /// Largest total degree among the generators.
  std::uint32_t max_generator_degree() const {
    std::uint32_t d = 0;
    for (const auto& g : gens_) d = std::max(d, g.total_degree());
    return d;
  }

 private:
  struct Cache {
    std::once_flag flag;
    std::vector<Poly> basis;
  };

  RingPtr<Field> ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace mixmult
