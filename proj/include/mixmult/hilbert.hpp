#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mixmult/ideal_ops.hpp"

namespace mixmult {

/// Bivariate integer polynomial in t1, t2, keyed by exponent pair.
using BiPoly = std::map<std::pair<int, int>, Integer>;

inline BiPoly bipoly_mul(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) r[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

inline BiPoly bipoly_add(BiPoly a, const BiPoly& b) {
  for (const auto& [e, c] : b) a[e] += c;
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  return a;
}

/// 1 - t^d.
inline BiPoly one_minus_t(Bidegree d) {
  BiPoly r;
  r[{0, 0}] += 1;
  r[{d.d1, d.d2}] -= 1;
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

/// numerator / ((1−t1)^n1 (1−t2)^n2).
struct HilbertSeries2 {
  BiPoly numerator;
  int n1 = 0;
  int n2 = 0;
};

namespace detail {

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.exp < b.exp; }
};

inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.exp < b.exp;
  });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  std::sort(out.begin(), out.end(), MonomialLess{});
  return out;
}

/// Numerator of the Hilbert series of k[vars]/M via the splitting recursion
/// N(M) = N(M + (x)) + t^deg(x) N(M : x).
class NumeratorRecursion {
 public:
  explicit NumeratorRecursion(std::vector<Bidegree> degrees) : degrees_(std::move(degrees)) {}

  BiPoly operator()(const std::vector<Monomial>& raw) { return run(minimalize(raw)); }

 private:
  Bidegree degree_of(const Monomial& m) const {
    Bidegree d;
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
      d.d1 += m.exp[i] * degrees_[i].d1;
      d.d2 += m.exp[i] * degrees_[i].d2;
    }
    return d;
  }

  BiPoly run(const std::vector<Monomial>& gens) {
    if (gens.empty()) return BiPoly{{{0, 0}, 1}};
    for (const auto& g : gens)
      if (g.is_one()) return BiPoly{};

    bool coprime = true;
    for (std::size_t i = 0; i < gens.size() && coprime; ++i)
      for (std::size_t j = i + 1; j < gens.size() && coprime; ++j)
        if (!gens[i].coprime(gens[j])) coprime = false;
    if (coprime) {
      BiPoly r{{{0, 0}, 1}};
      for (const auto& g : gens) r = bipoly_mul(r, one_minus_t(degree_of(g)));
      return r;
    }

    if (auto it = memo_.find(gens); it != memo_.end()) return it->second;

    // Pivot on a variable occurring in the most generators.
    std::size_t pivot = 0;
    int best = -1;
    for (std::size_t v = 0; v < degrees_.size(); ++v) {
      int count = 0;
      for (const auto& g : gens)
        if (g.exp[v] != 0) ++count;
      if (count > best) {
        best = count;
        pivot = v;
      }
    }
    Monomial x = Monomial::variable(pivot);

    std::vector<Monomial> without_x;
    std::vector<Monomial> colon;
    for (const auto& g : gens) {
      if (g.exp[pivot] == 0) without_x.push_back(g);
      colon.push_back(g.colon(x));
    }
    Bidegree dx = degrees_[pivot];
    // x is coprime to every generator left in M + (x), so that part factors.
    BiPoly left = bipoly_mul(one_minus_t(dx), run(minimalize(without_x)));
    BiPoly right = bipoly_mul(BiPoly{{{dx.d1, dx.d2}, 1}}, run(minimalize(colon)));
    BiPoly result = bipoly_add(std::move(left), right);
    memo_.emplace(gens, result);
    return result;
  }

  struct KeyLess {
    bool operator()(const std::vector<Monomial>& a, const std::vector<Monomial>& b) const {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), MonomialLess{});
    }
  };

  std::vector<Bidegree> degrees_;
  std::map<std::vector<Monomial>, BiPoly, KeyLess> memo_;
};

}  // namespace detail

/// Hilbert series numerator of the monomial ideal generated by `gens` in a
/// ring with the given variable degrees.
inline BiPoly monomial_numerator(const std::vector<Monomial>& gens, const std::vector<Bidegree>& degrees) {
  detail::NumeratorRecursion rec(degrees);
  return rec(gens);
}

/// Bigraded Hilbert series of ring/I from the leading-term ideal. The ring must
/// be standard bigraded (or standard graded, in which case n2 = 0).
template <class Field>
HilbertSeries2 series_of(const Ideal<Field>& ideal) {
  const auto& ring = *ideal.ring();
  if (!ring.is_standard_bigraded()) throw UsageError("Hilbert series needs every variable of degree (1,0) or (0,1)");
  if (!generators_bihomogeneous(ideal)) throw UsageError("Hilbert series of an inhomogeneous ideal");
  std::vector<Bidegree> degrees;
  HilbertSeries2 s;
  for (const auto& v : ring.variables()) {
    degrees.push_back(v.degree);
    if (v.degree == Bidegree{1, 0}) ++s.n1;
    else ++s.n2;
  }
  s.numerator = monomial_numerator(ideal.leading_monomials(), degrees);
  return s;
}

namespace detail {

/// Coefficient of t^k in (1−t)^(−n).
inline Integer denominator_coefficient(int n, int k) {
  if (k < 0) return 0;
  if (n == 0) return k == 0 ? 1 : 0;
  return binomial(Integer(k + n - 1), n - 1);
}

}  // namespace detail

/// Coefficient of t1^u t2^v of the series.
inline Integer series_coefficient(const HilbertSeries2& s, int u, int v) {
  Integer total = 0;
  for (const auto& [e, c] : s.numerator)
    total += c * detail::denominator_coefficient(s.n1, u - e.first) * detail::denominator_coefficient(s.n2, v - e.second);
  return total;
}

/// dim_k (ring/I)_(u,v), counted directly as standard monomials of that bidegree.
template <class Field>
Integer hilbert_function(const Ideal<Field>& ideal, int u, int v) {
  const auto& ring = *ideal.ring();
  for (const auto& var : ring.variables())
    if (var.degree == Bidegree{0, 0}) throw UsageError("hilbert_function needs positively graded variables");
  auto leads = ideal.leading_monomials();
  Integer count = 0;
  Monomial m;
  const std::size_t n = ring.size();
  auto rec = [&](auto&& self, std::size_t i, int left1, int left2) -> void {
    if (i == n) {
      if (left1 != 0 || left2 != 0) return;
      for (const auto& l : leads)
        if (l.divides(m)) return;
      ++count;
      return;
    }
    const auto d = ring.variable(i).degree;
    for (int e = 0;; ++e) {
      int r1 = left1 - e * d.d1, r2 = left2 - e * d.d2;
      if (r1 < 0 || r2 < 0) break;
      m.exp[i] = static_cast<std::uint16_t>(e);
      m.degree += e;
      self(self, i + 1, r1, r2);
      m.degree -= e;
      m.exp[i] = 0;
    }
  };
  rec(rec, 0, u, v);
  return count;
}

/// P(u,v) = Σ a_ij C(u,i) C(v,j); a missing total degree means P ≡ 0.
struct HilbertPoly2 {
  std::map<std::pair<int, int>, Integer> coeffs;
  std::optional<int> total_degree;
  std::optional<int> degree_u;
  std::optional<int> degree_v;
  std::pair<int, int> stability{0, 0};

  bool is_zero() const { return !total_degree.has_value(); }

  Integer coeff(int i, int j) const {
    auto it = coeffs.find({i, j});
    return it == coeffs.end() ? Integer(0) : it->second;
  }

  Integer evaluate(long u, long v) const {
    Integer total = 0;
    for (const auto& [ij, a] : coeffs) total += a * binomial(Integer(u), ij.first) * binomial(Integer(v), ij.second);
    return total;
  }
};

/// Hilbert polynomial of a series, in the binomial basis.
inline HilbertPoly2 polynomial_of(const HilbertSeries2& s) {
  HilbertPoly2 p;
  int max_a = 0, max_b = 0;
  for (const auto& [e, c] : s.numerator) {
    max_a = std::max(max_a, e.first);
    max_b = std::max(max_b, e.second);
  }
  // With no variable of one kind the function vanishes beyond the numerator support.
  p.stability = {s.n1 == 0 ? max_a + 1 : max_a, s.n2 == 0 ? max_b + 1 : max_b};
  if (s.n1 == 0 || s.n2 == 0 || s.numerator.empty()) return p;

  // C(u − a + n − 1, n − 1) = Σ_i C(u, i) C(n − 1 − a, n − 1 − i).
  for (const auto& [e, c] : s.numerator) {
    for (int i = 0; i < s.n1; ++i) {
      Integer bu = binomial(Integer(s.n1 - 1 - e.first), s.n1 - 1 - i);
      if (bu == 0) continue;
      for (int j = 0; j < s.n2; ++j) {
        Integer bv = binomial(Integer(s.n2 - 1 - e.second), s.n2 - 1 - j);
        if (bv == 0) continue;
        p.coeffs[{i, j}] += c * bu * bv;
      }
    }
  }
  std::erase_if(p.coeffs, [](const auto& kv) { return kv.second == 0; });
  for (const auto& [ij, a] : p.coeffs) {
    p.total_degree = std::max(p.total_degree.value_or(-1), ij.first + ij.second);
    p.degree_u = std::max(p.degree_u.value_or(-1), ij.first);
    p.degree_v = std::max(p.degree_v.value_or(-1), ij.second);
  }
  return p;
}

/// Top-diagonal coefficients of P: the mixed multiplicities.
struct ETable {
  std::optional<int> r;
  std::map<std::pair<int, int>, Integer> e;
  int r1 = -1;
  int r2 = -1;

  /// Zero outside the stored diagonal.
  Integer at(int i, int j) const {
    auto it = e.find({i, j});
    return it == e.end() ? Integer(0) : it->second;
  }

  /// (e_{r,0}, e_{r-1,1}, ..., e_{0,r}).
  std::vector<Integer> diagonal() const {
    std::vector<Integer> out;
    if (!r) return out;
    for (int i = *r; i >= 0; --i) out.push_back(at(i, *r - i));
    return out;
  }
};

inline ETable e_table(const HilbertPoly2& p, std::optional<int> r_expected = std::nullopt) {
  ETable t;
  t.r = p.total_degree;
  t.r1 = p.degree_u.value_or(-1);
  t.r2 = p.degree_v.value_or(-1);
  if (r_expected && t.r != r_expected)
    throw MathError("Hilbert polynomial degree differs from the expected relevant dimension");
  if (!t.r) return t;
  for (int i = 0; i <= *t.r; ++i) {
    int j = *t.r - i;
    Integer a = p.coeff(i, j);
    if (a < 0) throw MathError("negative mixed multiplicity e_" + std::to_string(i) + std::to_string(j));
    if (a != 0) t.e[{i, j}] = a;
  }
  return t;
}

struct TotalMultiplicity {
  int dim = 0;
  Integer degree;
};

/// Specializes t1 = t2 = t and cancels (1−t) factors: (pole order, numerator at 1).
inline TotalMultiplicity total_multiplicity(const HilbertSeries2& s) {
  std::map<int, Integer> num;
  for (const auto& [e, c] : s.numerator) num[e.first + e.second] += c;
  std::erase_if(num, [](const auto& kv) { return kv.second == 0; });
  if (num.empty()) throw UsageError("the unit ideal has no multiplicity");
  int poles = s.n1 + s.n2;
  auto value_at_one = [](const std::map<int, Integer>& q) {
    Integer v = 0;
    for (const auto& [k, c] : q) v += c;
    return v;
  };
  while (value_at_one(num) == 0) {
    // Synthetic division by (1 − t).
    int top = num.rbegin()->first;
    std::map<int, Integer> q;
    Integer carry = 0;
    for (int k = 0; k < top; ++k) {
      auto it = num.find(k);
      carry += it == num.end() ? Integer(0) : it->second;
      if (carry != 0) q[k] = carry;
    }
    num = std::move(q);
    --poles;
  }
  return {poles, value_at_one(num)};
}

template <class Field>
TotalMultiplicity total_multiplicity(const Ideal<Field>& ideal) {
  auto tm = total_multiplicity(series_of(ideal));
  MIXMULT_ASSERT(tm.dim == krull_dim(ideal), "pole order of the Hilbert series differs from the Krull dimension");
  return tm;
}

/// Same variables with the two grading roles exchanged.
template <class Field>
RingPtr<Field> swap_grading(const RingPtr<Field>& ring) {
  std::vector<Variable> vars = ring->variables();
  for (auto& v : vars) std::swap(v.degree.d1, v.degree.d2);
  return make_ring(ring->name() + "^swap", std::move(vars), ring->field(), ring->order());
}

inline BiPoly transpose(const BiPoly& p) {
  BiPoly r;
  for (const auto& [e, c] : p) r[{e.second, e.first}] = c;
  return r;
}

}  // namespace mixmult
