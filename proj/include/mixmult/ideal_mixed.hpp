#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mixmult/bigraded.hpp"

namespace mixmult {

/// All monomials of total degree d in the first n variables.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint32_t d) {
  std::vector<Monomial> out;
  Monomial cur;
  auto rec = [&](auto&& self, std::size_t var, std::uint32_t left) -> void {
    if (var + 1 == n) {
      cur.exp[var] = static_cast<std::uint16_t>(left);
      out.push_back(cur);
      cur.exp[var] = 0;
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      cur.exp[var] = static_cast<std::uint16_t>(e);
      self(self, var + 1, left - e);
    }
    cur.exp[var] = 0;
  };
  if (n == 0) {
    if (d == 0) out.push_back(cur);
    return out;
  }
  cur.degree = d;
  rec(rec, 0, d);
  return out;
}

/// A = k[x]/I_A standard graded, with an m-primary ideal I (default m) and a
/// homogeneous ideal J, all given in the ambient polynomial ring.
template <class Field>
class GradedSetting {
 public:
  using IdealT = Ideal<Field>;

  GradedSetting(IdealT defining, IdealT j, std::optional<IdealT> i = std::nullopt)
      : ia_(std::move(defining)), j_(std::move(j)), m_(IdealT::maximal(ia_.ring())) {
    const auto& ring = ia_.ring();
    if (!ring->is_standard_graded()) throw UsageError("ring " + ring->name() + " is not standard graded");
    if (j_.ring() != ring) throw UsageError("J lives in a different ring");
    if (!generators_homogeneous(ia_)) throw UsageError("defining ideal is not homogeneous");
    if (!generators_homogeneous(j_)) throw UsageError("J is not homogeneous");
    if (j_.is_zero()) throw UsageError("J must be nonzero");
    if (ia_.is_unit()) throw UsageError("the defining ideal is the unit ideal");
    if (i) {
      if (i->ring() != ring) throw UsageError("I lives in a different ring");
      if (!generators_homogeneous(*i)) throw UsageError("I is not homogeneous");
      if (!saturation(ideal_sum(ia_, *i), m_).is_unit()) throw UsageError("I is not m-primary");
      i_ = *i;
      i_is_m_ = ideal_sum(ia_, *i) == ideal_sum(ia_, m_);
    } else {
      i_ = m_;
    }
    if (common_degree(j_)) {
      j_work_ = minimal_generators(j_);
    } else {
      // The degree-d part of J, d the largest generator degree.
      std::uint32_t d = j_.max_generator_degree();
      std::vector<Polynomial<Field>> lifted;
      for (const auto& g : j_.generators())
        for (const auto& m : monomials_of_degree(ring->size(), d - g.total_degree()))
          lifted.push_back(g.mul_term(m, ring->field().one()));
      j_work_ = minimal_generators(IdealT(ring, std::move(lifted)));
    }
  }

  const RingPtr<Field>& ring() const { return ia_.ring(); }
  const IdealT& defining() const { return ia_; }
  const IdealT& J() const { return j_; }
  const IdealT& I() const { return i_; }
  const IdealT& m() const { return m_; }
  /// J itself when generated in one degree, else the ideal of its top-degree
  /// part J_d; generic chain elements live in J_d, so the computed values are
  /// the mixed multiplicities of this ideal (same radical as J).
  const IdealT& j_work() const { return j_work_; }
  bool i_is_maximal() const { return i_is_m_; }
  bool ambient_is_polynomial_ring() const { return ia_.is_zero(); }

  /// Common degree of the generators, if there is one.
  std::optional<std::uint32_t> j_equidegree() const { return common_degree(j_); }
  std::optional<std::uint32_t> i_equidegree() const { return common_degree(i_); }

 private:
  static std::optional<std::uint32_t> common_degree(const IdealT& a) {
    std::optional<std::uint32_t> d;
    for (const auto& g : a.generators()) {
      if (d && *d != g.total_degree()) return std::nullopt;
      d = g.total_degree();
    }
    return d;
  }

  IdealT ia_, j_, m_, i_, j_work_;
  bool i_is_m_ = true;
};

/// Random form of degree d with every coefficient nonzero.
template <class Field>
Polynomial<Field> random_form(const RingPtr<Field>& ring, std::uint32_t d, Rng& rng, std::uint32_t bound) {
  std::vector<Term<Field>> terms;
  for (const auto& m : monomials_of_degree(ring->size(), d)) terms.push_back({m, random_scalar(ring->field(), rng, bound)});
  return Polynomial<Field>(ring, std::move(terms));
}

/// Σ h_ℓ·g_ℓ with h_ℓ random forms lifting every generator to degree d.
template <class Field>
Polynomial<Field> random_element_of_degree(const Ideal<Field>& j, std::uint32_t d, Rng& rng, std::uint32_t bound) {
  auto out = Polynomial<Field>(j.ring(), {});
  for (const auto& g : j.generators()) {
    if (g.total_degree() > d) continue;
    out += random_form(j.ring(), d - g.total_degree(), rng, bound) * g;
  }
  return out;
}

/// Presentation k[T,x]/K of the Rees algebra A[Jt], with T of bidegree (1,0)
/// and x of bidegree (0,1).
template <class Field>
struct ReesPresentation {
  RingPtr<Field> ring;
  Ideal<Field> kernel;
  std::size_t num_t = 0;
};

template <class Field>
ReesPresentation<Field> rees_presentation(const Ideal<Field>& defining, const Ideal<Field>& j) {
  const auto& base = defining.ring();
  const auto& gens = j.generators();
  const std::size_t s = gens.size();
  if (s == 0) throw UsageError("Rees algebra of the zero ideal");
  std::vector<Variable> vars;
  for (std::size_t l = 0; l < s; ++l) vars.push_back({"_T" + std::to_string(l + 1), {1, 0}});
  for (const auto& v : base->variables()) vars.push_back({v.name, {0, 1}});
  if (vars.size() + 1 > kMaxVars) throw UsageError("too many variables for the Rees presentation");
  auto rees = make_ring(base->name() + "_rees", std::move(vars), base->field());
  auto tagged = tagged_ring(rees, 1);
  using Poly = Polynomial<Field>;
  Poly t = Poly::variable(tagged, 0);
  std::vector<Poly> rel;
  for (std::size_t l = 0; l < s; ++l)
    rel.push_back(Poly::variable(tagged, l + 1) - t * shift_into(shift_into(gens[l], rees, s), tagged, 1));
  for (const auto& f : defining.generators()) rel.push_back(shift_into(shift_into(f, rees, s), tagged, 1));
  return {rees, eliminate_block(tagged, rel, rees, 1), s};
}

/// s(J_work): dimension of the fiber ring R(J_work)/mR(J_work).
template <class Field>
int analytic_spread(const GradedSetting<Field>& S) {
  auto rp = rees_presentation(S.defining(), S.j_work());
  std::vector<std::size_t> xs;
  for (std::size_t i = 0; i < S.ring()->size(); ++i) xs.push_back(rp.num_t + i);
  return krull_dim(ideal_sum(rp.kernel, Ideal<Field>::of_variables(rp.ring, xs)));
}

template <class Field>
struct ChainStep {
  Polynomial<Field> element;
  Ideal<Field> saturated;
  bool nzd_ok = false;
  int dim = -1;  // dim A/S_k, −1 for the unit ideal
  int attempts = 1;
};

template <class Field>
struct SatChain {
  std::uint32_t d_work = 0;
  Ideal<Field> s0;
  int dim0 = -1;
  std::vector<ChainStep<Field>> steps;
  std::uint64_t seed = 0;

  const Ideal<Field>& at(std::size_t k) const { return k == 0 ? s0 : steps[k - 1].saturated; }
  int dim_at(std::size_t k) const { return k == 0 ? dim0 : steps[k - 1].dim; }
};

/// S_0 = I_A : J^∞, S_k = (S_{k−1} + (a_k)) : J^∞ with each a_k a certified
/// non-zerodivisor on A/S_{k−1}.
template <class Field>
SatChain<Field> sat_chain(const GradedSetting<Field>& S, int upto, const GenericityConfig& cfg,
                          std::optional<int> spread = std::nullopt) {
  if (upto < 0) throw UsageError("upto must be nonnegative");
  int sj = spread ? *spread : analytic_spread(S);
  if (upto > sj) throw UsageError("upto exceeds analytic spread (" + std::to_string(sj) + ")");
  SatChain<Field> chain;
  chain.seed = cfg.seed;
  chain.d_work = S.J().max_generator_degree();
  chain.s0 = saturation(S.defining(), S.J());
  chain.dim0 = krull_dim(chain.s0);
  Rng rng(mix_seed(cfg.seed, "sat-chain"));
  for (int k = 1; k <= upto; ++k) {
    auto prev = chain.at(static_cast<std::size_t>(k - 1));
    bool done = false;
    for (int attempt = 1; attempt <= cfg.max_retries && !done; ++attempt) {
      auto a = random_element_of_degree(S.j_work(), chain.d_work, rng, cfg.prime);
      if (a.is_zero()) continue;
      if (!(ideal_quotient(prev, a) == prev)) continue;
      auto next = saturation(ideal_sum(prev, std::vector<Polynomial<Field>>{a}), S.J());
      int d = krull_dim(next);
      chain.steps.push_back({a, std::move(next), true, d, attempt});
      done = true;
    }
    if (!done)
      throw GenericityExhausted("no non-zerodivisor found for chain step " + std::to_string(k) + " in " +
                                std::to_string(cfg.max_retries) + " tries");
  }
  return chain;
}

/// e(I, A/K) for K ⊇ I_A. I = m gives the degree; an m-primary I generated
/// in one degree t is a reduction of m^t, so e(I, ·) = t^dim · e(m, ·).
template <class Field>
Integer samuel(const GradedSetting<Field>& S, const Ideal<Field>& k) {
  auto tm = total_multiplicity(k);
  if (S.i_is_maximal()) return tm.degree;
  auto t = S.i_equidegree();
  if (!t) throw UsageError("unsupported I: only m or ideals generated in a single degree");
  Integer f = 1;
  for (int i = 0; i < tm.dim; ++i) f *= *t;
  return f * tm.degree;
}

struct MixedIdealReport {
  int dim_a = -1;  // dim A/0:J^∞
  int spread = 0;
  int height = 0;  // dim A − dim A/J
  std::vector<Integer> e;
  int rho = -1;
  bool complete = false;  // e covers 0..s(J)−1
  bool height_bound_enforced = false;
};

/// e_i(I|J) = e(I, A/S_i) if dim A/S_i = dim A/S_0 − i, else 0, for every
/// index the chain reaches. Rigidity is asserted on the way.
template <class Field>
MixedIdealReport e_i_values(const GradedSetting<Field>& S, const SatChain<Field>& chain, int spread) {
  MixedIdealReport rep;
  rep.spread = spread;
  rep.dim_a = chain.dim0;
  rep.height = krull_dim(S.defining()) - krull_dim(ideal_sum(S.defining(), S.J()));
  rep.complete = static_cast<int>(chain.steps.size()) + 1 >= spread;
  bool zero_seen = false;
  for (int i = 0; i <= static_cast<int>(chain.steps.size()); ++i) {
    bool positive = chain.dim0 >= 0 && chain.dim_at(static_cast<std::size_t>(i)) == chain.dim0 - i;
    Integer v = positive ? samuel(S, chain.at(static_cast<std::size_t>(i))) : Integer(0);
    if (v == 0) zero_seen = true;
    else MIXMULT_ASSERT(!zero_seen, "positive mixed multiplicities do not form an interval");
    if (i < spread) rep.e.push_back(v);
    else MIXMULT_ASSERT(v == 0, "e_" + std::to_string(i) + " is positive beyond the analytic spread");
    if (v > 0) rep.rho = i;
  }
  MIXMULT_ASSERT(rep.rho < spread, "rho is not below the analytic spread");
  rep.height_bound_enforced = rep.complete && S.ambient_is_polynomial_ring();
  if (rep.height_bound_enforced) MIXMULT_ASSERT(rep.height - 1 <= rep.rho, "rho is below ht J - 1");
  return rep;
}

/// Chain up to s(J) (so e_{s(J)} = 0 is checked too) and the resulting report.
template <class Field>
std::pair<SatChain<Field>, MixedIdealReport> mixed_multiplicities(const GradedSetting<Field>& S,
                                                                  const GenericityConfig& cfg) {
  int sj = analytic_spread(S);
  auto chain = sat_chain(S, sj, cfg, sj);
  auto rep = e_i_values(S, chain, sj);
  return {std::move(chain), std::move(rep)};
}

struct OrderResult {
  int order = 0;
  bool hypothesis_met = false;  // A regular
};

/// o(J): least degree of a form in J.
template <class Field>
OrderResult order_of(const GradedSetting<Field>& S) {
  auto j = ideal_sum(S.defining(), S.J());
  if (j.is_unit()) throw UsageError("order of the unit ideal");
  int best = -1;
  for (const auto& g : j.groebner_basis()) {
    bool in_ia = S.defining().contains(g);
    if (in_ia) continue;
    int d = static_cast<int>(g.total_degree());
    if (best < 0 || d < best) best = d;
  }
  return {best, S.ambient_is_polynomial_ring()};
}

/// Hypotheses that are not checked algorithmically; supplied per instance.
struct ClosedFormLabels {
  bool generically_ci = false;
  std::optional<std::pair<int, int>> c1c2;  // least degrees of two coprime forms in J
};

struct ClosedFormPrediction {
  int index;
  Integer value;
  std::string rule;
};

/// Closed-form predictions of e_i(m|J) whose hypotheses hold on this instance.
template <class Field>
std::vector<ClosedFormPrediction> closed_form_oracles(const GradedSetting<Field>& S, const ClosedFormLabels& labels,
                                                      int spread) {
  std::vector<ClosedFormPrediction> out;
  if (!S.i_is_maximal()) return out;
  auto ea = total_multiplicity(S.defining()).degree;
  int height = krull_dim(S.defining()) - krull_dim(ideal_sum(S.defining(), S.J()));
  auto ej = [&] { return total_multiplicity(ideal_sum(S.defining(), S.J())).degree; };
  if (height >= 1) out.push_back({0, ea, "e_0 = e(A), ht J > 0"});
  if (auto c = S.j_equidegree()) {
    Integer p = 1;
    for (int i = 0; i < height; ++i, p *= *c)
      if (i > 0) out.push_back({i, p * ea, "e_i = c^i e(A), i < ht J"});
    if (labels.generically_ci && spread >= height + 1 && height > 0)
      out.push_back({height, p * ea - ej(), "e_s = c^s e(A) - e(A/J)"});
  }
  if (S.ambient_is_polynomial_ring() && height >= 2) {
    out.push_back({1, order_of(S).order, "e_1 = o(J)"});
    if (labels.c1c2) {
      Integer c12 = Integer(labels.c1c2->first) * labels.c1c2->second;
      if (height >= 3) out.push_back({2, c12, "e_2 = c1 c2"});
      else if (labels.generically_ci) out.push_back({2, c12 - ej(), "e_2 = c1 c2 - e(A/J)"});
    }
  }
  return out;
}

struct ReesSums {
  Integer rees_mult;
  std::optional<Integer> diagonal_degree;
};

/// e(R(J)_N) = Σ e_i and, for J equigenerated in a polynomial ring in n+1
/// variables, e(R(J)_Δ) = Σ C(n,i) e_i.
template <class Field>
ReesSums rees_and_diagonal(const GradedSetting<Field>& S, const MixedIdealReport& rep) {
  ReesSums out;
  out.rees_mult = 0;
  for (const auto& v : rep.e) out.rees_mult += v;
  if (S.ambient_is_polynomial_ring() && S.j_equidegree() && S.i_is_maximal()) {
    long n = static_cast<long>(S.ring()->size()) - 1;
    Integer d = 0;
    for (std::size_t i = 0; i < rep.e.size(); ++i) d += binomial(Integer(n), static_cast<long>(i)) * rep.e[i];
    out.diagonal_degree = d;
  }
  return out;
}

/// The Rees algebra regraded with T:(1,0), x:(0,1); its top diagonal is
/// (e_i(m|J)) indexed by the T-exponent.
template <class Field>
FullTable<Field> rees_bigraded_table(const GradedSetting<Field>& S, bool verify = false, const GenericityConfig& cfg = {}) {
  if (!S.ambient_is_polynomial_ring()) throw UsageError("the Rees regrading needs a polynomial ring");
  if (!S.j_equidegree()) throw UsageError("the Rees regrading needs J generated in one degree");
  auto rp = rees_presentation(S.defining(), S.j_work());
  return e_table_full(BigradedAlgebra<Field>(rp.kernel), verify, cfg);
}

/// Compares the regraded Rees table with the chain values; the table is returned.
template <class Field>
ETable rees_bigraded_crosscheck(const GradedSetting<Field>& S, const MixedIdealReport& rep) {
  auto full = rees_bigraded_table(S);
  const auto& t = full.table;
  MIXMULT_ASSERT(t.r.has_value(), "Rees algebra has zero Hilbert polynomial");
  MIXMULT_ASSERT(*t.r == rep.dim_a - 1, "Rees relevant degree differs from dim A - 1");
  for (int i = 0; i <= *t.r; ++i) {
    Integer chain_value = i < static_cast<int>(rep.e.size()) ? rep.e[i] : Integer(0);
    MIXMULT_ASSERT(t.at(i, *t.r - i) == chain_value,
                   "Rees table and chain disagree at e_" + std::to_string(i));
  }
  return t;
}

inline constexpr int kReductionBound = 10;

/// J' ⊆ J with J^{n+1} = J'·J^n for some n ≤ kReductionBound; returns that n.
template <class Field>
int reduction_exponent(const Ideal<Field>& jp, const Ideal<Field>& j) {
  if (!j.contains(jp)) throw UsageError("J' is not contained in J");
  Ideal<Field> jn = Ideal<Field>::unit(j.ring());
  for (int n = 0; n <= kReductionBound; ++n) {
    if (ideal_product(j, jn) == ideal_product(jp, jn)) return n;
    jn = ideal_product(jn, j);
  }
  throw UsageError("reduction not confirmed within n <= " + std::to_string(kReductionBound));
}

template <class Field>
struct ReductionCheck {
  int exponent_i = 0, exponent_j = 0;
  MixedIdealReport original, reduced;
  bool equal = false;
};

/// e_i(I|J) = e_i(I'|J') for reductions I' of I and J' of J.
template <class Field>
ReductionCheck<Field> reduction_invariance_check(const GradedSetting<Field>& S, const GradedSetting<Field>& Sp,
                                                 const GenericityConfig& cfg) {
  if (S.ring() != Sp.ring() || !(S.defining() == Sp.defining())) throw UsageError("settings differ in A");
  ReductionCheck<Field> out;
  auto with_a = [&](const Ideal<Field>& x) { return ideal_sum(S.defining(), x); };
  out.exponent_j = reduction_exponent(with_a(Sp.J()), with_a(S.J()));
  out.exponent_i = reduction_exponent(with_a(Sp.I()), with_a(S.I()));
  out.original = mixed_multiplicities(S, cfg).second;
  out.reduced = mixed_multiplicities(Sp, cfg).second;
  out.equal = out.original.e == out.reduced.e;
  return out;
}

}  // namespace mixmult
