#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mixmult/hilbert.hpp"
#include "mixmult/random.hpp"

namespace mixmult {

/// Uniform nonzero scalar; over the rationals the draw is an integer in [1, bound).
template <class Field>
typename Field::Element random_scalar(const Field& field, Rng& rng, std::uint32_t bound) {
  std::uint64_t p = field.characteristic() != 0 ? field.characteristic() : bound;
  return field.from_uint(rng.nonzero_below(p));
}

/// Random linear combination of the listed variables.
template <class Field>
Polynomial<Field> random_linear_form(const RingPtr<Field>& ring, const std::vector<std::size_t>& vars, Rng& rng,
                                     std::uint32_t bound) {
  std::vector<Term<Field>> terms;
  for (auto v : vars) terms.push_back({Monomial::variable(v), random_scalar(ring->field(), rng, bound)});
  return Polynomial<Field>(ring, std::move(terms));
}

/// R = S/I for a standard bigraded polynomial ring S, together with the ideals
/// R_(1), R_(2) and R_++ = R_(1)·R_(2) (as ideals of S).
template <class Field>
class BigradedAlgebra {
 public:
  using IdealT = Ideal<Field>;

  explicit BigradedAlgebra(IdealT defining) : ideal_(std::move(defining)) {
    const auto& ring = ideal_.ring();
    if (!ring->is_standard_bigraded()) throw UsageError("ring " + ring->name() + " is not standard bigraded");
    if (!generators_bihomogeneous(ideal_)) throw UsageError("defining ideal is not bihomogeneous");
    xs_ = ring->variables_of_degree({1, 0});
    ys_ = ring->variables_of_degree({0, 1});
    r1_ = IdealT::of_variables(ring, xs_);
    r2_ = IdealT::of_variables(ring, ys_);
    std::vector<Polynomial<Field>> prods;
    for (auto x : xs_)
      for (auto y : ys_)
        prods.push_back(Polynomial<Field>::variable(ring, x) * Polynomial<Field>::variable(ring, y));
    rpp_ = IdealT(ring, std::move(prods));
  }

  const RingPtr<Field>& ring() const { return ideal_.ring(); }
  const IdealT& ideal() const { return ideal_; }
  const IdealT& r1() const { return r1_; }
  const IdealT& r2() const { return r2_; }
  const IdealT& rpp() const { return rpp_; }
  const std::vector<std::size_t>& xs() const { return xs_; }
  const std::vector<std::size_t>& ys() const { return ys_; }

  /// Preimage of 0 :_R R_++^∞ for R/K, i.e. K : R_++^∞.
  IdealT saturate(const IdealT& k) const { return saturation(k, rpp_); }

  /// The algebra R/(z_1..z_k).
  BigradedAlgebra quotient_by(const std::vector<Polynomial<Field>>& elems) const {
    return BigradedAlgebra(ideal_sum(ideal_, elems));
  }

  /// Same algebra with the two gradings exchanged.
  BigradedAlgebra swapped() const { return BigradedAlgebra(rebase(ideal_, swap_grading(ring()))); }

 private:
  IdealT ideal_;
  std::vector<std::size_t> xs_, ys_;
  IdealT r1_, r2_, rpp_;
};

/// Relevant dimension and partial degrees from saturation dimensions.
struct DegreesReport {
  std::optional<int> r, r1, r2;
  int dim_saturated = -1;          // dim R/0:R_++^∞
  int dim_saturated_plus_r2 = -1;  // dim R/(0:R_++^∞ + R_(2))
  int dim_saturated_plus_r1 = -1;  // dim R/(0:R_++^∞ + R_(1))
  int dim_R = -1;
  int dim_R_mod_r1 = -1;
  int dim_R_mod_r2 = -1;
  bool polynomial_zero = true;
};

template <class Field>
DegreesReport degrees_report(const BigradedAlgebra<Field>& R) {
  DegreesReport rep;
  rep.dim_R = krull_dim(R.ideal());
  rep.dim_R_mod_r1 = krull_dim(ideal_sum(R.ideal(), R.r1()));
  rep.dim_R_mod_r2 = krull_dim(ideal_sum(R.ideal(), R.r2()));

  auto sat = R.saturate(R.ideal());
  auto poly = polynomial_of(series_of(R.ideal()));
  if (sat.is_unit()) {
    MIXMULT_ASSERT(poly.is_zero(), "R_++ is nilpotent but the Hilbert polynomial is nonzero");
    return rep;
  }
  rep.dim_saturated = krull_dim(sat);
  rep.dim_saturated_plus_r2 = krull_dim(ideal_sum(sat, R.r2()));
  rep.dim_saturated_plus_r1 = krull_dim(ideal_sum(sat, R.r1()));
  rep.r = rep.dim_saturated - 2;
  rep.r1 = rep.dim_saturated_plus_r2 - 1;
  rep.r2 = rep.dim_saturated_plus_r1 - 1;
  rep.polynomial_zero = poly.is_zero();
  MIXMULT_ASSERT(!poly.is_zero(), "0:R_++^inf is proper but the Hilbert polynomial vanishes");
  MIXMULT_ASSERT(poly.total_degree == rep.r, "deg P differs from dim R/0:R_++^inf - 2");
  MIXMULT_ASSERT(poly.degree_u == rep.r1, "deg_u P differs from dim R/(0:R_++^inf + R_(2)) - 1");
  MIXMULT_ASSERT(poly.degree_v == rep.r2, "deg_v P differs from dim R/(0:R_++^inf + R_(1)) - 1");
  return rep;
}

template <class Field>
struct FilterStep {
  Polynomial<Field> element;
  Bidegree degree;
  bool passed = false;
  /// An element of (prev : z) outside (prev : R_++^∞) when the step fails.
  std::optional<Polynomial<Field>> witness;
  int attempts = 1;
};

template <class Field>
struct FilterRegularCertificate {
  std::vector<FilterStep<Field>> steps;
  std::uint64_t seed = 0;

  bool passed() const {
    for (const auto& s : steps)
      if (!s.passed) return false;
    return true;
  }

  std::vector<Polynomial<Field>> elements() const {
    std::vector<Polynomial<Field>> out;
    for (const auto& s : steps) out.push_back(s.element);
    return out;
  }
};

namespace detail {

/// One filter-regularity step: (prev : z) ⊆ (prev : R_++^∞).
template <class Field>
FilterStep<Field> filter_step(const BigradedAlgebra<Field>& R, const Ideal<Field>& prev, const Polynomial<Field>& z) {
  FilterStep<Field> step{z, {}, false, std::nullopt, 1};
  if (z.is_zero()) throw UsageError("zero element in a filter-regular sequence");
  auto d = bidegree_of(z);
  if (!d) throw UsageError("inhomogeneous element " + to_string(z) + " in a filter-regular sequence");
  step.degree = *d;
  auto colon = ideal_quotient(prev, z);
  if (colon == prev) {
    step.passed = true;
    return step;
  }
  auto sat = R.saturate(prev);
  for (const auto& g : colon.generators()) {
    if (!sat.contains(g)) {
      step.witness = g;
      return step;
    }
  }
  step.passed = true;
  return step;
}

}  // namespace detail

/// Checks z_1..z_s step by step against (I + (z_1..z_{k−1})).
template <class Field>
FilterRegularCertificate<Field> is_filter_regular(const BigradedAlgebra<Field>& R,
                                                  const std::vector<Polynomial<Field>>& seq) {
  FilterRegularCertificate<Field> cert;
  std::vector<Polynomial<Field>> prefix;
  for (const auto& z : seq) {
    cert.steps.push_back(detail::filter_step(R, ideal_sum(R.ideal(), prefix), z));
    prefix.push_back(z);
  }
  return cert;
}

inline constexpr int kDefaultMaxRetries = 16;

/// Random filter-regular continuation of `start` with the requested bidegrees,
/// each element retried until it verifies.
template <class Field>
FilterRegularCertificate<Field> extend_filter_regular(const BigradedAlgebra<Field>& R,
                                                      const FilterRegularCertificate<Field>& start,
                                                      const std::vector<Bidegree>& pattern,
                                                      const GenericityConfig& cfg) {
  FilterRegularCertificate<Field> cert = start;
  Rng rng(mix_seed(cfg.seed, "filter-regular:" + std::to_string(start.steps.size())));
  auto prefix = start.elements();
  for (const auto& d : pattern) {
    const std::vector<std::size_t>* vars = nullptr;
    if (d == Bidegree{1, 0}) vars = &R.xs();
    else if (d == Bidegree{0, 1}) vars = &R.ys();
    else throw UsageError("filter-regular pattern entries must be (1,0) or (0,1)");
    if (vars->empty()) throw UsageError("no variables of the requested bidegree");
    auto prev = ideal_sum(R.ideal(), prefix);
    bool done = false;
    for (int attempt = 1; attempt <= cfg.max_retries && !done; ++attempt) {
      auto z = random_linear_form(R.ring(), *vars, rng, cfg.prime);
      auto step = detail::filter_step(R, prev, z);
      step.attempts = attempt;
      if (step.passed) {
        cert.steps.push_back(step);
        prefix.push_back(z);
        done = true;
      }
    }
    if (!done)
      throw GenericityExhausted("no filter-regular element of degree (" + std::to_string(d.d1) + "," +
                                std::to_string(d.d2) + ") found in " + std::to_string(cfg.max_retries) + " tries");
  }
  return cert;
}

template <class Field>
FilterRegularCertificate<Field> find_filter_regular(const BigradedAlgebra<Field>& R, const std::vector<Bidegree>& pattern,
                                                    const GenericityConfig& cfg) {
  FilterRegularCertificate<Field> empty;
  empty.seed = cfg.seed;
  return extend_filter_regular(R, empty, pattern, cfg);
}

template <class Field>
struct PositivityResult {
  bool positive = false;
  int witness_dim = -1;
  FilterRegularCertificate<Field> cert;
};

namespace detail {

template <class Field>
FilterRegularCertificate<Field> x_sequence(const BigradedAlgebra<Field>& R, int i, const GenericityConfig& cfg,
                                           const std::optional<std::vector<Polynomial<Field>>>& given) {
  if (given) {
    if (static_cast<int>(given->size()) < i) throw UsageError("supplied sequence is shorter than i");
    std::vector<Polynomial<Field>> xs(given->begin(), given->begin() + i);
    for (const auto& x : xs)
      if (bidegree_of(x) != Bidegree{1, 0}) throw UsageError("first i supplied elements must have degree (1,0)");
    auto cert = is_filter_regular(R, xs);
    cert.seed = cfg.seed;
    if (!cert.passed()) throw UsageError("supplied (1,0) elements are not a filter-regular sequence");
    return cert;
  }
  return find_filter_regular(R, std::vector<Bidegree>(static_cast<std::size_t>(i), Bidegree{1, 0}), cfg);
}

inline void check_diagonal(const DegreesReport& rep, int i, int j) {
  if (!rep.r) throw UsageError("the Hilbert polynomial is zero; there are no mixed multiplicities");
  if (i < 0 || j < 0 || i + j != *rep.r)
    throw UsageError("(i,j) must be nonnegative with i + j = r = " + std::to_string(*rep.r));
}

}  // namespace detail

/// e_ij(R) > 0 iff dim R/((x_1..x_i):R_++^∞ + R_(1)) = j + 1 for a
/// filter-regular sequence of (1,0) elements.
template <class Field>
PositivityResult<Field> e_positivity(const BigradedAlgebra<Field>& R, const DegreesReport& rep, int i, int j,
                                     const GenericityConfig& cfg,
                                     const std::optional<std::vector<Polynomial<Field>>>& given = std::nullopt) {
  detail::check_diagonal(rep, i, j);
  PositivityResult<Field> res;
  res.cert = detail::x_sequence(R, i, cfg, given);
  auto sat = R.saturate(ideal_sum(R.ideal(), res.cert.elements()));
  res.witness_dim = krull_dim(ideal_sum(sat, R.r1()));
  res.positive = res.witness_dim == j + 1;
  return res;
}

template <class Field>
struct EValue {
  Integer value;
  bool vanishes_by_degree_bound = false;  // i > r1 or j > r2
  std::optional<PositivityResult<Field>> positivity;
  FilterRegularCertificate<Field> cert;    // full x, y sequence in the positive case
};

/// e_ij(R) = e(R/(x_1..x_i, y_1..y_j):R_++^∞) when positive, else 0.
template <class Field>
EValue<Field> e_value_via_criterion(const BigradedAlgebra<Field>& R, const DegreesReport& rep, int i, int j,
                                    const GenericityConfig& cfg,
                                    const std::optional<std::vector<Polynomial<Field>>>& given = std::nullopt) {
  detail::check_diagonal(rep, i, j);
  EValue<Field> out;
  if (i > rep.r1.value_or(-1) || j > rep.r2.value_or(-1)) {
    out.value = 0;
    out.vanishes_by_degree_bound = true;
    return out;
  }
  auto pos = e_positivity(R, rep, i, j, cfg, given);
  out.positivity = pos;
  if (!pos.positive) {
    out.value = 0;
    out.cert = pos.cert;
    return out;
  }
  if (given) {
    if (static_cast<int>(given->size()) != i + j) throw UsageError("supplied sequence must have length i + j");
    for (int k = i; k < i + j; ++k)
      if (bidegree_of((*given)[k]) != Bidegree{0, 1}) throw UsageError("last j supplied elements must have degree (0,1)");
    out.cert = is_filter_regular(R, *given);
    out.cert.seed = cfg.seed;
    if (!out.cert.passed()) throw UsageError("supplied sequence is not filter-regular");
  } else {
    out.cert = extend_filter_regular(R, pos.cert, std::vector<Bidegree>(static_cast<std::size_t>(j), Bidegree{0, 1}), cfg);
  }
  auto bar = R.saturate(ideal_sum(R.ideal(), out.cert.elements()));
  auto tm = total_multiplicity(bar);
  MIXMULT_ASSERT(tm.dim == 2, "saturated quotient in the positive branch has dimension " + std::to_string(tm.dim) + ", not 2");
  out.value = tm.degree;
  return out;
}

template <class Field>
struct FullTable {
  HilbertSeries2 series;
  HilbertPoly2 polynomial;
  ETable table;
  /// Per top-diagonal cell, the criterion value when verification was requested.
  std::map<std::pair<int, int>, Integer> verified;
};

template <class Field>
FullTable<Field> e_table_full(const BigradedAlgebra<Field>& R, bool verify = false, const GenericityConfig& cfg = {}) {
  FullTable<Field> out;
  out.series = series_of(R.ideal());
  out.polynomial = polynomial_of(out.series);
  out.table = e_table(out.polynomial);
  if (verify && out.table.r) {
    auto rep = degrees_report(R);
    for (int i = 0; i <= *out.table.r; ++i) {
      int j = *out.table.r - i;
      auto v = e_value_via_criterion(R, rep, i, j, cfg);
      if (v.value != out.table.at(i, j))
        throw MathError("criterion value for e_" + std::to_string(i) + "," + std::to_string(j) +
                        " disagrees with the Hilbert polynomial");
      out.verified[{i, j}] = v.value;
    }
  }
  return out;
}

enum class SumCheck { holds, fails, precondition_unknown };

inline const char* to_string(SumCheck s) {
  switch (s) {
    case SumCheck::holds: return "true";
    case SumCheck::fails: return "false";
    default: return "precondition unknown";
  }
}

/// e(R) = Σ_{i+j=d−2} e_ij(R), asserted only when 0:R_(1)^∞ = 0:R_(2)^∞ = 0.
template <class Field>
SumCheck sum_check(const BigradedAlgebra<Field>& R) {
  if (R.ideal().is_unit()) return SumCheck::precondition_unknown;
  if (!(saturation(R.ideal(), R.r1()) == R.ideal()) || !(saturation(R.ideal(), R.r2()) == R.ideal()))
    return SumCheck::precondition_unknown;
  auto series = series_of(R.ideal());
  auto tm = total_multiplicity(series);
  auto poly = polynomial_of(series);
  Integer sum = 0;
  for (int i = 0; i <= tm.dim - 2; ++i) sum += poly.coeff(i, tm.dim - 2 - i);
  return sum == tm.degree ? SumCheck::holds : SumCheck::fails;
}

/// Both sides of dim R/(0:R_++^∞ + R_(k)) = dim R/(0:R_(k)^∞ + R_(k)), k = 1, 2.
struct Degree2Dims {
  int rpp_plus_r1, r1_sat_plus_r1, rpp_plus_r2, r2_sat_plus_r2;
};

template <class Field>
Degree2Dims degree2_dims(const BigradedAlgebra<Field>& R) {
  auto sat = R.saturate(R.ideal());
  return {krull_dim(ideal_sum(sat, R.r1())), krull_dim(ideal_sum(saturation(R.ideal(), R.r1()), R.r1())),
          krull_dim(ideal_sum(sat, R.r2())), krull_dim(ideal_sum(saturation(R.ideal(), R.r2()), R.r2()))};
}

/// Random filter-regular (1,0) elements added until they generate a reduction of
/// R_(1), i.e. until R/(R_(2) + Q) has dimension 0. Returns the certificate;
/// its length is the number of generators used.
template <class Field>
FilterRegularCertificate<Field> reduction_of_r1(const BigradedAlgebra<Field>& R, const GenericityConfig& cfg) {
  FilterRegularCertificate<Field> cert;
  cert.seed = cfg.seed;
  auto base = ideal_sum(R.ideal(), R.r2());
  for (std::size_t k = 0; k <= R.ring()->size(); ++k) {
    if (krull_dim(ideal_sum(base, cert.elements())) <= 0) return cert;
    GenericityConfig step = cfg;
    step.seed = mix_seed(cfg.seed, k);
    cert = extend_filter_regular(R, cert, {Bidegree{1, 0}}, step);
  }
  throw MathError("no reduction of R_(1) found within the number of variables");
}

}  // namespace mixmult
