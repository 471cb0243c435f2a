#pragma once

// Property suites over fixtures and seeded random instances. Every suite
// counts checks; any exception inside a check is a failure with its message.

#include <functional>
#include <string>
#include <vector>

#include "mixmult/testing/fixtures.hpp"
#include "mixmult/testing/oracles.hpp"

namespace mixmult::testing {

struct SuiteResult {
  std::string name;
  int checks = 0;
  int failures = 0;
  std::vector<std::string> messages;
};

using F = PrimeField;

/// Random bihomogeneous ideal in k[x1..x_a; y1..y_b] with sparse generators.
inline Ideal<F> random_bihomogeneous(Rng& rng, int a, int b, int gens, int maxdeg) {
  F field(kDefaultPrime);
  auto S = make_bigraded_ring<F>("S", names<F>("x", 1, a), names<F>("y", 1, b), field);
  std::vector<Polynomial<F>> g;
  for (int k = 0; k < gens; ++k) {
    int du = 0, dv = 0;
    while (du + dv == 0) {
      du = static_cast<int>(rng.below(static_cast<std::uint64_t>(maxdeg) + 1));
      dv = static_cast<int>(rng.below(static_cast<std::uint64_t>(maxdeg) + 1));
    }
    auto mons = monomials_of_bidegree(*S, du, dv);
    std::vector<Term<F>> terms;
    int nt = 1 + static_cast<int>(rng.below(3));
    for (int t = 0; t < nt; ++t)
      terms.push_back({mons[rng.below(mons.size())], field.from_uint(rng.nonzero_below(7))});
    g.emplace_back(S, std::move(terms));
  }
  return Ideal<F>(S, std::move(g));
}

/// Random homogeneous ideal in k[x1..x_n].
inline Ideal<F> random_homogeneous(Rng& rng, const RingPtr<F>& A, int gens, int maxdeg) {
  std::vector<Polynomial<F>> g;
  for (int k = 0; k < gens; ++k) {
    auto d = static_cast<std::uint32_t>(1 + rng.below(static_cast<std::uint64_t>(maxdeg)));
    auto mons = monomials_of_degree(A->size(), d);
    std::vector<Term<F>> terms;
    int nt = 1 + static_cast<int>(rng.below(3));
    for (int t = 0; t < nt; ++t) terms.push_back({mons[rng.below(mons.size())], A->field().from_uint(rng.nonzero_below(7))});
    g.emplace_back(A, std::move(terms));
  }
  return Ideal<F>(A, std::move(g));
}

namespace detail {

inline void check(SuiteResult& s, const std::string& what, const std::function<bool()>& body) {
  ++s.checks;
  try {
    if (!body()) {
      ++s.failures;
      s.messages.push_back(what);
    }
  } catch (const std::exception& e) {
    ++s.failures;
    s.messages.push_back(what + ": " + e.what());
  }
}

inline std::vector<Ideal<F>> bigraded_fixtures() {
  F field(kDefaultPrime);
  return {three_component_example(field), free_bigraded(field, 1, 1),  free_bigraded(field, 2, 3),
          bilinear_hypersurface(field),   diagonal_minors(field),      mixed_complete_intersection(field),
          split_example(field, 2)};
}

/// Random instances small enough for repeated saturations by R_++.
inline std::vector<Ideal<F>> bigraded_randoms(std::uint64_t seed, int count) {
  Rng rng(mix_seed(seed, "bigraded-randoms"));
  std::vector<Ideal<F>> out;
  for (int k = 0; k < count; ++k) {
    int a = 1 + static_cast<int>(rng.below(3)), b = 1 + static_cast<int>(rng.below(3));
    out.push_back(random_bihomogeneous(rng, a, b, 1 + static_cast<int>(rng.below(4)), 2));
  }
  return out;
}

}  // namespace detail

/// (a) series coefficients against the linear-algebra count.
inline SuiteResult suite_hilbert_oracle(std::uint64_t seed, int instances = 50, int window = 8) {
  SuiteResult s{"hilbert-oracle", 0, 0, {}};
  Rng rng(mix_seed(seed, "suite-a"));
  for (int k = 0; k < instances; ++k) {
    int a = 1 + static_cast<int>(rng.below(3)), b = 1 + static_cast<int>(rng.below(3));
    auto I = random_bihomogeneous(rng, a, b, 1 + static_cast<int>(rng.below(3)), 2);
    detail::check(s, "instance " + std::to_string(k), [&] {
      auto series = series_of(I);
      for (int u = 0; u <= window; ++u)
        for (int v = 0; u + v <= window; ++v)
          if (series_coefficient(series, u, v) != hilbert_count_oracle(I, u, v)) return false;
      return true;
    });
  }
  return s;
}

/// (b) deg P, deg_u P, deg_v P against the saturation dimensions.
inline SuiteResult suite_degree_formulas(std::uint64_t seed) {
  SuiteResult s{"degree-formulas", 0, 0, {}};
  auto all = detail::bigraded_fixtures();
  for (auto& I : detail::bigraded_randoms(seed, 60)) all.push_back(I);
  for (std::size_t k = 0; k < all.size(); ++k) {
    auto poly = polynomial_of(series_of(all[k]));
    if (poly.is_zero()) continue;
    detail::check(s, "instance " + std::to_string(k), [&] {
      auto rep = degrees_report(BigradedAlgebra<F>(all[k]));
      return rep.r == poly.total_degree && rep.r1 == poly.degree_u && rep.r2 == poly.degree_v &&
             *rep.r <= *rep.r1 + *rep.r2;
    });
  }
  return s;
}

/// (c) dim R/(0:R_++^inf + R_(k)) = dim R/(0:R_(k)^inf + R_(k)).
inline SuiteResult suite_degree2(std::uint64_t seed) {
  SuiteResult s{"degree2", 0, 0, {}};
  auto all = detail::bigraded_randoms(mix_seed(seed, 3), 40);
  for (auto& I : detail::bigraded_fixtures()) all.push_back(I);
  for (std::size_t k = 0; k < all.size(); ++k) {
    detail::check(s, "instance " + std::to_string(k), [&] {
      BigradedAlgebra<F> R(all[k]);
      if (R.saturate(R.ideal()).is_unit()) return true;
      auto d = degree2_dims(R);
      return d.rpp_plus_r1 == d.r1_sat_plus_r1 && d.rpp_plus_r2 == d.r2_sat_plus_r2;
    });
  }
  return s;
}

/// (d) positivity criterion and criterion values against the table, every top-diagonal cell.
inline SuiteResult suite_positivity(std::uint64_t seed) {
  SuiteResult s{"positivity-criterion", 0, 0, {}};
  auto all = detail::bigraded_fixtures();
  for (auto& I : detail::bigraded_randoms(mix_seed(seed, 4), 25)) all.push_back(I);
  GenericityConfig cfg{seed, kDefaultPrime, 16};
  for (std::size_t k = 0; k < all.size(); ++k) {
    BigradedAlgebra<F> R(all[k]);
    auto table = e_table(polynomial_of(series_of(R.ideal())));
    if (!table.r) continue;
    auto rep = degrees_report(R);
    for (int i = 0; i <= *table.r; ++i) {
      int j = *table.r - i;
      detail::check(s, "instance " + std::to_string(k) + " cell " + std::to_string(i) + "," + std::to_string(j), [&] {
        bool expected = table.at(i, j) > 0;
        if (e_positivity(R, rep, i, j, cfg).positive != expected) return false;
        return e_value_via_criterion(R, rep, i, j, cfg).value == table.at(i, j);
      });
    }
  }
  return s;
}

/// (e) e(R) = Σ_{i+j=d-2} e_ij where the height test applies.
inline SuiteResult suite_sum(std::uint64_t seed, int* established = nullptr) {
  SuiteResult s{"multiplicity-sum", 0, 0, {}};
  auto all = detail::bigraded_fixtures();
  for (auto& I : detail::bigraded_randoms(mix_seed(seed, 5), 50)) all.push_back(I);
  int held = 0;
  for (std::size_t k = 0; k < all.size(); ++k) {
    detail::check(s, "instance " + std::to_string(k), [&] {
      auto r = sum_check(BigradedAlgebra<F>(all[k]));
      if (r == SumCheck::holds) ++held;
      return r != SumCheck::fails;
    });
  }
  if (established) *established = held;
  return s;
}

/// (f) saturation: containment, idempotence, monotonicity, and I:J^inf killed by a power of J.
inline SuiteResult suite_saturation(std::uint64_t seed, int pairs = 80) {
  SuiteResult s{"saturation", 0, 0, {}};
  F field(kDefaultPrime);
  auto A = make_graded_ring<F>("A", {"x", "y", "z"}, field);
  Rng rng(mix_seed(seed, "suite-f"));
  for (int k = 0; k < pairs; ++k) {
    auto I = random_homogeneous(rng, A, 2 + static_cast<int>(rng.below(2)), 3);
    auto J = random_homogeneous(rng, A, 1 + static_cast<int>(rng.below(2)), 2);
    auto g = random_homogeneous(rng, A, 1, 2).generators().front();
    detail::check(s, "pair " + std::to_string(k), [&] {
      auto sat = saturation(I, J);
      if (!sat.contains(I) || !sat.contains(ideal_quotient(I, J))) return false;
      if (!(saturation(sat, J) == sat)) return false;
      auto bigger = saturation(ideal_sum(I, std::vector{g}), J);
      if (!bigger.contains(sat)) return false;
      // n = number of colon steps until I : J^n stabilizes; then h·J^n ⊆ I
      // for every generator h of the saturation, checked by linear algebra.
      int n = 0;
      for (auto cur = I;; ++n) {
        auto next = ideal_quotient(cur, J);
        if (next == cur) break;
        cur = std::move(next);
      }
      auto jn = ideal_power(J, static_cast<unsigned>(n));
      for (const auto& h : sat.generators())
        for (const auto& q : jn.generators())
          if (!member_oracle(I, h * q)) return false;
      return true;
    });
  }
  return s;
}

/// (g) exchanging the gradings transposes series, table and degrees.
inline SuiteResult suite_swap(std::uint64_t seed) {
  SuiteResult s{"grading-swap", 0, 0, {}};
  auto all = detail::bigraded_fixtures();
  for (auto& I : detail::bigraded_randoms(mix_seed(seed, 7), 30)) all.push_back(I);
  for (std::size_t k = 0; k < all.size(); ++k) {
    detail::check(s, "instance " + std::to_string(k), [&] {
      BigradedAlgebra<F> R(all[k]);
      auto Rs = R.swapped();
      auto a = series_of(R.ideal()), b = series_of(Rs.ideal());
      if (transpose(a.numerator) != b.numerator || a.n1 != b.n2 || a.n2 != b.n1) return false;
      auto ta = e_table(polynomial_of(a)), tb = e_table(polynomial_of(b));
      if (ta.r != tb.r) return false;
      if (ta.r)
        for (int i = 0; i <= *ta.r; ++i)
          if (ta.at(i, *ta.r - i) != tb.at(*ta.r - i, i)) return false;
      auto ra = degrees_report(R), rb = degrees_report(Rs);
      return ra.r == rb.r && ra.r1 == rb.r2 && ra.r2 == rb.r1;
    });
  }
  return s;
}

/// (h) equal e-vectors for J and a reduction J'.
inline SuiteResult suite_reduction(std::uint64_t seed) {
  SuiteResult s{"reduction-invariance", 0, 0, {}};
  F field(kDefaultPrime);
  GenericityConfig cfg{seed, kDefaultPrime, 16};
  auto pairs = reduction_pairs(field, seed);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    detail::check(s, "pair " + std::to_string(k), [&] {
      return reduction_invariance_check(in_polynomial_ring(pairs[k].first), in_polynomial_ring(pairs[k].second), cfg).equal;
    });
  }
  return s;
}

/// (i) chain runs whose rigidity assertions must never fire; also the interval
/// is unchanged for a second m-primary I, and the polynomial-ring instances
/// have e_i > 0 for all i < s(J).
inline SuiteResult suite_rigidity(std::uint64_t seed, int randoms = 40) {
  SuiteResult s{"rigidity", 0, 0, {}};
  F field(kDefaultPrime);
  GenericityConfig cfg{seed, kDefaultPrime, 16};
  std::vector<GradedSetting<F>> settings{embedded_component_setting(field), in_polynomial_ring(twisted_cubic(field)),
                                         in_polynomial_ring(three_points(field))};
  Rng rng(mix_seed(seed, "suite-i"));
  for (int k = 0; k < randoms; ++k) {
    auto A = make_graded_ring<F>("A", names<F>("x", 1, 3 + static_cast<int>(rng.below(2))), field);
    auto J = random_homogeneous(rng, A, 1 + static_cast<int>(rng.below(3)), 2);
    auto IA = k % 3 == 2 ? random_homogeneous(rng, A, 1, 2) : Ideal<F>::zero(A);
    try {
      settings.emplace_back(IA, J);
    } catch (const UsageError&) {
    }
  }
  for (std::size_t k = 0; k < settings.size(); ++k) {
    const auto& S = settings[k];
    detail::check(s, "setting " + std::to_string(k), [&] {
      auto rep = mixed_multiplicities(S, cfg).second;
      if (rep.rho >= rep.spread) return false;
      if (S.ambient_is_polynomial_ring())
        for (int i = 0; i < rep.spread; ++i)
          if (rep.e[static_cast<std::size_t>(i)] <= 0) return false;
      std::vector<Polynomial<F>> squares;
      for (std::size_t v = 0; v < S.ring()->size(); ++v) squares.push_back(Polynomial<F>::variable(S.ring(), v).pow(2));
      GradedSetting<F> S2(S.defining(), S.J(), Ideal<F>(S.ring(), squares));
      return mixed_multiplicities(S2, cfg).second.rho == rep.rho;
    });
  }
  return s;
}

/// A filter-regular (1,0) reduction of R_(1) needs dim R/R_(2) generators.
inline SuiteResult suite_spread(std::uint64_t seed) {
  SuiteResult s{"spread", 0, 0, {}};
  auto all = detail::bigraded_fixtures();
  for (auto& I : detail::bigraded_randoms(mix_seed(seed, 9), 30)) all.push_back(I);
  GenericityConfig cfg{seed, kDefaultPrime, 16};
  for (std::size_t k = 0; k < all.size(); ++k) {
    detail::check(s, "instance " + std::to_string(k), [&] {
      BigradedAlgebra<F> R(all[k]);
      if (R.saturate(R.ideal()).is_unit()) return true;
      // Pass to R/0:R_++^inf, where the identity holds.
      BigradedAlgebra<F> Rbar(R.saturate(R.ideal()));
      auto cert = reduction_of_r1(Rbar, cfg);
      return static_cast<int>(cert.steps.size()) == krull_dim(ideal_sum(Rbar.ideal(), Rbar.r2()));
    });
  }
  return s;
}

/// e_ij(R/zR) = e_{i+1,j}(R) on the diagonal i+j = deg P - 1, z filter-regular of degree (1,0).
inline SuiteResult suite_cut(std::uint64_t seed) {
  SuiteResult s{"hyperplane-cut", 0, 0, {}};
  auto all = detail::bigraded_fixtures();
  for (auto& I : detail::bigraded_randoms(mix_seed(seed, 10), 30)) all.push_back(I);
  GenericityConfig cfg{seed, kDefaultPrime, 16};
  for (std::size_t k = 0; k < all.size(); ++k) {
    BigradedAlgebra<F> R(all[k]);
    auto p = polynomial_of(series_of(R.ideal()));
    if (p.is_zero()) continue;
    detail::check(s, "instance " + std::to_string(k), [&] {
      auto z = find_filter_regular(R, {Bidegree{1, 0}}, cfg).elements();
      auto q = polynomial_of(series_of(R.quotient_by(z).ideal()));
      int r = *p.total_degree;
      if (q.total_degree.value_or(-1) > r - 1) return false;
      if (q.degree_u.value_or(-1) != *p.degree_u - 1 && !(q.is_zero() && *p.degree_u == 0)) return false;
      for (int i = 0; i <= r - 1; ++i)
        if (q.coeff(i, r - 1 - i) != p.coeff(i + 1, r - 1 - i)) return false;
      return true;
    });
  }
  return s;
}

/// Domains and Cohen-Macaulay instances: e_{i,r-i} > 0 for r - r2 <= i <= r1.
inline SuiteResult suite_rigid_bigraded() {
  SuiteResult s{"bigraded-rigidity", 0, 0, {}};
  F field(kDefaultPrime);
  std::vector<Ideal<F>> curated{free_bigraded(field, 2, 3), bilinear_hypersurface(field), diagonal_minors(field),
                                mixed_complete_intersection(field)};
  for (std::size_t k = 0; k < curated.size(); ++k) {
    detail::check(s, "instance " + std::to_string(k), [&] {
      auto t = e_table(polynomial_of(series_of(curated[k])));
      for (int i = *t.r - t.r2; i <= t.r1; ++i)
        if (t.at(i, *t.r - i) <= 0) return false;
      return true;
    });
  }
  return s;
}

/// Ruled-join degrees: telescoping, nonnegativity and agreement of two seeds.
inline SuiteResult suite_sv(std::uint64_t seed) {
  SuiteResult s{"sv-degrees", 0, 0, {}};
  F field(kDefaultPrime);
  auto pc = plane_curves(field);
  std::vector<std::pair<Ideal<F>, Ideal<F>>> pairs{{pc.line1, pc.line2}, {pc.line1, pc.line1}, {pc.conic1, pc.conic2},
                                                   {pc.line1, pc.conic1}};
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    detail::check(s, "pair " + std::to_string(k), [&] {
      JoinSetting<F> js(pairs[k].first, pairs[k].second);
      auto a = sv_degrees(js, {seed, kDefaultPrime, 16});
      auto b = sv_degrees(js, {mix_seed(seed, "second"), kDefaultPrime, 16});
      for (const auto& d : a.degs)
        if (d < 0) return false;
      return a.degs == b.degs && bezout_check(js, a).telescopes;
    });
  }
  return s;
}

/// Every suite, in a fixed order.
inline std::vector<SuiteResult> run_selftest(std::uint64_t seed) {
  return {suite_hilbert_oracle(seed), suite_degree_formulas(seed), suite_degree2(seed),  suite_positivity(seed),
          suite_sum(seed),            suite_saturation(seed),      suite_swap(seed),     suite_reduction(seed),
          suite_rigidity(seed),       suite_spread(seed),          suite_cut(seed),      suite_rigid_bigraded(),
          suite_sv(seed)};
}

}  // namespace mixmult::testing
