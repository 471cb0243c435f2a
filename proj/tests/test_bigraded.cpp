#include "catch_amalgamated.hpp"

#include "mixmult/testing/fixtures.hpp"

using namespace mixmult;
using F = PrimeField;
using P = Polynomial<F>;

TEST_CASE("three components: report and criterion", "[bigraded]") {
  auto I = testing::three_component_example(F(32003));
  BigradedAlgebra<F> R(I);
  auto rep = degrees_report(R);
  REQUIRE(rep.r);
  CHECK(*rep.r == 4);
  CHECK(*rep.r1 == 3);
  CHECK(*rep.r2 == 3);
  CHECK(rep.dim_saturated == 6);

  std::vector<P> seq;
  for (const char* n : {"x4", "x2", "y4", "y2"}) seq.push_back(P::variable(I.ring(), n));
  auto v = e_value_via_criterion(R, rep, 2, 2, GenericityConfig{}, std::optional<std::vector<P>>(seq));
  CHECK(v.value == 1);
  CHECK(v.cert.passed());

  // Random sequences reach the same value.
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    auto w = e_value_via_criterion(R, rep, 2, 2, GenericityConfig{seed, 32003, 16}, std::optional<std::vector<P>>{});
    CHECK(w.value == 1);
  }
  auto full = e_table_full(R, true);
  for (const auto& [ij, val] : full.verified) CHECK(val == full.table.at(ij.first, ij.second));
}

TEST_CASE("a bad user sequence is refused", "[bigraded]") {
  auto I = testing::three_component_example(F(32003));
  BigradedAlgebra<F> R(I);
  auto rep = degrees_report(R);
  std::vector<P> seq;
  for (const char* n : {"x1", "x2", "y4", "y2"}) seq.push_back(P::variable(I.ring(), n));
  CHECK_THROWS_AS(e_value_via_criterion(R, rep, 2, 2, GenericityConfig{}, std::optional<std::vector<P>>(seq)),
                  UsageError);
}

TEST_CASE("split example: zero polynomial and dimensions", "[bigraded]") {
  BigradedAlgebra<F> R(testing::split_example(F(32003), 3));
  auto rep = degrees_report(R);
  CHECK(rep.polynomial_zero);
  CHECK_FALSE(rep.r);
  CHECK(rep.dim_R == 3);
  CHECK(rep.dim_R_mod_r1 == 3);
  CHECK(rep.dim_R_mod_r2 == 3);
}

TEST_CASE("degree identities on fixtures", "[bigraded]") {
  F f(32003);
  for (const auto& I : {testing::bilinear_hypersurface(f), testing::diagonal_minors(f),
                        testing::mixed_complete_intersection(f), testing::three_component_example(f)}) {
    BigradedAlgebra<F> R(I);
    auto rep = degrees_report(R);
    REQUIRE(rep.r);
    CHECK(*rep.r == rep.dim_saturated - 2);
    CHECK(*rep.r1 == rep.dim_saturated_plus_r2 - 1);
    CHECK(*rep.r2 == rep.dim_saturated_plus_r1 - 1);
    auto d2 = degree2_dims(R);
    CHECK(d2.rpp_plus_r1 == d2.r1_sat_plus_r1);
    CHECK(d2.rpp_plus_r2 == d2.r2_sat_plus_r2);
  }
}

TEST_CASE("positivity agrees with the table on every cell", "[bigraded]") {
  F f(32003);
  for (const auto& I : {testing::bilinear_hypersurface(f), testing::diagonal_minors(f),
                        testing::mixed_complete_intersection(f), testing::free_bigraded(f, 2, 3)}) {
    BigradedAlgebra<F> R(I);
    auto rep = degrees_report(R);
    auto table = e_table(polynomial_of(series_of(I)));
    for (int i = 0; i <= *rep.r; ++i) {
      auto pos = e_positivity(R, rep, i, *rep.r - i, GenericityConfig{}, std::optional<std::vector<P>>{});
      CHECK(pos.positive == (table.at(i, *rep.r - i) > 0));
    }
  }
}

TEST_CASE("multiplicity sum", "[bigraded]") {
  F f(32003);
  BigradedAlgebra<F> R(testing::diagonal_minors(f));
  CHECK(sum_check(R) == SumCheck::holds);
  BigradedAlgebra<F> split(testing::split_example(f, 2));
  CHECK(std::string(to_string(sum_check(split))) == "precondition unknown");
}

TEST_CASE("filter-regular elements", "[bigraded]") {
  auto I = testing::bilinear_hypersurface(F(32003));
  BigradedAlgebra<F> R(I);
  auto cert = find_filter_regular(R, {{1, 0}, {0, 1}}, GenericityConfig{9, 32003, 16});
  CHECK(cert.passed());
  CHECK(cert.steps.size() == 2);
  CHECK(is_filter_regular(R, cert.elements()).passed());
  // The same seed gives the same elements.
  auto again = find_filter_regular(R, {{1, 0}, {0, 1}}, GenericityConfig{9, 32003, 16});
  CHECK(again.elements() == cert.elements());
}

TEST_CASE("inputs are validated", "[bigraded]") {
  auto S = make_bigraded_ring<F>("S", {"x"}, {"y"}, F(32003));
  CHECK_THROWS_AS(BigradedAlgebra<F>(Ideal<F>(S, {P::variable(S, "x") + P::variable(S, "y")})), UsageError);
  auto moved = Ideal<F>::zero(make_ring<F>("U", {{"a", {2, 0}}}, F(32003)));
  CHECK_THROWS_AS(BigradedAlgebra<F>(moved), UsageError);
}
