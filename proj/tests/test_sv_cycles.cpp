#include "catch_amalgamated.hpp"

#include "mixmult/testing/fixtures.hpp"

using namespace mixmult;
using F = PrimeField;

namespace {

Integer total(const SVReport& r) {
  Integer s = 0;
  for (const auto& d : r.degs) {
    CHECK(d >= 0);
    s += d;
  }
  return s;
}

}  // namespace

TEST_CASE("two lines meet in a point", "[sv]") {
  auto c = testing::plane_curves(F(32003));
  JoinSetting<F> js(c.line1, c.line2);
  auto rep = sv_degrees(js, GenericityConfig{});
  CHECK(total(rep) == 1);
  CHECK(rep.sum() == 1);
  auto bc = bezout_check(js, rep, true);
  CHECK(bc.telescopes);
  CHECK(bc.matches_product.value());
}

TEST_CASE("two conics meet in four points", "[sv]") {
  auto c = testing::plane_curves(F(32003));
  JoinSetting<F> js(c.conic1, c.conic2);
  auto a = sv_degrees(js, GenericityConfig{0, 32003, 16});
  auto b = sv_degrees(js, GenericityConfig{12345, 32003, 16});
  CHECK(total(a) == 4);
  CHECK(a.degs == b.degs);
  CHECK(bezout_check(js, a, true).matches_product.value());
}

TEST_CASE("a line with itself", "[sv]") {
  auto c = testing::plane_curves(F(32003));
  JoinSetting<F> js(c.line1, c.line1);
  auto rep = sv_degrees(js, GenericityConfig{});
  // Improper intersection: the line itself contributes in dimension 1.
  CHECK(rep.degs.at(1) == 1);
  CHECK(bezout_check(js, rep).telescopes);
}

TEST_CASE("line and conic", "[sv]") {
  auto c = testing::plane_curves(F(32003));
  JoinSetting<F> js(c.line1, c.conic1);
  CHECK(total(sv_degrees(js, GenericityConfig{3, 32003, 16})) == 2);
}

TEST_CASE("empty schemes are refused", "[sv]") {
  auto c = testing::plane_curves(F(32003));
  CHECK_THROWS_AS(JoinSetting<F>(Ideal<F>::maximal(c.ring), c.line1), UsageError);
}
