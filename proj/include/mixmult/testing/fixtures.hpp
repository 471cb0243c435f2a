#pragma once

// Named instances shared by the unit tests, the acceptance run and selftest.

#include <string>
#include <vector>

#include "mixmult/sv_cycles.hpp"

namespace mixmult::testing {

template <class Field>
Polynomial<Field> var(const RingPtr<Field>& r, const std::string& name) {
  return Polynomial<Field>::variable(r, name);
}

template <class Field>
std::vector<std::string> names(const std::string& stem, int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

/// K[x1..x4, y1..y4]/((x1,y1) ∩ (x1,x2,x3) ∩ (y1,y2,y3)).
template <class Field>
Ideal<Field> three_component_example(const Field& F) {
  auto S = make_bigraded_ring<Field>("S", names<Field>("x", 1, 4), names<Field>("y", 1, 4), F);
  auto v = [&](const char* n) { return var(S, n); };
  Ideal<Field> a(S, {v("x1"), v("y1")}), b(S, {v("x1"), v("x2"), v("x3")}), c(S, {v("y1"), v("y2"), v("y3")});
  return ideal_intersection(std::vector{a, b, c});
}

/// K[x1..xn, y1..yn]/((x) ∩ (y)); R_++ vanishes.
template <class Field>
Ideal<Field> split_example(const Field& F, int n) {
  auto S = make_bigraded_ring<Field>("S", names<Field>("x", 1, n), names<Field>("y", 1, n), F);
  std::vector<std::size_t> xs, ys;
  for (int i = 0; i < n; ++i) {
    xs.push_back(static_cast<std::size_t>(i));
    ys.push_back(static_cast<std::size_t>(n + i));
  }
  return ideal_intersection(Ideal<Field>::of_variables(S, xs), Ideal<Field>::of_variables(S, ys));
}

/// k[x_1..x_a; y_1..y_b] itself.
template <class Field>
Ideal<Field> free_bigraded(const Field& F, int a, int b) {
  auto S = make_bigraded_ring<Field>("S", names<Field>("x", 1, a), names<Field>("y", 1, b), F);
  return Ideal<Field>::zero(S);
}

/// Generic (1,1) hypersurface in k[x1..x3; y1..y3]: a domain.
template <class Field>
Ideal<Field> bilinear_hypersurface(const Field& F) {
  auto S = make_bigraded_ring<Field>("S", names<Field>("x", 1, 3), names<Field>("y", 1, 3), F);
  auto v = [&](const char* n) { return var(S, n); };
  auto c = [&](unsigned k) { return Polynomial<Field>::constant(S, F.from_uint(k)); };
  return Ideal<Field>(S, {v("x1") * v("y1") + c(2) * v("x2") * v("y2") + c(3) * v("x3") * v("y3") + v("x1") * v("y2")});
}

/// 2x2 minors of the 2x3 matrix with rows x, y: the diagonal of P2 x P2 (Cohen-Macaulay domain).
template <class Field>
Ideal<Field> diagonal_minors(const Field& F) {
  auto S = make_bigraded_ring<Field>("S", names<Field>("x", 1, 3), names<Field>("y", 1, 3), F);
  auto v = [&](const std::string& n) { return var(S, n); };
  std::vector<Polynomial<Field>> g;
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      auto si = std::to_string(i), sj = std::to_string(j);
      g.push_back(v("x" + si) * v("y" + sj) - v("x" + sj) * v("y" + si));
    }
  return Ideal<Field>(S, std::move(g));
}

/// Complete intersection of bidegrees (1,0), (0,1), (1,1) in k[x1..x3; y1..y3].
template <class Field>
Ideal<Field> mixed_complete_intersection(const Field& F) {
  auto S = make_bigraded_ring<Field>("S", names<Field>("x", 1, 3), names<Field>("y", 1, 3), F);
  auto v = [&](const char* n) { return var(S, n); };
  return Ideal<Field>(S, {v("x1") - v("x2"), v("y3"), v("x1") * v("y1") + v("x3") * v("y2")});
}

/// A = k[x1..x4]/((x1) ∩ (x2,x3)), J = (x1, x4).
template <class Field>
GradedSetting<Field> embedded_component_setting(const Field& F) {
  auto A = make_graded_ring<Field>("A", names<Field>("x", 1, 4), F);
  auto v = [&](const char* n) { return var(A, n); };
  auto ia = ideal_intersection(Ideal<Field>(A, {v("x1")}), Ideal<Field>(A, {v("x2"), v("x3")}));
  return GradedSetting<Field>(ia, Ideal<Field>(A, {v("x1"), v("x4")}));
}

/// J = ideal of the twisted cubic in k[x0..x3].
template <class Field>
Ideal<Field> twisted_cubic(const Field& F) {
  auto A = make_graded_ring<Field>("A", names<Field>("x", 0, 3), F);
  auto v = [&](const char* n) { return var(A, n); };
  return Ideal<Field>(A, {v("x0") * v("x2") - v("x1") * v("x1"), v("x0") * v("x3") - v("x1") * v("x2"),
                          v("x1") * v("x3") - v("x2") * v("x2")});
}

/// J = the three coordinate points of P2.
template <class Field>
Ideal<Field> three_points(const Field& F) {
  auto A = make_graded_ring<Field>("A", {"x", "y", "z"}, F);
  auto v = [&](const char* n) { return var(A, n); };
  return Ideal<Field>(A, {v("x") * v("y"), v("x") * v("z"), v("y") * v("z")});
}

template <class Field>
GradedSetting<Field> in_polynomial_ring(const Ideal<Field>& j) {
  return GradedSetting<Field>(Ideal<Field>::zero(j.ring()), j);
}

/// Pairs (J, J') with J' a reduction of J.
template <class Field>
std::vector<std::pair<Ideal<Field>, Ideal<Field>>> reduction_pairs(const Field& F, std::uint64_t seed) {
  std::vector<std::pair<Ideal<Field>, Ideal<Field>>> out;
  {
    auto A = make_graded_ring<Field>("A", {"x", "y"}, F);
    auto x = var(A, "x"), y = var(A, "y");
    out.push_back({ideal_power(Ideal<Field>::maximal(A), 2), Ideal<Field>(A, {x * x, y * y})});
  }
  {
    auto j = twisted_cubic(F);
    Rng rng(mix_seed(seed, "reduction-pairs"));
    std::vector<Polynomial<Field>> combos;
    for (int k = 0; k < 3; ++k) combos.push_back(random_element_of_degree(j, 2, rng, kDefaultPrime));
    out.push_back({j, Ideal<Field>(j.ring(), std::move(combos))});
  }
  {
    auto A = make_graded_ring<Field>("A", {"x", "y", "z"}, F);
    auto x = var(A, "x"), y = var(A, "y"), z = var(A, "z");
    out.push_back({ideal_power(Ideal<Field>::maximal(A), 3), Ideal<Field>(A, {x.pow(3), y.pow(3), z.pow(3)})});
  }
  return out;
}

/// Plane curves for the ruled-join fixtures, all in one copy of P2.
template <class Field>
struct PlaneCurves {
  RingPtr<Field> ring;
  Ideal<Field> line1, line2, conic1, conic2;
};

template <class Field>
PlaneCurves<Field> plane_curves(const Field& F) {
  auto P = make_graded_ring<Field>("P2", {"x", "y", "z"}, F);
  auto x = var(P, "x"), y = var(P, "y"), z = var(P, "z");
  auto c = [&](unsigned k) { return Polynomial<Field>::constant(P, F.from_uint(k)); };
  return {P,
          Ideal<Field>(P, {x}),
          Ideal<Field>(P, {y}),
          Ideal<Field>(P, {x * x + y * y - z * z}),
          Ideal<Field>(P, {x * y + c(3) * y * z + c(5) * z * z - x * x})};
}

}  // namespace mixmult::testing
