#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mixmult/ideal_mixed.hpp"

namespace mixmult {

/// Ruled join of X, Y ⊆ P^n: A = k[x,y]/(I_X(x), I_Y(y)) with the diagonal
/// ideal J = (x_i − y_i).
template <class Field>
class JoinSetting {
 public:
  JoinSetting(const Ideal<Field>& ix, const Ideal<Field>& iy) : ix_(ix), iy_(iy) {
    const auto& base = ix.ring();
    if (iy.ring() != base) throw UsageError("X and Y must live in the same projective space");
    if (!base->is_standard_graded()) throw UsageError("ring " + base->name() + " is not standard graded");
    if (!generators_homogeneous(ix) || !generators_homogeneous(iy)) throw UsageError("X and Y need homogeneous ideals");
    if (saturation(ix, Ideal<Field>::maximal(base)).is_unit() || saturation(iy, Ideal<Field>::maximal(base)).is_unit())
      throw UsageError("X and Y must be nonempty");
    const std::size_t k = base->size();
    if (2 * k + k + 1 > kMaxVars) throw UsageError("projective space too large for the join");
    std::vector<Variable> vars;
    for (const auto& v : base->variables()) vars.push_back({v.name + "_1", {1, 0}});
    for (const auto& v : base->variables()) vars.push_back({v.name + "_2", {1, 0}});
    join_ = make_ring(base->name() + "_join", std::move(vars), base->field());
    std::vector<Polynomial<Field>> a, j;
    for (const auto& f : ix.generators()) a.push_back(shift_into(f, join_, 0));
    for (const auto& f : iy.generators()) a.push_back(shift_into(f, join_, k));
    for (std::size_t i = 0; i < k; ++i)
      j.push_back(Polynomial<Field>::variable(join_, i) - Polynomial<Field>::variable(join_, k + i));
    setting_.emplace(Ideal<Field>(join_, std::move(a)), Ideal<Field>(join_, std::move(j)));
  }

  int n() const { return static_cast<int>(ix_.ring()->size()) - 1; }
  const Ideal<Field>& ix() const { return ix_; }
  const Ideal<Field>& iy() const { return iy_; }
  const GradedSetting<Field>& setting() const { return *setting_; }

 private:
  Ideal<Field> ix_, iy_;
  RingPtr<Field> join_;
  std::optional<GradedSetting<Field>> setting_;
};

struct SVReport {
  std::vector<Integer> degs;  // deg v_i, i = 1..n+1
  std::vector<Integer> e;     // e_i(m|J), i = 0..n+1
  int spread = 0;
  std::uint64_t seed = 0;
  bool retried = false;

  Integer sum() const {
    Integer s = 0;
    for (const auto& d : degs) s += d;
    return s;
  }
};

/// deg v_i = e_{i−1}(m|J) − e_i(m|J) on the ruled join.
template <class Field>
SVReport sv_degrees(const JoinSetting<Field>& js, const GenericityConfig& cfg) {
  const std::size_t len = static_cast<std::size_t>(js.n()) + 1;
  auto attempt = [&](std::uint64_t seed, SVReport& out) {
    GenericityConfig c = cfg;
    c.seed = seed;
    auto rep = mixed_multiplicities(js.setting(), c).second;
    out = SVReport{};
    out.seed = seed;
    out.spread = rep.spread;
    out.e = rep.e;
    out.e.resize(len + 1, Integer(0));
    for (std::size_t i = 1; i <= len; ++i) {
      out.degs.push_back(out.e[i - 1] - out.e[i]);
      if (out.degs.back() < 0) return false;
    }
    return true;
  };
  SVReport out;
  if (attempt(cfg.seed, out)) return out;
  if (attempt(mix_seed(cfg.seed, "sv-retry"), out)) {
    out.retried = true;
    return out;
  }
  throw MathError("negative Stueckrad-Vogel degree after a retry with a fresh seed");
}

struct BezoutCheck {
  bool telescopes = false;                 // Σ deg v_i = e_0(m|J)
  std::optional<bool> matches_product;     // Σ deg v_i = deg X · deg Y, for proper intersections
  Integer deg_x, deg_y;
};

/// `proper` is an instance label: X and Y meet properly.
template <class Field>
BezoutCheck bezout_check(const JoinSetting<Field>& js, const SVReport& rep, bool proper = false) {
  BezoutCheck out;
  out.telescopes = !rep.e.empty() && rep.sum() == rep.e.front();
  out.deg_x = total_multiplicity(js.ix()).degree;
  out.deg_y = total_multiplicity(js.iy()).degree;
  if (proper) out.matches_product = rep.sum() == out.deg_x * out.deg_y;
  return out;
}

}  // namespace mixmult
