#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "mixmult/errors.hpp"
#include "mixmult/field.hpp"

namespace mixmult {

/// Upper bound on the number of ring variables, including internal tag variables.
inline constexpr std::size_t kMaxVars = 28;

struct Bidegree {
  int d1 = 0;
  int d2 = 0;

  Bidegree operator+(const Bidegree& o) const { return {d1 + o.d1, d2 + o.d2}; }
  bool operator==(const Bidegree&) const = default;
  auto operator<=>(const Bidegree&) const = default;

  /// Componentwise order.
  bool leq(const Bidegree& o) const { return d1 <= o.d1 && d2 <= o.d2; }
};

/// Exponent vector. Unused trailing slots are zero, so comparisons never need the ring size.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::uint32_t degree = 0;

  bool operator==(const Monomial& o) const { return degree == o.degree && exp == o.exp; }

  bool is_one() const { return degree == 0; }

  std::uint16_t operator[](std::size_t i) const { return exp[i]; }

  static Monomial variable(std::size_t i, std::uint16_t power = 1) {
    Monomial m;
    m.exp[i] = power;
    m.degree = power;
    return m;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      std::uint32_t s = std::uint32_t(exp[i]) + o.exp[i];
      if (s > 0xFFFF) throw MathError("exponent overflow");
      r.exp[i] = static_cast<std::uint16_t>(s);
    }
    r.degree = degree + o.degree;
    return r;
  }

  bool divides(const Monomial& o) const {
    if (degree > o.degree) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp[i] > o.exp[i]) return false;
    return true;
  }

  /// o / this; requires divides(o).
  Monomial quotient_of(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = o.exp[i] - exp[i];
    r.degree = o.degree - degree;
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      r.exp[i] = std::max(exp[i], o.exp[i]);
      r.degree += r.exp[i];
    }
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp[i] != 0 && o.exp[i] != 0) return false;
    return true;
  }

  /// Colon of a monomial ideal generator by another monomial: this / gcd(this, o).
  Monomial colon(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      r.exp[i] = exp[i] > o.exp[i] ? exp[i] - o.exp[i] : 0;
      r.degree += r.exp[i];
    }
    return r;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto e : m.exp) h = (h ^ e) * 1099511628211ull;
    return h;
  }
};

/// Degree reverse lexicographic order, optionally preceded by the degree of an
/// elimination block made of the first `elim_block` variables.
struct MonomialOrder {
  std::size_t elim_block = 0;

  bool operator==(const MonomialOrder&) const = default;

  /// Positive when a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    if (elim_block > 0) {
      unsigned da = 0, db = 0;
      for (std::size_t i = 0; i < elim_block; ++i) {
        da += a.exp[i];
        db += b.exp[i];
      }
      if (da != db) return da > db ? 1 : -1;
    }
    if (a.degree != b.degree) return a.degree > b.degree ? 1 : -1;
    for (std::size_t i = kMaxVars; i-- > 0;) {
      if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
    }
    return 0;
  }
};

struct Variable {
  std::string name;
  Bidegree degree;
};

/// Polynomial ring over a field whose variables carry bidegrees.
template <class Field>
class Ring {
 public:
  Ring(std::string name, std::vector<Variable> vars, Field field, MonomialOrder order = {})
      : name_(std::move(name)), vars_(std::move(vars)), field_(std::move(field)), order_(order) {
    if (vars_.size() > kMaxVars) throw UsageError("too many variables (limit " + std::to_string(kMaxVars) + ")");
    std::set<std::string> seen;
    for (const auto& v : vars_) {
      if (v.name.empty()) throw UsageError("empty variable name");
      if (!seen.insert(v.name).second) throw UsageError("duplicate variable name '" + v.name + "'");
      if (v.degree.d1 < 0 || v.degree.d2 < 0) throw UsageError("negative variable degree");
    }
  }

  const std::string& name() const { return name_; }
  const Field& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t size() const { return vars_.size(); }
  const std::vector<Variable>& variables() const { return vars_; }
  const Variable& variable(std::size_t i) const { return vars_[i]; }

  std::ptrdiff_t index_of(const std::string& var) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i].name == var) return static_cast<std::ptrdiff_t>(i);
    return -1;
  }

  Bidegree bidegree(const Monomial& m) const {
    Bidegree d;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      d.d1 += m.exp[i] * vars_[i].degree.d1;
      d.d2 += m.exp[i] * vars_[i].degree.d2;
    }
    return d;
  }

  /// Every variable has bidegree (1,0) or (0,1).
  bool is_standard_bigraded() const {
    for (const auto& v : vars_)
      if (!(v.degree == Bidegree{1, 0} || v.degree == Bidegree{0, 1})) return false;
    return true;
  }

  /// Every variable has bidegree (d,0) with d >= 1.
  bool is_single_graded() const {
    for (const auto& v : vars_)
      if (v.degree.d2 != 0 || v.degree.d1 < 1) return false;
    return true;
  }

  bool is_standard_graded() const {
    for (const auto& v : vars_)
      if (!(v.degree == Bidegree{1, 0})) return false;
    return true;
  }

  /// Indices of the variables of the given bidegree.
  std::vector<std::size_t> variables_of_degree(Bidegree d) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i].degree == d) out.push_back(i);
    return out;
  }

 private:
  std::string name_;
  std::vector<Variable> vars_;
  Field field_;
  MonomialOrder order_;
};

template <class Field>
using RingPtr = std::shared_ptr<const Ring<Field>>;

template <class Field>
RingPtr<Field> make_ring(std::string name, std::vector<Variable> vars, Field field, MonomialOrder order = {}) {
  return std::make_shared<const Ring<Field>>(std::move(name), std::move(vars), std::move(field), order);
}

/// Ring with every variable of degree (1,0), named by the given list.
template <class Field>
RingPtr<Field> make_graded_ring(std::string name, const std::vector<std::string>& names, Field field) {
  std::vector<Variable> vars;
  for (const auto& n : names) vars.push_back({n, {1, 0}});
  return make_ring(std::move(name), std::move(vars), std::move(field));
}

/// Standard bigraded ring: `xs` in degree (1,0), `ys` in degree (0,1).
template <class Field>
RingPtr<Field> make_bigraded_ring(std::string name, const std::vector<std::string>& xs,
                                  const std::vector<std::string>& ys, Field field) {
  std::vector<Variable> vars;
  for (const auto& n : xs) vars.push_back({n, {1, 0}});
  for (const auto& n : ys) vars.push_back({n, {0, 1}});
  return make_ring(std::move(name), std::move(vars), std::move(field));
}

}  // namespace mixmult
