#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "monoclose/error.hpp"
#include "monoclose/exponent.hpp"
#include "monoclose/ideal.hpp"
#include "monoclose/simplex.hpp"

namespace monoclose {

/// a = Σ weights[i]·gens[i] + slack, weights a probability vector over the
/// generators of the ideal (in canonical order), slack >= 0.
struct InsideCertificate {
  std::vector<Rational> weights;
  std::vector<Rational> slack;
};

/// functional >= 0 and functional·a < min over generators g of functional·g.
struct OutsideCertificate {
  std::vector<Rational> functional;
};

using MembershipCertificate = std::variant<InsideCertificate, OutsideCertificate>;

inline bool is_inside(const MembershipCertificate& cert) {
  return std::holds_alternative<InsideCertificate>(cert);
}

namespace detail {

inline Rational dot(const std::vector<Rational>& w, const ExponentVector& v) {
  Rational acc = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    acc += w[i] * Rational(v[i]);
  return acc;
}

/// Scales a non-zero, non-negative rational vector to a primitive integer one.
inline std::vector<Rational> primitive_integer(std::vector<Rational> v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  Exponent den = 1;
  for (const auto& x : v)
    den = boost::multiprecision::lcm(den, Exponent(denominator(x)));
  Exponent g = 0;
  for (auto& x : v) {
    x *= den;
    g = boost::multiprecision::gcd(g, Exponent(numerator(x)));
  }
  if (g > 1)
    for (auto& x : v)
      x /= g;
  return v;
}

/// Advances `cursor` to the next point of [0, box] in row-major order.
inline bool next_in_box(std::vector<Exponent>& cursor, const ExponentVector& box) {
  for (std::size_t j = cursor.size(); j-- > 0;) {
    if (cursor[j] < box[j]) {
      ++cursor[j];
      return true;
    }
    cursor[j] = 0;
  }
  return false;
}

}  // namespace detail

/// Pure arithmetic re-check of a certificate. Never throws; anything
/// malformed is simply rejected.
inline bool verify_certificate(const MonomialIdeal& ideal, const ExponentVector& a,
                               const MembershipCertificate& cert) {
  const std::size_t n = ideal.nvars();
  if (a.size() != n || ideal.is_zero())
    return false;
  if (const auto* in = std::get_if<InsideCertificate>(&cert)) {
    if (in->weights.size() != ideal.size() || in->slack.size() != n)
      return false;
    Rational total = 0;
    for (const auto& w : in->weights) {
      if (w < 0)
        return false;
      total += w;
    }
    if (total != 1)
      return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (in->slack[j] < 0)
        return false;
      Rational coord = in->slack[j];
      for (std::size_t i = 0; i < ideal.size(); ++i)
        coord += in->weights[i] * Rational(ideal.gens()[i][j]);
      if (coord != Rational(a[j]))
        return false;
    }
    return true;
  }
  const auto& out = std::get<OutsideCertificate>(cert);
  if (out.functional.size() != n)
    return false;
  for (const auto& w : out.functional)
    if (w < 0)
      return false;
  const Rational at_point = detail::dot(out.functional, a);
  for (const auto& g : ideal.gens())
    if (!(at_point < detail::dot(out.functional, g)))
      return false;
  return true;
}

/// Decides whether a lies in the Newton polyhedron conv(gens) + R^n_{>=0}
/// and returns a certificate either way.
inline MembershipCertificate np_membership(const MonomialIdeal& ideal, const ExponentVector& a) {
  if (ideal.is_zero())
    throw DomainError("np_membership: zero ideal");
  const std::size_t n = ideal.nvars();
  if (a.size() != n)
    throw DimensionError("point " + a.str() + " does not live in " + std::to_string(n) +
                         " variables");
  const auto& gens = ideal.gens();
  const std::size_t m = gens.size();

  for (std::size_t i = 0; i < m; ++i)
    if (divides(gens[i], a)) {
      InsideCertificate in;
      in.weights.assign(m, Rational(0));
      in.weights[i] = 1;
      for (std::size_t j = 0; j < n; ++j)
        in.slack.emplace_back(a[j] - gens[i][j]);
      return in;
    }

  // columns: weights λ_1..λ_m, then slacks s_1..s_n
  // rows:    Σ λ_i g_ij + s_j = a_j  (j < n),   Σ λ_i = 1
  std::vector<std::vector<Rational>> rows(n + 1, std::vector<Rational>(m + n));
  std::vector<Rational> rhs(n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i)
      rows[j][i] = Rational(gens[i][j]);
    rows[j][m + j] = 1;
    rhs[j] = Rational(a[j]);
  }
  for (std::size_t i = 0; i < m; ++i)
    rows[n][i] = 1;
  rhs[n] = 1;

  FeasibilityResult lp = solve_feasibility(rows, rhs);
  MembershipCertificate cert;
  if (lp.feasible) {
    InsideCertificate in;
    in.weights.assign(lp.primal.begin(), lp.primal.begin() + static_cast<std::ptrdiff_t>(m));
    in.slack.assign(lp.primal.begin() + static_cast<std::ptrdiff_t>(m), lp.primal.end());
    cert = std::move(in);
  } else {
    // slack columns force y_j <= 0 on coordinate rows; w = -y
    std::vector<Rational> w(n);
    for (std::size_t j = 0; j < n; ++j)
      w[j] = lp.farkas[j] < 0 ? Rational(-lp.farkas[j]) : Rational(0);
    cert = OutsideCertificate{detail::primitive_integer(std::move(w))};
  }
  if (!verify_certificate(ideal, a, cert))
    throw Error("np_membership produced a certificate that does not verify at " + a.str());
  return cert;
}

inline bool in_newton_polyhedron(const MonomialIdeal& ideal, const ExponentVector& a) {
  return is_inside(np_membership(ideal, a));
}

/// Componentwise maximum of the generators. Minimal generators of the
/// integral closure never leave the box [0, bounding_box].
inline ExponentVector bounding_box(const MonomialIdeal& ideal) {
  if (ideal.is_zero())
    throw DomainError("bounding_box: zero ideal");
  ExponentVector box(ideal.nvars());
  for (const auto& g : ideal.gens())
    box = lcm(box, g);
  return box;
}

inline constexpr std::uint64_t kDefaultBoxBudget = 10'000'000;

/// Minimal generators of the integral closure: lattice points of the
/// bounding box inside the Newton polyhedron, minimalized.
inline MonomialIdeal closure_generators(const MonomialIdeal& ideal,
                                        std::uint64_t box_budget = kDefaultBoxBudget) {
  require_proper_nonzero(ideal, "closure_generators");
  const ExponentVector box = bounding_box(ideal);
  const std::size_t n = ideal.nvars();

  Exponent points = 1;
  for (const auto& b : box)
    points *= b + 1;
  if (points > box_budget)
    throw BudgetExceeded("closure box has " + points.str() + " lattice points, budget is " +
                         std::to_string(box_budget));

  // Row-major order is lexicographic, and every divisor of a point is
  // lexicographically no larger, so a point reaching the membership test has
  // all its proper divisors already classified; survivors never need removal.
  std::vector<ExponentVector> retained;
  std::vector<Exponent> cursor(n, 0);
  for (;;) {
    ExponentVector point(cursor);
    bool dominated = false;
    for (const auto& r : retained)
      if (divides(r, point)) {
        dominated = true;
        break;
      }
    if (!dominated && in_newton_polyhedron(ideal, point))
      retained.push_back(std::move(point));

    if (!detail::next_in_box(cursor, box))
      break;
  }
  return ideal.with_gens(std::move(retained));
}

inline bool is_integrally_closed(const MonomialIdeal& ideal,
                                 std::uint64_t box_budget = kDefaultBoxBudget) {
  return closure_generators(ideal, box_budget) == ideal;
}

namespace detail {

// Is there a multiset of `remaining` generators with index >= i whose sum,
// added to `partial`, stays below `target`?
inline bool fits_multiset(const std::vector<ExponentVector>& gens,
                          const std::vector<ExponentVector>& tail_min, std::size_t i,
                          std::size_t remaining, std::vector<Exponent>& partial,
                          const ExponentVector& target) {
  if (remaining == 0)
    return true;
  const std::size_t n = target.size();
  for (std::size_t j = 0; j < n; ++j)
    if (partial[j] + tail_min[i][j] * remaining > target[j])
      return false;
  if (i + 1 == gens.size()) {
    for (std::size_t j = 0; j < n; ++j)
      if (partial[j] + gens[i][j] * remaining > target[j])
        return false;
    return true;
  }
  for (std::size_t c = remaining + 1; c-- > 0;) {
    bool ok = true;
    for (std::size_t j = 0; j < n; ++j) {
      partial[j] += gens[i][j] * c;
      ok = ok && partial[j] <= target[j];
    }
    const bool found = ok && fits_multiset(gens, tail_min, i + 1, remaining - c, partial, target);
    for (std::size_t j = 0; j < n; ++j)
      partial[j] -= gens[i][j] * c;
    if (found)
      return true;
  }
  return false;
}

}  // namespace detail

/// Smallest k <= k_max with (x^a)^k in I^k, i.e. k·a dominating a sum of k
/// generators (with repetition). Independent one-sided closure oracle.
inline std::optional<std::size_t> power_witness(const MonomialIdeal& ideal, const ExponentVector& a,
                                                std::size_t k_max) {
  if (a.size() != ideal.nvars())
    throw DimensionError("point " + a.str() + " does not live in " +
                         std::to_string(ideal.nvars()) + " variables");
  if (ideal.is_zero())
    return std::nullopt;
  const auto& gens = ideal.gens();
  std::vector<ExponentVector> tail_min(gens.size());
  tail_min.back() = gens.back();
  for (std::size_t i = gens.size() - 1; i-- > 0;)
    tail_min[i] = monoclose::gcd(gens[i], tail_min[i + 1]);

  for (std::size_t k = 1; k <= k_max; ++k) {
    std::vector<Exponent> partial(a.size(), 0);
    if (detail::fits_multiset(gens, tail_min, 0, k, partial, scaled(a, k)))
      return k;
  }
  return std::nullopt;
}

inline constexpr std::size_t kPowerWitnessCap = 64;

/// lcm of the weight denominators of an Inside certificate, capped; the cap
/// alone for Outside certificates.
inline std::size_t default_power_k_max(const MembershipCertificate& cert,
                                       std::size_t cap = kPowerWitnessCap) {
  const auto* in = std::get_if<InsideCertificate>(&cert);
  if (!in)
    return cap;
  Exponent den = 1;
  for (const auto& w : in->weights)
    den = boost::multiprecision::lcm(den, Exponent(boost::multiprecision::denominator(w)));
  return den > cap ? cap : static_cast<std::size_t>(den);
}

}  // namespace monoclose
