#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "monoclose/error.hpp"
#include "monoclose/exponent.hpp"

namespace monoclose {

inline std::vector<std::string> default_variable_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i)
    names.push_back("x" + std::to_string(i));
  return names;
}

/// The unique antichain generating the same ideal as `gens`, sorted
/// lexicographically.
inline std::vector<ExponentVector> minimalize(std::vector<ExponentVector> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // a proper divisor of g is lexicographically smaller than g, so it suffices
  // to test each candidate against the survivors before it
  std::vector<ExponentVector> out;
  out.reserve(gens.size());
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& kept : out)
      if (divides(kept, g)) {
        redundant = true;
        break;
      }
    if (!redundant)
      out.push_back(std::move(g));
  }
  return out;
}

/// A monomial ideal in a fixed number of variables, always held by its
/// canonical minimal generating set. Variable names are carried along as
/// metadata; all arithmetic is positional.
class MonomialIdeal {
public:
  MonomialIdeal() = default;

  MonomialIdeal(std::vector<std::string> vars, std::vector<ExponentVector> gens)
      : vars_(std::move(vars)) {
    for (const auto& g : gens)
      if (g.size() != vars_.size())
        throw DimensionError("generator " + g.str() + " does not live in " +
                             std::to_string(vars_.size()) + " variables");
    gens_ = minimalize(std::move(gens));
  }

  MonomialIdeal(std::size_t nvars, std::vector<ExponentVector> gens)
      : MonomialIdeal(default_variable_names(nvars), std::move(gens)) {}

  static MonomialIdeal zero(std::size_t nvars) { return MonomialIdeal(nvars, {}); }
  static MonomialIdeal unit(std::size_t nvars) { return MonomialIdeal(nvars, {ExponentVector(nvars)}); }

  std::size_t nvars() const noexcept { return vars_.size(); }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const std::vector<ExponentVector>& gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_zero(); }
  bool is_proper_nonzero() const { return !is_zero() && !is_unit(); }

  MonomialIdeal with_gens(std::vector<ExponentVector> gens) const {
    return MonomialIdeal(vars_, std::move(gens));
  }

  /// Ideal equality: same ambient dimension and same canonical generators.
  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.nvars() == b.nvars() && a.gens_ == b.gens_;
  }

private:
  std::vector<std::string> vars_;
  std::vector<ExponentVector> gens_;
};

inline bool ideal_equals(const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; }

inline void check_same_ambient(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars())
    throw DimensionError("ideals live in " + std::to_string(a.nvars()) + " and " +
                         std::to_string(b.nvars()) + " variables");
}

inline void require_proper_nonzero(const MonomialIdeal& ideal, const char* op) {
  if (ideal.is_zero())
    throw DomainError(std::string(op) + ": zero ideal");
  if (ideal.is_unit())
    throw DomainError(std::string(op) + ": unit ideal");
}

inline bool contains(const MonomialIdeal& ideal, const ExponentVector& m) {
  if (m.size() != ideal.nvars())
    throw DimensionError("monomial " + m.str() + " does not live in " +
                         std::to_string(ideal.nvars()) + " variables");
  return std::any_of(ideal.gens().begin(), ideal.gens().end(),
                     [&](const ExponentVector& g) { return divides(g, m); });
}

/// I ⊆ J.
inline bool is_subset(const MonomialIdeal& i, const MonomialIdeal& j) {
  check_same_ambient(i, j);
  return std::all_of(i.gens().begin(), i.gens().end(),
                     [&](const ExponentVector& g) { return contains(j, g); });
}

inline MonomialIdeal sum(const MonomialIdeal& i, const MonomialIdeal& j) {
  check_same_ambient(i, j);
  std::vector<ExponentVector> gens = i.gens();
  gens.insert(gens.end(), j.gens().begin(), j.gens().end());
  return i.with_gens(std::move(gens));
}

inline MonomialIdeal intersect(const MonomialIdeal& i, const MonomialIdeal& j) {
  check_same_ambient(i, j);
  std::vector<ExponentVector> gens;
  gens.reserve(i.size() * j.size());
  for (const auto& a : i.gens())
    for (const auto& b : j.gens())
      gens.push_back(lcm(a, b));
  return i.with_gens(std::move(gens));
}

/// Intersection of a non-empty list of ideals.
inline MonomialIdeal intersect_all(const std::vector<MonomialIdeal>& ideals) {
  if (ideals.empty())
    throw DomainError("intersection of an empty family");
  MonomialIdeal acc = ideals.front();
  for (std::size_t k = 1; k < ideals.size(); ++k)
    acc = intersect(acc, ideals[k]);
  return acc;
}

/// (I : x^m).
inline MonomialIdeal colon_mon(const MonomialIdeal& ideal, const ExponentVector& m) {
  if (m.size() != ideal.nvars())
    throw DimensionError("monomial " + m.str() + " does not live in " +
                         std::to_string(ideal.nvars()) + " variables");
  std::vector<ExponentVector> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.gens())
    gens.push_back(g - gcd(g, m));
  return ideal.with_gens(std::move(gens));
}

/// (I : J) as the intersection of (I : m) over the generators m of J.
inline MonomialIdeal colon_ideal(const MonomialIdeal& i, const MonomialIdeal& j) {
  check_same_ambient(i, j);
  if (j.is_zero())
    throw DomainError("colon by the zero ideal");
  MonomialIdeal acc = colon_mon(i, j.gens().front());
  for (std::size_t k = 1; k < j.size(); ++k)
    acc = intersect(acc, colon_mon(i, j.gens()[k]));
  return acc;
}

inline MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<ExponentVector> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.gens())
    gens.push_back(support(g));
  return ideal.with_gens(std::move(gens));
}

}  // namespace monoclose
