#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "monoclose/error.hpp"

namespace monoclose {

using Exponent = boost::multiprecision::cpp_int;

/// Exponent of one monomial: a fixed-length tuple of non-negative integers.
class ExponentVector {
public:
  ExponentVector() = default;

  explicit ExponentVector(std::size_t n) : coords_(n) {}

  explicit ExponentVector(std::vector<Exponent> coords) : coords_(std::move(coords)) {
    for (const auto& c : coords_)
      if (c < 0)
        throw DomainError("negative exponent " + c.str());
  }

  ExponentVector(std::initializer_list<long long> coords) {
    coords_.reserve(coords.size());
    for (long long c : coords) {
      if (c < 0)
        throw DomainError("negative exponent " + std::to_string(c));
      coords_.emplace_back(c);
    }
  }

  std::size_t size() const noexcept { return coords_.size(); }
  const Exponent& operator[](std::size_t i) const { return coords_[i]; }

  /// Coordinates may only be set to non-negative values.
  void set(std::size_t i, Exponent value) {
    if (value < 0)
      throw DomainError("negative exponent " + value.str());
    coords_[i] = std::move(value);
  }

  const std::vector<Exponent>& coords() const noexcept { return coords_; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Exponent& c) { return c == 0; });
  }

  Exponent degree() const {
    Exponent d = 0;
    for (const auto& c : coords_)
      d += c;
    return d;
  }

  /// Number of non-zero coordinates.
  std::size_t support_size() const {
    return static_cast<std::size_t>(
        std::count_if(coords_.begin(), coords_.end(), [](const Exponent& c) { return c != 0; }));
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i)
        s += ",";
      s += coords_[i].str();
    }
    return s + ")";
  }

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.coords_ == b.coords_;
  }
  // lexicographic on coordinates; this is the canonical generator order
  friend bool operator<(const ExponentVector& a, const ExponentVector& b) {
    return a.coords_ < b.coords_;
  }

private:
  std::vector<Exponent> coords_;
};

inline void check_same_length(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size())
    throw DimensionError("exponent vectors of lengths " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()));
}

/// True iff x^a divides x^b, i.e. a <= b componentwise.
inline bool divides(const ExponentVector& a, const ExponentVector& b) {
  check_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

inline ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  check_same_length(a, b);
  std::vector<Exponent> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = std::max(a[i], b[i]);
  return ExponentVector(std::move(out));
}

inline ExponentVector gcd(const ExponentVector& a, const ExponentVector& b) {
  check_same_length(a, b);
  std::vector<Exponent> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = std::min(a[i], b[i]);
  return ExponentVector(std::move(out));
}

inline ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  check_same_length(a, b);
  std::vector<Exponent> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] + b[i];
  return ExponentVector(std::move(out));
}

/// a - b; requires b to divide a.
inline ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
  check_same_length(a, b);
  std::vector<Exponent> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i])
      throw DomainError("exponent subtraction would go negative");
    out[i] = a[i] - b[i];
  }
  return ExponentVector(std::move(out));
}

inline ExponentVector scaled(const ExponentVector& a, const Exponent& k) {
  std::vector<Exponent> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] * k;
  return ExponentVector(std::move(out));
}

/// The 0/1 support indicator of a.
inline ExponentVector support(const ExponentVector& a) {
  std::vector<Exponent> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] != 0 ? 1 : 0;
  return ExponentVector(std::move(out));
}

}  // namespace monoclose
