#pragma once

// Brute-force helpers shared by the test suites. They deliberately avoid the
// library's ideal algorithms and work on plain integer vectors.

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <functional>
#include <vector>

#include "monoclose/exponent.hpp"
#include "monoclose/ideal.hpp"

namespace monoclose {

// readable gtest failure messages
inline void PrintTo(const ExponentVector& v, std::ostream* os) { *os << v.str(); }

}  // namespace monoclose

namespace monoclose::testing {

using Point = std::vector<long long>;

inline Point to_point(const ExponentVector& v) {
  Point p;
  for (const auto& c : v)
    p.push_back(c.convert_to<long long>());
  return p;
}

inline ExponentVector to_vector(const Point& p) {
  std::vector<Exponent> c(p.begin(), p.end());
  return ExponentVector(std::move(c));
}

inline bool leq(const Point& a, const Point& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

/// Membership by raw divisibility against an arbitrary generator list.
inline bool raw_member(const std::vector<Point>& gens, const Point& u) {
  for (const auto& g : gens)
    if (leq(g, u))
      return true;
  return false;
}

inline std::vector<Point> raw_gens(const MonomialIdeal& ideal) {
  std::vector<Point> out;
  for (const auto& g : ideal.gens())
    out.push_back(to_point(g));
  return out;
}

/// Calls f on every point of [0, bound]^n.
inline void for_each_point(std::size_t n, long long bound, const std::function<void(const Point&)>& f) {
  Point p(n, 0);
  for (;;) {
    f(p);
    std::size_t j = n;
    while (j > 0) {
      --j;
      if (p[j] < bound) {
        ++p[j];
        break;
      }
      p[j] = 0;
      if (j == 0)
        return;
    }
    if (n == 0)
      return;
  }
}

/// Minimal elements (under <=) of a point set, by quadratic filtering.
inline std::vector<Point> raw_minimal(const std::vector<Point>& pts) {
  std::vector<Point> out;
  for (const auto& p : pts) {
    bool minimal = true;
    for (const auto& q : pts)
      if (q != p && leq(q, p)) {
        minimal = false;
        break;
      }
    if (minimal)
      out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace monoclose::testing
