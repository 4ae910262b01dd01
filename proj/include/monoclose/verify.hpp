#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "monoclose/betti.hpp"
#include "monoclose/closure.hpp"
#include "monoclose/decompose.hpp"
#include "monoclose/error.hpp"
#include "monoclose/family.hpp"
#include "monoclose/figure.hpp"
#include "monoclose/io.hpp"
#include "monoclose/properties.hpp"

namespace monoclose {

/// Where a check's expected value comes from.
enum class ExpectedSource { published, oracle, definition };

inline const char* to_string(ExpectedSource s) {
  switch (s) {
    case ExpectedSource::published: return "published";
    case ExpectedSource::oracle: return "oracle";
    case ExpectedSource::definition: return "definition";
  }
  return "?";
}

struct CheckRecord {
  std::string id;
  nlohmann::json params = nlohmann::json::object();
  ExpectedSource source = ExpectedSource::published;
  bool passed = false;
  nlohmann::json value;
};

/// A published claim that our computation contradicts; reported, not failed.
struct Discrepancy {
  std::string id;
  std::string claimed;
  std::string computed;
};

struct VerifyReport {
  std::vector<CheckRecord> checks;
  std::vector<Discrepancy> discrepancies;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.passed; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) { return !c.passed; }));
  }

  nlohmann::json to_json() const {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : checks)
      cs.push_back({{"id", c.id},
                    {"params", c.params},
                    {"source", monoclose::to_string(c.source)},
                    {"pass", c.passed},
                    {"value", c.value}});
    nlohmann::json ds = nlohmann::json::array();
    for (const auto& d : discrepancies)
      ds.push_back({{"id", d.id}, {"claimed", d.claimed}, {"computed", d.computed}});
    return {{"checks", cs}, {"flagged", ds}, {"overall", passed() ? "pass" : "fail"}};
  }
};

struct VerifyOptions {
  std::size_t n_max = 5;
  std::size_t t_max = 3;
  std::uint64_t seed = properties::kDefaultSeed;
  std::size_t property_cases = properties::kDefaultCases;
  bool run_properties = true;
};

namespace detail {

inline std::string ideal_string(const MonomialIdeal& ideal) {
  std::string s = "<";
  for (std::size_t i = 0; i < ideal.size(); ++i)
    s += (i ? ", " : "") + format_monomial(ideal.gens()[i], ideal.vars());
  return s + ">";
}

inline nlohmann::json primes_json(const std::vector<PrimeSupport>& primes) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : primes) {
    nlohmann::json one = nlohmann::json::array();
    for (auto v : p.vars)
      one.push_back(v + 1);
    out.push_back(one);
  }
  return out;
}

inline PrimeSupport prime_of(std::vector<std::size_t> vars) { return PrimeSupport{std::move(vars)}; }

inline bool has_prime(const std::vector<PrimeSupport>& primes, const PrimeSupport& p) {
  return std::find(primes.begin(), primes.end(), p) != primes.end();
}

/// x^{e} with e = (1, t-1, t-1, t, ..., t).
inline ExponentVector triple_witness(std::size_t n, const Exponent& t) {
  std::vector<Exponent> c(n, t);
  c[0] = 1;
  c[1] = t - 1;
  c[2] = t - 1;
  return ExponentVector(std::move(c));
}

/// x^{e} with e = (0, t-1, t, ..., t).
inline ExponentVector pair_witness(std::size_t n, const Exponent& t) {
  std::vector<Exponent> c(n, t);
  c[0] = 0;
  c[1] = t - 1;
  return ExponentVector(std::move(c));
}

inline MonomialIdeal prime_ideal(std::size_t n, std::vector<std::size_t> vars) {
  return prime_of(std::move(vars)).to_ideal(default_variable_names(n));
}

}  // namespace detail

/// The final example's ideal in k[x,y,z,w].
inline MonomialIdeal final_example_ideal() {
  return MonomialIdeal(std::vector<std::string>{"x", "y", "z", "w"}, {{3, 1, 1, 0}, {2, 0, 0, 2}, {0, 2, 0, 3}});
}

/// Its closure as published (six generators).
inline MonomialIdeal final_example_published_closure() {
  return MonomialIdeal(std::vector<std::string>{"x", "y", "z", "w"},
                       {{3, 1, 1, 0}, {2, 0, 0, 2}, {0, 2, 0, 3}, {2, 2, 1, 1}, {1, 2, 1, 2}, {1, 1, 0, 3}});
}

/// Re-derives every published claim about I_{n,t} over the grid
/// 3 <= n <= n_max, 1 <= t <= t_max, plus the fixed examples.
inline VerifyReport verify_paper(const VerifyOptions& opt = {}) {
  if (opt.n_max < 3)
    throw UsageError("--nmax must be at least 3");
  if (opt.t_max < 1)
    throw UsageError("--tmax must be at least 1");

  VerifyReport report;
  auto record = [&](std::string id, nlohmann::json params, ExpectedSource src, auto&& body) {
    CheckRecord rec{std::move(id), std::move(params), src, false, nullptr};
    try {
      rec.passed = body(rec.value);
    } catch (const std::exception& e) {
      rec.passed = false;
      rec.value = std::string("error: ") + e.what();
    }
    report.checks.push_back(std::move(rec));
  };

  for (std::size_t n = 3; n <= opt.n_max; ++n)
    for (std::size_t t = 1; t <= opt.t_max; ++t) {
      const FamilyParams p(n, t);
      const nlohmann::json params = {{"n", n}, {"t", t}};
      const MonomialIdeal family = family_ideal(p);
      const MonomialIdeal closure = closure_generators(family);

      record("closure-equals-delta", params, ExpectedSource::published, [&](nlohmann::json& v) {
        v = closure.size();
        return closure.gens() == delta_set(p);
      });

      record("closure-satisfies-subset-inequalities", params, ExpectedSource::published, [&](nlohmann::json& v) {
        std::size_t bad = 0;
        for (const auto& g : closure.gens())
          bad += thm1_check(g, p) ? 0 : 1;
        v = {{"generators", closure.size()}, {"violations", bad}};
        return bad == 0;
      });

      record("reduction-lands-in-delta", params, ExpectedSource::published, [&](nlohmann::json& v) {
        const auto delta = delta_set(p);
        std::size_t checked = 0, bad = 0;
        std::vector<Exponent> cursor(n, 0);
        const ExponentVector box = bounding_box(family);
        do {
          ExponentVector b(cursor);
          if (!in_newton_polyhedron(family, b))
            continue;
          ++checked;
          const auto d = reduce_to_delta(b, p);
          if (!std::binary_search(delta.begin(), delta.end(), d) || !divides(d, b))
            ++bad;
        } while (monoclose::detail::next_in_box(cursor, box));
        v = {{"points", checked}, {"violations", bad}};
        return bad == 0;
      });

      record("syzygies-cancel", params, ExpectedSource::published, [&](nlohmann::json& v) {
        const auto res = resolution_matrices(p);
        v = {{"rows", res.syzygy_matrix.size()}, {"cols", res.syzygy_matrix.front().size()}};
        return res.product_vanishes() && res.syzygy_matrix.size() == n && res.syzygy_matrix.front().size() == n - 1;
      });

      record("family-cohen-macaulay", params, ExpectedSource::published, [&](nlohmann::json& v) {
        const auto totals = betti_table(family).totals();
        const auto pd = totals.size() - 1;
        const auto cd = codim(family);
        v = {{"betti", totals}, {"pd", pd}, {"codim", cd}};
        return totals == std::vector<std::size_t>{1, n, n - 1} && pd == 2 && cd == 2 &&
               is_cohen_macaulay(family) && embedded_primes(family).empty() && is_unmixed(family);
      });

      if (t == 1) {
        record("squarefree-closure-trivial", params, ExpectedSource::oracle, [&](nlohmann::json& v) {
          const auto emb = embedded_primes(closure);
          v = {{"closure_equals_ideal", closure == family}, {"embedded", detail::primes_json(emb)}};
          return closure == family && emb.empty();
        });
        continue;
      }

      record("colon-gives-triple-prime", params, ExpectedSource::published, [&](nlohmann::json& v) {
        const auto q = colon_mon(closure, detail::triple_witness(n, p.t()));
        v = detail::ideal_string(q);
        return q == detail::prime_ideal(n, {0, 1, 2});
      });
      record("colon-gives-pair-prime", params, ExpectedSource::published, [&](nlohmann::json& v) {
        const auto q = colon_mon(closure, detail::pair_witness(n, p.t()));
        v = detail::ideal_string(q);
        return q == detail::prime_ideal(n, {0, 1});
      });
      record("pairs-minimal-triples-embedded", params, ExpectedSource::published, [&](nlohmann::json& v) {
        const auto minimal = minimal_primes(closure);
        const auto embedded = embedded_primes(closure);
        std::size_t pairs = 0, triples = 0;
        bool ok = true;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = a + 1; b < n; ++b) {
            ok = ok && detail::has_prime(minimal, detail::prime_of({a, b}));
            ++pairs;
            for (std::size_t c = b + 1; c < n; ++c) {
              ok = ok && detail::has_prime(embedded, detail::prime_of({a, b, c}));
              ++triples;
            }
          }
        v = {{"pairs", pairs}, {"triples", triples}, {"embedded", embedded.size()}};
        return ok && minimal.size() == pairs;
      });
      record("closure-not-cohen-macaulay", params, ExpectedSource::published, [&](nlohmann::json& v) {
        const auto pd = projective_dimension(closure);
        const auto cd = codim(closure);
        v = {{"pd", pd}, {"codim", cd}};
        return !is_cohen_macaulay(closure);
      });
    }

  // the worked example I_{3,2}
  {
    const FamilyParams p(3, 2);
    const MonomialIdeal family = family_ideal(p);
    const MonomialIdeal closure = closure_generators(family);
    const nlohmann::json params = {{"n", 3}, {"t", 2}};
    record("i32-generators", params, ExpectedSource::published, [&](nlohmann::json& v) {
      v = to_json(family)["gens"];
      return family == MonomialIdeal(3, {{2, 2, 0}, {2, 0, 2}, {0, 2, 2}});
    });
    record("i32-closure", params, ExpectedSource::published, [&](nlohmann::json& v) {
      v = to_json(closure)["gens"];
      return closure ==
             MonomialIdeal(3, {{2, 2, 0}, {2, 0, 2}, {0, 2, 2}, {1, 1, 2}, {1, 2, 1}, {2, 1, 1}});
    });
    record("i32-decomposition", params, ExpectedSource::published, [&](nlohmann::json& v) {
      const auto ideal_parts = primary_decomposition(family);
      const auto closure_parts = primary_decomposition(closure);
      std::vector<PrimeSupport> radicals;
      for (const auto& c : closure_parts)
        radicals.push_back(c.radical);
      v = {{"closure_radicals", detail::primes_json(radicals)}};
      const std::vector<PrimeSupport> expected{
          detail::prime_of({0, 1}), detail::prime_of({0, 1, 2}), detail::prime_of({0, 2}), detail::prime_of({1, 2})};
      bool ok = radicals == expected && ideal_parts.size() == 3;
      // the minimal components are the published ones and the pair components of I_{3,2}
      const MonomialIdeal m12(3, {{2, 0, 0}, {1, 1, 0}, {0, 2, 0}});
      const MonomialIdeal m13(3, {{2, 0, 0}, {1, 0, 1}, {0, 0, 2}});
      const MonomialIdeal m23(3, {{0, 2, 0}, {0, 1, 1}, {0, 0, 2}});
      for (const auto& c : closure_parts) {
        if (c.radical == detail::prime_of({0, 1}))
          ok = ok && c.ideal == m12;
        if (c.radical == detail::prime_of({0, 2}))
          ok = ok && c.ideal == m13;
        if (c.radical == detail::prime_of({1, 2}))
          ok = ok && c.ideal == m23;
      }
      const MonomialIdeal p12(3, {{2, 0, 0}, {0, 2, 0}});
      const MonomialIdeal p13(3, {{2, 0, 0}, {0, 0, 2}});
      const MonomialIdeal p23(3, {{0, 2, 0}, {0, 0, 2}});
      ok = ok && ideal_parts[0].ideal == p12 && ideal_parts[1].ideal == p13 && ideal_parts[2].ideal == p23;
      // the published embedded component is a valid replacement for ours
      const MonomialIdeal embedded(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
      ok = ok && intersect_all({m12, m13, m23, embedded}) == closure;
      return ok;
    });
  }

  // the final example in k[x,y,z,w]
  {
    const MonomialIdeal ideal = final_example_ideal();
    const MonomialIdeal closure = closure_generators(ideal);
    const auto& vars = ideal.vars();
    const nlohmann::json params = {{"ring", vars}};
    record("final-decomposition-radicals", params, ExpectedSource::published, [&](nlohmann::json& v) {
      std::vector<PrimeSupport> radicals;
      for (const auto& c : irreducible_decomposition(ideal))
        if (radicals.empty() || radicals.back() != c.radical())
          radicals.push_back(c.radical());
      v = detail::primes_json(radicals);
      // xy, xw, yw, zw
      return radicals == std::vector<PrimeSupport>{detail::prime_of({0, 1}), detail::prime_of({0, 3}),
                                                   detail::prime_of({1, 3}), detail::prime_of({2, 3})};
    });
    record("final-generic", params, ExpectedSource::published, [&](nlohmann::json& v) {
      v = is_strongly_generic(ideal);
      return v.get<bool>();
    });
    record("final-cohen-macaulay", params, ExpectedSource::published, [&](nlohmann::json& v) {
      const auto pd = projective_dimension(ideal);
      const auto cd = codim(ideal);
      v = {{"pd", pd}, {"codim", cd}};
      return pd == 2 && cd == 2 && is_cohen_macaulay(ideal);
    });
    record("final-closure", params, ExpectedSource::published, [&](nlohmann::json& v) {
      v = to_json(closure)["gens"];
      return closure == final_example_published_closure();
    });
    record("final-colon-embedded-witness", params, ExpectedSource::published, [&](nlohmann::json& v) {
      const auto q = colon_mon(closure, {1, 2, 0, 2});
      v = detail::ideal_string(q);
      return q == detail::prime_of({0, 2, 3}).to_ideal(vars);
    });
    record("final-closure-embedded-prime", params, ExpectedSource::published, [&](nlohmann::json& v) {
      const auto emb = embedded_primes(closure);
      v = detail::primes_json(emb);
      return detail::has_prime(emb, detail::prime_of({0, 2, 3}));
    });
    record("final-closure-not-cohen-macaulay", params, ExpectedSource::published, [&](nlohmann::json& v) {
      v = {{"pd", projective_dimension(closure)}, {"codim", codim(closure)}};
      return !is_cohen_macaulay(closure);
    });
    record("final-minimal-prime-xw", params, ExpectedSource::published, [&](nlohmann::json& v) {
      const auto minimal = minimal_primes(closure);
      v = detail::primes_json(minimal);
      return detail::has_prime(minimal, detail::prime_of({0, 3}));
    });

    const auto colon = colon_mon(closure, {1, 1, 0, 2});
    const auto claimed = detail::prime_of({0, 3}).to_ideal(vars);
    if (colon != claimed)
      report.discrepancies.push_back(
          {"final-colon-xyw2", detail::ideal_string(claimed), detail::ideal_string(colon)});
  }

  // the planar picture of the closure of I_{3,4} (and I_{3,2})
  for (int t : {4, 2}) {
    record("figure-points", {{"t", t}}, t == 4 ? ExpectedSource::oracle : ExpectedSource::published,
           [&](nlohmann::json& v) {
             const auto pts = figure_points(t);
             const auto vertices = static_cast<std::size_t>(
                 std::count_if(pts.begin(), pts.end(), [](const FigurePoint& q) { return q.vertex; }));
             v = {{"points", pts.size()}, {"vertices", vertices}, {"interior", pts.size() - vertices}};
             return t == 4 ? (pts.size() == 15 && vertices == 3) : (pts.size() == 6 && vertices == 3);
           });
  }

  if (opt.run_properties)
    for (const auto& o : properties::run_all(opt.seed, opt.property_cases))
      record("property-" + o.name, {{"seed", opt.seed}, {"cases", opt.property_cases}}, ExpectedSource::oracle,
             [&](nlohmann::json& v) {
               v = {{"cases", o.cases}, {"failures", o.failures}};
               if (!o.first_failure.empty())
                 v["first_failure"] = o.first_failure;
               return o.ok();
             });

  return report;
}

}  // namespace monoclose
