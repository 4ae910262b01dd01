#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "monoclose/betti.hpp"
#include "monoclose/closure.hpp"
#include "monoclose/decompose.hpp"
#include "monoclose/error.hpp"
#include "monoclose/family.hpp"
#include "monoclose/figure.hpp"
#include "monoclose/io.hpp"
#include "monoclose/verify.hpp"

namespace monoclose::cli {

enum ExitCode : int { kOk = 0, kComputationError = 1, kUsageError = 2, kVerifyFailed = 3 };

enum class OutputFormat { text, json };

struct Limits {
  std::uint64_t box_points = kDefaultBoxBudget;
  std::uint64_t components = kDefaultComponentBudget;
  std::uint64_t lcm_degrees = kDefaultLcmBudget;
};

namespace detail {

inline std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw UsageError("cannot read " + path);
  ss << in.rdbuf();
  return ss.str();
}

inline MonomialIdeal load_ideal(const std::string& path) { return parse_ideal(read_input(path)).to_ideal(); }

/// "a,b,c" as an exponent vector.
inline ExponentVector parse_point(const std::string& text) {
  std::vector<Exponent> coords;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    item.erase(std::remove_if(item.begin(), item.end(), [](char c) { return c == ' '; }), item.end());
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw UsageError("malformed point '" + text + "': expected comma-separated non-negative integers");
    coords.emplace_back(item);
    if (comma == std::string::npos)
      break;
    start = comma + 1;
  }
  return ExponentVector(std::move(coords));
}

inline std::string ideal_brackets(const MonomialIdeal& ideal) {
  std::string s = "<";
  for (std::size_t i = 0; i < ideal.size(); ++i)
    s += (i ? ", " : "") + format_monomial(ideal.gens()[i], ideal.vars());
  return s + ">";
}

inline nlohmann::json prime_json(const PrimeSupport& p, const std::vector<std::string>& vars) {
  nlohmann::json out = nlohmann::json::array();
  for (auto v : p.vars)
    out.push_back(vars[v]);
  return out;
}

inline std::string prime_text(const PrimeSupport& p, const std::vector<std::string>& vars) {
  std::string s = "<";
  for (std::size_t k = 0; k < p.vars.size(); ++k)
    s += (k ? ", " : "") + vars[p.vars[k]];
  return s + ">";
}

inline nlohmann::json rationals_json(const std::vector<Rational>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : v)
    out.push_back(r.str());
  return out;
}

class Printer {
public:
  Printer(std::ostream& out, OutputFormat format) : out_(out), format_(format) {}

  bool json() const { return format_ == OutputFormat::json; }

  void ideal(const MonomialIdeal& ideal) {
    if (json())
      out_ << dump_canonical(to_json(ideal));
    else
      out_ << format_text(IdealDocument::from_ideal(ideal));
  }

  void primes(const std::vector<PrimeSupport>& primes, const std::vector<std::string>& vars) {
    if (json()) {
      nlohmann::json ps = nlohmann::json::array();
      for (const auto& p : primes)
        ps.push_back(prime_json(p, vars));
      out_ << dump_canonical({{"vars", vars}, {"primes", ps}});
      return;
    }
    for (const auto& p : primes)
      out_ << prime_text(p, vars) << "\n";
    if (primes.empty())
      out_ << "(none)\n";
  }

  void raw(const nlohmann::json& j, const std::string& text) {
    if (json())
      out_ << dump_canonical(j);
    else
      out_ << text;
  }

private:
  std::ostream& out_;
  OutputFormat format_;
};

}  // namespace detail

/// Runs one command line (without the program name). Everything the command
/// produces goes to `out`, diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monomial ideals: integral closure, decomposition, Betti numbers", "monoclose"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  std::optional<std::uint64_t> budget;
  app.add_option("--budget", budget, "Work budget for enumeration, splitting and lcm lattices")
      ->check(CLI::PositiveNumber);

  std::string input;
  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "Ideal file (text grammar or JSON); - for stdin")->required();
    return sub;
  };

  auto* closure_cmd = with_input(app.add_subcommand("closure", "Minimal generators of the integral closure"));

  auto* decompose_cmd = with_input(app.add_subcommand("decompose", "Irreducible or primary decomposition"));
  bool irreducible = false, primary = false;
  auto* irr_flag = decompose_cmd->add_flag("--irreducible", irreducible, "Irreducible components");
  decompose_cmd->add_flag("--primary", primary, "Primary components (default)")->excludes(irr_flag);

  auto* ass_cmd = with_input(app.add_subcommand("ass", "Associated primes"));
  auto* min_cmd = with_input(app.add_subcommand("min-primes", "Minimal primes"));
  auto* emb_cmd = with_input(app.add_subcommand("embedded", "Embedded primes"));

  auto* colon_cmd = with_input(app.add_subcommand("colon", "Colon ideal (I : m) or (I : J)"));
  std::string by_monomial, by_ideal;
  auto* by_opt = colon_cmd->add_option("--by", by_monomial, "Monomial, e.g. \"x1*x2^2\"");
  auto* by_ideal_opt = colon_cmd->add_option("--by-ideal", by_ideal, "Ideal file");
  by_opt->excludes(by_ideal_opt);

  auto* radical_cmd = with_input(app.add_subcommand("radical", "Radical"));
  auto* codim_cmd = with_input(app.add_subcommand("codim", "Codimension"));
  auto* pd_cmd = with_input(app.add_subcommand("pd", "Projective dimension of R/I"));
  auto* cm_cmd = with_input(app.add_subcommand("cm", "Cohen-Macaulay test (pd = codim)"));
  auto* betti_cmd = with_input(app.add_subcommand("betti", "Multigraded Betti numbers of R/I"));
  auto* generic_cmd = with_input(app.add_subcommand("generic", "Strong genericity test"));

  auto* member_cmd = with_input(app.add_subcommand("member", "Newton polyhedron membership with certificate"));
  std::string point_text;
  member_cmd->add_option("--point", point_text, "Exponent vector a,b,c")->required();

  std::size_t fam_n = 0;
  std::uint64_t fam_t = 0;
  auto* family_cmd = app.add_subcommand("family", "The family I_{n,t}");
  family_cmd->add_option("--n", fam_n, "Number of variables (>= 3)")->required();
  family_cmd->add_option("--t", fam_t, "Exponent (>= 1)")->required();
  bool fam_closure = false, fam_delta = false;
  auto* fam_closure_flag = family_cmd->add_flag("--closure", fam_closure, "Computed integral closure");
  family_cmd->add_flag("--delta", fam_delta, "Closed-form generator set")->excludes(fam_closure_flag);

  auto* reduce_cmd = app.add_subcommand("reduce", "Element of the closed-form set dividing a point");
  reduce_cmd->add_option("--n", fam_n, "Number of variables (>= 3)")->required();
  reduce_cmd->add_option("--t", fam_t, "Exponent (>= 1)")->required();
  reduce_cmd->add_option("--point", point_text, "Lattice point a,b,c")->required();

  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify-paper", "Re-derive every published claim");
  verify_cmd->add_option("--nmax", verify_opts.n_max, "Largest n of the grid")->capture_default_str();
  verify_cmd->add_option("--tmax", verify_opts.t_max, "Largest t of the grid")->capture_default_str();
  verify_cmd->add_option("--cases", verify_opts.property_cases, "Cases per property suite")->capture_default_str();
  verify_cmd->add_option("--seed", verify_opts.seed, "Property-suite seed")->capture_default_str();

  std::uint64_t fig_t = 0;
  std::size_t fig_n = 3;
  std::string fig_out;
  bool fig_csv = false;
  auto* figure_cmd = app.add_subcommand("figure", "Planar picture of the closure of I_{3,t}");
  figure_cmd->add_option("--t", fig_t, "Exponent (>= 1)")->required();
  figure_cmd->add_option("--n", fig_n, "Number of variables (must be 3)")->capture_default_str();
  figure_cmd->add_option("--out", fig_out, "Output path")->required();
  figure_cmd->add_flag("--csv", fig_csv, "Write CSV instead of SVG");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  Limits limits;
  if (budget) {
    limits.box_points = *budget;
    limits.components = *budget;
    limits.lcm_degrees = *budget;
  }
  detail::Printer print(out, format_name == "json" ? OutputFormat::json : OutputFormat::text);

  try {
    if (closure_cmd->parsed()) {
      print.ideal(closure_generators(detail::load_ideal(input), limits.box_points));
    } else if (decompose_cmd->parsed()) {
      const auto ideal = detail::load_ideal(input);
      const auto& vars = ideal.vars();
      nlohmann::json comps = nlohmann::json::array();
      std::string text;
      auto add = [&](const PrimeSupport& radical, const MonomialIdeal& component) {
        comps.push_back({{"radical", detail::prime_json(radical, vars)}, {"gens", to_json(component)["gens"]}});
        text += detail::ideal_brackets(component) + "  radical " + detail::prime_text(radical, vars) + "\n";
      };
      if (irreducible) {
        for (const auto& c : irreducible_decomposition(ideal, limits.components))
          add(c.radical(), c.to_ideal(vars));
      } else {
        for (const auto& c : primary_decomposition(ideal, limits.components))
          add(c.radical, c.ideal);
      }
      print.raw({{"vars", vars}, {"kind", irreducible ? "irreducible" : "primary"}, {"components", comps}}, text);
    } else if (ass_cmd->parsed()) {
      const auto ideal = detail::load_ideal(input);
      print.primes(associated_primes(ideal, limits.components), ideal.vars());
    } else if (min_cmd->parsed()) {
      const auto ideal = detail::load_ideal(input);
      print.primes(minimal_primes(ideal, limits.components), ideal.vars());
    } else if (emb_cmd->parsed()) {
      const auto ideal = detail::load_ideal(input);
      print.primes(embedded_primes(ideal, limits.components), ideal.vars());
    } else if (colon_cmd->parsed()) {
      const auto ideal = detail::load_ideal(input);
      if (by_opt->count())
        print.ideal(colon_mon(ideal, parse_monomial(by_monomial, ideal.vars())));
      else if (by_ideal_opt->count())
        print.ideal(colon_ideal(ideal, detail::load_ideal(by_ideal)));
      else
        throw UsageError("colon needs --by or --by-ideal");
    } else if (radical_cmd->parsed()) {
      print.ideal(radical(detail::load_ideal(input)));
    } else if (codim_cmd->parsed()) {
      const auto c = codim(detail::load_ideal(input), limits.components);
      print.raw({{"codim", c}}, std::to_string(c) + "\n");
    } else if (pd_cmd->parsed()) {
      const auto pd = projective_dimension(detail::load_ideal(input), limits.lcm_degrees);
      print.raw({{"pd", pd}}, std::to_string(pd) + "\n");
    } else if (cm_cmd->parsed()) {
      const auto ideal = detail::load_ideal(input);
      const auto pd = projective_dimension(ideal, limits.lcm_degrees);
      const auto c = codim(ideal, limits.components);
      const bool cm = pd == c;
      print.raw({{"cohen_macaulay", cm}, {"pd", pd}, {"codim", c}},
                std::string(cm ? "true" : "false") + "\npd: " + std::to_string(pd) + "\ncodim: " +
                    std::to_string(c) + "\n");
    } else if (betti_cmd->parsed()) {
      const auto ideal = detail::load_ideal(input);
      const auto table = betti_table(ideal, limits.lcm_degrees);
      nlohmann::json entries = nlohmann::json::array();
      std::string text = "totals:";
      for (auto b : table.totals())
        text += " " + std::to_string(b);
      text += "\n";
      for (const auto& [key, rank] : table.entries()) {
        entries.push_back({{"i", key.first}, {"degree", exponent_vector_json(key.second)}, {"rank", rank}});
        text += "beta_" + std::to_string(key.first) + "," + format_monomial(key.second, ideal.vars()) + " = " +
                std::to_string(rank) + "\n";
      }
      print.raw({{"vars", ideal.vars()},
                 {"totals", table.totals()},
                 {"entries", entries},
                 {"pd", table.projective_dimension()}},
                text);
    } else if (generic_cmd->parsed()) {
      const bool g = is_strongly_generic(detail::load_ideal(input));
      print.raw({{"strongly_generic", g}}, std::string(g ? "true" : "false") + "\n");
    } else if (member_cmd->parsed()) {
      const auto ideal = detail::load_ideal(input);
      const auto a = detail::parse_point(point_text);
      const auto cert = np_membership(ideal, a);
      if (const auto* in = std::get_if<InsideCertificate>(&cert)) {
        std::string text = "inside\nweights:";
        for (const auto& w : in->weights)
          text += " " + w.str();
        text += "\nslack:";
        for (const auto& s : in->slack)
          text += " " + s.str();
        print.raw({{"inside", true},
                   {"point", exponent_vector_json(a)},
                   {"weights", detail::rationals_json(in->weights)},
                   {"slack", detail::rationals_json(in->slack)}},
                  text + "\n");
      } else {
        const auto& o = std::get<OutsideCertificate>(cert);
        std::string text = "outside\nfunctional:";
        for (const auto& w : o.functional)
          text += " " + w.str();
        print.raw({{"inside", false},
                   {"point", exponent_vector_json(a)},
                   {"functional", detail::rationals_json(o.functional)}},
                  text + "\n");
      }
    } else if (family_cmd->parsed()) {
      const FamilyParams p(fam_n, fam_t);
      const auto family = family_ideal(p);
      if (fam_closure)
        print.ideal(closure_generators(family, limits.box_points));
      else if (fam_delta)
        print.ideal(family.with_gens(delta_set(p)));
      else
        print.ideal(family);
    } else if (reduce_cmd->parsed()) {
      const FamilyParams p(fam_n, fam_t);
      const auto d = reduce_to_delta(detail::parse_point(point_text), p);
      std::string text;
      for (std::size_t i = 0; i < d.size(); ++i)
        text += (i ? "," : "") + d[i].str();
      print.raw({{"point", exponent_vector_json(d)}}, text + "\n");
    } else if (verify_cmd->parsed()) {
      const auto report = verify_paper(verify_opts);
      std::string text;
      for (const auto& c : report.checks)
        text += std::string(c.passed ? "PASS " : "FAIL ") + c.id + " " + c.params.dump() + " " + c.value.dump() + "\n";
      for (const auto& d : report.discrepancies)
        text += "FLAG " + d.id + ": published " + d.claimed + ", computed " + d.computed + "\n";
      text += std::string("overall: ") + (report.passed() ? "pass" : "fail") + " (" +
              std::to_string(report.checks.size() - report.failures()) + "/" + std::to_string(report.checks.size()) +
              " checks, " + std::to_string(report.discrepancies.size()) + " flagged)\n";
      print.raw(report.to_json(), text);
      return report.passed() ? kOk : kVerifyFailed;
    } else if (figure_cmd->parsed()) {
      const auto points = emit_figure(fig_t, fig_out, fig_csv ? FigureFormat::csv : FigureFormat::svg, fig_n);
      const auto vertices = static_cast<std::size_t>(
          std::count_if(points.begin(), points.end(), [](const FigurePoint& q) { return q.vertex; }));
      print.raw({{"out", fig_out}, {"points", points.size()}, {"vertices", vertices},
                 {"interior", points.size() - vertices}},
                "wrote " + fig_out + ": " + std::to_string(points.size()) + " points (" + std::to_string(vertices) +
                    " vertices, " + std::to_string(points.size() - vertices) + " interior)\n");
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kComputationError;
  }
  return kOk;
}

}  // namespace monoclose::cli
