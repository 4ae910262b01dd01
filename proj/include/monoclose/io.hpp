#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "monoclose/error.hpp"
#include "monoclose/exponent.hpp"
#include "monoclose/ideal.hpp"

namespace monoclose {

/// Parsed input: variable names plus minimalized generators.
struct IdealDocument {
  std::vector<std::string> vars;
  std::vector<ExponentVector> gens;

  MonomialIdeal to_ideal() const { return MonomialIdeal(vars, gens); }
  static IdealDocument from_ideal(const MonomialIdeal& ideal) { return {ideal.vars(), ideal.gens()}; }

  friend bool operator==(const IdealDocument&, const IdealDocument&) = default;
};

namespace detail {

inline bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

/// Cursor over one line of text, tracking 1-based columns.
class LineCursor {
public:
  LineCursor(std::string_view text, std::size_t line, std::size_t first_column = 1)
      : text_(text), line_(line), base_(first_column) {}

  void skip_spaces() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r'))
      ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  void advance() { ++pos_; }
  std::size_t column() const { return base_ + pos_; }

  [[noreturn]] void fail(const std::string& what) const { fail_at(column(), what); }
  [[noreturn]] void fail_at(std::size_t col, const std::string& what) const {
    throw ParseError(what, line_, col);
  }

  std::string identifier() {
    if (!is_ident_start(peek()))
      fail("expected a variable name");
    const std::size_t start = pos_;
    while (!done() && is_ident_char(peek()))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Exponent unsigned_integer() {
    if (peek() == '-')
      fail("negative exponent");
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a non-negative integer exponent");
    const std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    return Exponent(std::string(text_.substr(start, pos_ - start)));
  }

private:
  std::string_view text_;
  std::size_t line_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

/// monomial := "1" | term ("*" term)*,  term := var ("^" uint)?
/// Stops at ',' or end of line.
inline ExponentVector parse_monomial(LineCursor& cur, const std::vector<std::string>& vars) {
  std::vector<Exponent> exps(vars.size(), 0);
  cur.skip_spaces();
  if (cur.peek() == '1') {
    cur.advance();
    cur.skip_spaces();
    if (!cur.done() && cur.peek() != ',')
      cur.fail("unexpected character after monomial 1");
    return ExponentVector(std::move(exps));
  }
  for (;;) {
    cur.skip_spaces();
    const std::size_t name_column = cur.column();
    const std::string name = cur.identifier();
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end())
      cur.fail_at(name_column, "unknown variable '" + name + "'");
    Exponent e = 1;
    cur.skip_spaces();
    if (cur.peek() == '^') {
      cur.advance();
      cur.skip_spaces();
      e = cur.unsigned_integer();
    }
    exps[static_cast<std::size_t>(it - vars.begin())] += e;
    cur.skip_spaces();
    if (cur.peek() != '*')
      break;
    cur.advance();
  }
  if (!cur.done() && cur.peek() != ',')
    cur.fail("unexpected character in monomial");
  return ExponentVector(std::move(exps));
}

inline std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline Exponent json_exponent(const nlohmann::json& v) {
  if (v.is_number_unsigned())
    return Exponent(v.get<std::uint64_t>());
  if (v.is_number_integer()) {
    const auto x = v.get<std::int64_t>();
    if (x < 0)
      throw ParseError("negative exponent " + std::to_string(x), 1, 1);
    return Exponent(x);
  }
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("malformed exponent string \"" + s + "\"", 1, 1);
    return Exponent(s);
  }
  throw ParseError("exponent must be a non-negative integer", 1, 1);
}

inline void check_variable_names(const std::vector<std::string>& vars, std::size_t line) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty() || !is_ident_start(v.front()) ||
        !std::all_of(v.begin(), v.end(), [](char c) { return is_ident_char(c); }))
      throw ParseError("invalid variable name '" + v + "'", line, 1);
    if (!seen.insert(v).second)
      throw ParseError("duplicate variable '" + v + "'", line, 1);
  }
}

inline IdealDocument parse_json_document(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_and_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("malformed JSON", line, col);
  }
  if (!doc.is_object() || !doc.contains("vars") || !doc.contains("gens") || !doc["vars"].is_array() ||
      !doc["gens"].is_array())
    throw ParseError("expected {\"vars\": [...], \"gens\": [[...], ...]}", 1, 1);
  IdealDocument out;
  for (const auto& v : doc["vars"]) {
    if (!v.is_string())
      throw ParseError("variable names must be strings", 1, 1);
    out.vars.push_back(v.get<std::string>());
  }
  check_variable_names(out.vars, 1);
  std::vector<ExponentVector> gens;
  for (const auto& row : doc["gens"]) {
    if (!row.is_array() || row.size() != out.vars.size())
      throw ParseError("each generator must list " + std::to_string(out.vars.size()) + " exponents", 1, 1);
    std::vector<Exponent> coords;
    for (const auto& e : row)
      coords.push_back(json_exponent(e));
    gens.emplace_back(std::move(coords));
  }
  out.gens = minimalize(std::move(gens));
  return out;
}

inline IdealDocument parse_text_document(std::string_view text) {
  IdealDocument out;
  bool have_ring = false;
  bool in_gens = false;
  std::size_t gens_line = 0;
  std::vector<ExponentVector> gens;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    LineCursor cur(line, line_no);
    cur.skip_spaces();
    if (cur.done())
      continue;

    auto keyword = [&](std::string_view kw) {
      const auto col = cur.column() - 1;
      return line.substr(col).starts_with(kw);
    };

    if (keyword("ring:")) {
      if (have_ring)
        cur.fail("second ring: line");
      for (int i = 0; i < 5; ++i)
        cur.advance();
      have_ring = true;
      std::set<std::string> seen;
      for (;;) {
        cur.skip_spaces();
        if (cur.done())
          break;
        const auto col = cur.column();
        std::string name = cur.identifier();
        if (!cur.done() && cur.peek() != ' ' && cur.peek() != '\t' && cur.peek() != '\r')
          cur.fail("invalid character in variable name");
        if (!seen.insert(name).second)
          cur.fail_at(col, "duplicate variable '" + name + "'");
        out.vars.push_back(std::move(name));
      }
      if (out.vars.empty())
        cur.fail("ring: line declares no variables");
      continue;
    }
    if (keyword("gens:")) {
      if (!have_ring)
        cur.fail("gens: before ring:");
      if (in_gens)
        cur.fail("second gens: section");
      for (int i = 0; i < 5; ++i)
        cur.advance();
      in_gens = true;
      gens_line = line_no;
    } else if (!in_gens) {
      cur.fail(have_ring ? "expected gens:" : "expected ring:");
    }

    // monomials separated by commas, possibly several per line
    for (;;) {
      cur.skip_spaces();
      if (cur.done())
        break;
      gens.push_back(parse_monomial(cur, out.vars));
      cur.skip_spaces();
      if (cur.peek() == ',') {
        cur.advance();
        cur.skip_spaces();
        if (cur.done())
          break;
      }
    }
  }
  if (!have_ring)
    throw ParseError("missing ring: line", line_no, 1);
  if (!in_gens)
    throw ParseError("missing gens: section", line_no, 1);
  if (gens.empty())
    throw ParseError("empty gens section", gens_line, 1);
  out.gens = minimalize(std::move(gens));
  return out;
}

}  // namespace detail

/// Reads either the text grammar (ring:/gens:) or the JSON form, chosen by
/// the first non-blank character.
inline IdealDocument parse_ideal(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{')
    return detail::parse_json_document(text);
  return detail::parse_text_document(text);
}

/// Parses a single monomial (text grammar) over the given variables.
inline ExponentVector parse_monomial(std::string_view text, const std::vector<std::string>& vars) {
  detail::LineCursor cur(text, 1);
  ExponentVector m = detail::parse_monomial(cur, vars);
  cur.skip_spaces();
  if (!cur.done())
    cur.fail("trailing input after monomial");
  return m;
}

/// x1^2*x3, or 1 for the zero vector.
inline std::string format_monomial(const ExponentVector& m, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0)
      continue;
    if (!out.empty())
      out += "*";
    out += vars[i];
    if (m[i] != 1)
      out += "^" + m[i].str();
  }
  return out.empty() ? "1" : out;
}

/// The text grammar, one generator per line.
inline std::string format_text(const IdealDocument& doc) {
  std::string out = "ring:";
  for (const auto& v : doc.vars)
    out += " " + v;
  out += "\ngens:\n";
  for (const auto& g : doc.gens)
    out += "  " + format_monomial(g, doc.vars) + "\n";
  return out;
}

/// Exponents that fit in 64 bits are numbers, larger ones decimal strings.
inline nlohmann::json exponent_json(const Exponent& e) {
  if (e <= std::numeric_limits<std::uint64_t>::max())
    return e.convert_to<std::uint64_t>();
  return e.str();
}

inline nlohmann::json exponent_vector_json(const ExponentVector& v) {
  nlohmann::json row = nlohmann::json::array();
  for (const auto& c : v)
    row.push_back(exponent_json(c));
  return row;
}

inline nlohmann::json to_json(const IdealDocument& doc) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : doc.gens)
    gens.push_back(exponent_vector_json(g));
  return {{"vars", doc.vars}, {"gens", std::move(gens)}};
}

inline nlohmann::json to_json(const MonomialIdeal& ideal) { return to_json(IdealDocument::from_ideal(ideal)); }

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
inline std::string dump_canonical(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace monoclose
