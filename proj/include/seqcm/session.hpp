#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "homology.hpp"
#include "parse.hpp"

namespace seqcm {

/// A generator that is not homogeneous for the declared grading. Reported as
/// a warning unless parsing is strict.
class NonHomogeneousGenerator : public ParseError {
 public:
  NonHomogeneousGenerator(const std::string& what, std::size_t line, std::size_t column)
      : ParseError("NonHomogeneousGenerator: " + what, line, column) {}
};

struct SessionOptions {
  std::uint64_t seed = 0;
  unsigned degree = 1;
  std::vector<unsigned> powers{1, 2, 4};
  std::size_t trials = 5;
  std::size_t retries = 32;
};

struct NamedIdeal {
  std::string name;
  std::vector<Polynomial> generators;
};

struct NamedModule {
  std::string name;
  PresentedModule module;
  std::string definition;
};

struct SessionInput {
  RingPtr ring;
  std::vector<NamedIdeal> ideals;
  std::vector<NamedModule> modules;
  SessionOptions options;
  std::vector<std::string> warnings;

  const NamedIdeal* find_ideal(std::string_view name) const {
    for (const auto& i : ideals)
      if (i.name == name) return &i;
    return nullptr;
  }
  const NamedModule* find_module(std::string_view name) const {
    for (const auto& m : modules)
      if (m.name == name) return &m;
    return nullptr;
  }
  /// Named module, or with an empty name the first module (falling back to
  /// S/I for the first ideal).
  NamedModule module(std::string_view name = {}) const {
    if (!name.empty()) {
      if (const auto* m = find_module(name)) return *m;
      if (const auto* i = find_ideal(name))
        return {i->name, PresentedModule::quotient(Submodule::ideal(ring, i->generators)),
                "quotient " + i->name};
      throw std::invalid_argument("no module or ideal named '" + std::string(name) + "'");
    }
    if (!modules.empty()) return modules.front();
    if (!ideals.empty()) return module(ideals.front().name);
    throw std::invalid_argument("input declares no module or ideal");
  }
};

namespace detail {

struct Cursor {
  std::string_view line;
  std::size_t lineno;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= line.size();
  }
  std::size_t column() const { return pos + 1; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, lineno, column()); }

  std::string word() {
    skip_ws();
    std::size_t start = pos;
    while (pos < line.size() &&
           (std::isalnum(static_cast<unsigned char>(line[pos])) || line[pos] == '_'))
      ++pos;
    if (start == pos) fail("expected a name");
    return std::string(line.substr(start, pos - start));
  }
  void expect(char c) {
    skip_ws();
    if (pos >= line.size() || line[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  bool accept(char c) {
    skip_ws();
    if (pos < line.size() && line[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::uint64_t number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
    if (start == pos) fail("expected a number");
    auto text = line.substr(start, pos - start);
    if (text.size() > 18) throw ParseError("number too large", lineno, start + 1);
    return std::stoull(std::string(text));
  }
  /// Text up to (not including) any of `stops`, or the end of the line.
  std::string_view until(std::string_view stops) {
    std::size_t start = pos;
    while (pos < line.size() && stops.find(line[pos]) == std::string_view::npos) ++pos;
    return line.substr(start, pos - start);
  }
};

inline std::vector<unsigned> parse_uint_list(Cursor& c) {
  std::vector<unsigned> out{static_cast<unsigned>(c.number())};
  while (c.accept(',')) out.push_back(static_cast<unsigned>(c.number()));
  return out;
}

/// Splits `text` at top-level occurrences of `sep`, reporting each piece's
/// starting column.
inline std::vector<std::pair<std::string_view, std::size_t>> split_top(std::string_view text,
                                                                       char sep,
                                                                       std::size_t column0) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size()) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
    }
    if (i == text.size() || (text[i] == sep && depth == 0)) {
      out.emplace_back(text.substr(start, i - start), column0 + start);
      start = i + 1;
    }
  }
  return out;
}

inline bool blank(std::string_view s) {
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  return true;
}

/// Entries of one coker row: comma separated when a comma is present,
/// otherwise whitespace separated.
inline std::vector<std::pair<std::string_view, std::size_t>> row_entries(std::string_view row,
                                                                         std::size_t column0) {
  if (row.find(',') != std::string_view::npos) return split_top(row, ',', column0);
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t i = 0;
  while (i < row.size()) {
    while (i < row.size() && std::isspace(static_cast<unsigned char>(row[i]))) ++i;
    std::size_t start = i;
    int depth = 0;
    while (i < row.size() && (depth > 0 || !std::isspace(static_cast<unsigned char>(row[i])))) {
      if (row[i] == '(') ++depth;
      if (row[i] == ')') --depth;
      ++i;
    }
    if (i > start) out.emplace_back(row.substr(start, i - start), column0 + start);
  }
  return out;
}

class SessionParser {
 public:
  SessionParser(std::string_view text, bool strict) : text_(text), strict_(strict) {}

  SessionInput run() {
    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start <= text_.size()) {
      std::size_t end = text_.find('\n', start);
      if (end == std::string_view::npos) end = text_.size();
      ++lineno;
      std::string_view line = text_.substr(start, end - start);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (!blank(line)) statement(Cursor{line, lineno});
      start = end + 1;
    }
    if (!session_.ring) throw ParseError("missing ring declaration", lineno ? lineno : 1, 1);
    return std::move(session_);
  }

 private:
  void statement(Cursor c) {
    std::size_t kw_col = (c.skip_ws(), c.column());
    std::string kw = c.word();
    if (kw == "ring" && session_.ring) throw ParseError("ring declared twice", c.lineno, kw_col);
    if (kw == "ring") return ring_line(c);
    if (!session_.ring && (kw == "ideal" || kw == "module"))
      throw ParseError("'" + kw + "' before the ring declaration", c.lineno, kw_col);
    if (kw == "ideal") return ideal_line(c);
    if (kw == "module") return module_line(c);
    if (kw == "set") return set_line(c);
    throw ParseError("unknown statement '" + kw + "'", c.lineno, kw_col);
  }

  void ring_line(Cursor& c) {
    std::string gf = c.word();
    if (gf != "GF") c.fail("expected GF(p)");
    c.expect('(');
    std::size_t pcol = (c.skip_ws(), c.column());
    std::uint64_t p = c.number();
    c.expect(')');
    c.expect('[');
    std::vector<std::string> names{c.word()};
    while (c.accept(',')) names.push_back(c.word());
    c.expect(']');
    MonomialOrder order = MonomialOrder::grevlex;
    if (!c.done()) {
      if (c.word() != "order") c.fail("expected 'order'");
      std::size_t ocol = (c.skip_ws(), c.column());
      std::string o = c.word();
      try {
        order = parse_order(o);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), c.lineno, ocol);
      }
    }
    if (!c.done()) c.fail("trailing text");
    if (p >= (1ull << 31))
      throw ParseError("BadPrime: " + std::to_string(p) + " is not an odd prime below 2^31",
                       c.lineno, pcol);
    try {
      session_.ring = make_ring(static_cast<std::uint32_t>(p), names, order);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), c.lineno, pcol);
    }
  }

  std::string new_name(Cursor& c) {
    std::size_t col = (c.skip_ws(), c.column());
    std::string name = c.word();
    if (session_.find_ideal(name) || session_.find_module(name))
      throw ParseError("name '" + name + "' already defined", c.lineno, col);
    return name;
  }

  void warn_or_throw(const std::string& what, std::size_t line, std::size_t col) {
    NonHomogeneousGenerator err(what, line, col);
    if (strict_) throw err;
    session_.warnings.push_back(err.what());
  }

  void ideal_line(Cursor& c) {
    std::string name = new_name(c);
    c.expect('=');
    std::size_t col0 = c.pos;
    std::string_view rest = c.line.substr(col0);
    NamedIdeal ideal{name, {}};
    for (auto [piece, col] : split_top(rest, ',', col0 + 1)) {
      if (blank(piece)) throw ParseError("empty generator", c.lineno, col);
      Polynomial f = parse_polynomial(session_.ring, piece, c.lineno, col);
      if (!f.is_homogeneous())
        warn_or_throw("generator '" + f.to_string() + "' of ideal " + name, c.lineno,
                      col + piece.find_first_not_of(" \t"));
      ideal.generators.push_back(std::move(f));
    }
    session_.ideals.push_back(std::move(ideal));
  }

  void module_line(Cursor& c) {
    std::string name = new_name(c);
    c.expect('=');
    std::size_t kcol = (c.skip_ws(), c.column());
    std::string kind = c.word();
    if (kind == "quotient") {
      std::size_t icol = (c.skip_ws(), c.column());
      std::string iname = c.word();
      if (!c.done()) c.fail("trailing text");
      const NamedIdeal* I = session_.find_ideal(iname);
      if (!I) throw ParseError("unknown ideal '" + iname + "'", c.lineno, icol);
      session_.modules.push_back(
          {name, PresentedModule::quotient(Submodule::ideal(session_.ring, I->generators)),
           "quotient " + iname});
      return;
    }
    if (kind != "coker") throw ParseError("expected 'coker' or 'quotient'", c.lineno, kcol);
    const std::size_t g = c.number();
    const std::size_t s = c.number();
    c.expect('[');
    std::size_t body0 = c.pos;
    std::string_view body = c.until("]");
    if (c.pos >= c.line.size()) c.fail("missing ']'");
    ++c.pos;
    std::vector<int> degrees(g, 0);
    if (!c.done()) {
      if (c.word() != "degrees") c.fail("expected 'degrees' or end of line");
      for (std::size_t i = 0; i < g; ++i) {
        bool neg = c.accept('-');
        int d = static_cast<int>(c.number());
        degrees[i] = neg ? -d : d;
      }
      if (!c.done()) c.fail("trailing text");
    }
    auto rows = split_top(body, ';', body0 + 1);
    if (s == 0 && rows.size() == 1 && blank(rows[0].first)) rows.clear();
    if (rows.size() != g && !(s == 0 && rows.empty()))
      throw ParseError("expected " + std::to_string(g) + " rows, found " +
                           std::to_string(rows.size()),
                       c.lineno, body0 + 1);
    std::vector<std::vector<Polynomial>> columns(s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto entries = row_entries(rows[i].first, rows[i].second);
      if (entries.size() != s)
        throw ParseError("row " + std::to_string(i + 1) + " has " +
                             std::to_string(entries.size()) + " entries, expected " +
                             std::to_string(s),
                         c.lineno, rows[i].second);
      for (std::size_t j = 0; j < s; ++j)
        columns[j].push_back(
            parse_polynomial(session_.ring, entries[j].first, c.lineno, entries[j].second));
    }
    std::vector<FreeElement> rels;
    for (std::size_t j = 0; j < s; ++j) {
      if (columns[j].empty()) columns[j].assign(g, Polynomial(session_.ring));
      FreeElement v = FreeElement::from_components(session_.ring, columns[j]);
      if (!v.is_homogeneous(degrees))
        warn_or_throw("column " + std::to_string(j + 1) + " of module " + name, c.lineno,
                      body0 + 1);
      rels.push_back(std::move(v));
    }
    std::ostringstream def;
    def << "coker " << g << " " << s;
    session_.modules.push_back(
        {name, PresentedModule(session_.ring, g, std::move(rels), degrees), def.str()});
  }

  void set_line(Cursor& c) {
    std::size_t col = (c.skip_ws(), c.column());
    std::string key = c.word();
    c.accept('=');
    auto& o = session_.options;
    if (key == "seed") o.seed = c.number();
    else if (key == "degree") o.degree = static_cast<unsigned>(c.number());
    else if (key == "trials") o.trials = c.number();
    else if (key == "retries") o.retries = c.number();
    else if (key == "powers") o.powers = parse_uint_list(c);
    else throw ParseError("unknown option '" + key + "'", c.lineno, col);
    if (!c.done()) c.fail("trailing text");
  }

  std::string_view text_;
  bool strict_;
  SessionInput session_;
};

}  // namespace detail

/// Parses the line-oriented input format:
///   ring GF(p)[x,y,...] [order grevlex|lex]
///   ideal I = f1, f2, ...
///   module M = quotient I
///   module M = coker g s [ row ; row ; ... ] [degrees d1 .. dg]
///   set seed|degree|trials|retries|powers <value>
/// `#` starts a comment.
inline SessionInput parse_input(std::string_view text, bool strict = false) {
  return detail::SessionParser(text, strict).run();
}

/// A parameter system file: polynomials separated by commas or newlines.
inline std::vector<Polynomial> parse_system(const RingPtr& ring, std::string_view text) {
  std::vector<Polynomial> out;
  std::size_t lineno = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++lineno;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    for (auto [piece, col] : detail::split_top(line, ',', 1))
      if (!detail::blank(piece)) out.push_back(parse_polynomial(ring, piece, lineno, col));
    start = end + 1;
  }
  return out;
}

}  // namespace seqcm
