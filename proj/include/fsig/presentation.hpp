#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fsig/errors.hpp"
#include "fsig/expr.hpp"
#include "fsig/family.hpp"
#include "fsig/ring.hpp"

namespace fsig {

// A ring presentation as a key = value document.  One entry per line; '#'
// starts a full-line comment; polynomial values use the expression grammar.
//
//   name = a1_p3
//   p = 3
//   vars = x, y, z
//   relation = x*y - z^2
//   sop = x
//   sop = y
//   c = z
//   d = 2
//   alpha = 0
//   reduced = true
//
// `relation` and `sop` repeat; the other keys appear at most once.  `name`,
// `p`, and `vars` are required.  `reduced = true` is the caller's attestation
// that the presented ring is reduced; commands that interpret lengths as
// splitting data refuse to run without it.
struct PresentationFile {
  struct Entry {
    std::string value;
    int line = 0;    // 1-based line in the document
    int column = 0;  // 1-based column where the value starts
  };

  std::string name;
  std::uint32_t p = 0;
  std::vector<std::string> variables;
  std::vector<Entry> relations;
  std::vector<Entry> sop;
  std::optional<Entry> c;
  std::optional<int> declared_d;
  int alpha = 0;
  bool reduced = false;
};

namespace detail {

inline std::string trim(const std::string& s, std::size_t* start_out = nullptr) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (start_out) *start_out = b;
  return s.substr(b, e - b);
}

inline long long parse_integer_value(const std::string& v, int line, int col) {
  if (v.empty()) throw parse_error(line, col, "expected an integer value");
  std::size_t i = v[0] == '-' ? 1 : 0;
  if (i == v.size()) throw parse_error(line, col, "expected an integer value");
  long long x = 0;
  for (; i < v.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(v[i])))
      throw parse_error(line, col, "malformed integer value '" + v + "'");
    x = x * 10 + (v[i] - '0');
    if (x > 1'000'000'000)
      throw parse_error(line, col, "integer value out of range: '" + v + "'");
  }
  return v[0] == '-' ? -x : x;
}

inline bool valid_name_token(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_' && ch != '-' &&
        ch != '.')
      return false;
  }
  return true;
}

inline bool valid_identifier_token(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  return true;
}

}  // namespace detail

inline PresentationFile parse_presentation(const std::string& text) {
  PresentationFile out;
  bool saw_p = false, saw_vars = false, saw_name = false, saw_d = false,
       saw_alpha = false, saw_reduced = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string line = text.substr(pos, eol == std::string::npos ? std::string::npos
                                                                 : eol - pos);
    pos = eol == std::string::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::size_t content = 0;
    std::string stripped = detail::trim(line, &content);
    if (stripped.empty() || stripped[0] == '#') continue;

    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw parse_error(line_no, static_cast<int>(content) + 1,
                        "expected 'key = value'");
    std::size_t key_start = 0;
    std::string key = detail::trim(line.substr(0, eq), &key_start);
    std::size_t val_start = 0;
    std::string value = detail::trim(line.substr(eq + 1), &val_start);
    int key_col = static_cast<int>(key_start) + 1;
    int val_col = static_cast<int>(eq + 1 + val_start) + 1;
    if (key.empty())
      throw parse_error(line_no, key_col, "missing key before '='");
    if (value.empty())
      throw parse_error(line_no, val_col, "missing value for key '" + key + "'");

    auto reject_duplicate = [&](bool& seen) {
      if (seen) throw parse_error(line_no, key_col, "duplicate key '" + key + "'");
      seen = true;
    };

    if (key == "name") {
      reject_duplicate(saw_name);
      if (!detail::valid_name_token(value))
        throw parse_error(line_no, val_col,
                          "name must use only letters, digits, '_', '-', '.'");
      out.name = value;
    } else if (key == "p") {
      reject_duplicate(saw_p);
      long long v = detail::parse_integer_value(value, line_no, val_col);
      if (v < 2)
        throw parse_error(line_no, val_col, "p must be a prime at least 2");
      out.p = static_cast<std::uint32_t>(v);
    } else if (key == "vars") {
      reject_duplicate(saw_vars);
      std::size_t i = 0;
      while (i <= value.size()) {
        std::size_t comma = value.find(',', i);
        std::string tok = detail::trim(
            value.substr(i, comma == std::string::npos ? std::string::npos
                                                       : comma - i));
        if (!detail::valid_identifier_token(tok))
          throw parse_error(line_no, val_col,
                            "malformed variable list (comma-separated "
                            "identifiers expected)");
        for (const auto& seen : out.variables)
          if (seen == tok)
            throw parse_error(line_no, val_col,
                              "duplicate variable '" + tok + "'");
        out.variables.push_back(tok);
        if (comma == std::string::npos) break;
        i = comma + 1;
      }
    } else if (key == "relation") {
      out.relations.push_back({value, line_no, val_col});
    } else if (key == "sop") {
      out.sop.push_back({value, line_no, val_col});
    } else if (key == "c") {
      if (out.c) throw parse_error(line_no, key_col, "duplicate key 'c'");
      out.c = PresentationFile::Entry{value, line_no, val_col};
    } else if (key == "d") {
      reject_duplicate(saw_d);
      out.declared_d =
          static_cast<int>(detail::parse_integer_value(value, line_no, val_col));
    } else if (key == "alpha") {
      reject_duplicate(saw_alpha);
      long long v = detail::parse_integer_value(value, line_no, val_col);
      if (v < 0) throw parse_error(line_no, val_col, "alpha must be non-negative");
      out.alpha = static_cast<int>(v);
    } else if (key == "reduced") {
      reject_duplicate(saw_reduced);
      if (value == "true")
        out.reduced = true;
      else if (value == "false")
        out.reduced = false;
      else
        throw parse_error(line_no, val_col, "reduced must be 'true' or 'false'");
    } else {
      throw parse_error(line_no, key_col, "unknown key '" + key + "'");
    }
  }
  if (!saw_name) throw validation_error("presentation is missing required key 'name'");
  if (!saw_p) throw validation_error("presentation is missing required key 'p'");
  if (!saw_vars) throw validation_error("presentation is missing required key 'vars'");
  return out;
}

namespace detail {

// Parse an expression entry, rebasing parser positions onto the document.
inline Poly parse_entry(const RingPtr& ring, const PresentationFile::Entry& entry) {
  try {
    return parse_poly(ring, entry.value);
  } catch (const parse_error& pe) {
    throw parse_error(entry.line, entry.column + pe.column - 1, pe.message);
  }
}

}  // namespace detail

// A presentation elaborated against the engine: the quotient ring plus the
// optional system of parameters and witness candidate it declares.
struct LoadedPresentation {
  PresentationFile file;
  RingPresentation ring;
  std::vector<Poly> sop;
  std::optional<Poly> c;
};

inline LoadedPresentation load_presentation(const std::string& text,
                                            MonomialOrder::Kind order_kind,
                                            long long term_budget) {
  PresentationFile file = parse_presentation(text);
  auto ambient = std::make_shared<const PolyRing>(PrimeField(file.p),
                                                  file.variables, term_budget);
  std::vector<Poly> relations;
  relations.reserve(file.relations.size());
  for (const auto& entry : file.relations)
    relations.push_back(detail::parse_entry(ambient, entry));
  MonomialOrder ord = order_kind == MonomialOrder::Kind::lex
                          ? MonomialOrder::lex(ambient->nvars())
                          : MonomialOrder::grevlex(ambient->nvars());
  RingPresentation R = build_ring(ambient, std::move(relations), file.declared_d,
                                  file.alpha, ord, file.reduced);
  std::vector<Poly> sop;
  sop.reserve(file.sop.size());
  for (const auto& entry : file.sop)
    sop.push_back(detail::parse_entry(ambient, entry));
  std::optional<Poly> c;
  if (file.c) c = detail::parse_entry(ambient, *file.c);
  return LoadedPresentation{std::move(file), std::move(R), std::move(sop),
                            std::move(c)};
}

}  // namespace fsig
