#pragma once

// System specification files:
//
//   # comment
//   sys:
//     Som(p) & Som(!p)
//     p -> G(p)
//   prop:
//     p -> F[1,1](p)
//
// One formula per line; the `sys:` section may be empty.  Every formula
// must be flat.

#include "mtlsample/formula_io.hpp"
#include "mtlsample/verify.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

namespace mtlsample {

/// The first temporal operator found inside the argument of another one, as
/// (outer, inner); empty for flat formulas.
inline std::optional<std::pair<Formula, Formula>> first_nesting(const Formula& f) {
  std::function<std::optional<Formula>(const Formula&)> temporal_inside = [&](const Formula& g) -> std::optional<Formula> {
    if (is_temporal(g.kind())) return g;
    if (g.kind() == Kind::conj || g.kind() == Kind::disj) {
      if (auto r = temporal_inside(g.lhs())) return r;
      return temporal_inside(g.rhs());
    }
    return std::nullopt;
  };
  std::function<std::optional<std::pair<Formula, Formula>>(const Formula&)> walk =
      [&](const Formula& g) -> std::optional<std::pair<Formula, Formula>> {
    switch (g.kind()) {
      case Kind::prop:
      case Kind::neg_prop: return std::nullopt;
      case Kind::conj:
      case Kind::disj:
        if (auto r = walk(g.lhs())) return r;
        return walk(g.rhs());
      default: break;
    }
    if (auto r = temporal_inside(g.lhs())) return std::make_pair(g, *r);
    if (is_modality(g.kind()))
      if (auto r = temporal_inside(g.rhs())) return std::make_pair(g, *r);
    return std::nullopt;
  };
  return walk(f);
}

inline SystemSpec parse_spec(std::string_view text) {
  enum class Section { none, sys, prop } section = Section::none;
  std::vector<Formula> sys;
  std::optional<Formula> prop;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    std::string_view body = raw.substr(0, raw.find('#'));
    std::size_t b = 0;
    while (b < body.size() && std::isspace(static_cast<unsigned char>(body[b]))) ++b;
    std::size_t e = body.size();
    while (e > b && std::isspace(static_cast<unsigned char>(body[e - 1]))) --e;
    if (b == e) continue;
    std::string_view content = body.substr(b, e - b);
    if (content == "sys:") {
      section = Section::sys;
      continue;
    }
    if (content == "prop:") {
      section = Section::prop;
      continue;
    }
    if (section == Section::none) throw ParseError("formula outside a 'sys:' or 'prop:' section", line_no, int(b) + 1);
    Formula f = FormulaParser(raw, line_no).parse();
    if (auto n = first_nesting(f)) {
      throw ParseError("formula is not flat: " + to_string(n->second) + " is nested inside " + to_string(n->first),
                       line_no, int(b) + 1);
    }
    if (!is_flat(f)) throw ParseError("formula is not flat", line_no, int(b) + 1);
    if (section == Section::sys) {
      sys.push_back(f);
    } else {
      if (prop) throw ParseError("the 'prop:' section holds exactly one formula", line_no, int(b) + 1);
      prop = f;
    }
  }
  if (!prop) throw ParseError("missing 'prop:' section formula", line_no, 1);
  return make_spec(std::move(sys), *prop);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline SystemSpec load_spec(const std::string& path) { return parse_spec(read_file(path)); }

}  // namespace mtlsample
