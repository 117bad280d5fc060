#pragma once

// Text syntax for formulas.
//
//   f ::= f <-> f | f -> f | f '|' f | f & f | !f | (f) | true | false | letter
//       | U I? (f, f) | S ... | R ... | T ... | UM ... | SM ... | RM ... | TM ...
//       | F I? (f) | FP ... | G ... | GP ...
//       | Alw(f) | Som(f) | now(f) | upto(f) | becf(f) | becp(f)
//   I ::= ('[' | '(') bound ',' bound (']' | ')')
//   bound ::= n | n/d | -n | -n/d | inf | -inf
//
// `->` is right associative, `&` and `|` are left associative, and `!` is
// pushed down to the letters while parsing.  A missing interval means
// [0,inf).

#include "mtlsample/formula.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mtlsample {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column),
        message_(msg) {}
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

inline bool is_letter_name(std::string_view s) {
  if (s.empty() || !(s[0] >= 'a' && s[0] <= 'z')) return false;
  if (s == "inf" || s == "true" || s == "false") return false;
  for (char c : s)
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_')) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Printing

namespace detail {

inline const char* modality_name(Kind k, bool matching) {
  switch (k) {
    case Kind::until: return matching ? "UM" : "U";
    case Kind::since: return matching ? "SM" : "S";
    case Kind::release: return matching ? "RM" : "R";
    case Kind::trigger: return matching ? "TM" : "T";
    case Kind::eventually: return "F";
    case Kind::eventually_past: return "FP";
    case Kind::globally: return "G";
    case Kind::globally_past: return "GP";
    case Kind::always: return "Alw";
    case Kind::sometimes: return "Som";
    case Kind::nowon: return "now";
    case Kind::uptonow: return "upto";
    case Kind::becf: return "becf";
    case Kind::becp: return "becp";
    default: return "?";
  }
}

inline void print_to(std::string& out, const Formula& f, bool expand);

inline void print_child(std::string& out, const Formula& f, bool parens, bool expand) {
  if (parens) out += '(';
  print_to(out, f, expand);
  if (parens) out += ')';
}

inline bool is_binary_bool(const Formula& f) {
  return (f.kind() == Kind::conj || f.kind() == Kind::disj) && !is_top(f) && !is_bottom(f);
}

inline void print_to(std::string& out, const Formula& f, bool expand) {
  if (is_top(f)) {
    out += "true";
    return;
  }
  if (is_bottom(f)) {
    out += "false";
    return;
  }
  switch (f.kind()) {
    case Kind::prop: out += f.letter(); return;
    case Kind::neg_prop:
      out += '!';
      out += f.letter();
      return;
    case Kind::conj: {
      const bool lp = is_binary_bool(f.lhs()) && f.lhs().kind() == Kind::disj;
      const bool rp = is_binary_bool(f.rhs());
      print_child(out, f.lhs(), lp, expand);
      out += " & ";
      print_child(out, f.rhs(), rp, expand);
      return;
    }
    case Kind::disj: {
      const bool rp = is_binary_bool(f.rhs()) && f.rhs().kind() == Kind::disj;
      print_child(out, f.lhs(), false, expand);
      out += " | ";
      print_child(out, f.rhs(), rp, expand);
      return;
    }
    default: break;
  }
  if (is_derived(f.kind()) && expand) {
    print_to(out, f.expansion(), expand);
    return;
  }
  out += modality_name(f.kind(), f.matching());
  if (has_interval(f.kind()) && !is_qualitative(f.interval())) out += f.interval().str();
  out += '(';
  print_to(out, f.lhs(), expand);
  if (is_modality(f.kind())) {
    out += ", ";
    print_to(out, f.rhs(), expand);
  }
  out += ')';
}

}  // namespace detail

/// Prints in the input syntax; with `expand` derived operators are written
/// out in basic form.
inline std::string to_string(const Formula& f, bool expand = false) {
  std::string s;
  detail::print_to(s, f, expand);
  return s;
}

// ---------------------------------------------------------------------------
// Parsing

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text, int first_line = 1) : s_(text), line_(first_line) {}

  Formula parse() {
    Formula f = parse_iff();
    skip_ws();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    int line = line_;
    int col = 1;
    for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void skip_ws() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else if (s_[pos_] == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool peek_is(std::string_view tok) {
    skip_ws();
    return s_.substr(pos_, tok.size()) == tok;
  }

  bool accept(std::string_view tok) {
    if (peek_is(tok)) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  Formula parse_iff() {
    Formula a = parse_implies();
    while (accept("<->")) {
      Formula b = parse_implies();
      a = iff(a, b);
    }
    return a;
  }

  Formula parse_implies() {
    Formula a = parse_or();
    if (accept("->")) {
      Formula b = parse_implies();
      return implies(a, b);
    }
    return a;
  }

  Formula parse_or() {
    Formula a = parse_and();
    while (true) {
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '|') {
        ++pos_;
        a = disj(a, parse_and());
      } else {
        return a;
      }
    }
  }

  Formula parse_and() {
    Formula a = parse_unary();
    while (true) {
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '&') {
        ++pos_;
        a = conj(a, parse_unary());
      } else {
        return a;
      }
    }
  }

  Formula parse_unary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (s_[pos_] == '!') {
      ++pos_;
      return negate(parse_unary());
    }
    if (s_[pos_] == '(') {
      ++pos_;
      Formula f = parse_iff();
      expect(")");
      return f;
    }
    const std::size_t start = pos_;
    std::string word = read_word();
    if (word.empty()) fail("expected a formula");
    if (word == "true") return top();
    if (word == "false") return bottom();

    static const std::map<std::string, std::pair<Kind, bool>> binary = {
        {"U", {Kind::until, false}},   {"S", {Kind::since, false}},   {"R", {Kind::release, false}},
        {"T", {Kind::trigger, false}}, {"UM", {Kind::until, true}},   {"SM", {Kind::since, true}},
        {"RM", {Kind::release, true}}, {"TM", {Kind::trigger, true}}};
    static const std::map<std::string, Kind> unary_iv = {{"F", Kind::eventually},
                                                         {"FP", Kind::eventually_past},
                                                         {"G", Kind::globally},
                                                         {"GP", Kind::globally_past}};
    static const std::map<std::string, Kind> unary = {{"Alw", Kind::always},  {"Som", Kind::sometimes},
                                                      {"now", Kind::nowon},   {"upto", Kind::uptonow},
                                                      {"becf", Kind::becf},   {"becp", Kind::becp}};
    if (auto it = binary.find(word); it != binary.end()) {
      TimeInterval iv = maybe_interval();
      expect("(");
      Formula a = parse_iff();
      expect(",");
      Formula b = parse_iff();
      expect(")");
      return modality(it->second.first, iv, a, b, it->second.second);
    }
    if (auto it = unary_iv.find(word); it != unary_iv.end()) {
      TimeInterval iv = maybe_interval();
      expect("(");
      Formula a = parse_iff();
      expect(")");
      return make_derived(it->second, iv, a);
    }
    if (auto it = unary.find(word); it != unary.end()) {
      expect("(");
      Formula a = parse_iff();
      expect(")");
      return make_derived(it->second, {}, a);
    }
    if (!is_letter_name(word)) {
      pos_ = start;
      fail("invalid proposition name '" + word + "'");
    }
    return prop(word);
  }

  std::string read_word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  // An interval follows when the bracket is '[' or when '(' is followed by
  // something that can only start a bound.
  TimeInterval maybe_interval() {
    skip_ws();
    if (pos_ >= s_.size()) return TimeInterval::nonnegative();
    const char c = s_[pos_];
    if (c == '[') return parse_interval();
    if (c != '(') return TimeInterval::nonnegative();
    std::size_t j = pos_ + 1;
    while (j < s_.size() && std::isspace(static_cast<unsigned char>(s_[j]))) ++j;
    if (j >= s_.size()) return TimeInterval::nonnegative();
    const char d = s_[j];
    bool bound_start = std::isdigit(static_cast<unsigned char>(d)) || d == '-' || d == '+';
    if (!bound_start && s_.substr(j, 3) == "inf") {
      std::size_t k = j + 3;
      while (k < s_.size() && std::isspace(static_cast<unsigned char>(s_[k]))) ++k;
      bound_start = k < s_.size() && s_[k] == ',';
    }
    return bound_start ? parse_interval() : TimeInterval::nonnegative();
  }

  TimeInterval parse_interval() {
    skip_ws();
    const bool lo_closed = s_[pos_] == '[';
    ++pos_;
    Bound lo = parse_bound();
    expect(",");
    Bound hi = parse_bound();
    skip_ws();
    if (pos_ >= s_.size() || (s_[pos_] != ']' && s_[pos_] != ')')) fail("expected ']' or ')'");
    const bool hi_closed = s_[pos_] == ']';
    ++pos_;
    if ((lo_closed && !lo.is_finite()) || (hi_closed && !hi.is_finite()))
      fail("an infinite endpoint cannot be closed");
    return TimeInterval::make(lo, lo_closed, hi, hi_closed);
  }

  Bound parse_bound() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/' || s_[pos_] == '-' ||
            s_[pos_] == '+' || s_[pos_] == '.'))
      ++pos_;
    const std::string_view tok = s_.substr(start, pos_ - start);
    if (tok == "inf" || tok == "+inf") return Bound::pos_inf();
    if (tok == "-inf") return Bound::neg_inf();
    if (auto q = parse_rat(tok)) return Bound(*q);
    pos_ = start;
    fail("invalid interval bound '" + std::string(tok) + "' (use n, n/d, inf or -inf)");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int line_;
};

inline Formula parse_formula(std::string_view text, int first_line = 1) {
  return FormulaParser(text, first_line).parse();
}

}  // namespace mtlsample
