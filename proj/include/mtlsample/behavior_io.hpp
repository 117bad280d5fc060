#pragma once

// Line-oriented text format for behaviours.
//
//   alphabet p q
//   lefttail {p}                 or  lefttail (-inf,0] {p}
//   seg [0,3/2) {p q}
//   seg [3/2,4] {}
//   righttail {q}                or  righttail (4,inf) {q}
//
// and for discrete time
//
//   alphabet p
//   dlefttail {}
//   core k0=-2 {} {p} {p}
//   drighttail {p}
//
// Blank lines and '#' comments are ignored.

#include "mtlsample/behavior.hpp"
#include "mtlsample/formula_io.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mtlsample {

inline std::string to_text(const DenseBehavior& b) {
  std::ostringstream o;
  o << "alphabet";
  for (const auto& n : b.alphabet().names()) o << ' ' << n;
  o << '\n';
  const auto segs = b.segments();
  if (segs.size() == 1) {
    o << "lefttail " << b.alphabet().format(b.left_tail()) << '\n';
    o << "righttail " << b.alphabet().format(b.right_tail()) << '\n';
    return o.str();
  }
  o << "lefttail " << segs.front().interval.str() << ' ' << b.alphabet().format(segs.front().value) << '\n';
  for (std::size_t i = 1; i + 1 < segs.size(); ++i)
    o << "seg " << segs[i].interval.str() << ' ' << b.alphabet().format(segs[i].value) << '\n';
  o << "righttail " << segs.back().interval.str() << ' ' << b.alphabet().format(segs.back().value) << '\n';
  return o.str();
}

inline std::string to_text(const DiscreteBehavior& d) {
  std::ostringstream o;
  o << "alphabet";
  for (const auto& n : d.alphabet().names()) o << ' ' << n;
  o << '\n';
  o << "dlefttail " << d.alphabet().format(d.left_tail()) << '\n';
  o << "core k0=" << d.k0();
  for (Valuation v : d.core()) o << ' ' << d.alphabet().format(v);
  o << '\n';
  o << "drighttail " << d.alphabet().format(d.right_tail()) << '\n';
  return o.str();
}

/// Compact one-line rendering of a discrete behaviour, e.g.
/// `{} ... k0=0: {p} {} ... {p}`.
inline std::string to_line(const DiscreteBehavior& d) {
  std::string s = d.alphabet().format(d.left_tail()) + "^w k0=" + std::to_string(d.k0()) + ":";
  for (Valuation v : d.core()) s += " " + d.alphabet().format(v);
  s += " " + d.alphabet().format(d.right_tail()) + "^w";
  return s;
}

namespace detail {

class BehaviorReader {
 public:
  explicit BehaviorReader(std::string_view text) : text_(text) {}

  std::variant<DenseBehavior, DiscreteBehavior> read() {
    std::size_t start = 0;
    int line_no = 0;
    while (start <= text_.size()) {
      std::size_t end = text_.find('\n', start);
      if (end == std::string_view::npos) end = text_.size();
      ++line_no;
      line(text_.substr(start, end - start), line_no);
      start = end + 1;
    }
    if (!alphabet_) throw ParseError("missing 'alphabet' line", line_no, 1);
    if (discrete_ && dense_) throw ParseError("dense and discrete keywords mixed", line_no, 1);
    if (discrete_) {
      if (!dleft_ || !dright_) throw ParseError("discrete behaviour needs 'dlefttail' and 'drighttail'", line_no, 1);
      return DiscreteBehavior(*alphabet_, *dleft_, k0_, core_, *dright_);
    }
    if (!left_ || !right_) throw ParseError("dense behaviour needs 'lefttail' and 'righttail'", line_no, 1);
    try {
      if (left_iv_ || right_iv_) {
        if (!left_iv_ || !right_iv_) throw std::invalid_argument("either both tails carry an interval or neither");
        std::vector<Segment> parts{{*left_iv_, *left_}};
        parts.insert(parts.end(), segs_.begin(), segs_.end());
        parts.push_back({*right_iv_, *right_});
        return DenseBehavior::from_partition(*alphabet_, parts);
      }
      return DenseBehavior::from_segments(*alphabet_, *left_, segs_, *right_);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line_no, 1);
    }
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_no_, col_ + 1); }

  void skip_ws() {
    while (col_ < cur_.size() && std::isspace(static_cast<unsigned char>(cur_[col_]))) ++col_;
  }

  std::string word() {
    skip_ws();
    const std::size_t b = col_;
    while (col_ < cur_.size() && !std::isspace(static_cast<unsigned char>(cur_[col_])) && cur_[col_] != '{' &&
           cur_[col_] != '}')
      ++col_;
    return std::string(cur_.substr(b, col_ - b));
  }

  bool at_end() {
    skip_ws();
    return col_ >= cur_.size();
  }

  Valuation valuation() {
    if (!alphabet_) fail("'alphabet' must come first");
    skip_ws();
    if (col_ >= cur_.size() || cur_[col_] != '{') fail("expected '{'");
    ++col_;
    Valuation v = 0;
    while (true) {
      skip_ws();
      if (col_ >= cur_.size()) fail("expected '}'");
      if (cur_[col_] == '}') {
        ++col_;
        return v;
      }
      const std::size_t at = col_;
      std::string name = word();
      const int i = alphabet_->index(name);
      if (i < 0) {
        col_ = at;
        fail("letter '" + name + "' is not in the alphabet");
      }
      v |= Valuation{1} << i;
    }
  }

  TimeInterval interval() {
    skip_ws();
    const std::size_t b = col_;
    while (col_ < cur_.size() && cur_[col_] != ']' && cur_[col_] != ')') ++col_;
    if (col_ >= cur_.size()) fail("expected an interval");
    ++col_;
    try {
      // reuse the formula grammar's interval syntax through a dummy operator
      Formula f = parse_formula("F" + std::string(cur_.substr(b, col_ - b)) + "(p)");
      return f.interval();
    } catch (const ParseError& e) {
      col_ = b + static_cast<std::size_t>(std::max(0, e.column() - 2));
      fail(e.message());
    }
  }

  bool next_is_interval() {
    skip_ws();
    return col_ < cur_.size() && (cur_[col_] == '[' || cur_[col_] == '(');
  }

  void line(std::string_view raw, int no) {
    const auto hash = raw.find('#');
    cur_ = raw.substr(0, hash);
    col_ = 0;
    line_no_ = no;
    if (at_end()) return;
    const std::size_t kw_col = col_;
    const std::string kw = word();
    if (kw == "alphabet") {
      std::vector<std::string> names;
      while (!at_end()) {
        const std::size_t at = col_;
        std::string n = word();
        if (!is_letter_name(n)) {
          col_ = at;
          fail("invalid letter name '" + n + "'");
        }
        names.push_back(n);
      }
      alphabet_ = Alphabet(names);
      return;
    }
    if (kw == "lefttail" || kw == "righttail") {
      dense_ = true;
      std::optional<TimeInterval> iv;
      if (next_is_interval()) iv = interval();
      const Valuation v = valuation();
      if (kw == "lefttail") {
        left_ = v;
        left_iv_ = iv;
      } else {
        right_ = v;
        right_iv_ = iv;
      }
    } else if (kw == "seg") {
      dense_ = true;
      TimeInterval iv = interval();
      segs_.push_back({iv, valuation()});
    } else if (kw == "dlefttail") {
      discrete_ = true;
      dleft_ = valuation();
    } else if (kw == "drighttail") {
      discrete_ = true;
      dright_ = valuation();
    } else if (kw == "core") {
      discrete_ = true;
      const std::size_t at = col_;
      std::string k = word();
      if (k.rfind("k0=", 0) != 0) {
        col_ = at;
        fail("expected 'k0=<integer>'");
      }
      try {
        std::size_t used = 0;
        k0_ = std::stoll(k.substr(3), &used);
        if (used != k.size() - 3) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        col_ = at;
        fail("invalid core offset '" + k + "'");
      }
      core_.clear();
      while (!at_end()) core_.push_back(valuation());
    } else {
      col_ = kw_col;
      fail("unknown keyword '" + kw + "'");
    }
    if (!at_end()) fail("unexpected trailing text");
  }

  std::string_view text_;
  std::string_view cur_;
  std::size_t col_ = 0;
  int line_no_ = 0;
  std::optional<Alphabet> alphabet_;
  bool dense_ = false, discrete_ = false;
  std::optional<Valuation> left_, right_, dleft_, dright_;
  std::optional<TimeInterval> left_iv_, right_iv_;
  std::vector<Segment> segs_;
  std::int64_t k0_ = 0;
  std::vector<Valuation> core_;
};

}  // namespace detail

inline std::variant<DenseBehavior, DiscreteBehavior> parse_behavior(std::string_view text) {
  return detail::BehaviorReader(text).read();
}

inline DenseBehavior parse_dense_behavior(std::string_view text) {
  auto v = parse_behavior(text);
  if (!std::holds_alternative<DenseBehavior>(v)) throw ParseError("expected a dense behaviour", 1, 1);
  return std::get<DenseBehavior>(v);
}

inline DiscreteBehavior parse_discrete_behavior(std::string_view text) {
  auto v = parse_behavior(text);
  if (!std::holds_alternative<DiscreteBehavior>(v)) throw ParseError("expected a discrete behaviour", 1, 1);
  return std::get<DiscreteBehavior>(v);
}

}  // namespace mtlsample
