#pragma once

// Flattening by fresh letters: every temporal subformula that occurs inside
// the argument of another temporal operator is named by a new letter a_i and
// constrained by a definition (a_i <-> psi_i).  Under global satisfiability
// the conjunction of the rewritten formula and the definitions is
// equi-satisfiable with the input.

#include "mtlsample/formula.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mtlsample {

struct FlattenResult {
  Formula formula;
  /// Fresh letter and the flat temporal formula it names, in creation order.
  std::vector<std::pair<std::string, Formula>> definitions;
};

class Flattener {
 public:
  explicit Flattener(std::string prefix = "a") : prefix_(std::move(prefix)) {}

  FlattenResult run(const Formula& f) {
    used_ = letters(f);
    defs_.clear();
    names_.clear();
    Formula main = top_level(f);
    std::vector<Formula> parts{main};
    for (const auto& [name, psi] : defs_) parts.push_back(iff(prop(name), psi));
    Formula out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) out = conj(out, parts[i]);
    return {out, defs_};
  }

 private:
  Formula rebuild(const Formula& f) {
    if (is_derived(f.kind())) return make_derived(f.kind(), f.interval(), argument(f.lhs()));
    return modality(f.kind(), f.interval(), argument(f.lhs()), argument(f.rhs()), f.matching());
  }

  Formula top_level(const Formula& f) {
    switch (f.kind()) {
      case Kind::prop:
      case Kind::neg_prop: return f;
      case Kind::conj: return conj(top_level(f.lhs()), top_level(f.rhs()));
      case Kind::disj: return disj(top_level(f.lhs()), top_level(f.rhs()));
      default: return rebuild(f);
    }
  }

  // Arguments of temporal operators come back propositional.
  Formula argument(const Formula& f) {
    switch (f.kind()) {
      case Kind::prop:
      case Kind::neg_prop: return f;
      case Kind::conj: return conj(argument(f.lhs()), argument(f.rhs()));
      case Kind::disj: return disj(argument(f.lhs()), argument(f.rhs()));
      default: break;
    }
    Formula inner = rebuild(f);
    for (const auto& [psi, name] : names_)
      if (psi == inner) return prop(name);
    std::string name = prefix_ + std::to_string(defs_.size() + 1);
    if (used_.count(name)) throw std::invalid_argument("fresh letter '" + name + "' already occurs in the formula");
    names_.emplace_back(inner, name);
    defs_.emplace_back(name, inner);
    return prop(name);
  }

  std::string prefix_;
  std::set<std::string> used_;
  std::vector<std::pair<std::string, Formula>> defs_;
  std::vector<std::pair<Formula, std::string>> names_;
};

inline FlattenResult flatten(const Formula& f, const std::string& prefix = "a") { return Flattener(prefix).run(f); }

}  // namespace mtlsample
