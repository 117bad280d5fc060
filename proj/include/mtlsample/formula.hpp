#pragma once

// MTL formulas in negation normal form.
//
// A Formula is an immutable, reference-counted tree.  Basic nodes are the
// propositional literals, conjunction, disjunction and the four interval
// modalities.  Derived operators (eventually, globally, always, sometimes,
// nowon, uptonow, becf, becp and their past twins) are kept as nodes of their
// own so that they survive printing, but each such node carries its exact
// expansion into basic nodes and every semantic question is answered on that
// expansion.

#include "mtlsample/interval.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtlsample {

enum class Kind : std::uint8_t {
  prop,
  neg_prop,
  conj,
  disj,
  until,
  since,
  release,
  trigger,
  // derived
  eventually,       // F_I
  eventually_past,  // FP_I
  globally,         // G_I
  globally_past,    // GP_I
  always,           // Alw
  sometimes,        // Som
  nowon,
  uptonow,
  becf,
  becp,
};

inline bool is_modality(Kind k) {
  return k == Kind::until || k == Kind::since || k == Kind::release || k == Kind::trigger;
}
inline bool is_derived(Kind k) { return static_cast<int>(k) >= static_cast<int>(Kind::eventually); }
inline bool has_interval(Kind k) {
  return is_modality(k) || k == Kind::eventually || k == Kind::eventually_past || k == Kind::globally ||
         k == Kind::globally_past;
}
inline bool is_temporal(Kind k) { return is_modality(k) || is_derived(k); }

/// Letter used to spell true and false; it never occurs in user input.
inline const std::string& reserved_letter() {
  static const std::string name = "_top";
  return name;
}

struct Node;

class Formula {
 public:
  Formula() = default;

  explicit operator bool() const { return static_cast<bool>(node_); }

  Kind kind() const;
  const std::string& letter() const;
  const TimeInterval& interval() const;
  bool matching() const;
  /// First argument (the only one for unary derived operators).
  const Formula& lhs() const;
  const Formula& rhs() const;
  /// Expansion into basic nodes, one level deep.  Null for basic nodes.
  const Formula& expansion() const;
  std::size_t hash() const;
  const Node* id() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  friend Formula make_node(Node n);
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Node {
  Kind kind = Kind::prop;
  std::string letter;
  TimeInterval iv;
  bool matching = false;
  Formula a;
  Formula b;
  Formula expansion;
  std::size_t hash = 0;
};

namespace detail {
inline std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}
inline std::size_t hash_bound(const Bound& b) {
  if (!b.is_finite()) return b.is_pos_inf() ? 0x51ULL : 0x52ULL;
  return mix(std::hash<std::string>{}(b.value().get_str()), 0x53ULL);
}
inline std::size_t hash_interval(const TimeInterval& i) {
  std::size_t h = hash_bound(i.lo);
  h = mix(h, hash_bound(i.hi));
  return mix(h, (i.lo_closed ? 2u : 0u) | (i.hi_closed ? 1u : 0u));
}
}  // namespace detail

inline Formula make_node(Node n) {
  std::size_t h = static_cast<std::size_t>(n.kind) * 0x100000001b3ULL;
  h = detail::mix(h, std::hash<std::string>{}(n.letter));
  if (has_interval(n.kind)) h = detail::mix(h, detail::hash_interval(n.iv));
  h = detail::mix(h, n.matching ? 7u : 3u);
  if (n.a) h = detail::mix(h, n.a.hash());
  if (n.b) h = detail::mix(h, n.b.hash());
  n.hash = h;
  return Formula(std::make_shared<const Node>(std::move(n)));
}

inline Kind Formula::kind() const { return node_->kind; }
inline const std::string& Formula::letter() const { return node_->letter; }
inline const TimeInterval& Formula::interval() const { return node_->iv; }
inline bool Formula::matching() const { return node_->matching; }
inline const Formula& Formula::lhs() const { return node_->a; }
inline const Formula& Formula::rhs() const { return node_->b; }
inline const Formula& Formula::expansion() const { return node_->expansion; }
inline std::size_t Formula::hash() const { return node_ ? node_->hash : 0; }

inline bool operator==(const Formula& x, const Formula& y) {
  if (x.node_ == y.node_) return true;
  if (!x.node_ || !y.node_) return false;
  const Node& a = *x.node_;
  const Node& b = *y.node_;
  if (a.hash != b.hash || a.kind != b.kind || a.matching != b.matching || a.letter != b.letter) return false;
  if (has_interval(a.kind) && !(a.iv == b.iv)) return false;
  return a.a == b.a && a.b == b.b;
}

// ---------------------------------------------------------------------------
// Constructors of basic nodes.

inline Formula prop(std::string name) {
  Node n;
  n.kind = Kind::prop;
  n.letter = std::move(name);
  return make_node(std::move(n));
}

inline Formula neg_prop(std::string name) {
  Node n;
  n.kind = Kind::neg_prop;
  n.letter = std::move(name);
  return make_node(std::move(n));
}

inline Formula conj(Formula a, Formula b) {
  Node n;
  n.kind = Kind::conj;
  n.a = std::move(a);
  n.b = std::move(b);
  return make_node(std::move(n));
}

inline Formula disj(Formula a, Formula b) {
  Node n;
  n.kind = Kind::disj;
  n.a = std::move(a);
  n.b = std::move(b);
  return make_node(std::move(n));
}

inline Formula top() { return disj(prop(reserved_letter()), neg_prop(reserved_letter())); }
inline Formula bottom() { return conj(neg_prop(reserved_letter()), prop(reserved_letter())); }

inline bool is_top(const Formula& f) { return f == top(); }
inline bool is_bottom(const Formula& f) { return f == bottom(); }

inline Formula modality(Kind k, TimeInterval iv, Formula a, Formula b, bool matching = false) {
  if (!is_modality(k)) throw std::invalid_argument("not a basic modality");
  Node n;
  n.kind = k;
  n.iv = std::move(iv);
  n.matching = matching;
  n.a = std::move(a);
  n.b = std::move(b);
  return make_node(std::move(n));
}

inline Formula until(TimeInterval iv, Formula a, Formula b, bool matching = false) {
  return modality(Kind::until, std::move(iv), std::move(a), std::move(b), matching);
}
inline Formula since(TimeInterval iv, Formula a, Formula b, bool matching = false) {
  return modality(Kind::since, std::move(iv), std::move(a), std::move(b), matching);
}
inline Formula release(TimeInterval iv, Formula a, Formula b, bool matching = false) {
  return modality(Kind::release, std::move(iv), std::move(a), std::move(b), matching);
}
inline Formula trigger(TimeInterval iv, Formula a, Formula b, bool matching = false) {
  return modality(Kind::trigger, std::move(iv), std::move(a), std::move(b), matching);
}

Formula negate(const Formula& f);

// ---------------------------------------------------------------------------
// Derived operators.

namespace detail {
inline Formula derived(Kind k, const TimeInterval& iv, Formula arg, Formula expansion) {
  Node n;
  n.kind = k;
  if (has_interval(k)) n.iv = iv;
  n.a = std::move(arg);
  n.expansion = std::move(expansion);
  return make_node(std::move(n));
}
}  // namespace detail

inline Formula eventually(TimeInterval iv, Formula f) {
  return detail::derived(Kind::eventually, iv, f, until(iv, top(), f));
}
inline Formula eventually_past(TimeInterval iv, Formula f) {
  return detail::derived(Kind::eventually_past, iv, f, since(iv, top(), f));
}
inline Formula globally(TimeInterval iv, Formula f) {
  return detail::derived(Kind::globally, iv, f, release(iv, bottom(), f));
}
inline Formula globally_past(TimeInterval iv, Formula f) {
  return detail::derived(Kind::globally_past, iv, f, trigger(iv, bottom(), f));
}
inline Formula always(Formula f) {
  const auto q = TimeInterval::nonnegative();
  return detail::derived(Kind::always, q, f, conj(globally_past(q, f), globally(q, f)));
}
inline Formula sometimes(Formula f) {
  const auto q = TimeInterval::nonnegative();
  return detail::derived(Kind::sometimes, q, f, disj(eventually_past(q, f), eventually(q, f)));
}
inline Formula nowon(Formula f) {
  const auto pos = TimeInterval::positive();
  Formula e = disj(until(pos, f, top()), conj(negate(f), release(pos, f, bottom())));
  return detail::derived(Kind::nowon, pos, f, std::move(e));
}
inline Formula uptonow(Formula f) {
  const auto pos = TimeInterval::positive();
  Formula e = disj(since(pos, f, top()), conj(negate(f), trigger(pos, f, bottom())));
  return detail::derived(Kind::uptonow, pos, f, std::move(e));
}
inline Formula becf(Formula f) { return detail::derived(Kind::becf, {}, f, disj(f, nowon(f))); }
inline Formula becp(Formula f) { return detail::derived(Kind::becp, {}, f, disj(f, uptonow(f))); }

/// Rebuilds a derived node of kind `k` from its argument (and interval).
inline Formula make_derived(Kind k, const TimeInterval& iv, const Formula& arg) {
  switch (k) {
    case Kind::eventually: return eventually(iv, arg);
    case Kind::eventually_past: return eventually_past(iv, arg);
    case Kind::globally: return globally(iv, arg);
    case Kind::globally_past: return globally_past(iv, arg);
    case Kind::always: return always(arg);
    case Kind::sometimes: return sometimes(arg);
    case Kind::nowon: return nowon(arg);
    case Kind::uptonow: return uptonow(arg);
    case Kind::becf: return becf(arg);
    case Kind::becp: return becp(arg);
    default: throw std::invalid_argument("not a derived operator");
  }
}

/// Table expansion by operator name: F, FP, G, GP, Alw, Som, now, upto,
/// becf, becp (unary) and UM, SM, RM, TM (binary, expanded to the explicit
/// conjunction or disjunction).  The interval is ignored by operators that
/// take none.
inline Formula expand_derived(const std::string& name, const std::vector<Formula>& args,
                              const TimeInterval& iv = TimeInterval::nonnegative()) {
  auto want = [&](std::size_t n) {
    if (args.size() != n) throw std::invalid_argument("wrong number of arguments for " + name);
  };
  static const std::map<std::string, Kind> unary = {
      {"F", Kind::eventually}, {"FP", Kind::eventually_past}, {"G", Kind::globally},
      {"GP", Kind::globally_past}, {"Alw", Kind::always}, {"Som", Kind::sometimes},
      {"now", Kind::nowon}, {"upto", Kind::uptonow}, {"becf", Kind::becf},
      {"becp", Kind::becp}};
  if (auto it = unary.find(name); it != unary.end()) {
    want(1);
    return make_derived(it->second, iv, args[0]).expansion();
  }
  if (name == "UM") {
    want(2);
    return until(iv, args[0], conj(args[1], args[0]));
  }
  if (name == "SM") {
    want(2);
    return since(iv, args[0], conj(args[1], args[0]));
  }
  if (name == "RM") {
    want(2);
    return release(iv, args[0], disj(args[1], args[0]));
  }
  if (name == "TM") {
    want(2);
    return trigger(iv, args[0], disj(args[1], args[0]));
  }
  throw std::invalid_argument("unknown derived operator: " + name);
}

inline Formula implies(const Formula& a, const Formula& b) { return disj(negate(a), b); }
inline Formula iff(const Formula& a, const Formula& b) {
  return conj(disj(negate(a), b), disj(a, negate(b)));
}

inline Formula conj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return top();
  Formula acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) acc = conj(acc, fs[i]);
  return acc;
}

// ---------------------------------------------------------------------------
// Negation.  Basic nodes follow the until/release and since/trigger duality,
// with the matching flag preserved (a matching until negates to a matching
// release).  Derived nodes map to their duals where one exists; becf and
// becp negate through their expansion.

inline Formula negate(const Formula& f) {
  switch (f.kind()) {
    case Kind::prop: return neg_prop(f.letter());
    case Kind::neg_prop: return prop(f.letter());
    case Kind::conj: return disj(negate(f.lhs()), negate(f.rhs()));
    case Kind::disj: return conj(negate(f.lhs()), negate(f.rhs()));
    case Kind::until: return release(f.interval(), negate(f.lhs()), negate(f.rhs()), f.matching());
    case Kind::release: return until(f.interval(), negate(f.lhs()), negate(f.rhs()), f.matching());
    case Kind::since: return trigger(f.interval(), negate(f.lhs()), negate(f.rhs()), f.matching());
    case Kind::trigger: return since(f.interval(), negate(f.lhs()), negate(f.rhs()), f.matching());
    case Kind::eventually: return globally(f.interval(), negate(f.lhs()));
    case Kind::globally: return eventually(f.interval(), negate(f.lhs()));
    case Kind::eventually_past: return globally_past(f.interval(), negate(f.lhs()));
    case Kind::globally_past: return eventually_past(f.interval(), negate(f.lhs()));
    case Kind::always: return sometimes(negate(f.lhs()));
    case Kind::sometimes: return always(negate(f.lhs()));
    // Over finitely variable behaviours "not continuously phi right after t"
    // is "continuously not phi right after t".
    case Kind::nowon: return nowon(negate(f.lhs()));
    case Kind::uptonow: return uptonow(negate(f.lhs()));
    case Kind::becf:
    case Kind::becp: return negate(f.expansion());
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Structural queries.

/// Fully expanded form: only literals, and/or and the four modalities.
inline Formula core(const Formula& f) {
  switch (f.kind()) {
    case Kind::prop:
    case Kind::neg_prop: return f;
    case Kind::conj:
    case Kind::disj: {
      Formula a = core(f.lhs());
      Formula b = core(f.rhs());
      if (a == f.lhs() && b == f.rhs()) return f;
      return f.kind() == Kind::conj ? conj(a, b) : disj(a, b);
    }
    case Kind::until:
    case Kind::since:
    case Kind::release:
    case Kind::trigger: {
      Formula a = core(f.lhs());
      Formula b = core(f.rhs());
      if (a == f.lhs() && b == f.rhs()) return f;
      return modality(f.kind(), f.interval(), a, b, f.matching());
    }
    default: return core(f.expansion());
  }
}

/// Expansion of every derived node and of every matching flag.
inline Formula explicit_core(const Formula& f) {
  Formula c = core(f);
  std::function<Formula(const Formula&)> go = [&](const Formula& g) -> Formula {
    switch (g.kind()) {
      case Kind::prop:
      case Kind::neg_prop: return g;
      case Kind::conj: return conj(go(g.lhs()), go(g.rhs()));
      case Kind::disj: return disj(go(g.lhs()), go(g.rhs()));
      default: {
        Formula a = go(g.lhs());
        Formula b = go(g.rhs());
        if (g.matching()) {
          const bool existential = g.kind() == Kind::until || g.kind() == Kind::since;
          b = existential ? conj(b, a) : disj(b, a);
        }
        return modality(g.kind(), g.interval(), a, b, false);
      }
    }
  };
  return go(c);
}

inline bool is_propositional(const Formula& f) {
  switch (f.kind()) {
    case Kind::prop:
    case Kind::neg_prop: return true;
    case Kind::conj:
    case Kind::disj: return is_propositional(f.lhs()) && is_propositional(f.rhs());
    default: return false;
  }
}

/// Temporal nesting depth of the expanded formula.
inline int temporal_depth(const Formula& f) {
  switch (f.kind()) {
    case Kind::prop:
    case Kind::neg_prop: return 0;
    case Kind::conj:
    case Kind::disj: return std::max(temporal_depth(f.lhs()), temporal_depth(f.rhs()));
    case Kind::until:
    case Kind::since:
    case Kind::release:
    case Kind::trigger: return 1 + std::max(temporal_depth(f.lhs()), temporal_depth(f.rhs()));
    default: return temporal_depth(f.expansion());
  }
}

/// Calls `fn` on every interval of the expanded formula.
inline void for_each_interval(const Formula& f, const std::function<void(const TimeInterval&)>& fn) {
  switch (f.kind()) {
    case Kind::prop:
    case Kind::neg_prop: return;
    case Kind::conj:
    case Kind::disj:
      for_each_interval(f.lhs(), fn);
      for_each_interval(f.rhs(), fn);
      return;
    case Kind::until:
    case Kind::since:
    case Kind::release:
    case Kind::trigger:
      fn(f.interval());
      for_each_interval(f.lhs(), fn);
      for_each_interval(f.rhs(), fn);
      return;
    default: for_each_interval(f.expansion(), fn);
  }
}

/// Propositional letters, excluding the reserved one.
inline std::set<std::string> letters(const Formula& f) {
  std::set<std::string> out;
  std::function<void(const Formula&)> go = [&](const Formula& g) {
    switch (g.kind()) {
      case Kind::prop:
      case Kind::neg_prop:
        if (g.letter() != reserved_letter()) out.insert(g.letter());
        return;
      default:
        if (g.lhs()) go(g.lhs());
        if (g.rhs()) go(g.rhs());
    }
  };
  go(f);
  return out;
}

inline bool is_qualitative(const TimeInterval& i) { return i == TimeInterval::nonnegative(); }

inline bool is_ltl(const Formula& f) {
  bool ok = true;
  for_each_interval(f, [&](const TimeInterval& i) { ok = ok && is_qualitative(i); });
  return ok;
}

struct Classification {
  bool flat = false;
  /// Flat over LTL atoms: metric modalities take LTL arguments.
  bool flat_plus_nesting = false;
  bool ltl = false;
  bool dense_endpoint = true;
  bool discrete_endpoint = false;
};

namespace detail {
inline bool flat_over(const Formula& c, const std::function<bool(const Formula&)>& atom) {
  if (atom(c)) return true;
  switch (c.kind()) {
    case Kind::conj:
    case Kind::disj: return flat_over(c.lhs(), atom) && flat_over(c.rhs(), atom);
    case Kind::until:
    case Kind::since:
    case Kind::release:
    case Kind::trigger: return atom(c.lhs()) && atom(c.rhs());
    default: return false;
  }
}
}  // namespace detail

inline Classification classify(const Formula& f) {
  const Formula c = core(f);
  Classification r;
  r.flat = detail::flat_over(c, is_propositional);
  r.ltl = is_ltl(c);
  r.flat_plus_nesting = detail::flat_over(c, [](const Formula& g) { return is_ltl(g); });
  bool integral = true;
  for_each_interval(c, [&](const TimeInterval& i) {
    if (i.lo.is_finite() && !is_integer(i.lo.value())) integral = false;
    if (i.hi.is_finite() && !is_integer(i.hi.value())) integral = false;
  });
  r.discrete_endpoint = integral;
  r.dense_endpoint = true;
  return r;
}

inline bool is_flat(const Formula& f) { return classify(f).flat; }

// ---------------------------------------------------------------------------
// Granularity.

struct Granularity {
  BigInt r;
  BigInt R;
  friend bool operator==(const Granularity&, const Granularity&) = default;
};

/// Finite non-zero endpoints of the expanded formula.
inline std::vector<Rat> nonzero_endpoints(const Formula& f) {
  std::vector<Rat> out;
  for_each_interval(f, [&](const TimeInterval& i) {
    for (const Bound* b : {&i.lo, &i.hi})
      if (b->is_finite() && b->value() != 0) out.push_back(b->value());
  });
  return out;
}

/// Empty optional when the formula has no finite non-zero endpoint.
inline std::optional<Granularity> granularity(const std::vector<Formula>& fs) {
  std::optional<Granularity> g;
  for (const auto& f : fs) {
    for (const Rat& q : nonzero_endpoints(f)) {
      BigInt num = abs(q.get_num());
      BigInt den = q.get_den();
      if (!g) {
        g = Granularity{num, den};
      } else {
        g->r = gcd(g->r, num);
        g->R = lcm(g->R, den);
      }
    }
  }
  return g;
}
inline std::optional<Granularity> granularity(const Formula& f) { return granularity(std::vector<Formula>{f}); }

inline bool in_D(const std::vector<Formula>& fs, const Rat& delta) {
  if (delta <= 0) return false;
  for (const auto& f : fs)
    for (const Rat& q : nonzero_endpoints(f))
      if (!is_integer(Rat(q / delta))) return false;
  return true;
}
inline bool in_D(const Formula& f, const Rat& delta) { return in_D(std::vector<Formula>{f}, delta); }

/// Largest member of D; empty when every positive delta qualifies.
inline std::optional<Rat> max_D(const std::vector<Formula>& fs) {
  auto g = granularity(fs);
  if (!g) return std::nullopt;
  return make_rat(g->r, g->R);
}
inline std::optional<Rat> max_D(const Formula& f) { return max_D(std::vector<Formula>{f}); }

/// Largest finite endpoint magnitude of the expanded formula (0 if none).
inline Rat max_endpoint_magnitude(const Formula& f) {
  Rat m = 0;
  for_each_interval(f, [&](const TimeInterval& i) {
    for (const Bound* b : {&i.lo, &i.hi})
      if (b->is_finite()) m = std::max<Rat>(m, abs(b->value()));
  });
  return m;
}

// ---------------------------------------------------------------------------
// Structure-preserving rewriting of modality intervals.

/// Tries to express `e` (the image of a derived node's expansion under some
/// transformation) as a derived node of kind `k` again.  Returns `e` itself
/// when the shape no longer matches the operator's definition.
inline Formula refold(Kind k, const Formula& e) {
  std::optional<Formula> cand;
  switch (k) {
    case Kind::eventually:
    case Kind::eventually_past:
    case Kind::globally:
    case Kind::globally_past:
      if (is_modality(e.kind())) cand = make_derived(k, e.interval(), e.rhs());
      break;
    case Kind::always:
    case Kind::sometimes:
      if ((e.kind() == Kind::conj || e.kind() == Kind::disj) && e.rhs().expansion() && is_derived(e.rhs().kind()))
        cand = make_derived(k, {}, e.rhs().lhs());
      break;
    case Kind::nowon:
    case Kind::uptonow:
      if (e.kind() == Kind::disj && is_modality(e.lhs().kind())) cand = make_derived(k, {}, e.lhs().lhs());
      break;
    case Kind::becf:
    case Kind::becp:
      if (e.kind() == Kind::disj) cand = make_derived(k, {}, e.lhs());
      break;
    default: break;
  }
  if (cand && cand->expansion() == e) return *cand;
  return e;
}

/// Applies `fn` to every basic modality (bottom-up, arguments already
/// rewritten) and rebuilds derived nodes through their expansions.
inline Formula map_modalities(const Formula& f,
                              const std::function<Formula(const Formula& node, Formula a, Formula b)>& fn) {
  switch (f.kind()) {
    case Kind::prop:
    case Kind::neg_prop: return f;
    case Kind::conj: return conj(map_modalities(f.lhs(), fn), map_modalities(f.rhs(), fn));
    case Kind::disj: return disj(map_modalities(f.lhs(), fn), map_modalities(f.rhs(), fn));
    case Kind::until:
    case Kind::since:
    case Kind::release:
    case Kind::trigger: return fn(f, map_modalities(f.lhs(), fn), map_modalities(f.rhs(), fn));
    default: return refold(f.kind(), map_modalities(f.expansion(), fn));
  }
}

}  // namespace mtlsample
