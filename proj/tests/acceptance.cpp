// Acceptance run: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails.  Property suites use the default seed unless
// MTLSAMPLE_SEED is set.

#include "mtlsample/mtlsample.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using namespace mtlsample;

namespace {

struct Result {
  bool ok = true;
  std::string detail;
  std::vector<std::string> why;

  void require(bool c, const std::string& msg) {
    if (!c) {
      ok = false;
      why.push_back(msg);
    }
  }
};

Rat q(long n, long d = 1) { return make_rat(n, d); }
Formula P(const char* s) { return parse_formula(s); }

std::uint64_t seed() {
  if (const char* s = std::getenv("MTLSAMPLE_SEED")) return std::stoull(s);
  return 1;
}

GenConfig config(int instances) {
  GenConfig c;
  c.seed = seed();
  c.instances = instances;
  return c;
}

std::string counts(const SuiteReport& r) {
  return std::to_string(r.kept) + " kept of " + std::to_string(r.attempts) + ", " + std::to_string(r.checks) +
         " checks, " + std::to_string(r.violations) + " violations";
}

void require_suite(Result& res, const SuiteReport& r, int at_least) {
  res.require(r.kept >= at_least, r.name + ": only " + std::to_string(r.kept) + " instances kept");
  res.require(r.violations == 0, r.name + ": " + std::to_string(r.violations) + " violations");
  res.require(r.status() == "PASS", r.name + ": status " + r.status());
  for (std::size_t i = 0; i < r.failures.size() && i < 2; ++i) res.why.push_back(r.failures[i]);
}

long counter(const SuiteReport& r, const std::string& k) {
  auto it = r.counters.find(k);
  return it == r.counters.end() ? 0 : it->second;
}

SystemSpec table2() { return make_spec({P("Som(p) & Som(!p)"), P("p -> G(p)")}, P("p -> F[1,1](p)")); }

Result ac1() {
  Result r;
  for (int k : {3, 5}) {
    const Verdict v = mtl_verify(q(1), table2(), k);
    r.require(v.outcome == Outcome::fail, "k=" + std::to_string(k) + ": " + v.summary());
    r.require(!v.over_check.valid && v.over_check.witness.has_value(),
              "k=" + std::to_string(k) + ": over-model not invalid with a witness");
    r.require(v.under_check && v.under_check->valid, "k=" + std::to_string(k) + ": under-model not valid");
    if (v.over_check.witness) {
      const Models m = build_models(table2(), q(1));
      r.require(!globally_sat_discrete(m.over, *v.over_check.witness), "witness does not falsify the over-model");
      r.detail += " k=" + std::to_string(k) + ": " + v.summary() + ", witness " + to_line(*v.over_check.witness) + ";";
    }
  }
  return r;
}

Result ac2() {
  Result r;
  for (const Rat& delta : {q(1), q(1, 2)}) {
    const Formula psi2 = implies(prop("p"), globally(TimeInterval::make(delta, true, Bound::pos_inf(), false), prop("p")));
    const SystemSpec s = make_spec({P("Som(p) & Som(!p)"), psi2}, P("p -> G[1,1](p)"));
    const Verdict v = mtl_verify(delta, s, 5);
    r.require(v.outcome == Outcome::verified, "delta=" + to_string(delta) + ": " + v.summary());
    r.detail += " delta=" + to_string(delta) + ": " + v.summary() + ";";
  }
  return r;
}

Result ac3() {
  Result r;
  const SuiteReport s = run_suite("table3", config(100));
  r.require(s.kept == 300, "expected 100 behaviours for each k");
  require_suite(r, s, 300);
  r.detail = " " + counts(s);
  return r;
}

Result ac4() {
  Result r;
  const Formula a = adapt_R(P("G[0,2](p)"), q(3, 10));
  r.require(a == P("G[0,6](p)") && to_string(a) == "G[0,6](p)", "adapt_R(G[0,2](p), 3/10) = " + to_string(a));
  const Formula beta = adapt_R(P("GP(0,inf)(!p) & G(0,inf)(p)"), q(1));
  const Formula beta_closed = closed_integer_form(beta);
  r.require(beta_closed == P("GP[1,inf)(!p) & G[1,inf)(p)"), "adapt_R(beta) = " + to_string(beta_closed));
  const Formula z = adapt_Z(P("q -> G[2,5](p)"), q(1));
  r.require(z == P("q -> G[3,4](p)"), "adapt_Z(q -> G[2,5](p), 1) = " + to_string(z));
  r.detail = " " + to_string(a) + "; " + to_string(beta_closed) + "; " + to_string(z);
  return r;
}

Result ac5() {
  Result r;
  GenConfig c = config(200);
  c.origins = 3;
  const SuiteReport s = run_suite("cus", c);
  require_suite(r, s, 200);
  r.require(counter(s, "origins checked") >= 3L * s.kept, "fewer than 3 origins per kept instance");
  r.detail = " " + counts(s) + ", " + std::to_string(counter(s, "origins checked")) + " origins checked";
  return r;
}

Result ac6() {
  Result r;
  const SuiteReport s = run_suite("cuis", config(200));
  require_suite(r, s, 200);
  r.require(counter(s, "completions aligned") > 0 && counter(s, "completions jittered") > 0,
            "both aligned and jittered completions must occur");
  r.detail = " " + counts(s) + ", completions aligned " + std::to_string(counter(s, "completions aligned")) +
             " / jittered " + std::to_string(counter(s, "completions jittered"));
  return r;
}

Result ac7() {
  Result r;
  const SuiteReport u = run_suite("under", config(200));
  const SuiteReport o = run_suite("over", config(200));
  require_suite(r, u, 200);
  require_suite(r, o, 200);
  r.detail = " under: " + counts(u) + "; over: " + counts(o);
  return r;
}

Result ac8() {
  Result r;
  const SuiteReport s = run_suite("oracle", config(10000));
  require_suite(r, s, 10000);
  r.detail = " " + counts(s);
  return r;
}

Result ac9() {
  Result r;
  const SuiteReport l = run_suite("lemma28", config(500));
  const SuiteReport s = run_suite("shiftability", config(200));
  require_suite(r, l, 500);
  require_suite(r, s, 200);
  const Formula lambda = P("upto(!p) & now(p)");
  const DenseBehavior step(Alphabet(std::vector<std::string>{"p"}), {q(0)}, {0}, {0, 1});
  for (const Rat& eps : {q(1), q(1, 2), q(1, 10)})
    r.require(!check_shiftable_on(lambda, step, eps), "upto(!p) & now(p) shiftable at eps=" + to_string(eps));
  r.detail = " lemma28: " + counts(l) + "; shiftability: " + counts(s);
  return r;
}

Result ac10() {
  Result r;
  const SuiteReport s = run_suite("complement", config(1000));
  require_suite(r, s, 1000);
  r.require(counter(s, "dense") == 500 && counter(s, "discrete") == 500, "expected 500 dense and 500 discrete");
  r.detail = " " + counts(s);
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> acs{
      {"incompleteness example: fail, over-model refuted, under-model valid (< 10 s)", ac1},
      {"revised system verified at delta 1 and 1/2, k=5 (< 30 s)", ac2},
      {"approximation table at delta 1/k, 100 behaviours per k", ac3},
      {"adaptation goldens", ac4},
      {"closure under sampling, 200 global models, 3 origins (< 2 min)", ac5},
      {"closure under inverse sampling, 200 discrete models (< 2 min)", ac6},
      {"under- and over-approximation suites, 200 each", ac7},
      {"dense evaluator against the grid oracle, 10^4 triples (< 5 min)", ac8},
      {"change-point lemma (500) and LTL shiftability (200)", ac9},
      {"complement partitions the time line, 500 dense + 500 discrete", ac10},
  };
  const double limits[] = {10, 30, 0, 0, 120, 120, 0, 300, 0, 0};
  int failed = 0;
  for (std::size_t i = 0; i < acs.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = acs[i].second();
    } catch (const std::exception& e) {
      r.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limits[i] > 0) r.require(secs < limits[i], "took " + std::to_string(secs) + " s");
    if (!r.ok) ++failed;
    std::cout << "AC" << i + 1 << " " << (r.ok ? "PASS" : "FAIL") << "  " << acs[i].first << " [" << std::fixed;
    std::cout.precision(2);
    std::cout << secs << " s]" << r.detail << "\n";
    std::cout.unsetf(std::ios::fixed);
    for (const auto& w : r.why) std::cout << "    " << w << "\n";
  }
  std::cout << (acs.size() - static_cast<std::size_t>(failed)) << "/" << acs.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
