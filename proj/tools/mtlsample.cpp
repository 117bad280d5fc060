// Command-line driver.
//
// Exit codes: 0 success or verified, 1 refuted, 2 fail or a failing suite,
// 64 usage error, 65 malformed input.

#include "mtlsample/mtlsample.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

using namespace mtlsample;

namespace {

constexpr int exit_refuted = 1;
constexpr int exit_fail = 2;
constexpr int exit_usage = 64;
constexpr int exit_input = 65;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A parse failure tagged with the input it came from.
struct InputError : std::runtime_error {
  InputError(const std::string& source, const ParseError& e) : std::runtime_error(source + ":" + e.what()) {}
};

struct Input {
  std::string source;
  std::string text;
};

// Arguments name a file when one exists at that path, otherwise they are
// the text itself.
Input input(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return {arg, read_file(arg)};
  return {"<inline>", arg};
}

template <class F>
auto parsing(const Input& in, F&& f) {
  try {
    return f(in.text);
  } catch (const ParseError& e) {
    throw InputError(in.source, e);
  }
}

Formula formula_arg(const std::string& arg) {
  return parsing(input(arg), [](const std::string& t) { return parse_formula(t); });
}

std::variant<DenseBehavior, DiscreteBehavior> behavior_arg(const std::string& arg) {
  return parsing(input(arg), [](const std::string& t) { return parse_behavior(t); });
}

Rat rational(const std::string& name, const std::string& text) {
  const auto q = parse_rat(text);
  if (!q) throw UsageError("--" + name + ": expected a rational n or n/d, got '" + text + "'");
  return *q;
}

Rat positive(const std::string& name, const std::string& text) {
  Rat q = rational(name, text);
  if (q <= 0) throw UsageError("--" + name + " must be positive");
  return q;
}

std::uint64_t default_seed() {
  const char* s = std::getenv("MTLSAMPLE_SEED");
  if (!s || !*s) return 1;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used != std::string(s).size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("MTLSAMPLE_SEED is not an unsigned integer: '") + s + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metric temporal logic over dense and discrete time: sampling, adaptation and verification"};
  app.require_subcommand(1);

  std::string formula, behavior, spec, delta, z = "0", at, suite_name, format = "summary";
  bool expand = false, json = false;
  std::optional<int> bound;
  std::optional<std::uint64_t> seed;
  int instances = 200;
  unsigned threads = 0;

  auto formula_verb = [&](const char* name, const char* help, bool needs_delta) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("formula", formula, "formula text or file")->required();
    if (needs_delta) c->add_option("--delta", delta, "sampling period n or n/d")->required();
    c->add_flag("--expand", expand, "print derived operators by their definition");
    return c;
  };
  CLI::App* parse = formula_verb("parse", "parse a formula and print it in canonical form", false);
  CLI::App* adapt_r = formula_verb("adapt-r", "dense-to-discrete canonical adaptation", true);
  CLI::App* adapt_z = formula_verb("adapt-z", "discrete-to-dense canonical adaptation", true);
  CLI::App* under = formula_verb("under", "under-approximation", true);
  CLI::App* over = formula_verb("over", "over-approximation", true);

  CLI::App* sample_cmd = app.add_subcommand("sample", "sample a dense behaviour at z + k delta");
  sample_cmd->add_option("behavior", behavior, "behaviour text or file")->required();
  sample_cmd->add_option("--delta", delta, "sampling period")->required();
  sample_cmd->add_option("--z", z, "sampling origin (default 0)");

  CLI::App* eval = app.add_subcommand("eval", "truth value of a formula at one instant");
  eval->add_option("formula", formula, "formula text or file")->required();
  eval->add_option("behavior", behavior, "behaviour text or file")->required();
  eval->add_option("--at", at, "instant: a rational for dense behaviours, an integer for discrete ones")->required();

  CLI::App* satset = app.add_subcommand("satset", "set of instants where a formula holds");
  satset->add_option("formula", formula, "formula text or file")->required();
  satset->add_option("behavior", behavior, "behaviour text or file")->required();

  CLI::App* verify = app.add_subcommand("verify", "bounded dense-time verification through discretization");
  verify->add_option("spec", spec, "spec file or text with sys: and prop: sections")->required();
  verify->add_option("--delta", delta, "sampling period")->required();
  verify->add_option("--bound", bound, "core length bound of the discrete search")->check(CLI::PositiveNumber);
  verify->add_option("--threads", threads, "worker threads (0: all cores)");

  CLI::App* suite = app.add_subcommand("suite", "run a property suite (or 'all')");
  suite->add_option("name", suite_name, "suite name or 'all'")->required();
  suite->add_option("--seed", seed, "master seed (default: MTLSAMPLE_SEED or 1)");
  suite->add_option("--instances", instances, "kept instances per suite")->check(CLI::NonNegativeNumber);
  suite->add_option("--format", format, "summary or full")->check(CLI::IsMember({"summary", "full"}));
  suite->add_flag("--json", json, "print one machine-readable summary line per suite");
  suite->add_option("--threads", threads, "worker threads (0: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  try {
    auto print = [&](const Formula& f) { std::cout << to_string(f, expand) << "\n"; };
    if (*parse) {
      print(formula_arg(formula));
    } else if (*adapt_r) {
      print(adapt_R(formula_arg(formula), positive("delta", delta)));
    } else if (*adapt_z) {
      print(adapt_Z(formula_arg(formula), positive("delta", delta)));
    } else if (*under) {
      print(under_approx(formula_arg(formula), positive("delta", delta)));
    } else if (*over) {
      print(over_approx(formula_arg(formula), positive("delta", delta)));
    } else if (*sample_cmd) {
      const Rat d = positive("delta", delta), origin = rational("z", z);
      const auto b = behavior_arg(behavior);
      if (!std::holds_alternative<DenseBehavior>(b)) throw UsageError("sample expects a dense behaviour");
      std::cout << to_text(mtlsample::sample(std::get<DenseBehavior>(b), {d, origin}));
    } else if (*eval) {
      const Formula f = formula_arg(formula);
      const auto b = behavior_arg(behavior);
      const Rat t = rational("at", at);
      bool v;
      if (const auto* dense = std::get_if<DenseBehavior>(&b)) {
        v = eval_dense(f, *dense, t);
      } else {
        if (!is_integer(t)) throw UsageError("--at must be an integer for a discrete behaviour");
        v = eval_discrete(f, std::get<DiscreteBehavior>(b), to_int64(t));
      }
      std::cout << (v ? "true" : "false") << "\n";
    } else if (*satset) {
      const Formula f = formula_arg(formula);
      const auto b = behavior_arg(behavior);
      if (const auto* dense = std::get_if<DenseBehavior>(&b)) std::cout << sat_set(f, *dense).str() << "\n";
      else std::cout << sat_seq(f, std::get<DiscreteBehavior>(b)).str() << "\n";
    } else if (*verify) {
      const Rat d = positive("delta", delta);
      const SystemSpec s = parsing(input(spec), [](const std::string& t) { return parse_spec(t); });
      const Verdict v = mtl_verify(d, s, bound, threads);
      std::cout << v.summary() << "\n";
      std::cout << "over-model: " << to_string(v.models.over) << "\n";
      std::cout << "under-model: " << to_string(v.models.under) << "\n";
      if (v.over_check.witness)
        std::cout << "over-model falsified by " << to_line(*v.over_check.witness) << " at " << v.over_check.instant << "\n";
      if (v.counterexample) {
        std::cout << "counterexample, property false at " << v.instant << ":\n" << to_text(*v.counterexample);
      }
      if (v.outcome == Outcome::refuted) return exit_refuted;
      if (v.outcome == Outcome::fail) return exit_fail;
    } else if (*suite) {
      GenConfig cfg;
      cfg.seed = seed ? *seed : default_seed();
      cfg.instances = instances;
      cfg.threads = threads;
      std::vector<std::string> names;
      if (suite_name == "all") names = suite_names();
      else names.push_back(suite_name);
      for (const auto& n : names)
        if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end())
          throw UsageError("unknown suite '" + n + "'");
      bool all_pass = true;
      for (const auto& n : names) {
        const SuiteReport r = run_suite(n, cfg);
        if (json) std::cout << r.summary().dump() << "\n";
        else std::cout << r.text(format == "full");
        all_pass = all_pass && r.passed();
      }
      if (!all_pass) return exit_fail;
    }
  } catch (const UsageError& e) {
    std::cerr << "mtlsample: " << e.what() << "\n";
    return exit_usage;
  } catch (const InputError& e) {
    std::cerr << e.what() << "\n";
    return exit_input;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return exit_input;
  } catch (const std::invalid_argument& e) {
    std::cerr << "mtlsample: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::domain_error& e) {
    std::cerr << "mtlsample: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "mtlsample: " << e.what() << "\n";
    return exit_fail;
  }
  return 0;
}
