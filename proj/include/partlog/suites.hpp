#ifndef PARTLOG_SUITES_HPP
#define PARTLOG_SUITES_HPP

// Named, versioned lists of exhaustive checks run by `partlog suite <name>`.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "partlog/algebra.hpp"
#include "partlog/core.hpp"
#include "partlog/formula.hpp"
#include "partlog/ops.hpp"
#include "partlog/text.hpp"

namespace partlog {

inline constexpr int kSuiteVersion = 1;

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteOptions {
  std::size_t jobs = 1;
};

/// Runs pred(i) for i in [0, count) across jobs threads; returns the least
/// failing index, or count if every call returned true.
inline std::size_t parallel_find_failure(std::size_t count, std::size_t jobs,
                                         const std::function<bool(std::size_t)>& pred) {
  std::atomic<std::size_t> best{count};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const auto i = next.fetch_add(1);
      if (i >= count || i >= best.load()) return;
      if (!pred(i)) {
        auto cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (std::size_t j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  return best.load();
}

namespace detail {

/// Checks pred on every ordered pair of partitions for each n in [lo, hi].
inline CheckResult check_pairs(std::string name, std::size_t lo, std::size_t hi,
                               const SuiteOptions& opt,
                               const std::function<bool(const Partition&, const Partition&)>& pred) {
  std::uint64_t checked = 0;
  for (std::size_t n = lo; n <= hi; ++n) {
    const auto all = all_partitions(n);
    const auto m = all.size();
    // Rows are the unit of parallel work.
    const auto bad_row = parallel_find_failure(m, opt.jobs, [&](std::size_t i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (!pred(all[i], all[j])) return false;
      }
      return true;
    });
    if (bad_row < m) {
      for (std::size_t j = 0; j < m; ++j) {
        if (!pred(all[bad_row], all[j])) {
          return {std::move(name), false,
                  "fails at n=" + std::to_string(n) + " for " + format_partition(all[bad_row]) +
                      ", " + format_partition(all[j])};
        }
      }
    }
    checked += static_cast<std::uint64_t>(m) * m;
  }
  return {std::move(name), true, std::to_string(checked) + " pairs"};
}

inline CheckResult check_each(std::string name, std::size_t lo, std::size_t hi,
                              const std::function<bool(const Partition&)>& pred) {
  std::uint64_t checked = 0;
  for (std::size_t n = lo; n <= hi; ++n) {
    for (const auto& p : enumerate_partitions(n)) {
      if (!pred(p)) {
        return {std::move(name), false,
                "fails at n=" + std::to_string(n) + " for " + format_partition(p)};
      }
      ++checked;
    }
  }
  return {std::move(name), true, std::to_string(checked) + " partitions"};
}

inline CheckResult check_bool(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok, std::move(detail)};
}

inline std::string fresh_variable(const Formula& f, std::string base) {
  const auto vars = free_vars(f);
  auto name = base;
  for (int i = 1; std::binary_search(vars.begin(), vars.end(), name); ++i) {
    name = base + "_" + std::to_string(i);
  }
  return name;
}

}  // namespace detail

/// Classical tautologies used for the transform theorem.
inline const std::vector<std::string>& classical_tautology_corpus() {
  static const std::vector<std::string> corpus = {
      "s \\/ ~s",
      "~~s -> s",
      "((s -> p) -> s) -> s",
      "~(s /\\ p) -> ~s \\/ ~p",
      "~s \\/ ~p -> ~(s /\\ p)",
      "~(s \\/ p) -> ~s /\\ ~p",
      "~s /\\ ~p -> ~(s \\/ p)",
      "(s /\\ (s -> p)) -> p",
      "s -> p -> s",
      "(s -> p) -> ~p -> ~s",
      "s /\\ (p \\/ q) -> s /\\ p \\/ s /\\ q",
      "~(s /\\ ~s)",
      "(s -> p) \\/ (p -> s)",
      "(s -> p) -> (p -> q) -> s -> q",
  };
  return corpus;
}

/// Formulas that fail classically, hence already fail on Pi(2).
inline const std::vector<std::string>& non_tautology_corpus() {
  static const std::vector<std::string> corpus = {
      "s", "~s", "0", "s -> p", "(s -> p) -> s", "s /\\ ~s", "s \\/ p -> s /\\ p",
  };
  return corpus;
}

inline std::vector<CheckResult> suite_common_dits(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  out.push_back(detail::check_pairs(
      "non-indiscrete partitions share a dit (n<=6)", 1, 6, opt,
      [](const Partition& p, const Partition& q) {
        if (p.is_indiscrete() || q.is_indiscrete()) return true;
        return !(ditset(p) & ditset(q)).empty();
      }));
  out.push_back(detail::check_pairs(
      "two-block partitions share a dit (n<=6)", 2, 6, opt,
      [](const Partition& p, const Partition& q) {
        if (p.block_count() != 2 || q.block_count() != 2) return true;
        return !(ditset(p) & ditset(q)).empty();
      }));
  out.push_back(detail::check_each("only the indiscrete partition has no dits (n<=6)", 1, 6,
                                   [](const Partition& p) {
                                     return ditset(p).empty() == p.is_indiscrete();
                                   }));
  return out;
}

inline std::vector<CheckResult> suite_implication_equivalence(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  out.push_back(detail::check_pairs("blocks = graph (n<=6)", 1, 6, opt,
                                    [](const Partition& s, const Partition& p) {
                                      return implication_blocks(s, p) == implication_graph(s, p);
                                    }));
  out.push_back(detail::check_pairs("blocks = interior (n<=6)", 1, 6, opt,
                                    [](const Partition& s, const Partition& p) {
                                      return implication_blocks(s, p) ==
                                             implication_interior(s, p);
                                    }));
  out.push_back(detail::check_pairs("blocks = adjunctive (n<=5)", 1, 5, opt,
                                    [](const Partition& s, const Partition& p) {
                                      return implication_blocks(s, p) ==
                                             implication_adjunctive(s, p);
                                    }));
  out.push_back(detail::check_pairs("sigma => pi = 1 iff sigma <= pi (n<=5)", 1, 5, opt,
                                    [](const Partition& s, const Partition& p) {
                                      return implication_blocks(s, p).is_discrete() ==
                                             refines(s, p);
                                    }));
  out.push_back(detail::check_pairs(
      "adjunction dit(t) & dit(s) <= dit(p) iff t <= s => p (n<=4)", 1, 4, opt,
      [](const Partition& s, const Partition& p) {
        const auto imp = implication_blocks(s, p);
        const auto ds = ditset(s);
        const auto dp = ditset(p);
        for (const auto& t : enumerate_partitions(s.size())) {
          if ((ditset(t) & ds).subset_of(dp) != refines(t, imp)) return false;
        }
        return true;
      }));
  return out;
}

inline std::vector<CheckResult> suite_boolean_core(const SuiteOptions& opt) {
  (void)opt;
  std::vector<CheckResult> out;
  out.push_back(detail::check_each(
      "|B_pi| = 2^|pi_ns|, bottom pi, top 1, members in [pi,1] (n<=5)", 1, 5,
      [](const Partition& pi) {
        const auto core = boolean_core(pi);
        if (core.size() != (std::size_t{1} << core.ns_blocks().size())) return false;
        if (core.bottom() != pi || core.top() != discrete(pi.size())) return false;
        return std::all_of(core.members().begin(), core.members().end(),
                           [&](const Partition& m) { return refines(pi, m); });
      }));
  out.push_back(detail::check_each(
      "powerset isomorphism preserves join, meet, complement (n<=5)", 1, 5,
      [](const Partition& pi) {
        const auto core = boolean_core(pi);
        const auto full = core.full_mask();
        const auto m = static_cast<BlockMask>(core.size());
        for (BlockMask a = 0; a < m; ++a) {
          const auto& pa = core_from_subset(core, a);
          if (core_to_subset(core, pa) != a) return false;
          if (pi_negation(pa, pi) != core_from_subset(core, full & ~a)) return false;
          for (BlockMask b = 0; b < m; ++b) {
            const auto& pb = core_from_subset(core, b);
            if (join(pa, pb) != core_from_subset(core, a | b)) return false;
            if (meet(pa, pb) != core_from_subset(core, a & b)) return false;
          }
        }
        return true;
      }));
  out.push_back(detail::check_each(
      "complement laws and involution inside B_pi (n<=5)", 1, 5, [](const Partition& pi) {
        const auto core = boolean_core(pi);
        for (const auto& a : core.members()) {
          const auto na = pi_negation(a, pi);
          if (meet(a, na) != pi || join(a, na) != core.top()) return false;
          if (pi_negation(na, pi) != a) return false;
        }
        return true;
      }));
  out.push_back(detail::check_each(
      "B_pi is distributive (n<=5)", 1, 5, [](const Partition& pi) {
        const auto core = boolean_core(pi);
        for (const auto& a : core.members())
          for (const auto& b : core.members())
            for (const auto& c : core.members()) {
              if (join(a, meet(b, c)) != meet(join(a, b), join(a, c))) return false;
              if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) return false;
            }
        return true;
      }));
  out.push_back(detail::check_each(
      "2^|pi| = |B_pi| * 2^singletons (n<=6)", 1, 6, [](const Partition& pi) {
        const auto core = boolean_core(pi);
        const auto singletons = pi.block_count() - core.ns_blocks().size();
        return (std::uint64_t{1} << pi.block_count()) ==
               static_cast<std::uint64_t>(core.size()) << singletons;
      }));
  return out;
}

inline std::vector<CheckResult> suite_identities(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  auto pairs5 = [&](std::string name,
                    std::function<bool(const Partition&, const Partition&)> pred) {
    out.push_back(detail::check_pairs(std::move(name), 1, 5, opt, pred));
  };
  pairs5("sigma <= ~~sigma", [](const Partition& s, const Partition& p) {
    return refines(s, double_pi_negation(s, p));
  });
  pairs5("sigma \\/ pi <= ~~sigma", [](const Partition& s, const Partition& p) {
    return refines(join(s, p), double_pi_negation(s, p));
  });
  pairs5("pi <= sigma \\/ ~sigma", [](const Partition& s, const Partition& p) {
    return refines(p, excluded_middle_partition(s, p));
  });
  pairs5("~(sigma \\/ ~sigma) = pi", [](const Partition& s, const Partition& p) {
    return pi_negation(excluded_middle_partition(s, p), p) == p;
  });
  pairs5("~~(sigma \\/ ~sigma) = 1", [](const Partition& s, const Partition& p) {
    return double_pi_negation(excluded_middle_partition(s, p), p).is_discrete();
  });
  pairs5("sigma \\/ pi = (sigma \\/ ~sigma) /\\ ~~sigma", check_join_decomposition);
  pairs5("~~~sigma = ~sigma", [](const Partition& s, const Partition& p) {
    return pi_negation(double_pi_negation(s, p), p) == pi_negation(s, p);
  });
  pairs5("~^pi 1 = pi and ~^pi pi = 1", [](const Partition&, const Partition& p) {
    return pi_negation(discrete(p.size()), p) == p && pi_negation(p, p).is_discrete();
  });
  out.push_back(detail::check_pairs("dit(p \\/ q) = dit(p) | dit(q) (n<=6)", 1, 6, opt,
                                    [](const Partition& p, const Partition& q) {
                                      return ditset(join(p, q)) == (ditset(p) | ditset(q));
                                    }));
  out.push_back(detail::check_each("1 /\\ pi = pi and 0 \\/ pi = pi (n<=6)", 1, 6,
                                   [](const Partition& p) {
                                     return meet(discrete(p.size()), p) == p &&
                                            join(indiscrete(p.size()), p) == p;
                                   }));
  out.push_back(detail::check_pairs(
      "phi in [pi,1] distributes over B_pi (n<=4)", 1, 4, opt,
      [](const Partition& phi, const Partition& pi) {
        if (!refines(pi, phi)) return true;
        for (const auto& s : enumerate_partitions(pi.size()))
          for (const auto& t : enumerate_partitions(pi.size()))
            if (!check_core_distribution(phi, pi, s, t)) return false;
        return true;
      }));
  return out;
}

inline std::vector<CheckResult> suite_tautologies(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  RefuterOptions ropt;
  ropt.max_size = 4;
  ropt.jobs = opt.jobs;

  auto none_up_to_4 = [&](const std::string& text) {
    const auto f = parse(text);
    return !find_partition_counterexample(f, ropt).has_value();
  };
  out.push_back(detail::check_bool("modus ponens has no counterexample up to n=4",
                                   none_up_to_4("(s /\\ (s -> p)) -> p")));
  out.push_back(detail::check_bool("weak excluded middle has no counterexample up to n=4",
                                   none_up_to_4("(s -> p) \\/ ((s -> p) -> p)")));
  {
    const auto ce = find_partition_counterexample(parse("s \\/ ~s"), ropt);
    out.push_back(detail::check_bool(
        "excluded middle survives n=2 and fails first at n=3", ce && ce->n == 3,
        ce ? "counterexample at n=" + std::to_string(ce->n) : "no counterexample"));
  }
  {
    const auto ce = find_partition_counterexample(parse("s"), ropt);
    out.push_back(detail::check_bool("'s' has a counterexample at n=2", ce && ce->n == 2));
  }
  {
    bool same = true;
    for (const auto& text : {"s \\/ ~s", "s", "(s -> p) -> s", "s /\\ (p \\/ q) -> p"}) {
      const auto f = parse(text);
      RefuterOptions a = ropt, b = ropt, c = ropt;
      a.jobs = 1;
      b.jobs = 4;
      c.truth_table_prefilter = false;
      const auto ra = find_partition_counterexample(f, a);
      const auto rb = find_partition_counterexample(f, b);
      const auto rc = find_partition_counterexample(f, c);
      auto key = [](const std::optional<Counterexample>& r) {
        return r ? std::make_pair(r->n, r->assignment.bindings())
                 : std::make_pair(std::size_t{0}, std::map<std::string, Partition>{});
      };
      same = same && key(ra) == key(rb) && key(ra) == key(rc);
    }
    out.push_back(detail::check_bool(
        "counterexamples identical across job counts and prefilter setting", same));
  }
  {
    std::string failed;
    for (const auto& text : classical_tautology_corpus()) {
      const auto f = parse(text);
      const auto t = pi_negation_transform(f, detail::fresh_variable(f, "pi"));
      if (!is_subset_tautology(f) || find_partition_counterexample(t, ropt)) failed = text;
    }
    out.push_back(detail::check_bool(
        "pi-negation transforms of " + std::to_string(classical_tautology_corpus().size()) +
            " classical tautologies have no counterexample up to n=4",
        failed.empty(), failed.empty() ? "" : "fails for " + failed));
  }
  {
    std::string failed;
    for (const auto& text : non_tautology_corpus()) {
      const auto ce = find_partition_counterexample(parse(text), ropt);
      if (!ce || ce->n != 2) failed = text;
    }
    out.push_back(detail::check_bool("every corpus non-tautology fails on Pi(2)",
                                     failed.empty(), failed.empty() ? "" : "fails for " + failed));
  }
  return out;
}

inline std::vector<CheckResult> suite_figure3(const SuiteOptions&) {
  std::vector<CheckResult> out;
  const auto pi = parse_partition_literal("{{a,b},{c}}").partition;
  const auto sigma = parse_partition_literal("{{a},{b,c}}").partition;
  const auto tau = parse_partition_literal("{{b},{a,c}}").partition;
  out.push_back(detail::check_bool("Pi(3) has 5 partitions", all_partitions(3).size() == 5));
  out.push_back(detail::check_bool("sigma /\\ tau = 0", meet(sigma, tau) == indiscrete(3)));
  out.push_back(detail::check_bool("pi \\/ (sigma /\\ tau) = pi", join(pi, meet(sigma, tau)) == pi));
  out.push_back(detail::check_bool("(pi \\/ sigma) /\\ (pi \\/ tau) = 1",
                                   meet(join(pi, sigma), join(pi, tau)) == discrete(3)));
  out.push_back(detail::check_bool("middle partitions are pairwise incomparable",
                                   !refines(pi, sigma) && !refines(sigma, pi) &&
                                       !refines(pi, tau) && !refines(tau, pi) &&
                                       !refines(sigma, tau) && !refines(tau, sigma)));
  return out;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "common-dits", "implication-equivalence", "boolean-core",
      "identities",  "tautologies",             "figure3",
  };
  return names;
}

/// Throws ValidationError for an unknown suite name.
inline std::vector<CheckResult> run_suite(std::string_view name, const SuiteOptions& opt = {}) {
  if (name == "common-dits") return suite_common_dits(opt);
  if (name == "implication-equivalence") return suite_implication_equivalence(opt);
  if (name == "boolean-core") return suite_boolean_core(opt);
  if (name == "identities") return suite_identities(opt);
  if (name == "tautologies") return suite_tautologies(opt);
  if (name == "figure3") return suite_figure3(opt);
  throw ValidationError("unknown suite '" + std::string(name) + "'");
}

}  // namespace partlog

#endif  // PARTLOG_SUITES_HPP
