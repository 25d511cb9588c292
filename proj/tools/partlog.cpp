// partlog: command-line front-end for the partition logic engine.
//
//   partlog check <formula|->              classical and bounded partition validity
//   partlog eval <formula|-> [v=literal]   evaluate under partition semantics
//   partlog table <op> <n>                 operation table over Pi(n)
//   partlog enumerate <n>                  list Pi(n); --format dot gives the Hasse diagram
//   partlog core <literal>                 Boolean core of a partition
//   partlog suite <name>                   run a named check suite
//
// Exit codes: 0 pass, 1 counterexample or suite failure, 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "partlog/algebra.hpp"
#include "partlog/core.hpp"
#include "partlog/formula.hpp"
#include "partlog/ops.hpp"
#include "partlog/suites.hpp"
#include "partlog/text.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace partlog;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

enum class Format { text, json, dot };

struct CliConfig {
  std::size_t max_size = 4;
  Format format = Format::text;
  std::size_t jobs = 1;
  std::uint64_t budget = 100'000'000;
};

class UsageError : public partlog::Error {
 public:
  using partlog::Error::Error;
};

std::string read_formula_text(const std::string& arg) {
  if (arg != "-") return arg;
  std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
  return text;
}

void require_format(const CliConfig& cfg, std::initializer_list<Format> allowed,
                    const char* command) {
  for (auto f : allowed) {
    if (cfg.format == f) return;
  }
  throw UsageError(std::string("format not supported by '") + command + "'");
}

int cmd_check(const std::string& arg, const CliConfig& cfg) {
  require_format(cfg, {Format::text, Format::json}, "check");
  const auto text = read_formula_text(arg);
  const auto f = parse(text);
  const bool classical = is_subset_tautology(f);
  RefuterOptions ropt;
  ropt.max_size = cfg.max_size;
  ropt.jobs = cfg.jobs;
  ropt.budget = cfg.budget;
  const auto ce = find_partition_counterexample(f, ropt);

  if (cfg.format == Format::json) {
    json partition;
    partition["status"] = ce ? "counterexample" : "no_counterexample";
    if (ce) {
      partition["n"] = ce->n;
      json assignment = json::object();
      for (const auto& [name, p] : ce->assignment.bindings()) {
        assignment[name] = format_partition(p);
      }
      partition["assignment"] = assignment;
    }
    partition["bound"] = cfg.max_size;
    json out;
    out["formula"] = to_string(f);
    out["classical"] = classical;
    out["partition"] = partition;
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "formula: " << to_string(f) << '\n';
    std::cout << "classical: " << (classical ? "tautology" : "not a tautology") << '\n';
    if (ce) {
      std::cout << "partition: counterexample at n=" << ce->n << '\n';
      for (const auto& [name, p] : ce->assignment.bindings()) {
        std::cout << "  " << name << " = " << format_partition(p) << '\n';
      }
      std::cout << "  value = " << format_partition(ce->value) << '\n';
    } else {
      std::cout << "partition: no counterexample up to n=" << cfg.max_size << '\n';
    }
  }
  return ce ? kExitFail : kExitPass;
}

int cmd_eval(const std::string& arg, const std::vector<std::string>& binding_args,
             const std::string& universe_arg, std::size_t size_arg, const CliConfig& cfg) {
  require_format(cfg, {Format::text, Format::json}, "eval");
  const auto f = parse(read_formula_text(arg));

  std::vector<std::string> names;
  std::vector<LabeledPartition> literals;
  for (const auto& b : binding_args) {
    const auto eq = b.find('=');
    if (eq == std::string::npos) throw UsageError("binding must look like name=literal: " + b);
    names.push_back(b.substr(0, eq));
    literals.push_back(parse_partition_literal(b.substr(eq + 1)));
  }
  if (!universe_arg.empty()) {
    literals.push_back(parse_partition_literal("{{" + universe_arg + "}}"));
  } else if (size_arg > 0) {
    literals.push_back({default_labels(size_arg), indiscrete(size_arg), false});
  }
  if (literals.empty()) {
    throw UsageError("no bindings: give --universe or --size to fix the universe");
  }
  const auto labels = common_universe(literals);

  Assignment assignment(labels.size());
  for (std::size_t i = 0; i < names.size(); ++i) assignment.bind(names[i], literals[i].partition);
  const auto result = eval_partition(f, assignment);

  if (cfg.format == Format::json) {
    json out;
    out["formula"] = to_string(f);
    out["result"] = format_partition(result, labels);
    std::cout << out.dump() << '\n';
  } else {
    std::cout << format_partition(result, labels) << '\n';
  }
  return kExitPass;
}

int cmd_table(const std::string& op_name, std::size_t n, const CliConfig& cfg) {
  require_format(cfg, {Format::text, Format::json}, "table");
  if (n < 1 || n > 5) throw UsageError("table size must be between 1 and 5");
  const auto all = all_partitions(n);
  auto index_of = [&all](const Partition& p) {
    return static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), p) - all.begin());
  };

  const bool unary = op_name == "not";
  std::function<Partition(const Partition&, const Partition&)> op;
  if (op_name == "join" || op_name == "or") {
    op = [](const Partition& a, const Partition& b) { return join(a, b); };
  } else if (op_name == "meet" || op_name == "and") {
    op = [](const Partition& a, const Partition& b) { return meet(a, b); };
  } else if (op_name == "implies" || op_name == "imp") {
    op = [](const Partition& a, const Partition& b) { return implication_blocks(a, b); };
  } else if (unary) {
    op = [](const Partition& a, const Partition&) { return negation(a); };
  } else if (op_name.rfind("graph:", 0) == 0) {
    const auto table = BoolOp2::from_string(op_name.substr(6));
    op = [table](const Partition& a, const Partition& b) { return binary_op_graph(table, a, b); };
  } else {
    throw UsageError("unknown operation '" + op_name +
                     "' (join, meet, implies, not, graph:<TTTT>)");
  }

  const std::size_t cols = unary ? 1 : all.size();
  std::vector<std::vector<std::size_t>> table(all.size(), std::vector<std::size_t>(cols));
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) table[i][j] = index_of(op(all[i], all[j]));
  }

  if (cfg.format == Format::json) {
    json out;
    out["op"] = op_name;
    out["n"] = n;
    json parts = json::array();
    for (const auto& p : all) parts.push_back(format_partition(p));
    out["partitions"] = parts;
    out["table"] = table;
    std::cout << out.dump() << '\n';
    return kExitPass;
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::cout << i << ": " << format_partition(all[i]) << '\n';
  }
  std::cout << '\n' << op_name << " |";
  for (std::size_t j = 0; j < cols; ++j) std::cout << ' ' << j;
  std::cout << '\n';
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::cout << i << " |";
    for (auto v : table[i]) std::cout << ' ' << v;
    std::cout << '\n';
  }
  return kExitPass;
}

int cmd_enumerate(std::size_t n, const CliConfig& cfg) {
  if (n < 1 || n > 10) throw UsageError("enumerate size must be between 1 and 10");
  const auto all = all_partitions(n);
  switch (cfg.format) {
    case Format::text:
      for (const auto& p : all) std::cout << format_partition(p) << '\n';
      std::cout << "count: " << all.size() << '\n';
      break;
    case Format::json: {
      json parts = json::array();
      for (const auto& p : all) parts.push_back(format_partition(p));
      json out;
      out["n"] = n;
      out["count"] = all.size();
      out["partitions"] = parts;
      std::cout << out.dump() << '\n';
      break;
    }
    case Format::dot:
      std::cout << "digraph partitions {\n  rankdir=BT;\n";
      for (std::size_t i = 0; i < all.size(); ++i) {
        std::cout << "  p" << i << " [label=\"" << format_partition(all[i]) << "\"];\n";
      }
      for (auto [i, j] : hasse_edges(all)) std::cout << "  p" << i << " -> p" << j << ";\n";
      std::cout << "}\n";
      break;
  }
  return kExitPass;
}

int cmd_core(const std::string& literal, const CliConfig& cfg) {
  require_format(cfg, {Format::text, Format::json}, "core");
  const auto lit = parse_partition_literal(literal);
  const auto core = boolean_core(lit.partition);
  auto subset_name = [&core](BlockMask mask) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < core.ns_blocks().size(); ++i) {
      if (!((mask >> i) & 1u)) continue;
      if (!first) s += ',';
      first = false;
      s += 'B' + std::to_string(i);
    }
    return s + '}';
  };
  auto block_name = [&lit](const Block& b) {
    std::string s = "{";
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) s += ',';
      s += lit.labels[b[i]];
    }
    return s + '}';
  };

  if (cfg.format == Format::json) {
    json out;
    out["pi"] = format_partition(core.base(), lit.labels);
    json ns = json::array();
    for (const auto& b : core.ns_blocks()) ns.push_back(block_name(b));
    out["ns_blocks"] = ns;
    json members = json::array();
    for (BlockMask m = 0; m < core.size(); ++m) {
      json entry;
      entry["subset"] = subset_name(m);
      entry["partition"] = format_partition(core_from_subset(core, m), lit.labels);
      members.push_back(entry);
    }
    out["members"] = members;
    std::cout << out.dump() << '\n';
    return kExitPass;
  }
  std::cout << "pi: " << format_partition(core.base(), lit.labels) << '\n';
  for (std::size_t i = 0; i < core.ns_blocks().size(); ++i) {
    std::cout << "B" << i << ": " << block_name(core.ns_blocks()[i]) << '\n';
  }
  std::cout << "members: " << core.size() << '\n';
  for (BlockMask m = 0; m < core.size(); ++m) {
    std::cout << "  " << subset_name(m) << " -> "
              << format_partition(core_from_subset(core, m), lit.labels) << '\n';
  }
  return kExitPass;
}

int cmd_suite(const std::string& name, const CliConfig& cfg) {
  require_format(cfg, {Format::text, Format::json}, "suite");
  SuiteOptions opt;
  opt.jobs = cfg.jobs;
  const auto results = run_suite(name, opt);
  bool all_passed = true;
  for (const auto& r : results) all_passed = all_passed && r.passed;
  if (cfg.format == Format::json) {
    json checks = json::array();
    for (const auto& r : results) {
      checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    json out;
    out["suite"] = name;
    out["version"] = kSuiteVersion;
    out["passed"] = all_passed;
    out["checks"] = checks;
    std::cout << out.dump() << '\n';
  } else {
    for (const auto& r : results) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
      if (!r.detail.empty()) std::cout << " (" << r.detail << ')';
      std::cout << '\n';
    }
    std::cout << name << " v" << kSuiteVersion << ": " << (all_passed ? "passed" : "FAILED")
              << '\n';
  }
  return all_passed ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partition logic engine"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  std::string format_name = "text";
  app.add_option("--max-size", cfg.max_size, "refuter universe bound")
      ->check(CLI::Range(std::size_t{2}, std::size_t{16}));
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--jobs", cfg.jobs, "worker threads")
      ->check(CLI::Range(std::size_t{1}, std::size_t{256}));
  app.add_option("--budget", cfg.budget, "assignment cap per universe size")
      ->check(CLI::PositiveNumber);

  std::string formula_arg, literal_arg, op_arg, suite_arg, universe_arg;
  std::vector<std::string> bindings;
  std::size_t n_arg = 0, size_arg = 0;

  auto* check = app.add_subcommand("check", "check partition and classical validity");
  check->add_option("formula", formula_arg, "formula text, or - for stdin")->required();

  auto* eval = app.add_subcommand("eval", "evaluate a formula on partition literals");
  eval->add_option("formula", formula_arg, "formula text, or - for stdin")->required();
  eval->add_option("bindings", bindings, "name=literal, e.g. s={{a},{b,c}} or s=rgs:0,1,1");
  eval->add_option("--universe", universe_arg, "comma-separated labels when nothing is bound");
  eval->add_option("--size", size_arg, "universe size when nothing is bound")
      ->check(CLI::PositiveNumber);

  auto* table = app.add_subcommand("table", "print an operation table over Pi(n)");
  table->add_option("op", op_arg, "join, meet, implies, not, or graph:<TTTT>")->required();
  table->add_option("n", n_arg, "universe size")->required();

  auto* enumerate = app.add_subcommand("enumerate", "list every partition of an n-set");
  enumerate->add_option("n", n_arg, "universe size")->required();

  auto* core = app.add_subcommand("core", "print the Boolean core of a partition");
  core->add_option("pi", literal_arg, "partition literal")->required();

  auto* suite = app.add_subcommand("suite", "run a named check suite");
  suite->add_option("name", suite_arg, "suite name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  cfg.format = format_name == "json" ? Format::json
               : format_name == "dot" ? Format::dot
                                      : Format::text;

  try {
    if (*check) return cmd_check(formula_arg, cfg);
    if (*eval) return cmd_eval(formula_arg, bindings, universe_arg, size_arg, cfg);
    if (*table) return cmd_table(op_arg, n_arg, cfg);
    if (*enumerate) return cmd_enumerate(n_arg, cfg);
    if (*core) return cmd_core(literal_arg, cfg);
    if (*suite) return cmd_suite(suite_arg, cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
