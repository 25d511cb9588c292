#ifndef PARTLOG_FORMULA_HPP
#define PARTLOG_FORMULA_HPP

// Formulas over variables, 0, 1, and the connectives ~, /\, \/, ->,
// evaluated either over partitions of a finite universe or classically.
//
//   formula := imp
//   imp     := or ("->" imp)?
//   or      := and (("\/" | "|") and)*
//   and     := neg (("/\" | "&") neg)*
//   neg     := "~" neg | atom
//   atom    := ident | "0" | "1" | "(" formula ")"
//   ident   := [A-Za-z][A-Za-z0-9_]*

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "partlog/core.hpp"
#include "partlog/error.hpp"
#include "partlog/ops.hpp"

namespace partlog {

inline bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

/// Immutable formula tree; copies share structure.
class Formula {
 public:
  enum class Kind { variable, zero, one, negation, conjunction, disjunction, implication };

  static Formula variable(std::string name) {
    if (!is_identifier(name)) throw ValidationError("invalid variable name '" + name + "'");
    return Formula(Kind::variable, std::move(name), {});
  }
  static Formula zero() { return Formula(Kind::zero, {}, {}); }
  static Formula one() { return Formula(Kind::one, {}, {}); }
  static Formula negation(Formula f) { return Formula(Kind::negation, {}, {std::move(f)}); }
  static Formula conjunction(Formula a, Formula b) {
    return Formula(Kind::conjunction, {}, {std::move(a), std::move(b)});
  }
  static Formula disjunction(Formula a, Formula b) {
    return Formula(Kind::disjunction, {}, {std::move(a), std::move(b)});
  }
  static Formula implication(Formula a, Formula b) {
    return Formula(Kind::implication, {}, {std::move(a), std::move(b)});
  }

  Kind kind() const noexcept { return node_->kind; }
  const std::string& name() const noexcept { return node_->name; }
  const Formula& operand() const { return node_->children.at(0); }
  const Formula& left() const { return node_->children.at(0); }
  const Formula& right() const { return node_->children.at(1); }

  bool is_binary() const noexcept {
    return kind() == Kind::conjunction || kind() == Kind::disjunction ||
           kind() == Kind::implication;
  }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    return a.node_->kind == b.node_->kind && a.node_->name == b.node_->name &&
           a.node_->children == b.node_->children;
  }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Formula> children;
  };

  Formula(Kind kind, std::string name, std::vector<Formula> children)
      : node_(std::make_shared<const Node>(Node{kind, std::move(name), std::move(children)})) {}

  std::shared_ptr<const Node> node_;
};

// ---------------------------------------------------------------------------
// Parsing and printing
// ---------------------------------------------------------------------------

namespace detail {

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Formula parse() {
    auto f = parse_imp();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  Formula parse_imp() {
    auto lhs = parse_or();
    if (accept("->")) return Formula::implication(std::move(lhs), parse_imp());
    return lhs;
  }

  Formula parse_or() {
    auto lhs = parse_and();
    while (accept("\\/") || accept("|")) lhs = Formula::disjunction(std::move(lhs), parse_and());
    return lhs;
  }

  Formula parse_and() {
    auto lhs = parse_neg();
    while (accept("/\\") || accept("&")) lhs = Formula::conjunction(std::move(lhs), parse_neg());
    return lhs;
  }

  Formula parse_neg() {
    if (accept("~")) return Formula::negation(parse_neg());
    return parse_atom();
  }

  Formula parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto f = parse_imp();
      if (!accept(")")) fail("expected ')'");
      return f;
    }
    if (c == '0' || c == '1') {
      ++pos_;
      if (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                  text_[pos_] == '_')) {
        fail("unexpected '" + std::string(1, text_[pos_]) + "' after constant");
      }
      return c == '0' ? Formula::zero() : Formula::one();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const auto start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_')) {
        ++pos_;
      }
      return Formula::variable(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline int precedence(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::implication: return 1;
    case Formula::Kind::disjunction: return 2;
    case Formula::Kind::conjunction: return 3;
    case Formula::Kind::negation: return 4;
    default: return 5;
  }
}

inline void print(const Formula& f, std::string& out) {
  auto child = [&out](const Formula& c, bool parens) {
    if (parens) out += '(';
    print(c, out);
    if (parens) out += ')';
  };
  switch (f.kind()) {
    case Formula::Kind::variable: out += f.name(); return;
    case Formula::Kind::zero: out += '0'; return;
    case Formula::Kind::one: out += '1'; return;
    case Formula::Kind::negation:
      out += '~';
      child(f.operand(), precedence(f.operand()) < 4);
      return;
    default: break;
  }
  const int prec = precedence(f);
  const bool right_assoc = f.kind() == Formula::Kind::implication;
  const char* symbol = f.kind() == Formula::Kind::implication   ? " -> "
                       : f.kind() == Formula::Kind::disjunction ? " \\/ "
                                                                : " /\\ ";
  const int lp = precedence(f.left());
  const int rp = precedence(f.right());
  child(f.left(), right_assoc ? lp <= prec : lp < prec);
  out += symbol;
  child(f.right(), right_assoc ? rp < prec : rp <= prec);
}

}  // namespace detail

inline Formula parse(std::string_view text) { return detail::FormulaParser(text).parse(); }

/// Prints with the minimal parentheses the grammar needs; parse() inverts it.
inline std::string to_string(const Formula& f) {
  std::string out;
  detail::print(f, out);
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << to_string(f); }

namespace detail {
inline void collect_vars(const Formula& f, std::set<std::string>& out) {
  if (f.kind() == Formula::Kind::variable) {
    out.insert(f.name());
  } else if (f.kind() == Formula::Kind::negation) {
    collect_vars(f.operand(), out);
  } else if (f.is_binary()) {
    collect_vars(f.left(), out);
    collect_vars(f.right(), out);
  }
}
}  // namespace detail

/// Sorted, deduplicated variable names.
inline std::vector<std::string> free_vars(const Formula& f) {
  std::set<std::string> names;
  detail::collect_vars(f, names);
  return {names.begin(), names.end()};
}

// ---------------------------------------------------------------------------
// Semantics
// ---------------------------------------------------------------------------

/// Variable bindings to partitions of one common universe.
class Assignment {
 public:
  explicit Assignment(std::size_t n) : n_(n) { detail::require_universe(n); }

  Assignment& bind(const std::string& name, Partition p) {
    if (!is_identifier(name)) throw ValidationError("invalid variable name '" + name + "'");
    if (p.size() != n_) throw SizeMismatch(n_, p.size());
    bindings_.insert_or_assign(name, std::move(p));
    return *this;
  }

  std::size_t size() const noexcept { return n_; }
  const std::map<std::string, Partition>& bindings() const noexcept { return bindings_; }

  const Partition& at(const std::string& name) const {
    auto it = bindings_.find(name);
    if (it == bindings_.end()) throw UnboundVariable(name);
    return it->second;
  }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::size_t n_;
  std::map<std::string, Partition> bindings_;
};

namespace detail {

template <typename Lookup>
Partition eval_partition_with(const Formula& f, std::size_t n, const Lookup& lookup) {
  switch (f.kind()) {
    case Formula::Kind::variable: return lookup(f.name());
    case Formula::Kind::zero: return indiscrete(n);
    case Formula::Kind::one: return discrete(n);
    case Formula::Kind::negation:
      return implication_blocks(eval_partition_with(f.operand(), n, lookup), indiscrete(n));
    case Formula::Kind::conjunction:
      return meet(eval_partition_with(f.left(), n, lookup),
                  eval_partition_with(f.right(), n, lookup));
    case Formula::Kind::disjunction:
      return join(eval_partition_with(f.left(), n, lookup),
                  eval_partition_with(f.right(), n, lookup));
    case Formula::Kind::implication:
      return implication_blocks(eval_partition_with(f.left(), n, lookup),
                                eval_partition_with(f.right(), n, lookup));
  }
  throw std::logic_error("unknown formula kind");
}

template <typename Lookup>
bool eval_boolean_with(const Formula& f, const Lookup& lookup) {
  switch (f.kind()) {
    case Formula::Kind::variable: return lookup(f.name());
    case Formula::Kind::zero: return false;
    case Formula::Kind::one: return true;
    case Formula::Kind::negation: return !eval_boolean_with(f.operand(), lookup);
    case Formula::Kind::conjunction:
      return eval_boolean_with(f.left(), lookup) && eval_boolean_with(f.right(), lookup);
    case Formula::Kind::disjunction:
      return eval_boolean_with(f.left(), lookup) || eval_boolean_with(f.right(), lookup);
    case Formula::Kind::implication:
      return !eval_boolean_with(f.left(), lookup) || eval_boolean_with(f.right(), lookup);
  }
  throw std::logic_error("unknown formula kind");
}

}  // namespace detail

/// Partition semantics: \/ is join, /\ is meet, -> is implication, ~f is
/// f -> 0, 0 and 1 are the indiscrete and discrete partitions.
inline Partition eval_partition(const Formula& f, const Assignment& a) {
  return detail::eval_partition_with(f, a.size(),
                                     [&a](const std::string& v) -> const Partition& {
                                       return a.at(v);
                                     });
}

using BoolAssignment = std::map<std::string, bool>;

/// Classical truth-table semantics with material implication.
inline bool eval_boolean(const Formula& f, const BoolAssignment& bits) {
  return detail::eval_boolean_with(f, [&bits](const std::string& v) {
    auto it = bits.find(v);
    if (it == bits.end()) throw UnboundVariable(v);
    return it->second;
  });
}

inline constexpr std::size_t kMaxTruthTableVars = 20;

namespace detail {
inline std::vector<std::string> guarded_vars(const Formula& f) {
  auto vars = free_vars(f);
  if (vars.size() > kMaxTruthTableVars) {
    throw LimitExceeded("truth table limit: " + std::to_string(vars.size()) +
                        " variables exceeds " + std::to_string(kMaxTruthTableVars));
  }
  return vars;
}
}  // namespace detail

/// First falsifying row of the truth table, rows ordered with the first
/// variable (by name) most significant and false before true.
inline std::optional<BoolAssignment> find_boolean_counterexample(const Formula& f) {
  const auto vars = detail::guarded_vars(f);
  const auto k = vars.size();
  std::vector<bool> bits(k);
  for (std::uint64_t row = 0; row < (std::uint64_t{1} << k); ++row) {
    for (std::size_t i = 0; i < k; ++i) bits[i] = (row >> (k - 1 - i)) & 1u;
    const bool value = detail::eval_boolean_with(f, [&](const std::string& v) {
      auto idx = std::lower_bound(vars.begin(), vars.end(), v) - vars.begin();
      return static_cast<bool>(bits[static_cast<std::size_t>(idx)]);
    });
    if (!value) {
      BoolAssignment out;
      for (std::size_t i = 0; i < k; ++i) out.emplace(vars[i], bits[i]);
      return out;
    }
  }
  return std::nullopt;
}

inline bool is_subset_tautology(const Formula& f) { return !find_boolean_counterexample(f); }

// ---------------------------------------------------------------------------
// Bounded partition refutation
// ---------------------------------------------------------------------------

struct RefuterOptions {
  std::size_t max_size = 4;
  std::size_t jobs = 1;
  /// Largest Bell(n)^k assignment count the search may visit at one size.
  std::uint64_t budget = 100'000'000;
  /// Use the classical truth table to settle n = 2 directly.
  bool truth_table_prefilter = true;
};

struct Counterexample {
  std::size_t n = 0;
  Assignment assignment{1};
  Partition value = Partition::from_rgs({0});
};

namespace detail {

inline std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    out *= base;
  }
  return out;
}

/// Decodes an assignment index: the first variable is the most significant
/// digit, each digit indexing the lexicographic partition list.
inline std::vector<std::size_t> decode_index(std::uint64_t index, std::size_t k,
                                             std::size_t base) {
  std::vector<std::size_t> digits(k);
  for (std::size_t i = k; i-- > 0;) {
    digits[i] = static_cast<std::size_t>(index % base);
    index /= base;
  }
  return digits;
}

/// Formula compiled to postfix over indices into a fixed partition list,
/// with join, meet and implication precomputed as lookup tables.
class TableEvaluator {
 public:
  static constexpr std::size_t kMaxPartitions = 256;

  TableEvaluator(const Formula& f, const std::vector<std::string>& vars,
                 const std::vector<Partition>& universe)
      : m_(universe.size()) {
    const auto n = universe.front().size();
    auto index_of = [&universe](const Partition& p) {
      return static_cast<std::uint16_t>(std::lower_bound(universe.begin(), universe.end(), p) -
                                        universe.begin());
    };
    zero_ = index_of(indiscrete(n));
    one_ = index_of(discrete(n));
    join_.resize(m_ * m_);
    meet_.resize(m_ * m_);
    imp_.resize(m_ * m_);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < m_; ++j) {
        join_[i * m_ + j] = index_of(join(universe[i], universe[j]));
        meet_[i * m_ + j] = index_of(meet(universe[i], universe[j]));
        imp_[i * m_ + j] = index_of(implication_blocks(universe[i], universe[j]));
      }
    }
    compile(f, vars);
  }

  /// digits[i] is the partition index bound to vars[i].
  std::uint16_t operator()(const std::vector<std::size_t>& digits) const {
    std::vector<std::uint16_t> stack;
    stack.reserve(program_.size());
    for (const auto& ins : program_) {
      switch (ins.op) {
        case Op::push_var: stack.push_back(static_cast<std::uint16_t>(digits[ins.arg])); break;
        case Op::push_zero: stack.push_back(zero_); break;
        case Op::push_one: stack.push_back(one_); break;
        case Op::negate: stack.back() = imp_[stack.back() * m_ + zero_]; break;
        default: {
          const auto r = stack.back();
          stack.pop_back();
          auto& l = stack.back();
          const auto& t = ins.op == Op::join ? join_ : ins.op == Op::meet ? meet_ : imp_;
          l = t[l * m_ + r];
        }
      }
    }
    return stack.back();
  }

  std::uint16_t top() const noexcept { return one_; }

 private:
  enum class Op { push_var, push_zero, push_one, negate, join, meet, imply };
  struct Instr {
    Op op;
    std::size_t arg = 0;
  };

  void compile(const Formula& f, const std::vector<std::string>& vars) {
    switch (f.kind()) {
      case Formula::Kind::variable:
        program_.push_back({Op::push_var, static_cast<std::size_t>(
                                              std::lower_bound(vars.begin(), vars.end(), f.name()) -
                                              vars.begin())});
        return;
      case Formula::Kind::zero: program_.push_back({Op::push_zero}); return;
      case Formula::Kind::one: program_.push_back({Op::push_one}); return;
      case Formula::Kind::negation:
        compile(f.operand(), vars);
        program_.push_back({Op::negate});
        return;
      case Formula::Kind::conjunction:
      case Formula::Kind::disjunction:
      case Formula::Kind::implication:
        compile(f.left(), vars);
        compile(f.right(), vars);
        program_.push_back({f.kind() == Formula::Kind::conjunction   ? Op::meet
                            : f.kind() == Formula::Kind::disjunction ? Op::join
                                                                     : Op::imply});
        return;
    }
  }

  std::size_t m_;
  std::uint16_t zero_ = 0, one_ = 0;
  std::vector<std::uint16_t> join_, meet_, imp_;
  std::vector<Instr> program_;
};

/// Least assignment index in [0, total) at which f is not 1, or total.
inline std::uint64_t first_failure(const Formula& f, const std::vector<std::string>& vars,
                                   const std::vector<Partition>& universe, std::uint64_t total,
                                   std::size_t jobs) {
  const auto n = universe.front().size();
  const auto k = vars.size();
  const auto top = discrete(n);

  std::optional<TableEvaluator> tables;
  if (universe.size() <= TableEvaluator::kMaxPartitions) tables.emplace(f, vars, universe);

  auto fails = [&](std::uint64_t index) {
    const auto digits = decode_index(index, k, universe.size());
    if (tables) return (*tables)(digits) != tables->top();
    auto lookup = [&](const std::string& v) -> const Partition& {
      auto pos = std::lower_bound(vars.begin(), vars.end(), v) - vars.begin();
      return universe[digits[static_cast<std::size_t>(pos)]];
    };
    return eval_partition_with(f, n, lookup) != top;
  };

  std::atomic<std::uint64_t> best{total};
  std::atomic<std::uint64_t> next_chunk{0};
  constexpr std::uint64_t chunk = 256;
  auto worker = [&] {
    for (;;) {
      const auto start = next_chunk.fetch_add(chunk);
      if (start >= total || start >= best.load()) return;
      const auto stop = std::min(total, start + chunk);
      for (auto i = start; i < stop && i < best.load(); ++i) {
        if (fails(i)) {
          auto cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          break;
        }
      }
    }
  };
  jobs = std::max<std::size_t>(1, std::min<std::uint64_t>(jobs, (total + chunk - 1) / chunk));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (std::size_t j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  return best.load();
}

}  // namespace detail

/// Scans n = 2..max_size and, at each n, every assignment of partitions to
/// the free variables (lexicographic in variable-name order, then rgs), and
/// returns the least assignment at which f does not evaluate to 1. An empty
/// result only says no counterexample exists up to max_size.
inline std::optional<Counterexample> find_partition_counterexample(
    const Formula& f, const RefuterOptions& options = {}) {
  if (options.max_size < 2) {
    throw ValidationError("refuter bound must be at least 2");
  }
  const auto vars = free_vars(f);
  const auto k = vars.size();

  auto make_result = [&](std::size_t n, const std::vector<Partition>& chosen) {
    Counterexample ce{n, Assignment(n), indiscrete(n)};
    for (std::size_t i = 0; i < k; ++i) ce.assignment.bind(vars[i], chosen[i]);
    ce.value = eval_partition(f, ce.assignment);
    return ce;
  };

  std::size_t first_n = 2;
  if (options.truth_table_prefilter && k <= kMaxTruthTableVars) {
    // Pi(2) has exactly 0 = rgs(0,0) < 1 = rgs(0,1) and is isomorphic to the
    // two-element Boolean algebra, so the first falsifying truth-table row is
    // the first n = 2 counterexample.
    if (auto row = find_boolean_counterexample(f)) {
      std::vector<Partition> chosen;
      for (const auto& v : vars) chosen.push_back(row->at(v) ? discrete(2) : indiscrete(2));
      return make_result(2, chosen);
    }
    first_n = 3;
  }

  for (std::size_t n = first_n; n <= options.max_size; ++n) {
    const auto universe = all_partitions(n);
    const auto total = detail::saturating_pow(universe.size(), k);
    if (total > options.budget) {
      throw BudgetExceeded("refuter budget exceeded: Bell(" + std::to_string(n) + ")^" +
                           std::to_string(k) + " assignments exceeds " +
                           std::to_string(options.budget));
    }
    const auto index = detail::first_failure(f, vars, universe, total, options.jobs);
    if (index < total) {
      const auto digits = detail::decode_index(index, k, universe.size());
      std::vector<Partition> chosen;
      for (auto d : digits) chosen.push_back(universe[d]);
      return make_result(n, chosen);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Transform
// ---------------------------------------------------------------------------

namespace detail {
inline Formula transform(const Formula& f, const Formula& pi) {
  switch (f.kind()) {
    case Formula::Kind::variable: return Formula::implication(f, pi);
    case Formula::Kind::zero: return pi;
    case Formula::Kind::one: return f;
    case Formula::Kind::negation:
      return Formula::implication(transform(f.operand(), pi), pi);
    case Formula::Kind::conjunction:
      return Formula::conjunction(transform(f.left(), pi), transform(f.right(), pi));
    case Formula::Kind::disjunction:
      return Formula::disjunction(transform(f.left(), pi), transform(f.right(), pi));
    case Formula::Kind::implication:
      return Formula::implication(transform(f.left(), pi), transform(f.right(), pi));
  }
  throw std::logic_error("unknown formula kind");
}
}  // namespace detail

/// Single pi-negation transform: each variable v becomes v -> pi, the
/// constant 0 becomes pi, and ~g (read as g -> 0) becomes g' -> pi.
inline Formula pi_negation_transform(const Formula& f, const std::string& pi_name) {
  const auto vars = free_vars(f);
  if (std::binary_search(vars.begin(), vars.end(), pi_name)) {
    throw ValidationError("transform variable '" + pi_name + "' already occurs in the formula");
  }
  return detail::transform(f, Formula::variable(pi_name));
}

}  // namespace partlog

#endif  // PARTLOG_FORMULA_HPP
