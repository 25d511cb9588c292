#ifndef PARTLOG_CORE_HPP
#define PARTLOG_CORE_HPP

// Finite set partitions of {0..n-1} in restricted-growth form, binary
// relations on U x U, and the equivalence closure / ditset interior pair.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <limits>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "partlog/error.hpp"

namespace partlog {

using Element = std::uint32_t;
using Block = std::vector<Element>;

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), Element{0});
  }

  Element find(Element x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(Element a, Element b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<Element> parent_;
  std::vector<std::uint8_t> rank_;
};

inline void require_universe(std::size_t n) {
  if (n == 0) throw ValidationError("invalid universe: size must be at least 1");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Partition
// ---------------------------------------------------------------------------

/// A partition of {0..n-1}, stored as its restricted-growth string: rgs[0] = 0
/// and each entry exceeds the running maximum by at most one. The string is
/// canonical, so equality and ordering are plain sequence comparisons.
class Partition {
 public:
  /// Validates the restricted-growth invariant.
  static Partition from_rgs(std::vector<Element> rgs) {
    detail::require_universe(rgs.size());
    Element next = 0;
    for (std::size_t i = 0; i < rgs.size(); ++i) {
      if (rgs[i] > next) {
        throw ValidationError("not a restricted-growth string: entry " +
                              std::to_string(i) + " is " +
                              std::to_string(rgs[i]) + ", expected at most " +
                              std::to_string(next));
      }
      if (rgs[i] == next) ++next;
    }
    return Partition(std::move(rgs), next);
  }

  /// Canonicalizes an arbitrary block labelling: elements with equal labels
  /// share a block; blocks are renumbered by first occurrence.
  template <typename Label>
  static Partition from_labels(std::span<const Label> labels) {
    detail::require_universe(labels.size());
    std::vector<Element> rgs(labels.size());
    Element next = 0;
    const auto max_label = *std::max_element(labels.begin(), labels.end());
    if (static_cast<std::uint64_t>(max_label) <= 4 * labels.size() + 64) {
      std::vector<Element> remap(static_cast<std::size_t>(max_label) + 1,
                                 kUnassigned);
      for (std::size_t i = 0; i < labels.size(); ++i) {
        auto& slot = remap[static_cast<std::size_t>(labels[i])];
        if (slot == kUnassigned) slot = next++;
        rgs[i] = slot;
      }
    } else {
      std::unordered_map<Label, Element> remap;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, inserted] = remap.try_emplace(labels[i], next);
        if (inserted) ++next;
        rgs[i] = it->second;
      }
    }
    return Partition(std::move(rgs), next);
  }

  template <typename Label>
  static Partition from_labels(const std::vector<Label>& labels) {
    return from_labels(std::span<const Label>(labels));
  }

  std::size_t size() const noexcept { return rgs_.size(); }
  std::size_t block_count() const noexcept { return block_count_; }
  std::span<const Element> rgs() const noexcept { return rgs_; }
  Element block_of(Element u) const { return rgs_.at(u); }

  bool same_block(Element u, Element v) const { return rgs_.at(u) == rgs_.at(v); }
  bool is_discrete() const noexcept { return block_count_ == rgs_.size(); }
  bool is_indiscrete() const noexcept { return block_count_ == 1; }

  /// Blocks ordered by least element, elements ascending within each block.
  std::vector<Block> blocks() const {
    std::vector<Block> out(block_count_);
    for (std::size_t u = 0; u < rgs_.size(); ++u) {
      out[rgs_[u]].push_back(static_cast<Element>(u));
    }
    return out;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.rgs_.size() <=> b.rgs_.size(); c != 0) return c;
    return a.rgs_ <=> b.rgs_;
  }

 private:
  static constexpr Element kUnassigned = std::numeric_limits<Element>::max();

  Partition(std::vector<Element> rgs, std::size_t block_count)
      : rgs_(std::move(rgs)), block_count_(block_count) {}

  std::vector<Element> rgs_;
  std::size_t block_count_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
  os << '{';
  bool first_block = true;
  for (const auto& block : p.blocks()) {
    if (!first_block) os << ',';
    first_block = false;
    os << '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) os << ',';
      os << block[i];
    }
    os << '}';
  }
  return os << '}';
}

inline void require_same_size(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw SizeMismatch(a.size(), b.size());
}

/// The discrete partition 1: every block a singleton.
inline Partition discrete(std::size_t n) {
  detail::require_universe(n);
  std::vector<Element> rgs(n);
  std::iota(rgs.begin(), rgs.end(), Element{0});
  return Partition::from_rgs(std::move(rgs));
}

/// The indiscrete partition 0: the single block U.
inline Partition indiscrete(std::size_t n) {
  detail::require_universe(n);
  return Partition::from_rgs(std::vector<Element>(n, 0));
}

/// Builds a partition from explicit blocks, which must be non-empty,
/// pairwise disjoint and cover {0..n-1}.
inline Partition from_blocks(const std::vector<Block>& blocks, std::size_t n) {
  detail::require_universe(n);
  constexpr Element unseen = std::numeric_limits<Element>::max();
  std::vector<Element> label(n, unseen);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) {
      throw ValidationError("empty block at index " + std::to_string(b));
    }
    for (Element u : blocks[b]) {
      if (u >= n) {
        throw ValidationError("element " + std::to_string(u) +
                              " out of range for universe of size " +
                              std::to_string(n));
      }
      if (label[u] != unseen) {
        throw ValidationError("overlapping blocks: element " +
                              std::to_string(u) + " appears more than once");
      }
      label[u] = static_cast<Element>(b);
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    if (label[u] == unseen) {
      throw ValidationError("blocks are not exhaustive: element " +
                            std::to_string(u) + " is missing");
    }
  }
  return Partition::from_labels(label);
}

inline std::vector<Block> blocks(const Partition& p) { return p.blocks(); }

// ---------------------------------------------------------------------------
// BinaryRelation
// ---------------------------------------------------------------------------

/// A subset of U x U as a dense bit grid, one row of 64-bit words per element.
class BinaryRelation {
 public:
  using Pair = std::pair<Element, Element>;

  explicit BinaryRelation(std::size_t n)
      : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  BinaryRelation(std::size_t n, std::span<const Pair> pairs) : BinaryRelation(n) {
    for (auto [u, v] : pairs) insert(u, v);
  }

  BinaryRelation(std::size_t n, std::initializer_list<Pair> pairs)
      : BinaryRelation(n, std::span<const Pair>(pairs.begin(), pairs.size())) {}

  static BinaryRelation full(std::size_t n) { return BinaryRelation(n).complement(); }

  static BinaryRelation diagonal(std::size_t n) {
    BinaryRelation r(n);
    for (std::size_t u = 0; u < n; ++u) r.insert(u, u);
    return r;
  }

  std::size_t universe_size() const noexcept { return n_; }

  bool contains(std::size_t u, std::size_t v) const {
    check(u, v);
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1u;
  }

  void insert(std::size_t u, std::size_t v) {
    check(u, v);
    bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  }

  void erase(std::size_t u, std::size_t v) {
    check(u, v);
    bits_[u * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
  }

  std::size_t count() const noexcept {
    std::size_t total = 0;
    for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  bool empty() const noexcept {
    return std::all_of(bits_.begin(), bits_.end(), [](auto w) { return w == 0; });
  }

  /// Complement in U x U.
  BinaryRelation complement() const {
    BinaryRelation out(*this);
    for (auto& w : out.bits_) w = ~w;
    out.clear_padding();
    return out;
  }

  BinaryRelation operator|(const BinaryRelation& o) const {
    return combine(o, [](auto a, auto b) { return a | b; });
  }
  BinaryRelation operator&(const BinaryRelation& o) const {
    return combine(o, [](auto a, auto b) { return a & b; });
  }
  BinaryRelation operator-(const BinaryRelation& o) const {
    return combine(o, [](auto a, auto b) { return a & ~b; });
  }

  bool subset_of(const BinaryRelation& o) const {
    require_same(o);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] & ~o.bits_[i]) return false;
    }
    return true;
  }

  /// Row u is a subset of row v: every w with (u,w) also has (v,w).
  bool row_subset_of(std::size_t u, std::size_t v) const {
    for (std::size_t k = 0; k < words_; ++k) {
      if (bits_[u * words_ + k] & ~bits_[v * words_ + k]) return false;
    }
    return true;
  }

  /// All pairs in row-major order.
  std::vector<Pair> pairs() const {
    std::vector<Pair> out;
    for (std::size_t u = 0; u < n_; ++u) {
      for (std::size_t k = 0; k < words_; ++k) {
        auto w = bits_[u * words_ + k];
        while (w) {
          auto bit = static_cast<std::size_t>(std::countr_zero(w));
          out.emplace_back(static_cast<Element>(u), static_cast<Element>(k * 64 + bit));
          w &= w - 1;
        }
      }
    }
    return out;
  }

  friend bool operator==(const BinaryRelation&, const BinaryRelation&) = default;

 private:
  void check(std::size_t u, std::size_t v) const {
    if (u >= n_ || v >= n_) {
      throw ValidationError("pair (" + std::to_string(u) + "," + std::to_string(v) +
                            ") out of range for universe of size " +
                            std::to_string(n_));
    }
  }

  void require_same(const BinaryRelation& o) const {
    if (n_ != o.n_) throw SizeMismatch(n_, o.n_);
  }

  void clear_padding() {
    if (n_ % 64 == 0) return;
    const std::uint64_t mask = (std::uint64_t{1} << (n_ % 64)) - 1;
    for (std::size_t u = 0; u < n_; ++u) bits_[u * words_ + words_ - 1] &= mask;
  }

  template <typename F>
  BinaryRelation combine(const BinaryRelation& o, F f) const {
    require_same(o);
    BinaryRelation out(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = f(bits_[i], o.bits_[i]);
    out.clear_padding();
    return out;
  }

  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

inline std::ostream& operator<<(std::ostream& os, const BinaryRelation& r) {
  os << '{';
  bool first = true;
  for (auto [u, v] : r.pairs()) {
    if (!first) os << ',';
    first = false;
    os << '(' << u << ',' << v << ')';
  }
  return os << '}';
}

inline bool is_reflexive(const BinaryRelation& r) {
  for (std::size_t u = 0; u < r.universe_size(); ++u) {
    if (!r.contains(u, u)) return false;
  }
  return true;
}

inline bool is_symmetric(const BinaryRelation& r) {
  for (auto [u, v] : r.pairs()) {
    if (!r.contains(v, u)) return false;
  }
  return true;
}

inline bool is_transitive(const BinaryRelation& r) {
  // (u,v) and (v,w) imply (u,w): row v must sit inside row u.
  for (auto [u, v] : r.pairs()) {
    if (!r.row_subset_of(v, u)) return false;
  }
  return true;
}

inline bool is_equivalence(const BinaryRelation& r) {
  return is_reflexive(r) && is_symmetric(r) && is_transitive(r);
}

/// A partition relation (ditset) is exactly a relation whose complement is an
/// equivalence relation.
inline bool is_partition_relation(const BinaryRelation& r) {
  return is_equivalence(r.complement());
}

/// dit(p): ordered pairs in distinct blocks.
inline BinaryRelation ditset(const Partition& p) {
  const auto n = p.size();
  BinaryRelation r(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (p.rgs()[u] != p.rgs()[v]) r.insert(u, v);
    }
  }
  return r;
}

/// indit(p): the union of B x B over the blocks B.
inline BinaryRelation inditset(const Partition& p) {
  const auto n = p.size();
  BinaryRelation r(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (p.rgs()[u] == p.rgs()[v]) r.insert(u, v);
    }
  }
  return r;
}

inline Partition partition_from_equivalence(const BinaryRelation& e) {
  if (!is_reflexive(e)) throw ValidationError("relation is not reflexive");
  if (!is_symmetric(e)) throw ValidationError("relation is not symmetric");
  if (!is_transitive(e)) throw ValidationError("relation is not transitive");
  const auto n = e.universe_size();
  detail::require_universe(n);
  std::vector<Element> label(n);
  for (std::size_t u = 0; u < n; ++u) {
    Element least = 0;
    while (!e.contains(u, least)) ++least;
    label[u] = least;
  }
  return Partition::from_labels(label);
}

/// Inverse of ditset(); the relation must be a partition relation.
inline Partition partition_from_ditset(const BinaryRelation& r) {
  return partition_from_equivalence(r.complement());
}

/// sigma <= pi in the refinement order: every block of pi lies inside some
/// block of sigma (pi refines sigma). Equivalent to dit(sigma) subset dit(pi).
inline bool refines(const Partition& sigma, const Partition& pi) {
  require_same_size(sigma, pi);
  constexpr Element unset = std::numeric_limits<Element>::max();
  std::vector<Element> host(pi.block_count(), unset);
  for (std::size_t u = 0; u < pi.size(); ++u) {
    auto& h = host[pi.rgs()[u]];
    if (h == unset) {
      h = sigma.rgs()[u];
    } else if (h != sigma.rgs()[u]) {
      return false;
    }
  }
  return true;
}

/// Smallest equivalence relation containing s.
inline BinaryRelation closure(const BinaryRelation& s) {
  const auto n = s.universe_size();
  detail::DisjointSets sets(n);
  for (auto [u, v] : s.pairs()) sets.unite(u, v);
  std::vector<Element> root(n);
  for (std::size_t u = 0; u < n; ++u) root[u] = sets.find(static_cast<Element>(u));
  BinaryRelation out(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (root[u] == root[v]) out.insert(u, v);
    }
  }
  return out;
}

/// Largest partition relation contained in s: the complement of the closure
/// of the complement.
inline BinaryRelation interior(const BinaryRelation& s) {
  return closure(s.complement()).complement();
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// Advances a restricted-growth string to its lexicographic successor.
/// Returns false (leaving the string untouched) when it is already the last.
inline bool next_rgs(std::vector<Element>& rgs) {
  const auto n = rgs.size();
  if (n < 2) return false;
  std::vector<Element> prefix_max(n);
  prefix_max[0] = rgs[0];
  for (std::size_t i = 1; i < n; ++i) prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
  for (std::size_t i = n - 1; i >= 1; --i) {
    if (rgs[i] <= prefix_max[i - 1]) {
      ++rgs[i];
      std::fill(rgs.begin() + static_cast<std::ptrdiff_t>(i) + 1, rgs.end(), Element{0});
      return true;
    }
  }
  return false;
}

/// Input range over every partition of {0..n-1} in lexicographic rgs order.
class PartitionRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Partition*;
    using reference = const Partition&;

    iterator() = default;
    explicit iterator(std::size_t n)
        : rgs_(n, 0), current_(Partition::from_rgs(rgs_)), done_(false) {}

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }

    iterator& operator++() {
      if (next_rgs(rgs_)) {
        current_ = Partition::from_rgs(rgs_);
      } else {
        done_ = true;
      }
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_ && (a.done_ || a.rgs_ == b.rgs_);
    }

   private:
    std::vector<Element> rgs_;
    Partition current_ = Partition::from_rgs({0});
    bool done_ = true;
  };

  explicit PartitionRange(std::size_t n) : n_(n) { detail::require_universe(n); }

  iterator begin() const { return iterator(n_); }
  iterator end() const { return iterator(); }

 private:
  std::size_t n_;
};

inline PartitionRange enumerate_partitions(std::size_t n) { return PartitionRange(n); }

inline std::vector<Partition> all_partitions(std::size_t n) {
  std::vector<Partition> out;
  for (const auto& p : enumerate_partitions(n)) out.push_back(p);
  return out;
}

/// Bell number via the Bell triangle; saturates at UINT64_MAX.
inline std::uint64_t bell_number(std::size_t n) {
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto x : row) {
      const auto prev = next.back();
      next.push_back(prev > cap - x ? cap : prev + x);
    }
    row = std::move(next);
  }
  return row.front();
}

/// pi covers sigma in the refinement order. Pi(U) is graded by block count,
/// so a cover is a refinement that adds exactly one block.
inline bool covers(const Partition& sigma, const Partition& pi) {
  return pi.block_count() == sigma.block_count() + 1 && refines(sigma, pi);
}

/// Covering pairs (i, j) of the list, all[j] covering all[i].
inline std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(
    const std::vector<Partition>& all) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (covers(all[i], all[j])) edges.emplace_back(i, j);
    }
  }
  return edges;
}

}  // namespace partlog

#endif  // PARTLOG_CORE_HPP
