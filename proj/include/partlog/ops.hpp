#ifndef PARTLOG_OPS_HPP
#define PARTLOG_OPS_HPP

// Lattice operations and partition implication. implication_blocks is the
// production definition; the adjunctive, graph and interior forms are kept
// as independent routes to the same partition and are cross-checked in tests.

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "partlog/core.hpp"

namespace partlog {

/// A binary truth function, stored as its four outputs in the order
/// (T,T), (T,F), (F,T), (F,F) of (left, right).
class BoolOp2 {
 public:
  constexpr BoolOp2() = default;
  constexpr BoolOp2(bool tt, bool tf, bool ft, bool ff) : table_{tt, tf, ft, ff} {}

  /// code in 0..15; bit 3 is the (T,T) entry, bit 0 the (F,F) entry.
  static constexpr BoolOp2 from_code(unsigned code) {
    return BoolOp2((code >> 3) & 1u, (code >> 2) & 1u, (code >> 1) & 1u, code & 1u);
  }

  /// Parses a four-character table such as "TFTT".
  static BoolOp2 from_string(const std::string& s) {
    if (s.size() != 4) throw ValidationError("truth table must have 4 entries: '" + s + "'");
    std::array<bool, 4> t{};
    for (std::size_t i = 0; i < 4; ++i) {
      if (s[i] == 'T' || s[i] == '1') {
        t[i] = true;
      } else if (s[i] == 'F' || s[i] == '0') {
        t[i] = false;
      } else {
        throw ValidationError("bad truth table entry '" + std::string(1, s[i]) + "'");
      }
    }
    return BoolOp2(t[0], t[1], t[2], t[3]);
  }

  constexpr bool operator()(bool left, bool right) const {
    return table_[(left ? 0 : 2) + (right ? 0 : 1)];
  }

  constexpr unsigned code() const {
    return (unsigned{table_[0]} << 3) | (unsigned{table_[1]} << 2) |
           (unsigned{table_[2]} << 1) | unsigned{table_[3]};
  }

  std::string to_string() const {
    std::string s;
    for (bool b : table_) s += b ? 'T' : 'F';
    return s;
  }

  friend constexpr bool operator==(const BoolOp2&, const BoolOp2&) = default;

 private:
  std::array<bool, 4> table_{};
};

namespace bool_ops {
inline constexpr BoolOp2 disjunction{true, true, true, false};
inline constexpr BoolOp2 conjunction{true, false, false, false};
inline constexpr BoolOp2 implication{true, false, true, true};
inline constexpr BoolOp2 constant_true{true, true, true, true};
inline constexpr BoolOp2 constant_false{false, false, false, false};
}  // namespace bool_ops

/// Blocks are the non-empty intersections B & C.
inline Partition join(const Partition& p, const Partition& q) {
  require_same_size(p, q);
  std::vector<std::uint64_t> label(p.size());
  const auto width = static_cast<std::uint64_t>(q.block_count());
  for (std::size_t u = 0; u < p.size(); ++u) {
    label[u] = p.rgs()[u] * width + q.rgs()[u];
  }
  return Partition::from_labels(label);
}

/// Partition of the equivalence relation generated by indit(p) | indit(q).
inline Partition meet(const Partition& p, const Partition& q) {
  require_same_size(p, q);
  const auto n = p.size();
  detail::DisjointSets sets(n);
  constexpr Element unset = std::numeric_limits<Element>::max();
  std::vector<Element> first_p(p.block_count(), unset);
  std::vector<Element> first_q(q.block_count(), unset);
  for (Element u = 0; u < n; ++u) {
    auto& fp = first_p[p.rgs()[u]];
    auto& fq = first_q[q.rgs()[u]];
    if (fp == unset) fp = u; else sets.unite(fp, u);
    if (fq == unset) fq = u; else sets.unite(fq, u);
  }
  std::vector<Element> label(n);
  for (Element u = 0; u < n; ++u) label[u] = sets.find(u);
  return Partition::from_labels(label);
}

/// sigma => pi: pi with every block that lies inside a block of sigma
/// replaced by singletons; all other blocks of pi are kept whole.
inline Partition implication_blocks(const Partition& sigma, const Partition& pi) {
  require_same_size(sigma, pi);
  const auto n = pi.size();
  constexpr Element unset = std::numeric_limits<Element>::max();
  std::vector<Element> host(pi.block_count(), unset);
  std::vector<bool> contained(pi.block_count(), true);
  for (std::size_t u = 0; u < n; ++u) {
    const auto b = pi.rgs()[u];
    if (host[b] == unset) {
      host[b] = sigma.rgs()[u];
    } else if (host[b] != sigma.rgs()[u]) {
      contained[b] = false;
    }
  }
  // Whole blocks keep label b; discretized elements get n + u.
  std::vector<std::uint64_t> label(n);
  for (std::size_t u = 0; u < n; ++u) {
    const auto b = pi.rgs()[u];
    label[u] = contained[b] ? n + u : b;
  }
  return Partition::from_labels(label);
}

inline Partition pi_negation(const Partition& sigma, const Partition& pi) {
  return implication_blocks(sigma, pi);
}

/// Absolute negation, sigma => 0.
inline Partition negation(const Partition& sigma) {
  return implication_blocks(sigma, indiscrete(sigma.size()));
}

inline constexpr std::size_t kDefaultAdjunctiveLimit = 8;

/// dit(sigma => pi) as the union of dit(tau) over every tau with
/// dit(tau) & dit(sigma) subset dit(pi). Enumerates all Bell(n) partitions,
/// so it is refused above max_size.
inline Partition implication_adjunctive(const Partition& sigma, const Partition& pi,
                                        std::size_t max_size = kDefaultAdjunctiveLimit) {
  require_same_size(sigma, pi);
  const auto n = pi.size();
  if (n > max_size) {
    throw LimitExceeded("adjunctive oracle limit: universe size " + std::to_string(n) +
                        " exceeds " + std::to_string(max_size));
  }
  const auto dit_sigma = ditset(sigma);
  const auto dit_pi = ditset(pi);
  BinaryRelation acc(n);
  for (const auto& tau : enumerate_partitions(n)) {
    const auto dit_tau = ditset(tau);
    if ((dit_tau & dit_sigma).subset_of(dit_pi)) acc = acc | dit_tau;
  }
  return partition_from_ditset(acc);
}

using Link = std::pair<Element, Element>;

/// Links u-v (u < v) of K(U) whose truth-value pair (T on dits, F on indits)
/// evaluates to F under op; these are the links kept in the graph method.
inline std::vector<Link> retained_links(BoolOp2 op, const Partition& left,
                                        const Partition& right) {
  require_same_size(left, right);
  std::vector<Link> links;
  const auto n = static_cast<Element>(left.size());
  for (Element u = 0; u < n; ++u) {
    for (Element v = u + 1; v < n; ++v) {
      const bool l = !left.same_block(u, v);
      const bool r = !right.same_block(u, v);
      if (!op(l, r)) links.emplace_back(u, v);
    }
  }
  return links;
}

/// Connected components of a graph on {0..n-1}; isolated vertices become
/// singleton blocks.
inline Partition components(std::size_t n, const std::vector<Link>& links) {
  detail::DisjointSets sets(n);
  for (auto [u, v] : links) sets.unite(u, v);
  std::vector<Element> label(n);
  for (Element u = 0; u < n; ++u) label[u] = sets.find(u);
  return Partition::from_labels(label);
}

/// Graph method for an arbitrary binary operation: keep the F-links and take
/// connected components. left supplies the first truth-table argument.
inline Partition binary_op_graph(BoolOp2 op, const Partition& left, const Partition& right) {
  return components(left.size(), retained_links(op, left, right));
}

/// Links kept for sigma => pi: those distinguished by sigma and not by pi.
inline std::vector<Link> implication_links(const Partition& sigma, const Partition& pi) {
  require_same_size(sigma, pi);
  std::vector<Link> links;
  const auto n = static_cast<Element>(pi.size());
  for (Element u = 0; u < n; ++u) {
    for (Element v = u + 1; v < n; ++v) {
      if (!sigma.same_block(u, v) && pi.same_block(u, v)) links.emplace_back(u, v);
    }
  }
  return links;
}

inline Partition implication_graph(const Partition& sigma, const Partition& pi) {
  return components(pi.size(), implication_links(sigma, pi));
}

/// dit(sigma => pi) = int(dit(sigma)^c | dit(pi)).
inline Partition implication_interior(const Partition& sigma, const Partition& pi) {
  require_same_size(sigma, pi);
  return partition_from_ditset(interior(ditset(sigma).complement() | ditset(pi)));
}

}  // namespace partlog

#endif  // PARTLOG_OPS_HPP
