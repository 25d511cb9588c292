#ifndef PARTLOG_ALGEBRA_HPP
#define PARTLOG_ALGEBRA_HPP

// The Boolean core of a partition pi: the pi-regular partitions sigma => pi,
// which sit in the segment [pi, 1] and form a Boolean algebra isomorphic to
// the powerset of the non-singleton blocks of pi.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "partlog/core.hpp"
#include "partlog/ops.hpp"

namespace partlog {

/// Bit i set means non-singleton block i of pi is discretized.
using BlockMask = std::uint32_t;

inline constexpr std::size_t kMaxCoreBlocks = 20;

class BooleanCore;
inline BooleanCore boolean_core(const Partition& pi, std::size_t max_blocks = kMaxCoreBlocks);

class BooleanCore {
 public:
  const Partition& base() const noexcept { return pi_; }
  const std::vector<Block>& ns_blocks() const noexcept { return ns_blocks_; }

  /// Indexed by mask: members()[m] discretizes exactly the blocks in m.
  const std::vector<Partition>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

  const Partition& bottom() const noexcept { return members_.front(); }
  const Partition& top() const noexcept { return members_.back(); }

  BlockMask full_mask() const noexcept {
    return static_cast<BlockMask>((std::uint64_t{1} << ns_blocks_.size()) - 1);
  }

  bool contains(const Partition& m) const { return index_.count(m) != 0; }

  /// Mask of a member; throws ValidationError for non-members.
  BlockMask mask_of(const Partition& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) {
      throw ValidationError("partition is not a member of the Boolean core");
    }
    return it->second;
  }

 private:
  friend BooleanCore boolean_core(const Partition& pi, std::size_t max_blocks);

  Partition pi_ = Partition::from_rgs({0});
  std::vector<Block> ns_blocks_;
  std::vector<Partition> members_;
  std::map<Partition, BlockMask> index_;
};

namespace detail {

inline Partition discretize_blocks(const Partition& pi, const std::vector<Block>& ns_blocks,
                                   BlockMask mask) {
  std::vector<std::uint64_t> label(pi.rgs().begin(), pi.rgs().end());
  const auto n = pi.size();
  for (std::size_t i = 0; i < ns_blocks.size(); ++i) {
    if (!((mask >> i) & 1u)) continue;
    for (Element u : ns_blocks[i]) label[u] = n + u;
  }
  return Partition::from_labels(label);
}

}  // namespace detail

inline BooleanCore boolean_core(const Partition& pi, std::size_t max_blocks) {
  BooleanCore core;
  core.pi_ = pi;
  for (auto& block : pi.blocks()) {
    if (block.size() > 1) core.ns_blocks_.push_back(std::move(block));
  }
  if (core.ns_blocks_.size() > std::min(max_blocks, kMaxCoreBlocks)) {
    throw LimitExceeded("Boolean core too large: " + std::to_string(core.ns_blocks_.size()) +
                        " non-singleton blocks exceeds " + std::to_string(max_blocks));
  }
  const std::uint64_t count = std::uint64_t{1} << core.ns_blocks_.size();
  core.members_.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    auto m = detail::discretize_blocks(pi, core.ns_blocks_, static_cast<BlockMask>(mask));
    if (implication_blocks(implication_blocks(m, pi), pi) != m) {
      throw std::logic_error("Boolean core member is not pi-regular");
    }
    core.index_.emplace(m, static_cast<BlockMask>(mask));
    core.members_.push_back(std::move(m));
  }
  return core;
}

inline Partition core_from_subset(const BooleanCore& core, BlockMask chosen) {
  if (chosen & ~core.full_mask()) {
    throw ValidationError("subset mask names blocks outside the core");
  }
  return core.members()[chosen];
}

inline BlockMask core_to_subset(const BooleanCore& core, const Partition& m) {
  return core.mask_of(m);
}

/// Double pi-negation, the pi-closure of sigma: discretizes the blocks of pi
/// that are not contained in a block of sigma.
inline Partition double_pi_negation(const Partition& sigma, const Partition& pi) {
  return pi_negation(pi_negation(sigma, pi), pi);
}

inline Partition excluded_middle_partition(const Partition& sigma, const Partition& pi) {
  return join(sigma, pi_negation(sigma, pi));
}

/// sigma | pi == (sigma | ~sigma) & ~~sigma, with ~ the pi-negation.
inline bool check_join_decomposition(const Partition& sigma, const Partition& pi) {
  return join(sigma, pi) ==
         meet(excluded_middle_partition(sigma, pi), double_pi_negation(sigma, pi));
}

/// Both distributive laws of phi over pi-negated sigma and tau; phi must lie
/// in the segment [pi, 1].
inline bool check_core_distribution(const Partition& phi, const Partition& pi,
                                    const Partition& sigma, const Partition& tau) {
  require_same_size(phi, pi);
  require_same_size(pi, sigma);
  require_same_size(sigma, tau);
  if (!refines(pi, phi)) {
    throw ValidationError("phi is not in the segment [pi, 1]");
  }
  const auto ns = pi_negation(sigma, pi);
  const auto nt = pi_negation(tau, pi);
  const bool join_over_meet = join(phi, meet(ns, nt)) == meet(join(phi, ns), join(phi, nt));
  const bool meet_over_join = meet(phi, join(ns, nt)) == join(meet(phi, ns), meet(phi, nt));
  return join_over_meet && meet_over_join;
}

}  // namespace partlog

#endif  // PARTLOG_ALGEBRA_HPP
