#include <gtest/gtest.h>

#include "partlog/algebra.hpp"

using namespace partlog;

namespace {
const Partition kSigma = from_blocks({{0}, {1, 2, 3}}, 4);
const Partition kPi = from_blocks({{0, 1}, {2, 3}}, 4);
}  // namespace

TEST(BooleanCore, TwoNonSingletonBlocks) {
  const auto core = boolean_core(kPi);
  ASSERT_EQ(core.size(), 4u);
  ASSERT_EQ(core.ns_blocks(), (std::vector<Block>{{0, 1}, {2, 3}}));
  EXPECT_EQ(core.members()[0], kPi);
  EXPECT_EQ(core.members()[1], from_blocks({{0}, {1}, {2, 3}}, 4));
  EXPECT_EQ(core.members()[2], from_blocks({{0, 1}, {2}, {3}}, 4));
  EXPECT_EQ(core.members()[3], discrete(4));
  EXPECT_EQ(core.bottom(), kPi);
  EXPECT_EQ(core.top(), discrete(4));
}

TEST(BooleanCore, DegenerateCores) {
  const auto top = boolean_core(discrete(4));
  ASSERT_EQ(top.size(), 1u);
  EXPECT_EQ(top.bottom(), discrete(4));
  EXPECT_EQ(top.top(), discrete(4));
  EXPECT_EQ(top.full_mask(), 0u);

  for (std::size_t n = 2; n <= 5; ++n) {
    const auto blob = boolean_core(indiscrete(n));
    ASSERT_EQ(blob.size(), 2u);
    EXPECT_EQ(blob.bottom(), indiscrete(n));
    EXPECT_EQ(blob.top(), discrete(n));
  }
}

TEST(BooleanCore, MembersAreRegularAndInSegment) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& pi : enumerate_partitions(n)) {
      const auto core = boolean_core(pi);
      ASSERT_EQ(core.size(), std::size_t{1} << core.ns_blocks().size());
      for (const auto& m : core.members()) {
        ASSERT_TRUE(refines(pi, m));
        ASSERT_EQ(double_pi_negation(m, pi), m);
        ASSERT_TRUE(core.contains(m));
      }
      // Every pi-negation lands in the core, and nothing else in [pi,1] that
      // is not pi-regular does.
      for (const auto& s : enumerate_partitions(n)) {
        ASSERT_TRUE(core.contains(pi_negation(s, pi)));
        ASSERT_EQ(core.contains(s), double_pi_negation(s, pi) == s);
      }
    }
  }
}

TEST(BooleanCore, SubsetIsomorphism) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& pi : enumerate_partitions(n)) {
      const auto core = boolean_core(pi);
      const auto full = core.full_mask();
      EXPECT_EQ(core_from_subset(core, 0), pi);
      EXPECT_EQ(core_from_subset(core, full), discrete(n));
      for (BlockMask a = 0; a <= full; ++a) {
        const auto pa = core_from_subset(core, a);
        ASSERT_EQ(core_to_subset(core, pa), a);
        ASSERT_EQ(pi_negation(pa, pi), core_from_subset(core, full & ~a));
        for (BlockMask b = 0; b <= full; ++b) {
          const auto pb = core_from_subset(core, b);
          ASSERT_EQ(join(pa, pb), core_from_subset(core, a | b));
          ASSERT_EQ(meet(pa, pb), core_from_subset(core, a & b));
        }
      }
    }
  }
}

TEST(BooleanCore, SubsetErrors) {
  const auto core = boolean_core(kPi);
  EXPECT_THROW(core_from_subset(core, 4), ValidationError);
  EXPECT_THROW(core_to_subset(core, kSigma), ValidationError);
  EXPECT_THROW(core_to_subset(core, indiscrete(4)), ValidationError);
}

TEST(BooleanCore, SizeGuard) {
  std::vector<Element> rgs;
  for (Element b = 0; b < 21; ++b) rgs.insert(rgs.end(), {b, b});
  EXPECT_THROW(boolean_core(Partition::from_rgs(rgs)), LimitExceeded);
  EXPECT_THROW(boolean_core(kPi, 1), LimitExceeded);
}

TEST(BooleanCore, CardinalityIdentity) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& pi : enumerate_partitions(n)) {
      const auto core = boolean_core(pi);
      const auto singletons = pi.block_count() - core.ns_blocks().size();
      ASSERT_EQ(std::uint64_t{1} << pi.block_count(),
                static_cast<std::uint64_t>(core.size()) << singletons);
    }
  }
}

TEST(DoublePiNegation, Examples) {
  EXPECT_EQ(double_pi_negation(kSigma, kPi), from_blocks({{0}, {1}, {2, 3}}, 4));
  EXPECT_EQ(double_pi_negation(kPi, kPi), kPi);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto all = all_partitions(n);
    for (const auto& s : all) {
      for (const auto& p : all) {
        const auto closed = double_pi_negation(s, p);
        ASSERT_TRUE(refines(s, closed));
        ASSERT_TRUE(refines(join(s, p), closed));
        // Non-singleton blocks are exactly the pi-blocks inside sigma-blocks.
        for (const auto& b : p.blocks()) {
          bool inside = true;
          for (auto u : b) inside = inside && s.same_block(u, b.front());
          for (auto u : b)
            if (u != b.front()) ASSERT_EQ(closed.same_block(u, b.front()), inside);
        }
      }
    }
  }
}

TEST(ExcludedMiddle, Examples) {
  EXPECT_EQ(excluded_middle_partition(kSigma, kPi), discrete(4));
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto all = all_partitions(n);
    for (const auto& p : all) {
      EXPECT_EQ(excluded_middle_partition(indiscrete(n), p), discrete(n));
      for (const auto& s : all) {
        const auto em = excluded_middle_partition(s, p);
        ASSERT_TRUE(refines(p, em));
        ASSERT_EQ(pi_negation(em, p), p);
        ASSERT_EQ(double_pi_negation(em, p), discrete(n));
      }
    }
  }
}

TEST(ExcludedMiddle, NotAlwaysInCore) {
  // sigma = {{0,1},{2,3}}, pi = {{0,1,2,3}}: sigma \/ ~sigma = sigma, which is
  // neither pi nor 1.
  const auto sigma = from_blocks({{0, 1}, {2, 3}}, 4);
  const auto pi = indiscrete(4);
  const auto em = excluded_middle_partition(sigma, pi);
  EXPECT_EQ(em, sigma);
  EXPECT_FALSE(boolean_core(pi).contains(em));
}

TEST(JoinDecomposition, HoldsExhaustively) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto all = all_partitions(n);
    for (const auto& s : all)
      for (const auto& p : all) ASSERT_TRUE(check_join_decomposition(s, p));
    for (const auto& p : all) {
      EXPECT_TRUE(check_join_decomposition(p, p));
      EXPECT_EQ(join(p, p), meet(excluded_middle_partition(p, p), double_pi_negation(p, p)));
      EXPECT_TRUE(check_join_decomposition(discrete(n), p));
    }
  }
}

TEST(CoreDistribution, HoldsOnSegment) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto all = all_partitions(n);
    for (const auto& pi : all) {
      for (const auto& phi : all) {
        if (!refines(pi, phi)) {
          EXPECT_THROW(check_core_distribution(phi, pi, pi, pi), ValidationError);
          continue;
        }
        for (const auto& s : all)
          for (const auto& t : all) ASSERT_TRUE(check_core_distribution(phi, pi, s, t));
      }
    }
  }
}

TEST(CoreDistribution, BooleanCoreIsDistributive) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& pi : enumerate_partitions(n)) {
      const auto core = boolean_core(pi);
      for (const auto& a : core.members()) {
        const auto na = pi_negation(a, pi);
        ASSERT_EQ(join(a, na), core.top());
        ASSERT_EQ(meet(a, na), pi);
        for (const auto& b : core.members())
          for (const auto& c : core.members()) {
            ASSERT_EQ(join(a, meet(b, c)), meet(join(a, b), join(a, c)));
            ASSERT_EQ(meet(a, join(b, c)), join(meet(a, b), meet(a, c)));
          }
      }
    }
  }
}

TEST(NonDistributivity, ThreeElementLattice) {
  const auto pi = from_blocks({{0, 1}, {2}}, 3);
  const auto sigma = from_blocks({{0}, {1, 2}}, 3);
  const auto tau = from_blocks({{1}, {0, 2}}, 3);
  EXPECT_EQ(join(pi, meet(sigma, tau)), pi);
  EXPECT_EQ(meet(join(pi, sigma), join(pi, tau)), discrete(3));
  EXPECT_NE(pi, discrete(3));
}
