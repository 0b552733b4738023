#include "atomique/swap_router.hpp"
#include "atomique/verify.hpp"
#include "atomique/workloads.hpp"

#include <gtest/gtest.h>

using namespace atomique;

namespace {

std::size_t czCount(const Circuit& c) {
  std::size_t n = 0;
  for (const auto& g : c.gates) {
    n += g.kind == GateKind::CZ ? 1 : 0;
  }
  return n;
}

} // namespace

TEST(SwapRouter, InterArrayGateUnchanged) {
  Circuit c(2);
  c.cz(0, 1);
  const auto r = routeInterArray(c, {2, {0, 1}});
  EXPECT_EQ(r.added_cx, 0U);
  EXPECT_EQ(r.swaps, 0U);
  ASSERT_EQ(r.circuit.gates.size(), 1U);
  EXPECT_EQ(r.final_permutation, (std::vector<Qubit>{0, 1}));
}

TEST(SwapRouter, IdlePartnerSwapped) {
  Circuit c(3);
  c.cz(0, 1);
  const auto r = routeInterArray(c, {2, {0, 0, 1}});
  EXPECT_EQ(r.swaps, 1U);
  EXPECT_EQ(r.added_cx, 3U);
  EXPECT_EQ(czCount(r.circuit), 4U);
  EXPECT_EQ(r.intraArrayCz(), 0U);
  // Qubit 1 moves into slot 2 of array B.
  EXPECT_EQ(r.final_permutation, (std::vector<Qubit>{0, 2, 1}));
  const auto& last = r.circuit.gates.back();
  EXPECT_EQ(last.kind, GateKind::CZ);
  EXPECT_EQ(std::min(last.qubits[0], last.qubits[1]), 0U);
  EXPECT_EQ(std::max(last.qubits[0], last.qubits[1]), 2U);
  EXPECT_TRUE(equivalentUpToPermutation(c, r.circuit, r.final_permutation));
}

TEST(SwapRouter, AllIntraArrayCircuit) {
  Circuit c(4);
  c.cz(0, 1).cz(2, 3).cz(1, 0).cz(3, 2);
  const auto r = routeInterArray(c, {2, {0, 0, 1, 1}});
  EXPECT_EQ(r.intraArrayCz(), 0U);
  EXPECT_GE(r.added_cx, 3U);
  EXPECT_EQ(r.added_cx, 3 * r.swaps);
  EXPECT_TRUE(equivalentUpToPermutation(c, r.circuit, r.final_permutation));
}

TEST(SwapRouter, NoBlockedGatesMeansNoSwaps) {
  const auto c = toBasis(genBv(8, "1011011", 0));
  ArrayAssignment a{2, std::vector<int>(8, 0)};
  a.array_of[7] = 1;
  const auto r = routeInterArray(c, a);
  EXPECT_EQ(r.added_cx, 0U);
}

TEST(SwapRouter, SingleArrayIsUnroutable) {
  Circuit c(2);
  c.cz(0, 1);
  EXPECT_THROW(routeInterArray(c, {1, {0, 0}}), std::runtime_error);
}

TEST(SwapRouter, RejectsMacroGatesAndShortAssignments) {
  Circuit c(2);
  c.cx(0, 1);
  EXPECT_THROW(routeInterArray(c, {2, {0, 1}}), std::invalid_argument);
  Circuit d(3);
  d.cz(0, 1);
  EXPECT_THROW(routeInterArray(d, {2, {0, 1}}), std::invalid_argument);
}

TEST(SwapRouter, EquivalentOnRandomCircuits) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto c = toBasis(genRandomCircuit(6, 15, seed));
    const ArrayAssignment a{3, {0, 0, 0, 1, 1, 2}};
    const auto r = routeInterArray(c, a);
    EXPECT_EQ(r.intraArrayCz(), 0U) << "seed " << seed;
    EXPECT_EQ(r.added_cx, 3 * r.swaps);
    EXPECT_TRUE(equivalentUpToPermutation(c, r.circuit, r.final_permutation))
        << "seed " << seed;
  }
}

TEST(SwapRouter, Deterministic) {
  const auto c = toBasis(genRandomCircuit(30, 200, 4));
  ArrayAssignment a{3, {}};
  for (int q = 0; q < 30; ++q) {
    a.array_of.push_back(q % 3);
  }
  const auto r1 = routeInterArray(c, a);
  const auto r2 = routeInterArray(c, a);
  EXPECT_EQ(emitQasm(r1.circuit), emitQasm(r2.circuit));
  EXPECT_EQ(r1.final_permutation, r2.final_permutation);
}

TEST(SwapRouter, SwapsSpreadAcrossIdlePartners) {
  // Five blocked gates on disjoint pairs with plenty of idle partners:
  // every SWAP should use a fresh partner, keeping the CZ depth flat.
  Circuit c(20);
  for (Qubit q = 0; q < 10; q += 2) {
    c.cz(q, q + 1);
  }
  ArrayAssignment a{2, std::vector<int>(20, 0)};
  for (int q = 10; q < 20; ++q) {
    a.array_of[static_cast<std::size_t>(q)] = 1;
  }
  const auto r = routeInterArray(c, a);
  EXPECT_EQ(r.swaps, 5U);
  EXPECT_EQ(r.intraArrayCz(), 0U);
  EXPECT_EQ(buildDag(r.circuit).twoQubitDepth(), 4U);
}
