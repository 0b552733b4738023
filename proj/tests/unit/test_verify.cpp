#include "atomique/verify.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace atomique;

namespace {

void expectEntry(const DenseUnitary& u, std::size_t r, std::size_t c,
                 Complex v) {
  EXPECT_NEAR(std::abs(u(r, c) - v), 0.0, 1e-12) << "entry " << r << "," << c;
}

} // namespace

TEST(DenseUnitary, CzIsDiagonal) {
  Circuit c(2);
  c.cz(0, 1);
  const auto u = simulate(c);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t k = 0; k < 4; ++k) {
      const Complex expected = r != k ? 0.0 : (r == 3 ? -1.0 : 1.0);
      expectEntry(u, r, k, expected);
    }
  }
}

TEST(DenseUnitary, HadamardSquaredIsIdentity) {
  Circuit c(1);
  c.h(0).h(0);
  const auto u = simulate(c);
  expectEntry(u, 0, 0, 1.0);
  expectEntry(u, 1, 1, 1.0);
  expectEntry(u, 0, 1, 0.0);
}

TEST(DenseUnitary, PauliXOnSecondQubit) {
  Circuit c(2);
  c.x(1);
  const auto u = simulate(c);
  // Qubit 1 is bit 1 of the basis index: |00> -> |10> (index 2).
  expectEntry(u, 2, 0, 1.0);
  expectEntry(u, 3, 1, 1.0);
  expectEntry(u, 0, 2, 1.0);
  expectEntry(u, 0, 0, 0.0);
}

TEST(DenseUnitary, CxAndSwapMacros) {
  Circuit c(2);
  c.cx(0, 1);
  const auto u = simulate(c);
  // Control is bit 0: |01> (index 1) -> |11> (index 3).
  expectEntry(u, 3, 1, 1.0);
  expectEntry(u, 1, 3, 1.0);
  expectEntry(u, 0, 0, 1.0);
  Circuit s(2);
  s.swap(0, 1);
  const auto w = simulate(s);
  expectEntry(w, 2, 1, 1.0);
  expectEntry(w, 1, 2, 1.0);
}

TEST(DenseUnitary, StaysUnitary) {
  Circuit c(4);
  for (int i = 0; i < 10; ++i) {
    c.u(static_cast<Qubit>(i % 4), 0.3 * i, 1.1, -0.7 * i).cz(0, 3).cx(2, 1);
  }
  EXPECT_LT(simulate(c).unitarityError(), 1e-10);
}

TEST(DenseUnitary, WidthLimit) {
  EXPECT_NO_THROW(DenseUnitary(DenseUnitary::kMaxQubits));
  EXPECT_THROW(DenseUnitary(DenseUnitary::kMaxQubits + 1),
               std::invalid_argument);
}

TEST(Flatten, RamanThenCzPerStage) {
  Schedule s;
  s.n_atoms = 2;
  Stage a;
  Gate h;
  h.kind = GateKind::U;
  h.qubits = {0};
  h.angles = {std::numbers::pi / 2, 0.0, std::numbers::pi};
  a.raman = {{h}};
  a.cz = {{0, 1}};
  Stage b;
  b.cz = {{1, 0}};
  s.stages = {a, b};
  const auto c = flatten(s);
  ASSERT_EQ(c.gates.size(), 3U);
  EXPECT_EQ(c.gates[0].kind, GateKind::U);
  EXPECT_EQ(c.gates[1].kind, GateKind::CZ);
  EXPECT_EQ(c.gates[2].qubits, (std::vector<Qubit>{1, 0}));
  EXPECT_EQ(c.n_qubits, 2U);
}

TEST(Flatten, EmptySchedule) {
  Schedule s;
  s.n_atoms = 3;
  const auto c = flatten(s);
  EXPECT_EQ(c.n_qubits, 3U);
  EXPECT_TRUE(c.gates.empty());
}

TEST(Equivalence, IdenticalCircuits) {
  Circuit a(2);
  a.h(0).cz(0, 1);
  EXPECT_TRUE(equivalentUpToPermutation(a, a, {0, 1}));
}

TEST(Equivalence, GlobalPhaseIgnored) {
  // rx(pi) = -i X
  Circuit a(1);
  a.x(0);
  Circuit b(1);
  b.rx(0, std::numbers::pi);
  EXPECT_TRUE(equivalentUpToPermutation(a, b, {0}));
  EXPECT_GT(std::abs(simulate(a)(1, 0) - simulate(b)(1, 0)), 0.5);
}

TEST(Equivalence, DifferentCircuits) {
  Circuit a(2);
  a.cz(0, 1);
  Circuit b(2);
  b.h(0);
  EXPECT_FALSE(equivalentUpToPermutation(a, b, {0, 1}));
}

TEST(Equivalence, SwapExpansionNeedsPermutation) {
  Circuit a(2);
  a.h(0);
  // Three CX realise SWAP; afterwards logical qubit 0 sits on wire 1.
  Circuit b(2);
  b.h(0).cx(0, 1).cx(1, 0).cx(0, 1);
  EXPECT_TRUE(equivalentUpToPermutation(a, b, {1, 0}));
  EXPECT_FALSE(equivalentUpToPermutation(a, b, {0, 1}));
  EXPECT_TRUE(equivalentUpToPermutation(a, toBasis(b), {1, 0}));
}

TEST(Equivalence, Errors) {
  Circuit a(2);
  Circuit b(3);
  EXPECT_THROW(equivalentUpToPermutation(a, b, {0, 1}), std::invalid_argument);
  EXPECT_THROW(equivalentUpToPermutation(a, a, {0}), std::invalid_argument);
  EXPECT_THROW(equivalentUpToPermutation(a, a, {1, 1}), std::invalid_argument);
  Circuit wide(11);
  EXPECT_THROW(equivalentUpToPermutation(wide, wide,
                                         {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}),
               std::invalid_argument);
}
