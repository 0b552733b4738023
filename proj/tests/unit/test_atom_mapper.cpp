#include "atomique/atom_mapper.hpp"
#include "atomique/random.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace atomique;

namespace {

using Cells = std::vector<std::pair<int, int>>;

ArchConfig smallArch(int n) {
  ArchConfig a;
  a.n_aod = 2;
  a.shapes = {{n, n}, {n, n}, {n, n}};
  return a;
}

/// Routed circuit over `n` qubits with the given array per qubit and CZ
/// multiplicities.
RoutedCircuit routed(std::vector<int> arrays,
                     std::initializer_list<std::tuple<Qubit, Qubit, int>> gates) {
  RoutedCircuit r;
  r.circuit = Circuit(arrays.size());
  for (const auto& [a, b, times] : gates) {
    for (int i = 0; i < times; ++i) {
      r.circuit.cz(a, b);
    }
  }
  r.assignment = {3, std::move(arrays)};
  r.final_permutation.resize(r.circuit.n_qubits);
  for (Qubit q = 0; q < r.circuit.n_qubits; ++q) {
    r.final_permutation[q] = q;
  }
  return r;
}

} // namespace

TEST(Spiral, Square3) {
  EXPECT_EQ(slmSpiralOrder(3, 3), (Cells{{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 0},
                                         {1, 2}, {2, 1}, {0, 2}, {2, 0}}));
}

TEST(Spiral, Single) { EXPECT_EQ(slmSpiralOrder(1, 1), (Cells{{0, 0}})); }

TEST(Spiral, Rectangle) {
  EXPECT_EQ(slmSpiralOrder(2, 3),
            (Cells{{0, 0}, {1, 1}, {0, 1}, {1, 0}, {1, 2}, {0, 2}}));
}

TEST(Spiral, CoversEverySlotOnce) {
  for (int r = 1; r <= 7; ++r) {
    for (int c = 1; c <= 7; ++c) {
      const auto order = slmSpiralOrder(r, c);
      EXPECT_EQ(order.size(), static_cast<std::size_t>(r * c));
      const std::set<std::pair<int, int>> distinct(order.begin(), order.end());
      EXPECT_EQ(distinct.size(), order.size());
    }
  }
}

TEST(MapSlm, SingleQubit) {
  const auto r = routed({0, 1}, {{0, 1, 1}});
  const auto p = mapSlm(r, smallArch(3));
  ASSERT_TRUE(p[0].has_value());
  EXPECT_EQ(*p[0], (Slot{0, 0, 0}));
  EXPECT_FALSE(p[1].has_value());
}

TEST(MapSlm, DescendingCountsAlongDiagonal) {
  const auto r = routed({0, 0, 0, 1}, {{2, 3, 1}, {1, 3, 3}, {0, 3, 5}});
  const auto p = mapSlm(r, smallArch(3));
  EXPECT_EQ(*p[0], (Slot{0, 0, 0}));
  EXPECT_EQ(*p[1], (Slot{0, 1, 1}));
  EXPECT_EQ(*p[2], (Slot{0, 2, 2}));
}

TEST(MapSlm, TiesByLowerId) {
  const auto r = routed({0, 0, 0, 1}, {{2, 3, 2}, {1, 3, 2}, {0, 3, 2}});
  const auto p = mapSlm(r, smallArch(3));
  EXPECT_EQ(*p[0], (Slot{0, 0, 0}));
  EXPECT_EQ(*p[1], (Slot{0, 1, 1}));
  EXPECT_EQ(*p[2], (Slot{0, 2, 2}));
}

TEST(MapSlm, CapacityExceeded) {
  const auto r = routed({0, 0, 0, 0, 0, 1}, {{0, 5, 1}});
  EXPECT_THROW(mapSlm(r, smallArch(2)), std::invalid_argument);
}

TEST(MapAod, TopPairSharesCorner) {
  // Qubit 0 (SLM) is the busiest; its top partner 1 lands at the same corner.
  const auto r = routed({0, 1, 1, 0}, {{0, 1, 6}, {3, 2, 2}});
  const auto p = mapAtoms(r, smallArch(3));
  EXPECT_EQ(p[0], (Slot{0, 0, 0}));
  EXPECT_EQ(p[1], (Slot{1, 0, 0}));
}

TEST(MapAod, OccupiedTargetFallsBackToNearest) {
  // SLM: 0 -> (0,0), 1 -> (1,1). AOD 1: 4 takes (0,0), 2 takes (1,1), so 3
  // (also paired with SLM (1,1)) goes to the nearest free cell row-major.
  const auto r = routed({0, 0, 1, 1, 1, 1},
                        {{0, 4, 9}, {1, 2, 5}, {1, 3, 3}});
  const auto p = mapAtoms(r, smallArch(3));
  EXPECT_EQ(p[0], (Slot{0, 0, 0}));
  EXPECT_EQ(p[1], (Slot{0, 1, 1}));
  EXPECT_EQ(p[4], (Slot{1, 0, 0}));
  EXPECT_EQ(p[2], (Slot{1, 1, 1}));
  EXPECT_EQ(p[3], (Slot{1, 0, 1}));
  // Qubit 5 has no gates and fills the first free cell.
  EXPECT_EQ(p[5], (Slot{1, 0, 2}));
}

TEST(MapAod, CrossAodPairsShareCell) {
  const auto r = routed({1, 2, 0}, {{0, 1, 4}, {2, 0, 1}});
  const auto p = mapAtoms(r, smallArch(3));
  EXPECT_EQ(p[0].row, p[1].row);
  EXPECT_EQ(p[0].col, p[1].col);
  EXPECT_NE(p[0].array, p[1].array);
}

TEST(MapAtoms, BijectiveAndConsistent) {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto arch = smallArch(4);
    const std::size_t n = 30;
    RoutedCircuit r;
    r.circuit = Circuit(n);
    r.assignment.k = 3;
    std::vector<int> load(3, 0);
    for (std::size_t q = 0; q < n; ++q) {
      int a = static_cast<int>(rng.below(3));
      while (load[static_cast<std::size_t>(a)] >= 16) {
        a = (a + 1) % 3;
      }
      ++load[static_cast<std::size_t>(a)];
      r.assignment.array_of.push_back(a);
    }
    for (int g = 0; g < 60; ++g) {
      const auto a = static_cast<Qubit>(rng.below(n));
      const auto b = static_cast<Qubit>(rng.below(n));
      if (a != b && r.assignment.array_of[a] != r.assignment.array_of[b]) {
        r.circuit.cz(a, b);
      }
    }
    for (const auto& p : {mapAtoms(r, arch), mapAtomsRandom(r, arch, 5),
                          mapAtomsRowMajor(r, arch)}) {
      ASSERT_EQ(p.size(), n);
      EXPECT_NO_THROW(p.validate(arch));
      for (std::size_t q = 0; q < n; ++q) {
        EXPECT_EQ(p[q].array, r.assignment.array_of[q]);
      }
    }
  }
}

TEST(MapAtoms, SpiralBalancesRowsBetterThanRowMajor) {
  // Full 5x5 SLM with random gate counts: the spiral never loads rows more
  // unevenly than row-major filling of the same sorted order.
  Rng rng(31);
  const int side = 5;
  int wins = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> counts(side * side);
    for (auto& c : counts) {
      c = 1.0 + static_cast<double>(rng.below(50));
    }
    std::vector<std::size_t> order(counts.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
      return counts[a] > counts[b];
    });
    const auto spiral = slmSpiralOrder(side, side);
    auto ratio = [&](auto cellOf) {
      std::vector<double> rows(side, 0.0);
      for (std::size_t k = 0; k < order.size(); ++k) {
        rows[static_cast<std::size_t>(cellOf(k).first)] += counts[order[k]];
      }
      const auto [lo, hi] = std::minmax_element(rows.begin(), rows.end());
      return *hi / *lo;
    };
    const double s = ratio([&](std::size_t k) { return spiral[k]; });
    const double m = ratio([&](std::size_t k) {
      return std::pair<int, int>{static_cast<int>(k) / side,
                                 static_cast<int>(k) % side};
    });
    EXPECT_LE(s, m + 1e-12) << "trial " << trial;
    wins += s < m ? 1 : 0;
  }
  EXPECT_GT(wins, 90);
}

TEST(MapAtoms, AlignmentBeatsRandomPlacement) {
  Rng rng(77);
  double aligned = 0.0;
  double random = 0.0;
  for (int trial = 0; trial < 30; ++trial) {
    const auto arch = smallArch(4);
    const std::size_t n = 36;
    RoutedCircuit r;
    r.circuit = Circuit(n);
    r.assignment.k = 3;
    for (std::size_t q = 0; q < n; ++q) {
      r.assignment.array_of.push_back(static_cast<int>(q % 3));
    }
    std::map<std::pair<Qubit, Qubit>, int> freq;
    for (int g = 0; g < 120; ++g) {
      const auto a = static_cast<Qubit>(rng.below(n));
      const auto b = static_cast<Qubit>(rng.below(n));
      if (r.assignment.array_of[a] != r.assignment.array_of[b]) {
        r.circuit.cz(a, b);
        ++freq[{std::min(a, b), std::max(a, b)}];
      }
    }
    std::vector<std::pair<int, std::pair<Qubit, Qubit>>> ranked;
    for (const auto& [pair, f] : freq) {
      ranked.push_back({-f, pair});
    }
    std::sort(ranked.begin(), ranked.end());
    const auto top = (n + 3) / 4;
    auto fraction = [&](const Placement& p) {
      std::size_t hit = 0;
      for (std::size_t i = 0; i < top && i < ranked.size(); ++i) {
        const auto [a, b] = ranked[i].second;
        hit += p[a].row == p[b].row && p[a].col == p[b].col ? 1 : 0;
      }
      return static_cast<double>(hit) / static_cast<double>(top);
    };
    aligned += fraction(mapAtoms(r, arch));
    random += fraction(mapAtomsRandom(r, arch, static_cast<std::uint64_t>(trial)));
  }
  EXPECT_GE(aligned, random);
  EXPECT_GT(aligned, 0.0);
}

TEST(CzCounts, CountsIncidences) {
  Circuit c(3);
  c.cz(0, 1).cz(1, 2).h(0);
  EXPECT_EQ(czCounts(c), (std::vector<std::size_t>{1, 2, 1}));
}
