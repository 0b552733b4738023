#include "atomique/atom_mapper.hpp"

#include "atomique/random.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace atomique {

std::vector<std::pair<int, int>> slmSpiralOrder(int rows, int cols) {
  std::vector<std::pair<int, int>> slots;
  slots.reserve(static_cast<std::size_t>(rows * cols));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      slots.emplace_back(r, c);
    }
  }
  auto key = [](const std::pair<int, int>& s) {
    const auto [r, c] = s;
    return std::make_tuple(std::abs(r - c), std::min(r, c), r < c ? 0 : 1);
  };
  std::sort(slots.begin(), slots.end(),
            [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return slots;
}

std::vector<std::size_t> czCounts(const Circuit& c) {
  std::vector<std::size_t> counts(c.n_qubits, 0);
  for (const auto& g : c.gates) {
    if (g.kind == GateKind::CZ) {
      ++counts[g.qubits[0]];
      ++counts[g.qubits[1]];
    }
  }
  return counts;
}

namespace {

/// Occupancy grid of one array.
class Grid {
public:
  explicit Grid(const ArrayShape& s)
      : rows_(s.rows), cols_(s.cols),
        used_(static_cast<std::size_t>(s.rows * s.cols), false) {}

  [[nodiscard]] bool inside(int r, int c) const {
    return r >= 0 && r < rows_ && c >= 0 && c < cols_;
  }
  [[nodiscard]] bool free(int r, int c) const {
    return inside(r, c) && !used_[index(r, c)];
  }
  void take(int r, int c) { used_[index(r, c)] = true; }

  /// Free slot with smallest Manhattan distance to (r, c); ties row-major.
  [[nodiscard]] std::optional<std::pair<int, int>> nearestFree(int r,
                                                               int c) const {
    std::optional<std::pair<int, int>> best;
    int bestDist = std::numeric_limits<int>::max();
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) {
        if (used_[index(i, j)]) {
          continue;
        }
        const int d = std::abs(i - r) + std::abs(j - c);
        if (d < bestDist) {
          bestDist = d;
          best = {i, j};
        }
      }
    }
    return best;
  }

  [[nodiscard]] int rows() const { return rows_; }
  [[nodiscard]] int cols() const { return cols_; }

  [[nodiscard]] std::optional<std::pair<int, int>> firstFree() const {
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) {
        if (!used_[index(i, j)]) {
          return std::make_pair(i, j);
        }
      }
    }
    return std::nullopt;
  }
private:
  [[nodiscard]] std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r * cols_ + c);
  }

  int rows_;
  int cols_;
  std::vector<bool> used_;
};

void checkAssignment(const RoutedCircuit& routed, const ArchConfig& arch) {
  if (routed.assignment.array_of.size() != routed.circuit.n_qubits) {
    throw std::invalid_argument("assignment does not cover the circuit");
  }
  const auto loads = routed.assignment.loads();
  for (std::size_t a = 0; a < loads.size(); ++a) {
    if (static_cast<int>(a) >= arch.numArrays()) {
      throw std::invalid_argument("assignment uses more arrays than exist");
    }
    if (loads[a] > static_cast<std::size_t>(arch.shape(static_cast<int>(a))
                                                .capacity())) {
      throw std::invalid_argument("capacity exceeded for array " +
                                  std::to_string(a));
    }
  }
}

std::vector<Grid> gridsFor(const ArchConfig& arch) {
  std::vector<Grid> grids;
  for (int a = 0; a < arch.numArrays(); ++a) {
    grids.emplace_back(arch.shape(a));
  }
  return grids;
}

Placement finish(const PartialPlacement& partial) {
  Placement p;
  p.slots.reserve(partial.size());
  for (std::size_t q = 0; q < partial.size(); ++q) {
    if (!partial[q]) {
      throw std::logic_error("qubit " + std::to_string(q) + " left unplaced");
    }
    p.slots.push_back(*partial[q]);
  }
  return p;
}

} // namespace

PartialPlacement mapSlm(const RoutedCircuit& routed, const ArchConfig& arch) {
  checkAssignment(routed, arch);
  const auto n = routed.circuit.n_qubits;
  const auto counts = czCounts(routed.circuit);
  std::vector<Qubit> slmQubits;
  for (Qubit q = 0; q < n; ++q) {
    if (routed.assignment.array_of[q] == 0) {
      slmQubits.push_back(q);
    }
  }
  std::stable_sort(slmQubits.begin(), slmQubits.end(),
                   [&](Qubit a, Qubit b) { return counts[a] > counts[b]; });
  const auto& shape = arch.shape(0);
  const auto order = slmSpiralOrder(shape.rows, shape.cols);
  if (slmQubits.size() > order.size()) {
    throw std::invalid_argument("SLM capacity exceeded");
  }
  PartialPlacement partial(n);
  for (std::size_t i = 0; i < slmQubits.size(); ++i) {
    partial[slmQubits[i]] = Slot{0, order[i].first, order[i].second};
  }
  return partial;
}

Placement mapAodAligned(const RoutedCircuit& routed, PartialPlacement partial,
                        const ArchConfig& arch) {
  checkAssignment(routed, arch);
  const auto n = routed.circuit.n_qubits;
  const auto& arrayOf = routed.assignment.array_of;
  auto grids = gridsFor(arch);
  for (const auto& s : partial) {
    if (s) {
      grids[static_cast<std::size_t>(s->array)].take(s->row, s->col);
    }
  }

  std::map<std::pair<Qubit, Qubit>, std::size_t> pairCounts;
  for (const auto& g : routed.circuit.gates) {
    if (g.kind == GateKind::CZ) {
      const auto a = std::min(g.qubits[0], g.qubits[1]);
      const auto b = std::max(g.qubits[0], g.qubits[1]);
      ++pairCounts[{a, b}];
    }
  }
  std::vector<std::pair<std::pair<Qubit, Qubit>, std::size_t>> ranked(
      pairCounts.begin(), pairCounts.end());
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& l, const auto& r) {
    return l.second > r.second;
  });

  auto place = [&](Qubit q, int r, int c) {
    auto& grid = grids[static_cast<std::size_t>(arrayOf[q])];
    grid.take(r, c);
    partial[q] = Slot{arrayOf[q], r, c};
  };
  auto placeNear = [&](Qubit q, int r, int c) {
    auto& grid = grids[static_cast<std::size_t>(arrayOf[q])];
    if (grid.free(r, c)) {
      place(q, r, c);
      return;
    }
    const auto slot = grid.nearestFree(r, c);
    if (!slot) {
      throw std::invalid_argument("capacity exceeded for array " +
                                  std::to_string(arrayOf[q]));
    }
    place(q, slot->first, slot->second);
  };

  for (const auto& [pair, count] : ranked) {
    const auto [u, v] = pair;
    const bool pu = partial[u].has_value();
    const bool pv = partial[v].has_value();
    if (pu && pv) {
      continue;
    }
    if (pu != pv) {
      const Qubit placed = pu ? u : v;
      const Qubit open = pu ? v : u;
      placeNear(open, partial[placed]->row, partial[placed]->col);
      continue;
    }
    auto& gu = grids[static_cast<std::size_t>(arrayOf[u])];
    auto& gv = grids[static_cast<std::size_t>(arrayOf[v])];
    std::optional<std::pair<int, int>> shared;
    if (arrayOf[u] != arrayOf[v]) {
      for (int r = 0; r < gu.rows() && !shared; ++r) {
        for (int c = 0; c < gu.cols(); ++c) {
          if (gu.free(r, c) && gv.free(r, c)) {
            shared = std::make_pair(r, c);
            break;
          }
        }
      }
    }
    if (shared) {
      place(u, shared->first, shared->second);
      place(v, shared->first, shared->second);
    } else {
      const auto first = gu.firstFree();
      if (!first) {
        throw std::invalid_argument("capacity exceeded for array " +
                                    std::to_string(arrayOf[u]));
      }
      place(u, first->first, first->second);
      placeNear(v, first->first, first->second);
    }
  }

  for (Qubit q = 0; q < n; ++q) {
    if (partial[q]) {
      continue;
    }
    const auto slot = grids[static_cast<std::size_t>(arrayOf[q])].firstFree();
    if (!slot) {
      throw std::invalid_argument("capacity exceeded for array " +
                                  std::to_string(arrayOf[q]));
    }
    place(q, slot->first, slot->second);
  }
  return finish(partial);
}

Placement mapAtoms(const RoutedCircuit& routed, const ArchConfig& arch) {
  return mapAodAligned(routed, mapSlm(routed, arch), arch);
}

Placement mapAtomsRandom(const RoutedCircuit& routed, const ArchConfig& arch,
                         std::uint64_t seed) {
  checkAssignment(routed, arch);
  Rng rng(seed);
  std::vector<std::vector<std::pair<int, int>>> freeSlots;
  for (int a = 0; a < arch.numArrays(); ++a) {
    std::vector<std::pair<int, int>> slots;
    for (int r = 0; r < arch.shape(a).rows; ++r) {
      for (int c = 0; c < arch.shape(a).cols; ++c) {
        slots.emplace_back(r, c);
      }
    }
    rng.shuffle(slots);
    freeSlots.push_back(std::move(slots));
  }
  Placement p;
  for (Qubit q = 0; q < routed.circuit.n_qubits; ++q) {
    const int a = routed.assignment.array_of[q];
    auto& slots = freeSlots[static_cast<std::size_t>(a)];
    p.slots.push_back(Slot{a, slots.back().first, slots.back().second});
    slots.pop_back();
  }
  return p;
}

Placement mapAtomsRowMajor(const RoutedCircuit& routed,
                           const ArchConfig& arch) {
  checkAssignment(routed, arch);
  std::vector<int> next(static_cast<std::size_t>(arch.numArrays()), 0);
  Placement p;
  for (Qubit q = 0; q < routed.circuit.n_qubits; ++q) {
    const int a = routed.assignment.array_of[q];
    const int i = next[static_cast<std::size_t>(a)]++;
    const int cols = arch.shape(a).cols;
    p.slots.push_back(Slot{a, i / cols, i % cols});
  }
  return p;
}

} // namespace atomique
