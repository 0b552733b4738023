#pragma once

#include "atomique/arch.hpp"
#include "atomique/swap_router.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace atomique {

/// Diagonal-first order over a rows x cols grid: ascending |row - col|, then
/// position along the diagonal, upper (row < col) slot before lower.
std::vector<std::pair<int, int>> slmSpiralOrder(int rows, int cols);

/// Per-qubit slot under construction; empty optional = not yet placed.
using PartialPlacement = std::vector<std::optional<Slot>>;

/// Places the SLM qubits (those assigned to array 0) along slmSpiralOrder in
/// descending CZ count, ties by lower id.
PartialPlacement mapSlm(const RoutedCircuit& routed, const ArchConfig& arch);

/// Places the AOD qubits so that frequent pairs share (row, col) across
/// arrays; leftovers fill free slots row-major.
Placement mapAodAligned(const RoutedCircuit& routed, PartialPlacement partial,
                        const ArchConfig& arch);

/// mapSlm followed by mapAodAligned.
Placement mapAtoms(const RoutedCircuit& routed, const ArchConfig& arch);

/// Uniformly random slots within each qubit's array (ablation baseline).
Placement mapAtomsRandom(const RoutedCircuit& routed, const ArchConfig& arch,
                         std::uint64_t seed);

/// Row-major placement within each qubit's array, in qubit id order.
Placement mapAtomsRowMajor(const RoutedCircuit& routed, const ArchConfig& arch);

/// Incident CZ count per qubit of a circuit.
std::vector<std::size_t> czCounts(const Circuit& c);

} // namespace atomique
