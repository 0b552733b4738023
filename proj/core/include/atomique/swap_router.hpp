#pragma once

#include "atomique/array_mapper.hpp"
#include "atomique/circuit.hpp"

#include <cstddef>
#include <vector>

namespace atomique {

struct SwapRouterOptions {
  std::size_t lookahead_window = 20;
  double decay = 0.7;
  /// Candidate partners kept per array after the cheap pre-ranking.
  std::size_t partner_pool = 16;
};

/// Output of inter-array routing. Qubit ids in `circuit` denote physical
/// slots; `assignment` maps each slot to its array and never changes.
struct RoutedCircuit {
  Circuit circuit;
  ArrayAssignment assignment;
  /// Logical qubit -> slot holding it at the end of the circuit.
  std::vector<Qubit> final_permutation;
  std::size_t swaps = 0;
  std::size_t added_cx = 0;

  /// CZ gates whose endpoints share an array (must be zero after routing).
  [[nodiscard]] std::size_t intraArrayCz() const;
};

/// Inserts SWAPs so that every CZ joins different arrays. Input is a basis
/// circuit; `assignment` covers all of its qubits.
RoutedCircuit routeInterArray(const Circuit& c, const ArrayAssignment& assignment,
                              const SwapRouterOptions& options = {});

} // namespace atomique
