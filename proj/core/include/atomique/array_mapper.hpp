#pragma once

#include "atomique/dag.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace atomique {

/// Qubit -> partition (or array) index in [0, k).
struct ArrayAssignment {
  std::size_t k = 0;
  std::vector<int> array_of;

  [[nodiscard]] std::vector<std::size_t> loads() const;
};

enum class VertexOrder {
  Index,  // i = 0..n-1, as in the textbook greedy
  Weight, // descending incident weight, ties by lower id
};

/// Greedy MAX k-Cut: each vertex joins the partition with the largest cut
/// to already-assigned vertices among partitions with spare capacity
/// (ties: lower partition). `capacities` may be empty for unbounded.
/// Throws std::invalid_argument if total capacity is below n or k < 2.
ArrayAssignment greedyMaxKCut(const FrequencyGraph& g, std::size_t k,
                              const std::vector<int>& capacities,
                              VertexOrder order = VertexOrder::Weight);

double cutValue(const FrequencyGraph& g, const ArrayAssignment& a);

/// Exhaustive optimum over canonical labelings; n <= 12.
std::pair<double, ArrayAssignment> bruteForceMaxKCut(const FrequencyGraph& g,
                                                     std::size_t k);

/// Rebinds partitions to physical arrays: the largest partition goes to the
/// SLM (array 0), the rest to AOD arrays in descending size, subject to
/// capacity. Falls back to the identity binding when that does not fit.
ArrayAssignment bindPartitionsToArrays(const ArrayAssignment& partitions,
                                       const std::vector<int>& capacities);

/// Uniform random capacity-respecting assignment using at least two arrays
/// when n >= 2. Used by the mapper ablation.
ArrayAssignment randomAssignment(std::size_t n_qubits,
                                 const std::vector<int>& capacities,
                                 std::uint64_t seed);

} // namespace atomique
