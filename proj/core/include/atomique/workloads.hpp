#pragma once

#include "atomique/circuit.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace atomique {

enum class Family { QaoaRandom, QaoaRegular, QsimRandom, Bv, Random };

/// Parses "qaoa-rand", "qaoa-regular", "qsim-rand", "bv" or "random".
Family parseFamily(std::string_view name);
std::string toString(Family f);

struct WorkloadSpec {
  Family family = Family::QaoaRandom;
  std::size_t n_qubits = 10;
  /// Edge probability (qaoa-rand).
  double p = 0.5;
  /// Graph degree (qaoa-regular).
  std::size_t degree = 3;
  /// Probability of a non-identity Pauli per qubit (qsim-rand).
  double p_nonI = 0.5;
  std::size_t n_strings = 10;
  /// n-1 characters of '0'/'1' (bv); empty draws a random secret.
  std::string secret;
  /// Two-qubit gates per qubit (random).
  std::size_t gates_per_qubit = 10;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument on parameters outside the family's domain.
  void validate() const;
};

/// Circuits use CX, RZ, RX, H and U; pass through toBasis before compiling.
Circuit generate(const WorkloadSpec& spec);

Circuit genQaoaRandom(std::size_t n, double p, std::uint64_t seed);
Circuit genQaoaRegular(std::size_t n, std::size_t d, std::uint64_t seed);
Circuit genQsimRandom(std::size_t n, double p_nonI, std::size_t n_strings,
                      std::uint64_t seed);
Circuit genBv(std::size_t n, const std::string& secret, std::uint64_t seed);
/// n_2q random CX gates, each followed by a random rotation on one of its
/// qubits.
Circuit genRandomCircuit(std::size_t n, std::size_t n_2q, std::uint64_t seed);

/// Uniform d-regular graph on n vertices (pairing model with rejection),
/// edges as (u < v) in lexicographic order.
std::vector<std::pair<Qubit, Qubit>> randomRegularGraph(std::size_t n,
                                                        std::size_t d,
                                                        std::uint64_t seed);

} // namespace atomique
