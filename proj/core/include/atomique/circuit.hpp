#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace atomique {

using Qubit = std::uint32_t;
using Complex = std::complex<double>;
using Mat2 = std::array<Complex, 4>; // row-major 2x2

enum class GateKind : std::uint8_t {
  U,       // one-qubit rotation U3(theta, phi, lambda)
  CZ,
  CX,      // macro, removed by to_basis
  Swap,    // macro, removed by to_basis
  Barrier, // dependency fence over its qubits
};

struct Gate {
  GateKind kind = GateKind::U;
  std::vector<Qubit> qubits;
  /// Euler angles (theta, phi, lambda) for GateKind::U; unused otherwise.
  std::array<double, 3> angles{0.0, 0.0, 0.0};
  /// Source mnemonic of a one-qubit gate ("h", "rz", ...); empty after fusion.
  std::string name;
  /// ASAP layer index, filled in by build_dag.
  std::size_t layer = 0;

  [[nodiscard]] bool isOneQubit() const { return kind == GateKind::U; }
  [[nodiscard]] bool isTwoQubit() const {
    return kind == GateKind::CZ || kind == GateKind::CX ||
           kind == GateKind::Swap;
  }
};

/// Gate-level program. `gates` is kept in a valid execution order.
struct Circuit {
  std::size_t n_qubits = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(std::size_t n) : n_qubits(n) {}

  Circuit& u(Qubit q, double theta, double phi, double lambda,
             std::string name = {});
  Circuit& h(Qubit q);
  Circuit& x(Qubit q);
  Circuit& rz(Qubit q, double angle);
  Circuit& rx(Qubit q, double angle);
  Circuit& ry(Qubit q, double angle);
  Circuit& cz(Qubit a, Qubit b);
  Circuit& cx(Qubit control, Qubit target);
  Circuit& swap(Qubit a, Qubit b);
  Circuit& barrier(std::vector<Qubit> qubits);
  Circuit& append(Gate gate);

  [[nodiscard]] std::size_t countOneQubit() const;
  [[nodiscard]] std::size_t countTwoQubit() const;

  /// Throws std::invalid_argument if a gate breaks the arity/range rules.
  void validate() const;
};

// One-qubit algebra ---------------------------------------------------------

Mat2 u3Matrix(double theta, double phi, double lambda);
Mat2 matmul(const Mat2& a, const Mat2& b);
/// ZYZ angles (theta, phi, lambda) with m == e^{i g} U3(theta, phi, lambda).
std::array<double, 3> eulerAngles(const Mat2& m);

// Transformations ------------------------------------------------------------

/// Rewrites into {CZ, U} and fuses runs of one-qubit gates per qubit.
Circuit toBasis(const Circuit& c);

/// Merges adjacent one-qubit gates acting on the same qubit. Near-identity
/// products are dropped.
Circuit fuseOneQubitGates(const Circuit& c);

/// Drops every barrier; used once fencing is no longer needed.
Circuit stripBarriers(const Circuit& c);

struct CircuitStats {
  std::size_t n_1q = 0;
  std::size_t n_2q = 0;
  std::size_t two_qubit_depth = 0;
  double gates_per_qubit = 0.0;
  double degree_per_qubit = 0.0;
};

/// n_2q counts CZ, CX and SWAP as one two-qubit gate each.
CircuitStats circuitStats(const Circuit& c);

/// OPENQASM 2.0 rendering; one-qubit gates are written as u3.
std::string emitQasm(const Circuit& c);

} // namespace atomique
