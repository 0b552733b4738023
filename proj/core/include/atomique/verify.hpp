#pragma once

#include "atomique/circuit.hpp"
#include "atomique/stage_router.hpp"

#include <cstddef>
#include <vector>

namespace atomique {

/// Dense 2^n x 2^n unitary, row-major; qubit 0 is the least significant bit
/// of the basis index.
class DenseUnitary {
public:
  static constexpr std::size_t kMaxQubits = 10;

  /// Identity on n qubits; throws std::invalid_argument above kMaxQubits.
  explicit DenseUnitary(std::size_t n);

  [[nodiscard]] std::size_t qubits() const { return n_; }
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }
  [[nodiscard]] const std::vector<Complex>& data() const { return data_; }

  /// Left-multiplies by the gate's matrix.
  void apply(const Gate& g);

  /// max |(U^dagger U - I)_{ij}|
  [[nodiscard]] double unitarityError() const;

private:
  void applyOneQubit(Qubit q, const Mat2& m);
  void applyCz(Qubit a, Qubit b);
  void permuteRows(const std::vector<std::size_t>& source);

  std::size_t n_;
  std::size_t dim_;
  std::vector<Complex> data_;
};

DenseUnitary simulate(const Circuit& c);

/// Raman layers and CZ lists of every stage, in stage order, on atom ids.
Circuit flatten(const Schedule& schedule);

/// True iff P(perm) U(b) equals U(a) up to global phase (max-norm 1e-8),
/// where P(perm) moves the amplitude on qubit perm[q] back to qubit q.
/// Throws std::invalid_argument on a width mismatch or a bad permutation.
bool equivalentUpToPermutation(const Circuit& a, const Circuit& b,
                               const std::vector<Qubit>& perm,
                               double tolerance = 1e-8);

} // namespace atomique
