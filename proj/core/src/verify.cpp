#include "atomique/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace atomique {

DenseUnitary::DenseUnitary(std::size_t n)
    : n_(n), dim_(std::size_t{1} << std::min(n, kMaxQubits)) {
  if (n > kMaxQubits) {
    throw std::invalid_argument("dense simulation limited to " +
                                std::to_string(kMaxQubits) + " qubits, got " +
                                std::to_string(n));
  }
  data_.assign(dim_ * dim_, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < dim_; ++i) {
    data_[i * dim_ + i] = 1.0;
  }
}

void DenseUnitary::applyOneQubit(Qubit q, const Mat2& m) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t r0 = 0; r0 < dim_; ++r0) {
    if ((r0 & bit) != 0) {
      continue;
    }
    const std::size_t r1 = r0 | bit;
    Complex* row0 = &data_[r0 * dim_];
    Complex* row1 = &data_[r1 * dim_];
    for (std::size_t c = 0; c < dim_; ++c) {
      const Complex a = row0[c];
      const Complex b = row1[c];
      row0[c] = m[0] * a + m[1] * b;
      row1[c] = m[2] * a + m[3] * b;
    }
  }
}

void DenseUnitary::applyCz(Qubit a, Qubit b) {
  const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
  for (std::size_t r = 0; r < dim_; ++r) {
    if ((r & mask) == mask) {
      for (std::size_t c = 0; c < dim_; ++c) {
        data_[r * dim_ + c] = -data_[r * dim_ + c];
      }
    }
  }
}

void DenseUnitary::permuteRows(const std::vector<std::size_t>& source) {
  std::vector<Complex> out(data_.size());
  for (std::size_t r = 0; r < dim_; ++r) {
    std::copy_n(&data_[source[r] * dim_], dim_, &out[r * dim_]);
  }
  data_ = std::move(out);
}

void DenseUnitary::apply(const Gate& g) {
  for (auto q : g.qubits) {
    if (q >= n_) {
      throw std::invalid_argument("gate qubit " + std::to_string(q) +
                                  " outside a " + std::to_string(n_) +
                                  "-qubit unitary");
    }
  }
  switch (g.kind) {
  case GateKind::U:
    applyOneQubit(g.qubits[0],
                  u3Matrix(g.angles[0], g.angles[1], g.angles[2]));
    break;
  case GateKind::CZ:
    applyCz(g.qubits[0], g.qubits[1]);
    break;
  case GateKind::CX: {
    const std::size_t cbit = std::size_t{1} << g.qubits[0];
    const std::size_t tbit = std::size_t{1} << g.qubits[1];
    std::vector<std::size_t> source(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
      source[r] = (r & cbit) != 0 ? r ^ tbit : r;
    }
    permuteRows(source);
    break;
  }
  case GateKind::Swap: {
    const auto a = g.qubits[0];
    const auto b = g.qubits[1];
    std::vector<std::size_t> source(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
      const std::size_t ba = (r >> a) & 1U;
      const std::size_t bb = (r >> b) & 1U;
      std::size_t s = r & ~((std::size_t{1} << a) | (std::size_t{1} << b));
      s |= (bb << a) | (ba << b);
      source[r] = s;
    }
    permuteRows(source);
    break;
  }
  case GateKind::Barrier:
    break;
  }
}

double DenseUnitary::unitarityError() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      Complex s{0.0, 0.0};
      for (std::size_t k = 0; k < dim_; ++k) {
        s += std::conj(data_[k * dim_ + i]) * data_[k * dim_ + j];
      }
      if (i == j) {
        s -= 1.0;
      }
      worst = std::max(worst, std::abs(s));
    }
  }
  return worst;
}

DenseUnitary simulate(const Circuit& c) {
  DenseUnitary u(c.n_qubits);
  for (const auto& g : c.gates) {
    u.apply(g);
  }
  return u;
}

Circuit flatten(const Schedule& schedule) {
  Circuit c(schedule.n_atoms);
  for (const auto& stage : schedule.stages) {
    for (const auto& layer : stage.raman) {
      for (const auto& g : layer) {
        c.append(g);
      }
    }
    for (const auto& [a, b] : stage.cz) {
      c.cz(a, b);
    }
  }
  return c;
}

bool equivalentUpToPermutation(const Circuit& a, const Circuit& b,
                               const std::vector<Qubit>& perm,
                               double tolerance) {
  if (a.n_qubits != b.n_qubits) {
    throw std::invalid_argument("width mismatch: " + std::to_string(a.n_qubits) +
                                " vs " + std::to_string(b.n_qubits));
  }
  const auto n = a.n_qubits;
  if (perm.size() != n) {
    throw std::invalid_argument("permutation size does not match the width");
  }
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[p] = true;
  }

  const auto ua = simulate(a);
  const auto ub = simulate(b);
  const auto dim = ua.dim();
  // (P U_b)[y][c] = U_b[x][c] with bit perm[q] of x equal to bit q of y.
  std::vector<std::size_t> source(dim);
  for (std::size_t y = 0; y < dim; ++y) {
    std::size_t x = 0;
    for (std::size_t q = 0; q < n; ++q) {
      if (((y >> q) & 1U) != 0) {
        x |= std::size_t{1} << perm[q];
      }
    }
    source[y] = x;
  }

  std::size_t pivot = 0;
  double largest = -1.0;
  for (std::size_t i = 0; i < dim * dim; ++i) {
    const double m = std::abs(ua.data()[i]);
    if (m > largest + 1e-12) {
      largest = m;
      pivot = i;
    }
  }
  auto pb = [&](std::size_t r, std::size_t c) { return ub(source[r], c); };
  const std::size_t pr = pivot / dim;
  const std::size_t pc = pivot % dim;
  const Complex ref = pb(pr, pc);
  if (std::abs(ref) < 1e-12) {
    return false;
  }
  const Complex phase = ref / ua(pr, pc);
  if (std::abs(std::abs(phase) - 1.0) > tolerance) {
    return false;
  }
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      if (std::abs(pb(r, c) - phase * ua(r, c)) > tolerance) {
        return false;
      }
    }
  }
  return true;
}

} // namespace atomique
