#include "atomique/circuit.hpp"

#include "atomique/dag.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace atomique {

namespace {
constexpr double kPi = std::numbers::pi;

Gate oneQubit(Qubit q, double theta, double phi, double lambda,
              std::string name) {
  Gate g;
  g.kind = GateKind::U;
  g.qubits = {q};
  g.angles = {theta, phi, lambda};
  g.name = std::move(name);
  return g;
}

Gate twoQubit(GateKind kind, Qubit a, Qubit b) {
  Gate g;
  g.kind = kind;
  g.qubits = {a, b};
  return g;
}

bool isIdentityUpToPhase(const Mat2& m) {
  constexpr double tol = 1e-12;
  if (std::abs(m[1]) > tol || std::abs(m[2]) > tol) {
    return false;
  }
  return std::abs(m[0] - m[3]) < tol;
}
} // namespace

Circuit& Circuit::u(Qubit q, double theta, double phi, double lambda,
                    std::string name) {
  gates.push_back(oneQubit(q, theta, phi, lambda, std::move(name)));
  return *this;
}
Circuit& Circuit::h(Qubit q) { return u(q, kPi / 2, 0.0, kPi, "h"); }
Circuit& Circuit::x(Qubit q) { return u(q, kPi, 0.0, kPi, "x"); }
Circuit& Circuit::rz(Qubit q, double angle) {
  return u(q, 0.0, 0.0, angle, "rz");
}
Circuit& Circuit::rx(Qubit q, double angle) {
  return u(q, angle, -kPi / 2, kPi / 2, "rx");
}
Circuit& Circuit::ry(Qubit q, double angle) {
  return u(q, angle, 0.0, 0.0, "ry");
}
Circuit& Circuit::cz(Qubit a, Qubit b) {
  gates.push_back(twoQubit(GateKind::CZ, a, b));
  return *this;
}
Circuit& Circuit::cx(Qubit control, Qubit target) {
  gates.push_back(twoQubit(GateKind::CX, control, target));
  return *this;
}
Circuit& Circuit::swap(Qubit a, Qubit b) {
  gates.push_back(twoQubit(GateKind::Swap, a, b));
  return *this;
}
Circuit& Circuit::barrier(std::vector<Qubit> qubits) {
  Gate g;
  g.kind = GateKind::Barrier;
  g.qubits = std::move(qubits);
  gates.push_back(std::move(g));
  return *this;
}
Circuit& Circuit::append(Gate gate) {
  gates.push_back(std::move(gate));
  return *this;
}

std::size_t Circuit::countOneQubit() const {
  std::size_t n = 0;
  for (const auto& g : gates) {
    n += g.isOneQubit() ? 1 : 0;
  }
  return n;
}

std::size_t Circuit::countTwoQubit() const {
  std::size_t n = 0;
  for (const auto& g : gates) {
    n += g.isTwoQubit() ? 1 : 0;
  }
  return n;
}

void Circuit::validate() const {
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const auto& g = gates[i];
    for (auto q : g.qubits) {
      if (q >= n_qubits) {
        throw std::invalid_argument("gate " + std::to_string(i) +
                                    ": qubit " + std::to_string(q) +
                                    " out of range");
      }
    }
    if (g.isOneQubit() && g.qubits.size() != 1) {
      throw std::invalid_argument("gate " + std::to_string(i) +
                                  ": one-qubit gate needs exactly 1 qubit");
    }
    if (g.isTwoQubit() &&
        (g.qubits.size() != 2 || g.qubits[0] == g.qubits[1])) {
      throw std::invalid_argument(
          "gate " + std::to_string(i) +
          ": two-qubit gate needs 2 distinct qubits");
    }
  }
}

Mat2 u3Matrix(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  return {Complex(c, 0.0), -std::polar(s, lambda), std::polar(s, phi),
          std::polar(c, phi + lambda)};
}

Mat2 matmul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

std::array<double, 3> eulerAngles(const Mat2& m) {
  // m = e^{ig} [[c, -e^{il} s], [e^{ip} s, e^{i(p+l)} c]]
  const double c = std::abs(m[0]);
  const double s = std::abs(m[2]);
  const double theta = 2.0 * std::atan2(s, c);
  double phi = 0.0;
  double lambda = 0.0;
  if (c >= s) {
    const double g = std::arg(m[0]);
    const double phiPlusLambda = std::arg(m[3]) - g;
    if (s > 1e-14) {
      phi = std::arg(m[2]) - g;
      lambda = phiPlusLambda - phi;
    } else {
      lambda = phiPlusLambda;
    }
  } else {
    const double gPlusPhi = std::arg(m[2]);
    const double gPlusLambda = std::arg(-m[1]);
    if (c > 1e-14) {
      const double g = std::arg(m[0]);
      phi = gPlusPhi - g;
      lambda = gPlusLambda - g;
    } else {
      phi = gPlusPhi - gPlusLambda;
    }
  }
  return {theta, std::remainder(phi, 2 * kPi),
          std::remainder(lambda, 2 * kPi)};
}

Circuit fuseOneQubitGates(const Circuit& c) {
  struct Pending {
    Mat2 m;
    Gate first;
    std::size_t count = 0;
  };
  Circuit out(c.n_qubits);
  out.gates.reserve(c.gates.size());
  std::vector<std::optional<Pending>> pending(c.n_qubits);

  auto flush = [&](Qubit q) {
    auto& p = pending[q];
    if (!p) {
      return;
    }
    if (p->count == 1) {
      out.gates.push_back(std::move(p->first));
    } else if (!isIdentityUpToPhase(p->m)) {
      const auto a = eulerAngles(p->m);
      out.u(q, a[0], a[1], a[2]);
    }
    p.reset();
  };

  for (const auto& g : c.gates) {
    if (g.isOneQubit()) {
      const Qubit q = g.qubits[0];
      const Mat2 m = u3Matrix(g.angles[0], g.angles[1], g.angles[2]);
      auto& p = pending[q];
      if (!p) {
        p = Pending{m, g, 1};
      } else {
        p->m = matmul(m, p->m);
        ++p->count;
      }
      continue;
    }
    for (auto q : g.qubits) {
      flush(q);
    }
    out.gates.push_back(g);
  }
  for (Qubit q = 0; q < c.n_qubits; ++q) {
    flush(q);
  }
  return out;
}

Circuit toBasis(const Circuit& c) {
  Circuit expanded(c.n_qubits);
  expanded.gates.reserve(c.gates.size() * 2);
  auto emitCx = [&](Qubit control, Qubit target) {
    expanded.h(target);
    expanded.cz(control, target);
    expanded.h(target);
  };
  for (const auto& g : c.gates) {
    switch (g.kind) {
    case GateKind::CX:
      emitCx(g.qubits[0], g.qubits[1]);
      break;
    case GateKind::Swap:
      emitCx(g.qubits[0], g.qubits[1]);
      emitCx(g.qubits[1], g.qubits[0]);
      emitCx(g.qubits[0], g.qubits[1]);
      break;
    default:
      expanded.gates.push_back(g);
      break;
    }
  }
  return fuseOneQubitGates(expanded);
}

Circuit stripBarriers(const Circuit& c) {
  Circuit out(c.n_qubits);
  out.gates.reserve(c.gates.size());
  for (const auto& g : c.gates) {
    if (g.kind != GateKind::Barrier) {
      out.gates.push_back(g);
    }
  }
  return out;
}

CircuitStats circuitStats(const Circuit& c) {
  CircuitStats s;
  std::vector<std::set<Qubit>> partners(c.n_qubits);
  for (const auto& g : c.gates) {
    if (g.isOneQubit()) {
      ++s.n_1q;
    } else if (g.isTwoQubit()) {
      ++s.n_2q;
      partners[g.qubits[0]].insert(g.qubits[1]);
      partners[g.qubits[1]].insert(g.qubits[0]);
    }
  }
  if (c.n_qubits > 0) {
    std::size_t degreeSum = 0;
    for (const auto& p : partners) {
      degreeSum += p.size();
    }
    s.degree_per_qubit =
        static_cast<double>(degreeSum) / static_cast<double>(c.n_qubits);
    s.gates_per_qubit = 2.0 * static_cast<double>(s.n_2q) /
                        static_cast<double>(c.n_qubits);
  }
  s.two_qubit_depth = buildDag(c).twoQubitDepth();
  return s;
}

std::string emitQasm(const Circuit& c) {
  std::ostringstream os;
  os.precision(17);
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  os << "qreg q[" << c.n_qubits << "];\n";
  for (const auto& g : c.gates) {
    switch (g.kind) {
    case GateKind::U:
      os << "u3(" << g.angles[0] << "," << g.angles[1] << "," << g.angles[2]
         << ") q[" << g.qubits[0] << "];\n";
      break;
    case GateKind::CZ:
      os << "cz q[" << g.qubits[0] << "],q[" << g.qubits[1] << "];\n";
      break;
    case GateKind::CX:
      os << "cx q[" << g.qubits[0] << "],q[" << g.qubits[1] << "];\n";
      break;
    case GateKind::Swap:
      os << "swap q[" << g.qubits[0] << "],q[" << g.qubits[1] << "];\n";
      break;
    case GateKind::Barrier: {
      os << "barrier ";
      for (std::size_t i = 0; i < g.qubits.size(); ++i) {
        os << (i ? "," : "") << "q[" << g.qubits[i] << "]";
      }
      os << ";\n";
      break;
    }
    }
  }
  return os.str();
}

} // namespace atomique
