#include "atomique/swap_router.hpp"

#include "atomique/dag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace atomique {

std::size_t RoutedCircuit::intraArrayCz() const {
  std::size_t n = 0;
  for (const auto& g : circuit.gates) {
    if (g.kind == GateKind::CZ &&
        assignment.array_of[g.qubits[0]] == assignment.array_of[g.qubits[1]]) {
      ++n;
    }
  }
  return n;
}

namespace {

class InterArrayRouter {
public:
  InterArrayRouter(const Circuit& c, const ArrayAssignment& a,
                   const SwapRouterOptions& opt)
      : input_(c), arrayOf_(a.array_of), opt_(opt), dag_(buildDag(c)),
        front_(dag_), slotOf_(c.n_qubits), logicalAt_(c.n_qubits),
        slotDepth_(c.n_qubits, 0) {
    if (a.array_of.size() != c.n_qubits) {
      throw std::invalid_argument("assignment does not cover every qubit");
    }
    std::iota(slotOf_.begin(), slotOf_.end(), 0);
    std::iota(logicalAt_.begin(), logicalAt_.end(), 0);
    for (std::size_t i = 0; i < dag_.size(); ++i) {
      if (dag_.gate(i).kind == GateKind::CZ) {
        twoQubitNodes_.push_back(i);
      }
    }
    out_.circuit = Circuit(c.n_qubits);
    out_.assignment = a;
  }

  RoutedCircuit run() {
    while (true) {
      drainExecutable();
      if (front_.done()) {
        break;
      }
      insertSwapFor(front_.front().front());
    }
    out_.circuit = fuseOneQubitGates(out_.circuit);
    out_.final_permutation = slotOf_;
    out_.added_cx = 3 * out_.swaps;
    return std::move(out_);
  }

private:
  int arrayOfLogical(Qubit q) const { return arrayOf_[slotOf_[q]]; }

  bool executable(const Gate& g) const {
    return g.kind != GateKind::CZ ||
           arrayOfLogical(g.qubits[0]) != arrayOfLogical(g.qubits[1]);
  }

  void emit(const Gate& g) {
    Gate mapped = g;
    for (auto& q : mapped.qubits) {
      q = slotOf_[q];
    }
    if (mapped.kind == GateKind::CZ) {
      markCz(mapped.qubits[0], mapped.qubits[1]);
    }
    out_.circuit.gates.push_back(std::move(mapped));
  }

  void drainExecutable() {
    bool progress = true;
    while (progress) {
      progress = false;
      const auto front = front_.front();
      for (auto node : front) {
        const auto& g = dag_.gate(node);
        if (g.kind != GateKind::U && g.kind != GateKind::CZ &&
            g.kind != GateKind::Barrier) {
          throw std::invalid_argument("routeInterArray expects a basis circuit");
        }
        if (executable(g)) {
          emit(g);
          front_.execute(node);
          progress = true;
        }
      }
    }
  }

  /// Next unexecuted CZ nodes in program order, up to the window size.
  std::vector<std::size_t> lookahead() {
    while (cursor_ < twoQubitNodes_.size() &&
           front_.executed(twoQubitNodes_[cursor_])) {
      ++cursor_;
    }
    std::vector<std::size_t> out;
    for (auto i = cursor_;
         i < twoQubitNodes_.size() && out.size() < opt_.lookahead_window;
         ++i) {
      if (!front_.executed(twoQubitNodes_[i])) {
        out.push_back(twoQubitNodes_[i]);
      }
    }
    return out;
  }

  void insertSwapFor(std::size_t node) {
    const auto& blocked = dag_.gate(node);
    const auto window = lookahead();
    const int home = arrayOfLogical(blocked.qubits[0]);

    // Future gates touching each logical qubit inside the window.
    std::vector<std::size_t> futureUse(input_.n_qubits, 0);
    for (auto w : window) {
      for (auto q : dag_.gate(w).qubits) {
        ++futureUse[q];
      }
    }

    // Candidate partner slots: per foreign array, the least-used qubits.
    std::vector<std::vector<Qubit>> perArray(out_.assignment.k);
    for (Qubit s = 0; s < input_.n_qubits; ++s) {
      if (arrayOf_[s] != home) {
        perArray[static_cast<std::size_t>(arrayOf_[s])].push_back(s);
      }
    }
    std::vector<Qubit> candidates;
    for (auto& slots : perArray) {
      std::stable_sort(slots.begin(), slots.end(), [&](Qubit a, Qubit b) {
        return std::pair{futureUse[logicalAt_[a]], slotDepth_[a]} <
               std::pair{futureUse[logicalAt_[b]], slotDepth_[b]};
      });
      const auto keep = std::min(slots.size(), opt_.partner_pool);
      candidates.insert(candidates.end(), slots.begin(),
                        slots.begin() + static_cast<std::ptrdiff_t>(keep));
    }
    if (candidates.empty()) {
      throw std::runtime_error(
          "cannot route: every qubit is assigned to the same array");
    }

    using Key = std::tuple<double, std::size_t, std::size_t, Qubit, std::size_t>;
    Key best{std::numeric_limits<double>::infinity(), 0, 0, 0, 0};
    Qubit bestMoved = 0;
    Qubit bestSlot = 0;
    for (std::size_t e = 0; e < 2; ++e) {
      const Qubit moved = blocked.qubits[e];
      const Qubit from = slotOf_[moved];
      for (auto r : candidates) {
        const Qubit other = logicalAt_[r];
        auto arrayAfter = [&](Qubit q) {
          if (q == moved) {
            return arrayOf_[r];
          }
          if (q == other) {
            return arrayOf_[from];
          }
          return arrayOfLogical(q);
        };
        double cost = 0.0;
        double weight = 1.0;
        for (auto w : window) {
          const auto& g = dag_.gate(w);
          if (arrayAfter(g.qubits[0]) == arrayAfter(g.qubits[1])) {
            cost += weight;
          }
          weight *= opt_.decay;
        }
        const Key key{cost, futureUse[other], slotDepth_[r], r, 1 - e};
        if (key < best) {
          best = key;
          bestMoved = moved;
          bestSlot = r;
        }
      }
    }
    applySwap(slotOf_[bestMoved], bestSlot);
  }

  void applySwap(Qubit a, Qubit b) {
    auto& c = out_.circuit;
    auto cx = [&](Qubit control, Qubit target) {
      c.h(target);
      c.cz(control, target);
      markCz(control, target);
      c.h(target);
    };
    cx(a, b);
    cx(b, a);
    cx(a, b);
    const Qubit la = logicalAt_[a];
    const Qubit lb = logicalAt_[b];
    std::swap(logicalAt_[a], logicalAt_[b]);
    slotOf_[la] = b;
    slotOf_[lb] = a;
    ++out_.swaps;
  }

  void markCz(Qubit a, Qubit b) {
    const auto d = std::max(slotDepth_[a], slotDepth_[b]) + 1;
    slotDepth_[a] = d;
    slotDepth_[b] = d;
  }

  const Circuit& input_;
  std::vector<int> arrayOf_;
  SwapRouterOptions opt_;
  CircuitDag dag_;
  FrontTracker front_;
  std::vector<Qubit> slotOf_;
  std::vector<Qubit> logicalAt_;
  /// CZ depth reached on each slot so far; breaks ties toward idle slots.
  std::vector<std::size_t> slotDepth_;
  std::vector<std::size_t> twoQubitNodes_;
  std::size_t cursor_ = 0;
  RoutedCircuit out_;
};

} // namespace

RoutedCircuit routeInterArray(const Circuit& c, const ArrayAssignment& assignment,
                              const SwapRouterOptions& options) {
  return InterArrayRouter(c, assignment, options).run();
}

} // namespace atomique
