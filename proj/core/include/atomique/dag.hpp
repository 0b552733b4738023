#pragma once

#include "atomique/circuit.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace atomique {

/// Qubit-wise dependency graph over a circuit's gates. Node i is gate i.
class CircuitDag {
public:
  CircuitDag() = default;

  [[nodiscard]] std::size_t size() const { return gates_.size(); }
  [[nodiscard]] const Gate& gate(std::size_t node) const {
    return gates_[node];
  }
  [[nodiscard]] const std::vector<Gate>& gates() const { return gates_; }
  [[nodiscard]] const std::vector<std::size_t>&
  predecessors(std::size_t node) const {
    return preds_[node];
  }
  [[nodiscard]] const std::vector<std::size_t>&
  successors(std::size_t node) const {
    return succs_[node];
  }
  /// ASAP layer over all gates.
  [[nodiscard]] std::size_t layer(std::size_t node) const {
    return gates_[node].layer;
  }
  /// 0-based ASAP layer counting CZ layers only; only meaningful for CZ nodes.
  [[nodiscard]] std::size_t twoQubitLayer(std::size_t node) const {
    return czLayer_[node];
  }
  [[nodiscard]] std::size_t twoQubitDepth() const { return czDepth_; }

  /// Number of (transitive) descendants of each node.
  [[nodiscard]] std::vector<std::size_t> descendantCounts() const;

private:
  friend CircuitDag buildDag(const Circuit& c);

  std::vector<Gate> gates_;
  std::vector<std::vector<std::size_t>> preds_;
  std::vector<std::vector<std::size_t>> succs_;
  std::vector<std::size_t> czLayer_;
  std::size_t czDepth_ = 0;
};

/// Edges join consecutive gates sharing a qubit; layers are filled in.
CircuitDag buildDag(const Circuit& c);

/// Unexecuted nodes whose predecessors are all in `executed`, ascending.
/// `executed` is indexed by node and must be dependency-closed.
std::vector<std::size_t> frontLayer(const CircuitDag& dag,
                                    const std::vector<bool>& executed);

/// Incremental front-layer bookkeeping for the routing loops.
class FrontTracker {
public:
  explicit FrontTracker(const CircuitDag& dag);

  [[nodiscard]] const std::vector<std::size_t>& front() const {
    return front_;
  }
  [[nodiscard]] bool done() const { return remaining_ == 0; }
  [[nodiscard]] bool executed(std::size_t node) const {
    return executed_[node];
  }
  /// Marks a front node executed and promotes newly ready successors.
  void execute(std::size_t node);

private:
  const CircuitDag* dag_;
  std::vector<std::size_t> pendingPreds_;
  std::vector<bool> executed_;
  std::vector<std::size_t> front_;
  std::size_t remaining_;
};

/// Symmetric two-qubit gate frequency graph with layer decay.
struct FrequencyGraph {
  std::size_t n = 0;
  double gamma = 1.0;
  std::vector<double> weights; // n*n, row-major

  FrequencyGraph() = default;
  FrequencyGraph(std::size_t vertices, double decay)
      : n(vertices), gamma(decay), weights(vertices * vertices, 0.0) {}

  [[nodiscard]] double at(std::size_t i, std::size_t j) const {
    return weights[i * n + j];
  }
  void add(std::size_t i, std::size_t j, double w) {
    weights[i * n + j] += w;
    weights[j * n + i] += w;
  }
  [[nodiscard]] double incident(std::size_t i) const;
  [[nodiscard]] double totalWeight() const;
};

/// E[i][j] = sum over CZ(i,j) of gamma^l, l the gate's 0-based CZ layer.
/// Throws std::invalid_argument unless gamma is in (0, 1].
FrequencyGraph gateFrequencyGraph(const Circuit& c, double gamma);

} // namespace atomique
