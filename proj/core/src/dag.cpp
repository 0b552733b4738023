#include "atomique/dag.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace atomique {

namespace {
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
}

CircuitDag buildDag(const Circuit& c) {
  CircuitDag dag;
  const auto n = c.gates.size();
  dag.gates_ = c.gates;
  dag.preds_.assign(n, {});
  dag.succs_.assign(n, {});
  dag.czLayer_.assign(n, 0);

  std::vector<std::size_t> last(c.n_qubits, kNone);
  // Highest CZ layer seen on any path ending at the node, +1 (0 = none).
  std::vector<std::size_t> czSeen(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto& g = dag.gates_[i];
    std::size_t layer = 0;
    std::size_t seen = 0;
    for (auto q : g.qubits) {
      const auto p = last[q];
      if (p == kNone) {
        continue;
      }
      auto& preds = dag.preds_[i];
      if (std::find(preds.begin(), preds.end(), p) == preds.end()) {
        preds.push_back(p);
        dag.succs_[p].push_back(i);
      }
      layer = std::max(layer, dag.gates_[p].layer + 1);
      seen = std::max(seen, czSeen[p]);
    }
    g.layer = layer;
    if (g.isTwoQubit()) {
      dag.czLayer_[i] = seen;
      czSeen[i] = seen + 1;
    } else {
      czSeen[i] = seen;
    }
    dag.czDepth_ = std::max(dag.czDepth_, czSeen[i]);
    for (auto q : g.qubits) {
      last[q] = i;
    }
    std::sort(dag.preds_[i].begin(), dag.preds_[i].end());
  }
  return dag;
}

std::vector<std::size_t> CircuitDag::descendantCounts() const {
  const auto n = size();
  std::vector<std::size_t> counts(n, 0);
  // Node order is topological, so descendants of i all have index > i.
  // Bitsets are built one chunk of target nodes at a time to bound memory.
  constexpr std::size_t kChunk = 2048;
  constexpr std::size_t kWords = kChunk / 64;
  std::vector<std::uint64_t> bits;
  for (std::size_t lo = 0; lo < n; lo += kChunk) {
    const auto hi = std::min(n, lo + kChunk);
    bits.assign(n * kWords, 0);
    for (std::size_t i = hi; i-- > 0;) {
      auto* mine = &bits[i * kWords];
      for (auto s : succs_[i]) {
        const auto* theirs = &bits[s * kWords];
        for (std::size_t w = 0; w < kWords; ++w) {
          mine[w] |= theirs[w];
        }
        if (s >= lo && s < hi) {
          mine[(s - lo) / 64] |= std::uint64_t{1} << ((s - lo) % 64);
        }
      }
      std::size_t pop = 0;
      for (std::size_t w = 0; w < kWords; ++w) {
        pop += static_cast<std::size_t>(std::popcount(mine[w]));
      }
      counts[i] += pop;
    }
  }
  return counts;
}

std::vector<std::size_t> frontLayer(const CircuitDag& dag,
                                    const std::vector<bool>& executed) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dag.size(); ++i) {
    if (executed[i]) {
      continue;
    }
    const auto& preds = dag.predecessors(i);
    if (std::all_of(preds.begin(), preds.end(),
                    [&](std::size_t p) { return executed[p]; })) {
      out.push_back(i);
    }
  }
  return out;
}

FrontTracker::FrontTracker(const CircuitDag& dag)
    : dag_(&dag), pendingPreds_(dag.size()), executed_(dag.size(), false),
      remaining_(dag.size()) {
  for (std::size_t i = 0; i < dag.size(); ++i) {
    pendingPreds_[i] = dag.predecessors(i).size();
    if (pendingPreds_[i] == 0) {
      front_.push_back(i);
    }
  }
}

void FrontTracker::execute(std::size_t node) {
  const auto it = std::lower_bound(front_.begin(), front_.end(), node);
  if (it == front_.end() || *it != node) {
    throw std::logic_error("FrontTracker: node is not in the front layer");
  }
  front_.erase(it);
  executed_[node] = true;
  --remaining_;
  for (auto s : dag_->successors(node)) {
    if (--pendingPreds_[s] == 0) {
      front_.insert(std::lower_bound(front_.begin(), front_.end(), s), s);
    }
  }
}

double FrequencyGraph::incident(std::size_t i) const {
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    sum += at(i, j);
  }
  return sum;
}

double FrequencyGraph::totalWeight() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      sum += at(i, j);
    }
  }
  return sum;
}

FrequencyGraph gateFrequencyGraph(const Circuit& c, double gamma) {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("gamma must lie in (0, 1]");
  }
  FrequencyGraph g(c.n_qubits, gamma);
  const auto dag = buildDag(c);
  for (std::size_t i = 0; i < dag.size(); ++i) {
    const auto& gate = dag.gate(i);
    if (!gate.isTwoQubit()) {
      continue;
    }
    const auto l = static_cast<double>(dag.twoQubitLayer(i));
    g.add(gate.qubits[0], gate.qubits[1], std::pow(gamma, l));
  }
  return g;
}

} // namespace atomique
