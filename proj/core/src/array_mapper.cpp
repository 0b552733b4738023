#include "atomique/array_mapper.hpp"

#include "atomique/random.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace atomique {

std::vector<std::size_t> ArrayAssignment::loads() const {
  std::vector<std::size_t> out(k, 0);
  for (auto a : array_of) {
    ++out[static_cast<std::size_t>(a)];
  }
  return out;
}

ArrayAssignment greedyMaxKCut(const FrequencyGraph& g, std::size_t k,
                              const std::vector<int>& capacities,
                              VertexOrder order) {
  if (k < 2) {
    throw std::invalid_argument("MAX k-Cut needs k >= 2");
  }
  if (!capacities.empty() && capacities.size() != k) {
    throw std::invalid_argument("one capacity per partition expected");
  }
  if (!capacities.empty()) {
    const auto total =
        std::accumulate(capacities.begin(), capacities.end(), 0L);
    if (total < static_cast<long>(g.n)) {
      throw std::invalid_argument("insufficient total capacity: " +
                                  std::to_string(total) + " slots for " +
                                  std::to_string(g.n) + " qubits");
    }
  }

  std::vector<std::size_t> vertices(g.n);
  std::iota(vertices.begin(), vertices.end(), 0);
  if (order == VertexOrder::Weight) {
    std::vector<double> incident(g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
      incident[i] = g.incident(i);
    }
    std::stable_sort(vertices.begin(), vertices.end(),
                     [&](std::size_t a, std::size_t b) {
                       return incident[a] > incident[b];
                     });
  }

  ArrayAssignment out;
  out.k = k;
  out.array_of.assign(g.n, -1);
  std::vector<int> load(k, 0);
  // inside[j] = weight from the current vertex into partition j
  std::vector<double> inside(k);
  for (auto v : vertices) {
    std::fill(inside.begin(), inside.end(), 0.0);
    double total = 0.0;
    for (std::size_t q = 0; q < g.n; ++q) {
      const double w = g.at(v, q);
      total += w;
      if (out.array_of[q] >= 0) {
        inside[static_cast<std::size_t>(out.array_of[q])] += w;
      }
    }
    std::size_t best = k;
    double bestCut = -1.0;
    for (std::size_t j = 0; j < k; ++j) {
      if (!capacities.empty() && load[j] >= capacities[j]) {
        continue;
      }
      // Currentcut = sum of E[v][q] over q not in M[j], assigned or not.
      const double cut = total - inside[j];
      if (cut > bestCut) {
        bestCut = cut;
        best = j;
      }
    }
    out.array_of[v] = static_cast<int>(best);
    ++load[best];
  }
  return out;
}

double cutValue(const FrequencyGraph& g, const ArrayAssignment& a) {
  double cut = 0.0;
  for (std::size_t i = 0; i < g.n; ++i) {
    for (std::size_t j = i + 1; j < g.n; ++j) {
      if (a.array_of[i] != a.array_of[j]) {
        cut += g.at(i, j);
      }
    }
  }
  return cut;
}

std::pair<double, ArrayAssignment> bruteForceMaxKCut(const FrequencyGraph& g,
                                                     std::size_t k) {
  if (g.n > 12) {
    throw std::invalid_argument("brute force MAX k-Cut limited to n <= 12");
  }
  if (k < 1) {
    throw std::invalid_argument("k must be positive");
  }
  std::vector<int> labels(g.n, 0);
  std::vector<int> best(g.n, 0);
  double bestCut = 0.0;

  // Restricted-growth labelings enumerate each partition exactly once.
  auto recurse = [&](auto&& self, std::size_t v, int used, double cut) -> void {
    if (v == g.n) {
      if (cut > bestCut) {
        bestCut = cut;
        best = labels;
      }
      return;
    }
    const int limit = std::min<int>(used + 1, static_cast<int>(k));
    for (int label = 0; label < limit; ++label) {
      double gain = 0.0;
      for (std::size_t u = 0; u < v; ++u) {
        if (labels[u] != label) {
          gain += g.at(u, v);
        }
      }
      labels[v] = label;
      self(self, v + 1, std::max(used, label + 1), cut + gain);
    }
  };
  if (g.n > 0) {
    recurse(recurse, 0, 0, 0.0);
  }
  ArrayAssignment a;
  a.k = k;
  a.array_of = best;
  return {bestCut, a};
}

ArrayAssignment bindPartitionsToArrays(const ArrayAssignment& partitions,
                                       const std::vector<int>& capacities) {
  const auto k = partitions.k;
  const auto loads = partitions.loads();
  std::vector<std::size_t> bySize(k);
  std::iota(bySize.begin(), bySize.end(), 0);
  std::stable_sort(bySize.begin(), bySize.end(),
                   [&](std::size_t a, std::size_t b) {
                     return loads[a] > loads[b];
                   });
  std::vector<int> arrayOf(k, -1);
  std::vector<bool> taken(k, false);
  bool ok = true;
  for (auto p : bySize) {
    bool placed = false;
    for (std::size_t arr = 0; arr < k; ++arr) {
      if (taken[arr]) {
        continue;
      }
      if (!capacities.empty() &&
          static_cast<std::size_t>(capacities[arr]) < loads[p]) {
        continue;
      }
      arrayOf[p] = static_cast<int>(arr);
      taken[arr] = true;
      placed = true;
      break;
    }
    if (!placed) {
      ok = false;
      break;
    }
  }
  if (!ok) {
    return partitions;
  }
  ArrayAssignment out;
  out.k = k;
  out.array_of.reserve(partitions.array_of.size());
  for (auto p : partitions.array_of) {
    out.array_of.push_back(arrayOf[static_cast<std::size_t>(p)]);
  }
  return out;
}

ArrayAssignment randomAssignment(std::size_t n_qubits,
                                 const std::vector<int>& capacities,
                                 std::uint64_t seed) {
  const auto k = capacities.size();
  const auto total = std::accumulate(capacities.begin(), capacities.end(), 0L);
  if (k < 2 || total < static_cast<long>(n_qubits)) {
    throw std::invalid_argument("random assignment: insufficient capacity");
  }
  Rng rng(seed);
  ArrayAssignment out;
  out.k = k;
  out.array_of.assign(n_qubits, 0);
  std::vector<int> load(k, 0);
  for (std::size_t q = 0; q < n_qubits; ++q) {
    std::vector<std::size_t> open;
    for (std::size_t j = 0; j < k; ++j) {
      if (load[j] < capacities[j]) {
        open.push_back(j);
      }
    }
    const auto j = open[static_cast<std::size_t>(rng.below(open.size()))];
    out.array_of[q] = static_cast<int>(j);
    ++load[j];
  }
  if (n_qubits >= 2) {
    const auto used = std::count_if(load.begin(), load.end(),
                                    [](int l) { return l > 0; });
    if (used == 1) {
      const auto full = static_cast<int>(
          std::find_if(load.begin(), load.end(), [](int l) { return l > 0; }) -
          load.begin());
      const auto other = full == 0 ? 1 : 0;
      out.array_of[n_qubits - 1] = other;
    }
  }
  return out;
}

} // namespace atomique
