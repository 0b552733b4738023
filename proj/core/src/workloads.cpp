#include "atomique/workloads.hpp"

#include "atomique/random.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace atomique {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void zz(Circuit& c, Qubit a, Qubit b, double theta) {
  c.cx(a, b);
  c.rz(b, theta);
  c.cx(a, b);
}

void mixer(Circuit& c, Rng& rng) {
  for (Qubit q = 0; q < c.n_qubits; ++q) {
    c.rx(q, rng.uniform(0.0, kTwoPi));
  }
}

} // namespace

Family parseFamily(std::string_view name) {
  if (name == "qaoa-rand") {
    return Family::QaoaRandom;
  }
  if (name == "qaoa-regular") {
    return Family::QaoaRegular;
  }
  if (name == "qsim-rand") {
    return Family::QsimRandom;
  }
  if (name == "bv") {
    return Family::Bv;
  }
  if (name == "random") {
    return Family::Random;
  }
  throw std::invalid_argument("unknown workload family '" + std::string(name) +
                              "'");
}

std::string toString(Family f) {
  switch (f) {
  case Family::QaoaRandom:
    return "qaoa-rand";
  case Family::QaoaRegular:
    return "qaoa-regular";
  case Family::QsimRandom:
    return "qsim-rand";
  case Family::Bv:
    return "bv";
  case Family::Random:
    return "random";
  }
  return "unknown";
}

void WorkloadSpec::validate() const {
  auto fail = [](const std::string& msg) {
    throw std::invalid_argument(msg);
  };
  switch (family) {
  case Family::QaoaRandom:
    if (n_qubits < 2) {
      fail("qaoa-rand needs at least 2 qubits");
    }
    if (p < 0.0 || p > 1.0) {
      fail("edge probability must lie in [0, 1]");
    }
    break;
  case Family::QaoaRegular:
    if (degree >= n_qubits) {
      fail("regular degree must be below the qubit count");
    }
    if ((n_qubits * degree) % 2 != 0) {
      fail("no " + std::to_string(degree) + "-regular graph on " +
           std::to_string(n_qubits) + " vertices (n*d is odd)");
    }
    break;
  case Family::QsimRandom:
    if (n_qubits < 1) {
      fail("qsim-rand needs at least 1 qubit");
    }
    if (p_nonI < 0.0 || p_nonI > 1.0) {
      fail("non-identity probability must lie in [0, 1]");
    }
    if (n_strings < 1) {
      fail("at least one Pauli string is required");
    }
    break;
  case Family::Bv:
    if (n_qubits < 2) {
      fail("bv needs at least 2 qubits");
    }
    if (!secret.empty()) {
      if (secret.size() != n_qubits - 1) {
        fail("bv secret must have n-1 bits");
      }
      if (secret.find_first_not_of("01") != std::string::npos) {
        fail("bv secret must consist of '0' and '1'");
      }
    }
    break;
  case Family::Random:
    if (n_qubits < 2) {
      fail("random circuits need at least 2 qubits");
    }
    break;
  }
}

Circuit generate(const WorkloadSpec& spec) {
  spec.validate();
  switch (spec.family) {
  case Family::QaoaRandom:
    return genQaoaRandom(spec.n_qubits, spec.p, spec.seed);
  case Family::QaoaRegular:
    return genQaoaRegular(spec.n_qubits, spec.degree, spec.seed);
  case Family::QsimRandom:
    return genQsimRandom(spec.n_qubits, spec.p_nonI, spec.n_strings, spec.seed);
  case Family::Bv:
    return genBv(spec.n_qubits, spec.secret, spec.seed);
  case Family::Random:
    return genRandomCircuit(spec.n_qubits, spec.n_qubits * spec.gates_per_qubit,
                            spec.seed);
  }
  throw std::logic_error("unhandled workload family");
}

Circuit genQaoaRandom(std::size_t n, double p, std::uint64_t seed) {
  if (n < 2 || p < 0.0 || p > 1.0) {
    throw std::invalid_argument("qaoa-rand: need n >= 2 and p in [0, 1]");
  }
  Rng rng(seed);
  Circuit c(n);
  for (Qubit a = 0; a < n; ++a) {
    for (Qubit b = a + 1; b < n; ++b) {
      if (rng.bernoulli(p)) {
        zz(c, a, b, rng.uniform(0.0, kTwoPi));
      }
    }
  }
  mixer(c, rng);
  return c;
}

std::vector<std::pair<Qubit, Qubit>> randomRegularGraph(std::size_t n,
                                                        std::size_t d,
                                                        std::uint64_t seed) {
  if (d >= n || (n * d) % 2 != 0) {
    throw std::invalid_argument("no " + std::to_string(d) +
                                "-regular graph on " + std::to_string(n) +
                                " vertices");
  }
  Rng rng(seed);
  std::vector<Qubit> stubs;
  for (Qubit v = 0; v < n; ++v) {
    stubs.insert(stubs.end(), d, v);
  }
  constexpr int kMaxAttempts = 1000000;
  std::vector<std::pair<Qubit, Qubit>> edges;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    rng.shuffle(stubs);
    edges.clear();
    bool simple = true;
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
      const auto u = std::min(stubs[i], stubs[i + 1]);
      const auto v = std::max(stubs[i], stubs[i + 1]);
      if (u == v) {
        simple = false;
        break;
      }
      edges.emplace_back(u, v);
    }
    if (!simple) {
      continue;
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) == edges.end()) {
      return edges;
    }
  }
  throw std::runtime_error("regular graph sampling did not converge for d=" +
                           std::to_string(d));
}

Circuit genQaoaRegular(std::size_t n, std::size_t d, std::uint64_t seed) {
  const auto edges = randomRegularGraph(n, d, seed);
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  Circuit c(n);
  for (const auto& [a, b] : edges) {
    zz(c, a, b, rng.uniform(0.0, kTwoPi));
  }
  mixer(c, rng);
  return c;
}

Circuit genQsimRandom(std::size_t n, double p_nonI, std::size_t n_strings,
                      std::uint64_t seed) {
  if (n < 1 || p_nonI < 0.0 || p_nonI > 1.0 || n_strings < 1) {
    throw std::invalid_argument(
        "qsim-rand: need n >= 1, p_nonI in [0, 1], n_strings >= 1");
  }
  Rng rng(seed);
  Circuit c(n);
  enum Pauli { X, Y, Z };
  for (std::size_t s = 0; s < n_strings; ++s) {
    std::vector<std::pair<Qubit, Pauli>> active;
    for (Qubit q = 0; q < n; ++q) {
      if (rng.bernoulli(p_nonI)) {
        active.emplace_back(q, static_cast<Pauli>(rng.below(3)));
      }
    }
    const double theta = rng.uniform(0.0, kTwoPi);
    if (active.empty()) {
      continue;
    }
    for (const auto& [q, p] : active) {
      if (p == X) {
        c.h(q);
      } else if (p == Y) {
        c.rx(q, std::numbers::pi / 2);
      }
    }
    for (std::size_t i = 0; i + 1 < active.size(); ++i) {
      c.cx(active[i].first, active[i + 1].first);
    }
    c.rz(active.back().first, theta);
    for (std::size_t i = active.size() - 1; i > 0; --i) {
      c.cx(active[i - 1].first, active[i].first);
    }
    for (const auto& [q, p] : active) {
      if (p == X) {
        c.h(q);
      } else if (p == Y) {
        c.rx(q, -std::numbers::pi / 2);
      }
    }
  }
  return c;
}

Circuit genBv(std::size_t n, const std::string& secret, std::uint64_t seed) {
  if (n < 2) {
    throw std::invalid_argument("bv needs at least 2 qubits");
  }
  std::string bits = secret;
  if (bits.empty()) {
    Rng rng(seed);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      bits.push_back(rng.bernoulli(0.5) ? '1' : '0');
    }
  }
  if (bits.size() != n - 1 ||
      bits.find_first_not_of("01") != std::string::npos) {
    throw std::invalid_argument("bv secret must be n-1 characters of 0/1");
  }
  Circuit c(n);
  for (Qubit q = 0; q < n; ++q) {
    c.h(q);
  }
  const auto target = static_cast<Qubit>(n - 1);
  for (Qubit i = 0; i + 1 < n; ++i) {
    if (bits[i] == '1') {
      c.cx(i, target);
    }
  }
  for (Qubit q = 0; q < n; ++q) {
    c.h(q);
  }
  return c;
}

Circuit genRandomCircuit(std::size_t n, std::size_t n_2q, std::uint64_t seed) {
  if (n < 2) {
    throw std::invalid_argument("random circuits need at least 2 qubits");
  }
  Rng rng(seed);
  Circuit c(n);
  for (std::size_t i = 0; i < n_2q; ++i) {
    const auto a = static_cast<Qubit>(rng.below(n));
    auto b = static_cast<Qubit>(rng.below(n - 1));
    if (b >= a) {
      ++b;
    }
    c.cx(a, b);
    const Qubit q = rng.bernoulli(0.5) ? a : b;
    c.u(q, rng.uniform(0.0, std::numbers::pi), rng.uniform(0.0, kTwoPi),
        rng.uniform(0.0, kTwoPi));
  }
  return c;
}

} // namespace atomique
