// Acceptance runner: one PASS/FAIL line per criterion.
//
//   atomique_acceptance --criterion N   run criterion N, exit 1 if it fails
//   atomique_acceptance --summary       run all, exit 1 on an unexpected FAIL

#include "atomique/array_mapper.hpp"
#include "atomique/fidelity.hpp"
#include "atomique/pipeline.hpp"
#include "atomique/random.hpp"
#include "atomique/sweep.hpp"
#include "atomique/verify.hpp"
#include "atomique/workloads.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace atomique;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

/// Criteria documented as not attainable; see README.
const std::set<int> kKnownFailures = {1, 11};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

bool relClose(double got, double want, double rel) {
  return std::abs(got - want) <= rel * std::abs(want);
}

// 1 -----------------------------------------------------------------------
Outcome heatingConstants() {
  const HardwareParams hw;
  Outcome o{true, ""};
  for (const auto& [D, want] :
       std::vector<std::pair<double, double>>{{15, 0.0054}, {75, 0.13}, {150, 0.54}}) {
    const double got = deltaNvib(D, 300e-6, hw);
    const bool ok = relClose(got, want, 0.02);
    o.pass = o.pass && ok;
    o.detail += fmt("%s%g um: %.6f vs %.4f (%+.1f%%)%s", o.detail.empty() ? "" : "; ",
                    D, got, want, 100.0 * (got - want) / want, ok ? "" : " out of 2%");
  }
  return o;
}

// 2 -----------------------------------------------------------------------
Outcome lossModel() {
  const HardwareParams hw;
  const double s30 = moveSurvival(30.0, hw);
  const double s20 = moveSurvival(20.0, hw);
  const double s15 = moveSurvival(15.0, hw);
  const bool pass = std::abs(s30 - 0.708) <= 1e-3 &&
                    std::abs(s20 - 0.998) <= 1e-3 &&
                    std::abs(s15 - 0.999998) <= 1e-5;
  return {pass, fmt("P(30)=%.6f P(20)=%.6f P(15)=%.8f", s30, s20, s15)};
}

// 3 -----------------------------------------------------------------------
Outcome decoherence() {
  const HardwareParams hw;
  Outcome o{true, ""};
  for (const auto& [n, want] : std::vector<std::pair<std::size_t, double>>{
           {10, 0.998}, {50, 0.990}, {100, 0.980}}) {
    Schedule s;
    s.n_atoms = n;
    for (std::size_t q = 0; q < n; ++q) {
      s.placement.slots.push_back(
          {q == 0 ? 0 : 1, static_cast<int>(q / 10), static_cast<int>(q % 10)});
    }
    Stage st;
    st.cz = {{0, 1}};
    st.distances_um.assign(n, 0.0);
    st.move_time_s = 300e-6;
    s.stages.push_back(st);
    const double got = applySchedule(s, hw).report.F_mov_deco;
    o.pass = o.pass && std::abs(got - want) <= 1e-3;
    o.detail += fmt("%sN=%zu: %.5f", o.detail.empty() ? "" : "; ", n, got);
  }
  return o;
}

// 4 -----------------------------------------------------------------------
Outcome maxKCutBound() {
  Rng rng(4);
  std::size_t failures = 0;
  double worstRatio = 1.0;
  const int trials = 500;
  for (int t = 0; t < trials; ++t) {
    const auto n = 2 + static_cast<std::size_t>(rng.below(7));
    const std::size_t k = t % 2 == 0 ? 2 : 3;
    FrequencyGraph g(n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (rng.bernoulli(0.7)) {
          g.add(i, j, rng.uniform(0.0, 10.0));
        }
      }
    }
    const double opt = bruteForceMaxKCut(g, k).first;
    for (auto order : {VertexOrder::Weight, VertexOrder::Index}) {
      const double cut = cutValue(g, greedyMaxKCut(g, k, {}, order));
      const double bound = (1.0 - 1.0 / static_cast<double>(k)) * opt;
      if (cut < bound - 1e-9) {
        ++failures;
      }
      if (opt > 0) {
        worstRatio = std::min(worstRatio, cut / opt);
      }
    }
  }
  return {failures == 0,
          fmt("%d graphs x 2 vertex orders, %zu below bound, worst cut/OPT %.3f",
              trials, failures, worstRatio)};
}

// 5 -----------------------------------------------------------------------
Outcome routingCorrectness() {
  std::vector<Circuit> cases = {genBv(5, "1011", 0),    genBv(6, "", 1),
                                genQaoaRegular(6, 3, 0), genQaoaRegular(4, 3, 0),
                                genQaoaRandom(6, 0.5, 0), genQsimRandom(6, 0.5, 10, 0),
                                genRandomCircuit(6, 20, 0)};
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    WorkloadSpec spec;
    spec.n_qubits = 2 + static_cast<std::size_t>(rng.below(5));
    spec.seed = rng.next();
    spec.family = static_cast<Family>(rng.below(5));
    if (spec.family == Family::QaoaRegular) {
      spec.degree = spec.n_qubits % 2 == 0 ? std::min<std::size_t>(3, spec.n_qubits - 1) : 2;
    }
    spec.gates_per_qubit = 1 + static_cast<std::size_t>(rng.below(6));
    spec.n_strings = 1 + static_cast<std::size_t>(rng.below(8));
    cases.push_back(generate(spec));
  }
  DeviceConfig tight;
  tight.arch.shapes = {{2, 2}, {2, 2}, {2, 2}};
  const std::vector<DeviceConfig> devices = {DeviceConfig{}, tight};
  std::size_t bad = 0;
  std::size_t checked = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    for (const auto& device : devices) {
      const auto r = compile(cases[i], device);
      ++checked;
      if (!equivalentUpToPermutation(cases[i], flatten(r.schedule),
                                     r.schedule.final_permutation, 1e-8)) {
        ++bad;
      }
    }
  }
  return {bad == 0, fmt("%zu circuits x 2 devices, %zu compiles, %zu not equivalent",
                        cases.size(), checked, bad)};
}

// 6, 7 --------------------------------------------------------------------
struct Benchmark {
  std::string name;
  Circuit circuit;
};

std::vector<Benchmark> fullSuite() {
  std::string bv50(49, '0');
  for (std::size_t i = 0; i < 22; ++i) {
    bv50[2 * i + 1] = '1';
  }
  std::string bv70(69, '0');
  for (std::size_t i = 0; i < 32; ++i) {
    bv70[2 * i] = '1';
  }
  return {{"BV-50", genBv(50, bv50, 0)},
          {"BV-70", genBv(70, bv70, 0)},
          {"QSim-rand-20", genQsimRandom(20, 0.5, 10, 1)},
          {"QSim-rand-40", genQsimRandom(40, 0.5, 10, 1)},
          {"QAOA-regu5-40", genQaoaRegular(40, 5, 1)},
          {"random-100/10", genRandomCircuit(100, 1000, 1)}};
}

Outcome suiteCheck(bool audit) {
  std::size_t violations = 0;
  std::size_t intra = 0;
  std::size_t stages = 0;
  std::string names;
  for (const auto& b : fullSuite()) {
    const auto r = compile(b.circuit, DeviceConfig{});
    intra += r.routed.intraArrayCz();
    // The schedule's CZs run on atoms; an intra-array pair would share one array.
    for (const auto& st : r.schedule.stages) {
      for (const auto& [a, c] : st.cz) {
        intra += r.placement[a].array == r.placement[c].array ? 1 : 0;
      }
    }
    if (audit) {
      violations += auditSchedule(r.schedule, r.arch).size();
    }
    stages += r.schedule.stages.size();
    names += (names.empty() ? "" : ",") + b.name;
  }
  if (audit) {
    return {violations == 0,
            fmt("%s: %zu stages audited, %zu violations", names.c_str(), stages,
                violations)};
  }
  return {intra == 0, fmt("%s: %zu intra-array CZ", names.c_str(), intra)};
}

// 8 -----------------------------------------------------------------------
Outcome ablationDirection() {
  std::size_t instances = 0;
  std::size_t fWorse = 0;
  std::size_t fStrict = 0;
  std::size_t dWorse = 0;
  std::size_t dStrict = 0;
  double logGain = 0.0;
  CompilerOptions random;
  random.array_mapper = ArrayMapperKind::Random;
  CompilerOptions serial;
  serial.serial_router = true;
  for (std::size_t n : {20, 30, 40, 60, 80}) {
    for (std::uint64_t seed : {1, 2}) {
      const auto c = genRandomCircuit(n, 10 * n, seed);
      random.seed = seed;
      const auto g = compile(c, DeviceConfig{});
      const auto r = compile(c, DeviceConfig{}, random);
      const auto s = compile(c, DeviceConfig{}, serial);
      const double fg = g.stats.fidelity.F_total;
      const double fr = r.stats.fidelity.F_total;
      ++instances;
      fWorse += fg < fr ? 1 : 0;
      fStrict += fg > fr ? 1 : 0;
      dWorse += g.schedule.depth() > s.schedule.depth() ? 1 : 0;
      dStrict += g.schedule.depth() < s.schedule.depth() ? 1 : 0;
      if (fg > 0 && fr > 0) {
        logGain += std::log(fg / fr);
      }
    }
  }
  const auto need = static_cast<std::size_t>(std::ceil(0.8 * static_cast<double>(instances)));
  const bool pass = fWorse == 0 && dWorse == 0 && fStrict >= need && dStrict >= need;
  return {pass,
          fmt("%zu instances; F greedy>random strictly %zu, worse %zu (geo-mean "
              "gain %.3gx); depth parallel<serial strictly %zu, worse %zu",
              instances, fStrict, fWorse,
              std::exp(logGain / static_cast<double>(instances)), dStrict, dWorse)};
}

// 9 -----------------------------------------------------------------------
Outcome sensitivityShape() {
  const auto qsim = genQsimRandom(20, 0.5, 10, 1);
  std::vector<double> T;
  for (int us = 100; us <= 1000; us += 50) {
    T.push_back(us * 1e-6);
  }
  const auto points = runSweep(qsim, DeviceConfig{}, {}, SweepParam::T_per_move, T);
  std::size_t best = 0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].stats.fidelity.F_total > points[best].stats.fidelity.F_total) {
      best = i;
    }
  }
  const bool interior = best > 0 && best + 1 < points.size();

  DeviceConfig wide;
  wide.arch.D_site = 60.0;
  const auto far = compile(qsim, wide);
  const auto coolingFar = far.stats.fidelity.N_cooling;

  std::size_t coolingNear = 0;
  std::size_t shortRuns = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    for (const auto& c : {genQsimRandom(20, 0.5, 4, seed), genQaoaRandom(10, 0.5, seed),
                          genBv(30, "", seed), genRandomCircuit(20, 100, seed)}) {
      const auto r = compile(c, DeviceConfig{});
      if (r.stats.n_2Q <= 100) {
        ++shortRuns;
        coolingNear += r.stats.fidelity.N_cooling;
      }
    }
  }
  const bool pass = interior && coolingFar >= 1 && coolingNear == 0 && shortRuns > 0;
  return {pass, fmt("best T_per_move %.0f us (F=%.4g; ends %.4g / %.4g); D_site=60: "
                    "%zu cooling events; D_site=15: %zu events over %zu short runs",
                    T[best] * 1e6, points[best].stats.fidelity.F_total,
                    points.front().stats.fidelity.F_total,
                    points.back().stats.fidelity.F_total, coolingFar, coolingNear,
                    shortRuns)};
}

// 10 ----------------------------------------------------------------------
Outcome scalability() {
  const auto c = genRandomCircuit(100, 1000, 1);
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = compile(c, DeviceConfig{});
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {secs < 60.0 && r.stats.n_2Q >= 1000,
          fmt("100 qubits, %zu input CZ (%zu after routing), %zu stages, %.2f s",
              r.stats.input_2Q, r.stats.n_2Q, r.stats.n_stages, secs)};
}

// 11 ----------------------------------------------------------------------
Outcome crossArchitecture() {
  return {false, "needs four external baseline compilers; not reproducible here"};
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "heating constants", heatingConstants},
      {2, "loss model", lossModel},
      {3, "decoherence", decoherence},
      {4, "max k-cut bound", maxKCutBound},
      {5, "routing correctness", routingCorrectness},
      {6, "geometric legality", [] { return suiteCheck(true); }},
      {7, "zero intra-array CZ", [] { return suiteCheck(false); }},
      {8, "ablation direction", ablationDirection},
      {9, "sensitivity shape", sensitivityShape},
      {10, "scalability", scalability},
      {11, "cross-architecture", crossArchitecture},
  };
  return all;
}

bool runOne(const Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s [%d] %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
              o.detail.c_str(), secs);
  std::fflush(stdout);
  return o.pass;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int id = 0;
  bool summary = false;
  auto* one = app.add_option("--criterion", id, "Criterion number")
                  ->check(CLI::Range(1, static_cast<int>(criteria().size())));
  auto* all = app.add_flag("--summary", summary, "Run every criterion");
  one->excludes(all);
  CLI11_PARSE(app, argc, argv);

  if (id != 0) {
    return runOne(criteria()[static_cast<std::size_t>(id - 1)]) ? 0 : 1;
  }
  int unexpected = 0;
  int failed = 0;
  for (const auto& c : criteria()) {
    if (!runOne(c)) {
      ++failed;
      unexpected += kKnownFailures.count(c.id) != 0 ? 0 : 1;
    }
  }
  std::printf("%zu criteria, %d FAIL (%d outside the documented set {1, 11})\n",
              criteria().size(), failed, unexpected);
  return unexpected == 0 ? 0 : 1;
}
