#include "atomique/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace atomique {

SweepParam parseSweepParam(std::string_view name) {
  if (name == "T_per_move") {
    return SweepParam::T_per_move;
  }
  if (name == "D_site") {
    return SweepParam::D_site;
  }
  if (name == "n_cool_threshold") {
    return SweepParam::n_cool_threshold;
  }
  if (name == "T1") {
    return SweepParam::T1;
  }
  if (name == "f_2Q") {
    return SweepParam::f_2Q;
  }
  throw std::invalid_argument(
      "unknown sweep parameter '" + std::string(name) +
      "' (expected T_per_move, D_site, n_cool_threshold, T1 or f_2Q)");
}

std::string toString(SweepParam p) {
  switch (p) {
  case SweepParam::T_per_move:
    return "T_per_move";
  case SweepParam::D_site:
    return "D_site";
  case SweepParam::n_cool_threshold:
    return "n_cool_threshold";
  case SweepParam::T1:
    return "T1";
  case SweepParam::f_2Q:
    return "f_2Q";
  }
  return "unknown";
}

bool isGeometric(SweepParam p) { return p == SweepParam::D_site; }

unsigned workerCount(std::size_t jobs) {
  unsigned n = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ATOMIQUE_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) {
      n = std::min(n, static_cast<unsigned>(cap));
    }
  }
  return static_cast<unsigned>(
      std::max<std::size_t>(1, std::min<std::size_t>(n, jobs)));
}

void parallelFor(std::size_t jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs == 0) {
    return;
  }
  const unsigned workers = workerCount(jobs);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex errorMutex;
  auto work = [&] {
    while (true) {
      const auto i = next.fetch_add(1);
      if (i >= jobs) {
        return;
      }
      try {
        fn(i);
      } catch (...) {
        const std::lock_guard lock(errorMutex);
        if (!error) {
          error = std::current_exception();
        }
        next = jobs;
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back(work);
    }
    for (auto& t : pool) {
      t.join();
    }
  }
  if (error) {
    std::rethrow_exception(error);
  }
}

std::vector<SweepPoint> runSweep(const Circuit& circuit,
                                 const DeviceConfig& device,
                                 const CompilerOptions& options,
                                 SweepParam param,
                                 const std::vector<double>& values) {
  std::vector<SweepPoint> points(values.size());
  if (isGeometric(param)) {
    parallelFor(values.size(), [&](std::size_t i) {
      DeviceConfig d = device;
      d.arch.D_site = values[i];
      d.arch.validate();
      points[i] = {values[i], compile(circuit, d, options).stats};
    });
    return points;
  }
  const auto base = compile(circuit, device, options);
  parallelFor(values.size(), [&](std::size_t i) {
    HardwareParams hw = base.hw;
    std::optional<double> move;
    switch (param) {
    case SweepParam::T_per_move:
      move = values[i];
      break;
    case SweepParam::n_cool_threshold:
      hw.n_cool_threshold = values[i];
      break;
    case SweepParam::T1:
      hw.T1 = values[i];
      break;
    case SweepParam::f_2Q:
      hw.f_2Q = values[i];
      break;
    case SweepParam::D_site:
      break;
    }
    points[i] = {values[i], rescore(base, hw, move).stats};
  });
  return points;
}

std::string sweepCsv(SweepParam param, const std::vector<SweepPoint>& points) {
  std::string out = toString(param) +
                    ",F_total,F_1Q,F_2Q,F_transfer,F_mov_heating,F_mov_loss,"
                    "F_mov_cooling,F_mov_deco,N_cooling,depth,execution_time_s\n";
  char buf[512];
  for (const auto& p : points) {
    const auto& f = p.stats.fidelity;
    std::snprintf(buf, sizeof buf,
                  "%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%zu,%zu,"
                  "%.10g\n",
                  p.value, f.F_total, f.F_1Q, f.F_2Q, f.F_transfer,
                  f.F_mov_heating, f.F_mov_loss, f.F_mov_cooling, f.F_mov_deco,
                  f.N_cooling, p.stats.two_qubit_depth,
                  p.stats.execution_time_s);
    out += buf;
  }
  return out;
}

} // namespace atomique
