#pragma once

#include "atomique/arch.hpp"
#include "atomique/circuit.hpp"
#include "atomique/pipeline.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace atomique {

enum class SweepParam { T_per_move, D_site, n_cool_threshold, T1, f_2Q };

/// Throws std::invalid_argument for names outside SweepParam.
SweepParam parseSweepParam(std::string_view name);
std::string toString(SweepParam p);

/// True when the parameter changes geometry and needs a recompile.
bool isGeometric(SweepParam p);

struct SweepPoint {
  double value = 0.0;
  StatsReport stats;
};

/// Worker count for `jobs` tasks: hardware concurrency, capped by the
/// ATOMIQUE_THREADS environment variable and by `jobs`.
unsigned workerCount(std::size_t jobs);

/// Runs fn(0..jobs-1) on a pool of workerCount(jobs) threads. The first
/// exception thrown by any task is rethrown after all workers stop.
void parallelFor(std::size_t jobs, const std::function<void(std::size_t)>& fn);

/// One compile (geometric parameters) or rescore (model parameters) per
/// value; results are ordered like `values`.
std::vector<SweepPoint> runSweep(const Circuit& circuit,
                                 const DeviceConfig& device,
                                 const CompilerOptions& options,
                                 SweepParam param,
                                 const std::vector<double>& values);

/// value,F_total,<seven factors>,N_cooling,depth,execution_time_s
std::string sweepCsv(SweepParam param, const std::vector<SweepPoint>& points);

} // namespace atomique
