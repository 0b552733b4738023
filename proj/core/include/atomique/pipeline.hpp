#pragma once

#include "atomique/arch.hpp"
#include "atomique/array_mapper.hpp"
#include "atomique/circuit.hpp"
#include "atomique/fidelity.hpp"
#include "atomique/stage_router.hpp"
#include "atomique/swap_router.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace atomique {

enum class ArrayMapperKind { Greedy, Random };
enum class AtomMapperKind { Aligned, Random, RowMajor };

struct CompilerOptions {
  double gamma = 0.9;
  VertexOrder alg1_order = VertexOrder::Weight;
  SwapRouterOptions swap;
  bool serial_router = false;
  /// Constraint names ("C1", "C2", "C3") to disable on top of the config.
  std::vector<std::string> relax;
  ArrayMapperKind array_mapper = ArrayMapperKind::Greedy;
  AtomMapperKind atom_mapper = AtomMapperKind::Aligned;
  FidelityOptions fidelity;
  std::uint64_t seed = 0;
};

/// Reads the optional "compiler" object of a config document into `base`.
/// Known keys: gamma, alg1_order ("index" | "weight"), lookahead, decay,
/// serial_router, array_mapper ("greedy" | "random"), atom_mapper
/// ("aligned" | "random" | "row-major"), per_gate_durations, seed.
CompilerOptions compilerOptionsFromJson(std::string_view json,
                                        CompilerOptions base = {});

VertexOrder parseVertexOrder(std::string_view name);

struct StatsReport {
  std::size_t n_qubits = 0;
  std::size_t n_1Q = 0;
  std::size_t n_2Q = 0;
  std::size_t input_2Q = 0;
  std::size_t added_cx = 0;
  std::size_t swaps = 0;
  std::size_t two_qubit_depth = 0;
  std::size_t n_stages = 0;
  double execution_time_s = 0.0;
  double total_move_distance_mm = 0.0;
  RouterCounters counters;
  FidelityReport fidelity;
  TimeLedger ledger;
  std::optional<double> compile_wall_time_s;
};

struct CompileResult {
  /// Effective geometry after relaxations.
  ArchConfig arch;
  HardwareParams hw;
  CompilerOptions options;
  Circuit basis;
  ArrayAssignment assignment;
  RoutedCircuit routed;
  Placement placement;
  Schedule schedule;
  ScheduleScore score;
  StatsReport stats;
};

/// Basis rewrite, frequency graph, array mapping, inter-array routing, atom
/// mapping, stage routing and scoring of a parsed circuit.
CompileResult compile(const Circuit& input, const DeviceConfig& device,
                      const CompilerOptions& options = {});

/// Stats derived from the routed circuit, schedule and score of `result`.
StatsReport summarize(const CompileResult& result);

/// Rescores `result` with new hardware parameters and move time without
/// recompiling.
CompileResult rescore(const CompileResult& result, const HardwareParams& hw,
                      std::optional<double> T_per_move = std::nullopt);

} // namespace atomique
