#pragma once

#include "atomique/arch.hpp"
#include "atomique/circuit.hpp"
#include "atomique/swap_router.hpp"

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace atomique {

/// One Raman phase plus at most one AOD move and Rydberg pulse.
struct Stage {
  /// One-qubit layers executed before the move; qubits are atom ids.
  std::vector<std::vector<Gate>> raman;
  /// CZ pairs executed by the pulse (atom ids).
  std::vector<AtomPair> cz;
  /// Lane configuration during the pulse.
  LaneAssignment lanes;
  /// Displacement of every atom during this stage's move (0 for SLM atoms).
  std::vector<double> distances_um;
  double move_time_s = 0.0;
  /// AOD array ids cooled after this stage; filled in by the fidelity engine.
  std::vector<int> cooling;

  [[nodiscard]] bool hasMove() const { return !cz.empty(); }
};

struct RouterCounters {
  std::size_t conflict_rejections = 0; // row/column already pinned elsewhere
  std::size_t order_rejections = 0;    // C2
  std::size_t overlap_rejections = 0;  // C3
  std::size_t cell_rejections = 0;     // C1
  std::size_t parking_rejections = 0; // no legal park lanes

  RouterCounters& operator+=(const RouterCounters& o);
};

struct Schedule {
  std::size_t n_atoms = 0;
  Placement placement;
  LaneAssignment initial;
  std::vector<Stage> stages;
  /// Logical qubit -> atom at the end of the program.
  std::vector<Qubit> final_permutation;
  RouterCounters counters;

  /// Number of stages that execute at least one CZ.
  [[nodiscard]] std::size_t depth() const;
  [[nodiscard]] std::size_t czCount() const;
  [[nodiscard]] std::size_t oneQubitCount() const;
  [[nodiscard]] std::size_t ramanLayerCount() const;
  [[nodiscard]] double totalDistanceUm() const;
};

/// Initial park-lane staging. AOD array t (0-based among the AODs) has row r
/// on lane 2(r + rows before t) + 1 and column c on lane
/// 2(c + cols before t) + 1, so no two arrays share a lane on either axis.
LaneAssignment initialLanes(const ArchConfig& arch);

/// Requested lane per AOD row/column; index t is AOD array t + 1.
struct PinSet {
  std::vector<std::vector<std::optional<Lane>>> rows;
  std::vector<std::vector<std::optional<Lane>>> cols;

  static PinSet none(const ArchConfig& arch);
};

struct Motion {
  LaneAssignment lanes;
  std::vector<double> distances_um;
};

/// Completes `pins` with park lanes for every unpinned row/column and
/// measures the resulting displacements. Returns nullopt when the unpinned
/// lines cannot be parked legally.
std::optional<Motion> synthesizeMotion(const PinSet& pins,
                                       const LaneAssignment& previous,
                                       const Placement& placement,
                                       const ArchConfig& arch);

struct Selection {
  /// Indices into the candidate list, in acceptance order.
  std::vector<std::size_t> accepted;
  PinSet pins;
  Motion motion;
  RouterCounters counters;
};

/// Greedy maximal legal subset of `candidates`, tried in the given order.
/// At most `limit` gates are accepted.
Selection selectParallelGates(
    const std::vector<AtomPair>& candidates, const Placement& placement,
    const LaneAssignment& current, const ArchConfig& arch,
    std::size_t limit = std::numeric_limits<std::size_t>::max());

/// Schedules a routed circuit (slot ids = atom ids, no intra-array CZ).
Schedule route(const RoutedCircuit& routed, const Placement& placement,
               const ArchConfig& arch);

/// Same as route but one CZ per stage.
Schedule routeSerial(const RoutedCircuit& routed, const Placement& placement,
                     const ArchConfig& arch);

/// Copy of `arch` with the named constraint ("C1", "C2", "C3") disabled.
ArchConfig relaxConstraint(const ArchConfig& arch, std::string_view which);

/// Lane-order problems of one stage (C2/C3 where enabled, lane bounds).
std::vector<std::string> checkStageLanes(const Stage& stage,
                                         const ArchConfig& arch);

struct StageViolation {
  std::size_t stage = 0;
  Violation violation;
};

/// min_separation_audit on every stage that fires a Rydberg pulse, with its
/// CZ list as intended pairs. Raman-only stages have no interaction to audit.
std::vector<StageViolation> auditSchedule(const Schedule& schedule,
                                          const ArchConfig& arch);

} // namespace atomique
