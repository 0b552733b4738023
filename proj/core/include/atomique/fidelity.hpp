#pragma once

#include "atomique/arch.hpp"
#include "atomique/stage_router.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace atomique {

/// Vibrational quanta gained by one constant-jerk move over `D_um`
/// micrometres in `T_mov_s` seconds.
double deltaNvib(double D_um, double T_mov_s, const HardwareParams& hw);

/// Extra CZ fidelity factor for an effective n_vib; clamped at 0.
double heatingFactor(double n_eff, const HardwareParams& hw);

/// Probability that an atom with `n_vib` quanta stays trapped.
double moveSurvival(double n_vib, const HardwareParams& hw);

struct FidelityOptions {
  /// Count 1Q/2Q gate time per gate instead of per parallel layer.
  bool per_gate_durations = false;
};

struct FidelityReport {
  double F_1Q = 1.0;
  double F_2Q = 1.0;
  double F_transfer = 1.0;
  double F_mov_heating = 1.0;
  double F_mov_loss = 1.0;
  double F_mov_cooling = 1.0;
  double F_mov_deco = 1.0;
  double F_total = 1.0;
  std::size_t N_1Q = 0;
  std::size_t N_2Q = 0;
  std::size_t N_transfer = 0;
  std::size_t N_cooling = 0;
  /// Largest n_vib seen right after a move, before any cooling.
  double max_n_vib = 0.0;
};

struct TimeLedger {
  double T_1Q_total = 0.0;
  /// Rydberg pulses plus the 2 t_2Q charged per cooling event.
  double T_2Q_total = 0.0;
  double T_move_total = 0.0;
  double T_transfer_total = 0.0;
  std::size_t rydberg_stages = 0;
  /// Qubits decohering during each move stage.
  std::vector<std::size_t> stage_qubits;
};

struct ScheduleScore {
  FidelityReport report;
  TimeLedger ledger;
  /// Cooled AOD array ids, one entry per schedule stage.
  std::vector<std::vector<int>> cooling;
};

/// Replays `schedule` through the thermal and fidelity model. Throws
/// std::invalid_argument on atom ids outside the placement.
ScheduleScore applySchedule(const Schedule& schedule, const HardwareParams& hw,
                            const FidelityOptions& options = {});

/// Writes per-stage cooling events from `score` into `schedule`.
void annotateCooling(Schedule& schedule, const ScheduleScore& score);

/// Sum of move, one-qubit, Rydberg (incl. cooling) and transfer time.
double executionTime(const TimeLedger& ledger);

/// -ln(F) per factor, in a fixed order.
std::vector<std::pair<std::string, double>>
negLogBreakdown(const FidelityReport& report);

/// Copy of `schedule` with every move stage lasting `T_mov_s`.
Schedule withMoveTime(const Schedule& schedule, double T_mov_s);

} // namespace atomique
