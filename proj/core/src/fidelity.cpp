#include "atomique/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace atomique {

double deltaNvib(double D_um, double T_mov_s, const HardwareParams& hw) {
  if (D_um <= 0.0) {
    return 0.0;
  }
  if (!(T_mov_s > 0.0)) {
    throw std::invalid_argument("move time must be positive for a move");
  }
  const double D = D_um * 1e-6;
  const double r =
      6.0 * D / (hw.x_zpf * hw.omega0 * hw.omega0 * T_mov_s * T_mov_s);
  return 0.5 * r * r;
}

double heatingFactor(double n_eff, const HardwareParams& hw) {
  return std::max(0.0, 1.0 - hw.lambda * (1.0 - hw.f_2Q) * n_eff);
}

double moveSurvival(double n_vib, const HardwareParams& hw) {
  if (n_vib <= 0.0) {
    return 1.0;
  }
  return 0.5 *
         (1.0 + std::erf((hw.n_vib_max - n_vib) / std::sqrt(2.0 * n_vib)));
}

ScheduleScore applySchedule(const Schedule& schedule, const HardwareParams& hw,
                            const FidelityOptions& options) {
  const auto& placement = schedule.placement;
  const auto nAtoms = placement.size();
  const auto N = static_cast<double>(schedule.n_atoms);

  int nArrays = 1;
  for (const auto& s : placement.slots) {
    nArrays = std::max(nArrays, s.array + 1);
  }
  std::vector<std::size_t> atomsIn(static_cast<std::size_t>(nArrays), 0);
  for (const auto& s : placement.slots) {
    ++atomsIn[static_cast<std::size_t>(s.array)];
  }

  auto checkAtom = [&](Qubit q) {
    if (q >= nAtoms) {
      throw std::invalid_argument("schedule references unknown atom " +
                                  std::to_string(q));
    }
  };

  ScheduleScore out;
  auto& rep = out.report;
  auto& led = out.ledger;
  out.cooling.resize(schedule.stages.size());
  std::vector<double> nvib(nAtoms, 0.0);
  std::size_t layers = 0;
  std::size_t coolingAtoms = 0;

  for (std::size_t i = 0; i < schedule.stages.size(); ++i) {
    const auto& stage = schedule.stages[i];
    for (const auto& layer : stage.raman) {
      for (const auto& g : layer) {
        for (auto q : g.qubits) {
          checkAtom(q);
        }
      }
      rep.N_1Q += layer.size();
      ++layers;
    }
    if (!stage.hasMove()) {
      continue;
    }
    if (stage.distances_um.size() != nAtoms) {
      throw std::invalid_argument("stage " + std::to_string(i) +
                                  ": one distance per atom expected");
    }

    for (std::size_t q = 0; q < nAtoms; ++q) {
      const double d = stage.distances_um[q];
      if (d > 0.0) {
        nvib[q] += deltaNvib(d, stage.move_time_s, hw);
        rep.F_mov_loss *= moveSurvival(nvib[q], hw);
        rep.max_n_vib = std::max(rep.max_n_vib, nvib[q]);
      }
    }
    for (const auto& [a, b] : stage.cz) {
      checkAtom(a);
      checkAtom(b);
      double n_eff = 0.0;
      if (placement[a].array != 0) {
        n_eff += nvib[a];
      }
      if (placement[b].array != 0) {
        n_eff += nvib[b];
      }
      rep.F_mov_heating *= heatingFactor(n_eff, hw);
    }
    rep.N_2Q += stage.cz.size();
    rep.F_mov_deco *= std::exp(-N * stage.move_time_s / hw.T1);
    led.T_move_total += stage.move_time_s;
    led.stage_qubits.push_back(schedule.n_atoms);
    ++led.rydberg_stages;

    for (int t = 1; t < nArrays; ++t) {
      bool hot = false;
      for (std::size_t q = 0; q < nAtoms; ++q) {
        if (placement[q].array == t && nvib[q] > hw.n_cool_threshold) {
          hot = true;
          break;
        }
      }
      if (!hot) {
        continue;
      }
      const auto count = atomsIn[static_cast<std::size_t>(t)];
      rep.F_mov_cooling *= std::pow(hw.f_2Q, 2.0 * static_cast<double>(count));
      for (std::size_t q = 0; q < nAtoms; ++q) {
        if (placement[q].array == t) {
          nvib[q] = 0.0;
        }
      }
      ++rep.N_cooling;
      coolingAtoms += count;
      out.cooling[i].push_back(t);
    }
  }

  if (options.per_gate_durations) {
    led.T_1Q_total = static_cast<double>(rep.N_1Q) * hw.t_1Q;
    led.T_2Q_total =
        static_cast<double>(rep.N_2Q + 2 * coolingAtoms) * hw.t_2Q;
  } else {
    led.T_1Q_total = static_cast<double>(layers) * hw.t_1Q;
    led.T_2Q_total =
        static_cast<double>(led.rydberg_stages + 2 * rep.N_cooling) * hw.t_2Q;
  }
  led.T_transfer_total = static_cast<double>(rep.N_transfer) * hw.T_transfer;

  rep.F_1Q = std::pow(hw.f_1Q, static_cast<double>(rep.N_1Q)) *
             std::exp(-led.T_1Q_total / hw.T1 * N);
  rep.F_2Q = std::pow(hw.f_2Q, static_cast<double>(rep.N_2Q)) *
             std::exp(-led.T_2Q_total / hw.T1 * N);
  rep.F_transfer =
      std::pow(1.0 - hw.P_loss_transfer, static_cast<double>(rep.N_transfer)) *
      std::exp(-led.T_transfer_total / hw.T1 * N);
  rep.F_total = rep.F_1Q * rep.F_2Q * rep.F_transfer * rep.F_mov_heating *
                rep.F_mov_loss * rep.F_mov_cooling * rep.F_mov_deco;
  return out;
}

void annotateCooling(Schedule& schedule, const ScheduleScore& score) {
  if (score.cooling.size() != schedule.stages.size()) {
    throw std::invalid_argument("score does not match the schedule");
  }
  for (std::size_t i = 0; i < schedule.stages.size(); ++i) {
    schedule.stages[i].cooling = score.cooling[i];
  }
}

double executionTime(const TimeLedger& ledger) {
  return ledger.T_move_total + ledger.T_1Q_total + ledger.T_2Q_total +
         ledger.T_transfer_total;
}

std::vector<std::pair<std::string, double>>
negLogBreakdown(const FidelityReport& r) {
  auto nl = [](double f) {
    return f > 0.0 ? 0.0 - std::log(f) : std::numeric_limits<double>::infinity();
  };
  return {{"F_1Q", nl(r.F_1Q)},
          {"F_2Q", nl(r.F_2Q)},
          {"F_transfer", nl(r.F_transfer)},
          {"F_mov_heating", nl(r.F_mov_heating)},
          {"F_mov_loss", nl(r.F_mov_loss)},
          {"F_mov_cooling", nl(r.F_mov_cooling)},
          {"F_mov_deco", nl(r.F_mov_deco)}};
}

Schedule withMoveTime(const Schedule& schedule, double T_mov_s) {
  Schedule out = schedule;
  for (auto& s : out.stages) {
    if (s.hasMove()) {
      s.move_time_s = T_mov_s;
    }
  }
  return out;
}

} // namespace atomique
