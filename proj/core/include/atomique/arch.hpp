#pragma once

#include "atomique/circuit.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace atomique {

struct ArrayShape {
  int rows = 10;
  int cols = 10;

  [[nodiscard]] int capacity() const { return rows * cols; }
  bool operator==(const ArrayShape&) const = default;
};

/// Which router constraints are enforced. C1: no unintended Rydberg pairs,
/// C2: AOD row/column order preserved, C3: no AOD row/column overlap.
struct ConstraintSet {
  bool c1 = true;
  bool c2 = true;
  bool c3 = true;

  bool operator==(const ConstraintSet&) const = default;
};

/// Array geometry. Array id 0 is the SLM, ids 1..n_aod are the AOD arrays.
/// Distances are in micrometres, times in seconds.
struct ArchConfig {
  int n_aod = 2;
  /// Shapes indexed by array id; size n_aod + 1.
  std::vector<ArrayShape> shapes{{10, 10}, {10, 10}, {10, 10}};
  double D_site = 15.0;
  double r_b = 2.5;
  double delta = 0.5;
  double T_per_move = 300e-6;
  ConstraintSet constraints;

  [[nodiscard]] double sMin() const { return 2.5 * r_b; }
  [[nodiscard]] int numArrays() const { return n_aod + 1; }
  [[nodiscard]] const ArrayShape& shape(int array) const {
    return shapes.at(static_cast<std::size_t>(array));
  }
  [[nodiscard]] std::vector<int> capacities() const;
  [[nodiscard]] double halfPitch() const { return D_site / 2.0; }

  /// Inclusive lane bounds (half-pitch units) for AOD rows (y) and
  /// columns (x): the lattice plus the stacked AOD extent on each side.
  [[nodiscard]] std::pair<int, int> rowLaneBounds() const;
  [[nodiscard]] std::pair<int, int> colLaneBounds() const;

  /// Throws ConfigError naming the violated key.
  void validate() const;
};

struct HardwareParams {
  double f_1Q = 0.9992;
  double f_2Q = 0.9975;
  double t_1Q = 625e-9;
  double t_2Q = 380e-9;
  double T1 = 1.5;
  double P_loss_transfer = 0.0068;
  double T_transfer = 15e-6;
  double x_zpf = 38e-9;
  double omega0 = 2.0 * 3.14159265358979323846 * 80e3;
  double lambda = 0.109;
  double n_vib_max = 33.0;
  double n_cool_threshold = 15.0;

  void validate() const;
};

class ConfigError : public std::runtime_error {
public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(key + ": " + message), key_(std::move(key)) {}
  [[nodiscard]] const std::string& key() const { return key_; }

private:
  std::string key_;
};

struct DeviceConfig {
  ArchConfig arch;
  HardwareParams hw;
};

/// Parses a JSON device config; absent keys keep their defaults. A
/// "compiler" object is tolerated and left to the pipeline.
DeviceConfig parseConfig(std::string_view json);
DeviceConfig loadConfig(const std::string& path);

/// Physical home of one atom.
struct Slot {
  int array = 0;
  int row = 0;
  int col = 0;

  bool operator==(const Slot&) const = default;
};

/// Qubit (atom id) -> slot. Built by the atom mapper.
struct Placement {
  std::vector<Slot> slots;

  [[nodiscard]] std::size_t size() const { return slots.size(); }
  [[nodiscard]] const Slot& operator[](std::size_t q) const {
    return slots[q];
  }
  /// Number of atoms placed in `array`.
  [[nodiscard]] std::size_t countIn(int array) const;
  /// Throws std::invalid_argument on out-of-shape or doubly-used slots.
  void validate(const ArchConfig& arch) const;
};

/// Position of one AOD row or column: `index` in half-pitch units (even =
/// gate lane, odd = park lane) plus a small gate offset in micrometres.
struct Lane {
  int index = 0;
  double offset = 0.0;

  bool operator==(const Lane&) const = default;
};

struct ArrayLanes {
  std::vector<Lane> rows;
  std::vector<Lane> cols;

  bool operator==(const ArrayLanes&) const = default;
};

/// One entry per AOD array (entry t describes array id t + 1).
struct LaneAssignment {
  std::vector<ArrayLanes> aods;

  bool operator==(const LaneAssignment&) const = default;
};

struct AtomCoord {
  Qubit atom = 0;
  int array = 0;
  int row = 0;
  int col = 0;
  double x = 0.0;
  double y = 0.0;
};

/// SLM atoms sit at (col * D_site, row * D_site); AOD atoms at their
/// column/row lane coordinates. Result is ordered by atom id.
std::vector<AtomCoord> atomPositions(const ArchConfig& arch,
                                     const Placement& placement,
                                     const LaneAssignment& lanes);

enum class ViolationKind {
  GateTooFar,   // intended pair not within r_b
  Unintended,   // non-partner pair closer than 2.5 r_b (C1)
  Overlap,      // same-array atoms on coincident lanes (C3)
};

struct Violation {
  Qubit a = 0;
  Qubit b = 0;
  double distance = 0.0;
  ViolationKind kind = ViolationKind::Unintended;
};

using AtomPair = std::pair<Qubit, Qubit>;

/// Pointwise distance audit over every atom pair. Intended pairs must be
/// closer than r_b; all others at least 2.5 r_b apart. Violation classes
/// belonging to constraints disabled in `arch` are not reported.
std::vector<Violation> minSeparationAudit(const std::vector<AtomCoord>& atoms,
                                          const std::vector<AtomPair>& intended,
                                          const ArchConfig& arch);

std::string toString(ViolationKind kind);

} // namespace atomique
