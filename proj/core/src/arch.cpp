#include "atomique/arch.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>

namespace atomique {

using nlohmann::json;

std::vector<int> ArchConfig::capacities() const {
  std::vector<int> caps;
  caps.reserve(shapes.size());
  for (const auto& s : shapes) {
    caps.push_back(s.capacity());
  }
  return caps;
}

std::pair<int, int> ArchConfig::rowLaneBounds() const {
  int aodRows = 0;
  for (int t = 1; t <= n_aod; ++t) {
    aodRows += shape(t).rows;
  }
  return {-2 * aodRows - 2, 2 * (shape(0).rows - 1) + 2 * aodRows + 2};
}

std::pair<int, int> ArchConfig::colLaneBounds() const {
  int aodCols = 0;
  for (int t = 1; t <= n_aod; ++t) {
    aodCols += shape(t).cols;
  }
  return {-2 * aodCols - 2, 2 * (shape(0).cols - 1) + 2 * aodCols + 2};
}

void ArchConfig::validate() const {
  if (n_aod < 1) {
    throw ConfigError("n_aod", "at least one AOD array is required");
  }
  if (shapes.size() != static_cast<std::size_t>(n_aod + 1)) {
    throw ConfigError("rows", "expected one shape per array (n_aod + 1)");
  }
  for (const auto& s : shapes) {
    if (s.rows < 1) {
      throw ConfigError("rows", "every array needs at least one row");
    }
    if (s.cols < 1) {
      throw ConfigError("cols", "every array needs at least one column");
    }
  }
  if (!(r_b > 0.0)) {
    throw ConfigError("r_b", "must be positive");
  }
  if (!(delta > 0.0 && delta < r_b)) {
    throw ConfigError("delta", "0 < delta < r_b violated");
  }
  if (!(D_site >= 6.0 * r_b)) {
    throw ConfigError("D_site", "D_site >= 6*r_b violated");
  }
  if (!(D_site / 2.0 - delta >= sMin())) {
    throw ConfigError("D_site", "D_site/2 - delta >= 2.5*r_b violated");
  }
  if (!(T_per_move > 0.0)) {
    throw ConfigError("T_per_move", "must be positive");
  }
}

void HardwareParams::validate() const {
  auto fidelity = [](const char* key, double f) {
    if (!(f > 0.0 && f <= 1.0)) {
      throw ConfigError(key, "fidelity must lie in (0, 1]");
    }
  };
  auto positive = [](const char* key, double v) {
    if (!(v > 0.0)) {
      throw ConfigError(key, "must be positive");
    }
  };
  fidelity("f_1Q", f_1Q);
  fidelity("f_2Q", f_2Q);
  positive("t_1Q", t_1Q);
  positive("t_2Q", t_2Q);
  positive("T1", T1);
  positive("T_transfer", T_transfer);
  positive("x_zpf", x_zpf);
  positive("omega0", omega0);
  positive("n_vib_max", n_vib_max);
  if (!(P_loss_transfer >= 0.0 && P_loss_transfer < 1.0)) {
    throw ConfigError("P_loss_transfer", "must lie in [0, 1)");
  }
  if (!(lambda >= 0.0)) {
    throw ConfigError("lambda", "must be non-negative");
  }
  if (!(n_cool_threshold > 0.0 && n_cool_threshold < n_vib_max)) {
    throw ConfigError("n_cool_threshold",
                      "0 < n_cool_threshold < n_vib_max violated");
  }
}

namespace {

double number(const json& j, const std::string& key) {
  if (!j.is_number()) {
    throw ConfigError(key, "expected a number");
  }
  return j.get<double>();
}

int integer(const json& j, const std::string& key) {
  if (!j.is_number_integer()) {
    throw ConfigError(key, "expected an integer");
  }
  return j.get<int>();
}

std::vector<int> perArray(const json& j, const std::string& key, int n) {
  if (j.is_number_integer()) {
    return std::vector<int>(static_cast<std::size_t>(n), j.get<int>());
  }
  if (!j.is_array() || j.size() != static_cast<std::size_t>(n)) {
    throw ConfigError(key, "expected an integer or an array of n_aod + 1 "
                           "integers (SLM first)");
  }
  std::vector<int> out;
  for (const auto& v : j) {
    out.push_back(integer(v, key));
  }
  return out;
}

} // namespace

DeviceConfig parseConfig(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("<config>", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw ConfigError("<config>", "top level must be an object");
  }
  DeviceConfig cfg;
  auto& a = cfg.arch;
  auto& h = cfg.hw;

  if (j.contains("n_aod")) {
    a.n_aod = integer(j["n_aod"], "n_aod");
    if (a.n_aod < 1) {
      throw ConfigError("n_aod", "at least one AOD array is required");
    }
  }
  const int arrays = a.n_aod + 1;
  std::vector<int> rows(static_cast<std::size_t>(arrays), 10);
  std::vector<int> cols(static_cast<std::size_t>(arrays), 10);
  if (j.contains("rows")) {
    rows = perArray(j["rows"], "rows", arrays);
  }
  if (j.contains("cols")) {
    cols = perArray(j["cols"], "cols", arrays);
  }
  a.shapes.clear();
  for (int i = 0; i < arrays; ++i) {
    a.shapes.push_back({rows[static_cast<std::size_t>(i)],
                        cols[static_cast<std::size_t>(i)]});
  }

  const std::map<std::string, double*> reals{
      {"D_site", &a.D_site},
      {"r_b", &a.r_b},
      {"delta", &a.delta},
      {"T_per_move", &a.T_per_move},
      {"f_1Q", &h.f_1Q},
      {"f_2Q", &h.f_2Q},
      {"t_1Q", &h.t_1Q},
      {"t_2Q", &h.t_2Q},
      {"T1", &h.T1},
      {"P_loss_transfer", &h.P_loss_transfer},
      {"T_transfer", &h.T_transfer},
      {"x_zpf", &h.x_zpf},
      {"omega0", &h.omega0},
      {"lambda", &h.lambda},
      {"n_vib_max", &h.n_vib_max},
      {"n_cool_threshold", &h.n_cool_threshold},
  };
  for (const auto& [key, value] : j.items()) {
    if (key == "n_aod" || key == "rows" || key == "cols" ||
        key == "compiler") {
      continue;
    }
    if (key == "relax") {
      if (!value.is_array()) {
        throw ConfigError("relax", "expected an array of constraint names");
      }
      for (const auto& name : value) {
        const auto s = name.is_string() ? name.get<std::string>() : "";
        if (s == "C1") {
          a.constraints.c1 = false;
        } else if (s == "C2") {
          a.constraints.c2 = false;
        } else if (s == "C3") {
          a.constraints.c3 = false;
        } else {
          throw ConfigError("relax", "unknown constraint '" + s + "'");
        }
      }
      continue;
    }
    const auto it = reals.find(key);
    if (it == reals.end()) {
      throw ConfigError(key, "unknown configuration key");
    }
    *it->second = number(value, key);
  }
  a.validate();
  h.validate();
  return cfg;
}

DeviceConfig loadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("<config>", "cannot read '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parseConfig(ss.str());
}

std::size_t Placement::countIn(int array) const {
  return static_cast<std::size_t>(
      std::count_if(slots.begin(), slots.end(),
                    [array](const Slot& s) { return s.array == array; }));
}

void Placement::validate(const ArchConfig& arch) const {
  std::set<std::tuple<int, int, int>> used;
  for (std::size_t q = 0; q < slots.size(); ++q) {
    const auto& s = slots[q];
    if (s.array < 0 || s.array >= arch.numArrays()) {
      throw std::invalid_argument("qubit " + std::to_string(q) +
                                  ": unknown array");
    }
    const auto& shape = arch.shape(s.array);
    if (s.row < 0 || s.row >= shape.rows || s.col < 0 ||
        s.col >= shape.cols) {
      throw std::invalid_argument("qubit " + std::to_string(q) +
                                  ": slot outside array");
    }
    if (!used.insert({s.array, s.row, s.col}).second) {
      throw std::invalid_argument("qubit " + std::to_string(q) +
                                  ": slot already occupied");
    }
  }
}

std::vector<AtomCoord> atomPositions(const ArchConfig& arch,
                                     const Placement& placement,
                                     const LaneAssignment& lanes) {
  std::vector<AtomCoord> out;
  out.reserve(placement.size());
  const double half = arch.halfPitch();
  for (std::size_t q = 0; q < placement.size(); ++q) {
    const auto& s = placement[q];
    AtomCoord a{static_cast<Qubit>(q), s.array, s.row, s.col, 0.0, 0.0};
    if (s.array == 0) {
      a.x = s.col * arch.D_site;
      a.y = s.row * arch.D_site;
    } else {
      const auto t = static_cast<std::size_t>(s.array - 1);
      if (t >= lanes.aods.size() ||
          static_cast<std::size_t>(s.row) >= lanes.aods[t].rows.size() ||
          static_cast<std::size_t>(s.col) >= lanes.aods[t].cols.size()) {
        throw std::invalid_argument("atom " + std::to_string(q) +
                                    ": unassigned lane");
      }
      const auto& row = lanes.aods[t].rows[static_cast<std::size_t>(s.row)];
      const auto& col = lanes.aods[t].cols[static_cast<std::size_t>(s.col)];
      a.x = col.index * half + col.offset;
      a.y = row.index * half + row.offset;
    }
    out.push_back(a);
  }
  return out;
}

std::vector<Violation> minSeparationAudit(const std::vector<AtomCoord>& atoms,
                                          const std::vector<AtomPair>& intended,
                                          const ArchConfig& arch) {
  std::vector<Violation> out;
  const double sMin = arch.sMin();
  auto key = [](Qubit a, Qubit b) {
    if (a > b) {
      std::swap(a, b);
    }
    return (static_cast<std::uint64_t>(a) << 32) | b;
  };
  std::unordered_map<Qubit, std::size_t> index;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    index.emplace(atoms[i].atom, i);
  }
  std::set<std::uint64_t> wanted;
  for (const auto& [a, b] : intended) {
    wanted.insert(key(a, b));
    const auto ia = index.find(a);
    const auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      out.push_back({a, b, std::numeric_limits<double>::infinity(),
                     ViolationKind::GateTooFar});
      continue;
    }
    const auto& pa = atoms[ia->second];
    const auto& pb = atoms[ib->second];
    const double d = std::hypot(pa.x - pb.x, pa.y - pb.y);
    if (!(d < arch.r_b)) {
      out.push_back({std::min(a, b), std::max(a, b), d,
                     ViolationKind::GateTooFar});
    }
  }

  // Bucket atoms on an sMin grid; only neighbouring buckets can violate.
  std::map<std::pair<long, long>, std::vector<std::size_t>> grid;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    grid[{static_cast<long>(std::floor(atoms[i].x / sMin)),
          static_cast<long>(std::floor(atoms[i].y / sMin))}]
        .push_back(i);
  }
  constexpr double kSame = 1e-9;
  for (const auto& [cell, members] : grid) {
    for (long dx = -1; dx <= 1; ++dx) {
      for (long dy = -1; dy <= 1; ++dy) {
        const auto it = grid.find({cell.first + dx, cell.second + dy});
        if (it == grid.end()) {
          continue;
        }
        for (auto i : members) {
          for (auto j : it->second) {
            if (atoms[j].atom <= atoms[i].atom) {
              continue;
            }
            const auto& pa = atoms[i];
            const auto& pb = atoms[j];
            if (wanted.count(key(pa.atom, pb.atom)) != 0) {
              continue;
            }
            const double d = std::hypot(pa.x - pb.x, pa.y - pb.y);
            if (d >= sMin) {
              continue;
            }
            const bool overlap =
                pa.array == pb.array && pa.array != 0 &&
                ((pa.row != pb.row && std::abs(pa.y - pb.y) < kSame) ||
                 (pa.col != pb.col && std::abs(pa.x - pb.x) < kSame));
            const auto kind =
                overlap ? ViolationKind::Overlap : ViolationKind::Unintended;
            if (kind == ViolationKind::Overlap && !arch.constraints.c3) {
              continue;
            }
            if (kind == ViolationKind::Unintended && !arch.constraints.c1) {
              continue;
            }
            out.push_back({pa.atom, pb.atom, d, kind});
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Violation& l, const Violation& r) {
    return std::tie(l.a, l.b) < std::tie(r.a, r.b);
  });
  return out;
}

std::string toString(ViolationKind kind) {
  switch (kind) {
  case ViolationKind::GateTooFar:
    return "gate-too-far";
  case ViolationKind::Unintended:
    return "unintended-interaction";
  case ViolationKind::Overlap:
    return "lane-overlap";
  }
  return "unknown";
}

} // namespace atomique
