#include "atomique/stage_router.hpp"

#include "atomique/dag.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>

namespace atomique {

RouterCounters& RouterCounters::operator+=(const RouterCounters& o) {
  conflict_rejections += o.conflict_rejections;
  order_rejections += o.order_rejections;
  overlap_rejections += o.overlap_rejections;
  cell_rejections += o.cell_rejections;
  parking_rejections += o.parking_rejections;
  return *this;
}

std::size_t Schedule::depth() const {
  return static_cast<std::size_t>(
      std::count_if(stages.begin(), stages.end(),
                    [](const Stage& s) { return s.hasMove(); }));
}

std::size_t Schedule::czCount() const {
  std::size_t n = 0;
  for (const auto& s : stages) {
    n += s.cz.size();
  }
  return n;
}

std::size_t Schedule::oneQubitCount() const {
  std::size_t n = 0;
  for (const auto& s : stages) {
    for (const auto& layer : s.raman) {
      n += layer.size();
    }
  }
  return n;
}

std::size_t Schedule::ramanLayerCount() const {
  std::size_t n = 0;
  for (const auto& s : stages) {
    n += s.raman.size();
  }
  return n;
}

double Schedule::totalDistanceUm() const {
  double d = 0.0;
  for (const auto& s : stages) {
    for (auto x : s.distances_um) {
      d += x;
    }
  }
  return d;
}

LaneAssignment initialLanes(const ArchConfig& arch) {
  LaneAssignment lanes;
  int rowsBefore = 0;
  int colsBefore = 0;
  for (int a = 1; a <= arch.n_aod; ++a) {
    const auto& shape = arch.shape(a);
    ArrayLanes al;
    for (int r = 0; r < shape.rows; ++r) {
      al.rows.push_back(Lane{2 * (r + rowsBefore) + 1, 0.0});
    }
    for (int c = 0; c < shape.cols; ++c) {
      al.cols.push_back(Lane{2 * (c + colsBefore) + 1, 0.0});
    }
    rowsBefore += shape.rows;
    colsBefore += shape.cols;
    lanes.aods.push_back(std::move(al));
  }
  return lanes;
}

PinSet PinSet::none(const ArchConfig& arch) {
  PinSet p;
  for (int a = 1; a <= arch.n_aod; ++a) {
    p.rows.emplace_back(static_cast<std::size_t>(arch.shape(a).rows));
    p.cols.emplace_back(static_cast<std::size_t>(arch.shape(a).cols));
  }
  return p;
}

namespace {

/// Lanes of one axis already claimed, indexed by lane - lo.
class LaneMask {
public:
  LaneMask(int lo, int hi)
      : lo_(lo), hi_(hi), used_(static_cast<std::size_t>(hi - lo + 1), 0) {}

  [[nodiscard]] bool inBounds(int lane) const {
    return lane >= lo_ && lane <= hi_;
  }
  [[nodiscard]] bool freePark(int lane) const {
    return inBounds(lane) && (lane & 1) != 0 &&
           used_[static_cast<std::size_t>(lane - lo_)] == 0;
  }
  void claim(int lane) { used_[static_cast<std::size_t>(lane - lo_)] = 1; }
  [[nodiscard]] int lo() const { return lo_; }
  [[nodiscard]] int hi() const { return hi_; }

private:
  int lo_;
  int hi_;
  std::vector<char> used_;
};

/// Order-preserving park-lane assignment for the unpinned lines of one
/// axis. Each run of unpinned lines between two pinned neighbours is solved
/// exactly by a DP minimizing total displacement from the previous lanes.
bool parkOrdered(const std::vector<std::optional<Lane>>& pins,
                 const std::vector<Lane>& prev, LaneMask& mask,
                 std::vector<Lane>& out) {
  const auto n = pins.size();
  out.assign(n, Lane{});
  std::size_t start = 0;
  int below = mask.lo() - 1;
  while (start <= n) {
    std::size_t end = start;
    while (end < n && !pins[end]) {
      ++end;
    }
    const int above = end < n ? pins[end]->index : mask.hi() + 1;
    const std::size_t m = end - start;
    if (m > 0) {
      std::vector<int> cand;
      for (int x = below + 1; x < above; ++x) {
        if (mask.freePark(x)) {
          cand.push_back(x);
        }
      }
      const std::size_t k = cand.size();
      if (k < m) {
        return false;
      }
      constexpr double inf = std::numeric_limits<double>::infinity();
      std::vector<std::vector<double>> cost(m, std::vector<double>(k, inf));
      std::vector<std::vector<std::size_t>> from(m,
                                                 std::vector<std::size_t>(k, 0));
      for (std::size_t j = 0; j + m <= k; ++j) {
        cost[0][j] = std::abs(cand[j] - prev[start].index);
      }
      for (std::size_t i = 1; i < m; ++i) {
        double best = inf;
        std::size_t arg = 0;
        for (std::size_t j = i; j + (m - i) <= k; ++j) {
          if (cost[i - 1][j - 1] < best) {
            best = cost[i - 1][j - 1];
            arg = j - 1;
          }
          cost[i][j] = best + std::abs(cand[j] - prev[start + i].index);
          from[i][j] = arg;
        }
      }
      std::size_t j = m - 1;
      for (std::size_t x = m - 1; x < k; ++x) {
        if (cost[m - 1][x] < cost[m - 1][j]) {
          j = x;
        }
      }
      for (std::size_t i = m; i-- > 0;) {
        out[start + i] = Lane{cand[j], 0.0};
        mask.claim(cand[j]);
        j = from[i][j];
      }
    }
    if (end == n) {
      break;
    }
    out[end] = *pins[end];
    below = pins[end]->index;
    start = end + 1;
  }
  return true;
}

/// Nearest-free park lanes without order preservation (C2 relaxed).
bool parkGreedy(const std::vector<std::optional<Lane>>& pins,
                const std::vector<Lane>& prev, LaneMask& mask,
                std::vector<Lane>& out) {
  const auto n = pins.size();
  out.assign(n, Lane{});
  const int span = mask.hi() - mask.lo() + 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (pins[i]) {
      out[i] = *pins[i];
      continue;
    }
    bool found = false;
    for (int d = 0; d <= 2 * span && !found; ++d) {
      for (const int x : {prev[i].index - d, prev[i].index + d}) {
        if (mask.freePark(x)) {
          out[i] = Lane{x, 0.0};
          mask.claim(x);
          found = true;
          break;
        }
      }
    }
    if (!found) {
      return false;
    }
  }
  return true;
}

std::pair<double, double> aodPosition(const ArchConfig& arch,
                                      const ArrayLanes& lanes, const Slot& s) {
  const auto& row = lanes.rows[static_cast<std::size_t>(s.row)];
  const auto& col = lanes.cols[static_cast<std::size_t>(s.col)];
  const double half = arch.halfPitch();
  return {col.index * half + col.offset, row.index * half + row.offset};
}

enum class Reject { None, Conflict, Order, Overlap, Cell, Parking };

void count(RouterCounters& c, Reject r) {
  switch (r) {
  case Reject::Conflict:
    ++c.conflict_rejections;
    break;
  case Reject::Order:
    ++c.order_rejections;
    break;
  case Reject::Overlap:
    ++c.overlap_rejections;
    break;
  case Reject::Cell:
    ++c.cell_rejections;
    break;
  case Reject::Parking:
    ++c.parking_rejections;
    break;
  case Reject::None:
    break;
  }
}

struct Pin {
  std::size_t aod = 0; // AOD index (array id - 1)
  bool row = true;
  std::size_t line = 0;
  Lane lane;
};

std::vector<std::optional<Lane>>& pinSlot(PinSet& p, std::size_t aod,
                                          bool row) {
  return row ? p.rows[aod] : p.cols[aod];
}

/// Pin options realizing a CZ between atoms a and b, in preference order.
std::vector<std::vector<Pin>> pinOptions(const Placement& placement, Qubit a,
                                         Qubit b, const ArchConfig& arch) {
  const auto& sa = placement[a];
  const auto& sb = placement[b];
  if (sa.array == sb.array) {
    throw std::invalid_argument("CZ(" + std::to_string(a) + "," +
                                std::to_string(b) +
                                ") joins atoms of the same array");
  }
  auto idx = [](int v) { return static_cast<std::size_t>(v); };
  if (sa.array == 0 || sb.array == 0) {
    const auto& slm = sa.array == 0 ? sa : sb;
    const auto& aod = sa.array == 0 ? sb : sa;
    const auto t = idx(aod.array - 1);
    return {{Pin{t, true, idx(aod.row), Lane{2 * slm.row, 0.0}},
             Pin{t, false, idx(aod.col), Lane{2 * slm.col, -arch.delta}}}};
  }
  std::vector<std::vector<Pin>> options;
  for (const auto* target : {&sa, &sb}) {
    if (target == &sb && sa.row == sb.row && sa.col == sb.col) {
      break;
    }
    const int rowLane = 2 * target->row + 1;
    const int colLane = 2 * target->col + 1;
    const double offA = sa.array < sb.array ? -arch.delta / 2 : arch.delta / 2;
    const double offB = -offA;
    options.push_back({Pin{idx(sa.array - 1), true, idx(sa.row), {rowLane, 0.0}},
                       Pin{idx(sb.array - 1), true, idx(sb.row), {rowLane, 0.0}},
                       Pin{idx(sa.array - 1), false, idx(sa.col), {colLane, offA}},
                       Pin{idx(sb.array - 1), false, idx(sb.col),
                           {colLane, offB}}});
  }
  return options;
}

/// At most one atom per lane cell, except intended gate pairs.
bool cellsExclusive(const Placement& placement, const LaneAssignment& lanes,
                    const std::vector<std::int64_t>& partner) {
  constexpr std::int64_t shift = 1 << 20;
  std::vector<std::pair<std::int64_t, Qubit>> cells;
  cells.reserve(placement.size());
  for (std::size_t q = 0; q < placement.size(); ++q) {
    const auto& s = placement[q];
    std::int64_t r = 0;
    std::int64_t c = 0;
    if (s.array == 0) {
      r = 2 * s.row;
      c = 2 * s.col;
    } else {
      const auto& al = lanes.aods[static_cast<std::size_t>(s.array - 1)];
      r = al.rows[static_cast<std::size_t>(s.row)].index;
      c = al.cols[static_cast<std::size_t>(s.col)].index;
    }
    cells.emplace_back((r + shift) * (2 * shift) + (c + shift),
                       static_cast<Qubit>(q));
  }
  std::sort(cells.begin(), cells.end());
  for (std::size_t i = 0; i < cells.size();) {
    std::size_t j = i + 1;
    while (j < cells.size() && cells[j].first == cells[i].first) {
      ++j;
    }
    if (j - i > 2) {
      return false;
    }
    if (j - i == 2 &&
        partner[cells[i].second] != static_cast<std::int64_t>(cells[i + 1].second)) {
      return false;
    }
    i = j;
  }
  return true;
}

} // namespace

std::optional<Motion> synthesizeMotion(const PinSet& pins,
                                       const LaneAssignment& previous,
                                       const Placement& placement,
                                       const ArchConfig& arch) {
  const auto [rlo, rhi] = arch.rowLaneBounds();
  const auto [clo, chi] = arch.colLaneBounds();
  LaneMask rowMask(rlo, rhi);
  LaneMask colMask(clo, chi);
  const auto nAod = static_cast<std::size_t>(arch.n_aod);
  std::vector<std::size_t> order;
  std::vector<std::size_t> idle;
  for (std::size_t t = 0; t < nAod; ++t) {
    bool pinned = false;
    for (const auto& [lines, mask] :
         {std::pair{&pins.rows[t], &rowMask}, std::pair{&pins.cols[t], &colMask}}) {
      for (const auto& p : *lines) {
        if (!p) {
          continue;
        }
        if (!mask->inBounds(p->index)) {
          return std::nullopt;
        }
        mask->claim(p->index);
        pinned = true;
      }
    }
    (pinned ? order : idle).push_back(t);
  }
  order.insert(order.end(), idle.begin(), idle.end());

  const bool keepOrder = arch.constraints.c2;
  Motion m;
  m.lanes.aods.resize(nAod);
  for (auto t : order) {
    auto& out = m.lanes.aods[t];
    const auto& prev = previous.aods[t];
    const bool ok =
        keepOrder ? parkOrdered(pins.rows[t], prev.rows, rowMask, out.rows) &&
                        parkOrdered(pins.cols[t], prev.cols, colMask, out.cols)
                  : parkGreedy(pins.rows[t], prev.rows, rowMask, out.rows) &&
                        parkGreedy(pins.cols[t], prev.cols, colMask, out.cols);
    if (!ok) {
      return std::nullopt;
    }
  }

  m.distances_um.assign(placement.size(), 0.0);
  for (std::size_t q = 0; q < placement.size(); ++q) {
    const auto& s = placement[q];
    if (s.array == 0) {
      continue;
    }
    const auto t = static_cast<std::size_t>(s.array - 1);
    const auto [x0, y0] = aodPosition(arch, previous.aods[t], s);
    const auto [x1, y1] = aodPosition(arch, m.lanes.aods[t], s);
    m.distances_um[q] = std::hypot(x1 - x0, y1 - y0);
  }
  return m;
}

Selection selectParallelGates(const std::vector<AtomPair>& candidates,
                              const Placement& placement,
                              const LaneAssignment& current,
                              const ArchConfig& arch, std::size_t limit) {
  Selection sel;
  sel.pins = PinSet::none(arch);
  auto base = synthesizeMotion(sel.pins, current, placement, arch);
  if (!base) {
    throw std::logic_error("current lane configuration cannot be parked");
  }
  sel.motion = std::move(*base);
  std::vector<std::int64_t> partner(placement.size(), -1);
  const auto& cons = arch.constraints;

  auto attempt = [&](const std::vector<Pin>& option, Qubit a,
                     Qubit b) -> Reject {
    for (const auto& p : option) {
      const auto& slot = pinSlot(sel.pins, p.aod, p.row)[p.line];
      if (slot && *slot != p.lane) {
        return Reject::Conflict;
      }
    }
    for (const auto& p : option) {
      const auto& lines = pinSlot(sel.pins, p.aod, p.row);
      if (lines[p.line]) {
        continue;
      }
      for (std::size_t l = 0; l < lines.size(); ++l) {
        if (l == p.line || !lines[l]) {
          continue;
        }
        const int other = lines[l]->index;
        if (other == p.lane.index) {
          if (cons.c3) {
            return Reject::Overlap;
          }
          continue;
        }
        if (cons.c2 && ((l < p.line) != (other < p.lane.index))) {
          return Reject::Order;
        }
      }
    }
    PinSet trial = sel.pins;
    for (const auto& p : option) {
      pinSlot(trial, p.aod, p.row)[p.line] = p.lane;
    }
    auto motion = synthesizeMotion(trial, current, placement, arch);
    if (!motion) {
      return Reject::Parking;
    }
    if (cons.c1) {
      partner[a] = b;
      partner[b] = a;
      const bool clean = cellsExclusive(placement, motion->lanes, partner);
      if (!clean) {
        partner[a] = -1;
        partner[b] = -1;
        return Reject::Cell;
      }
    } else {
      partner[a] = b;
      partner[b] = a;
    }
    sel.pins = std::move(trial);
    sel.motion = std::move(*motion);
    return Reject::None;
  };

  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (sel.accepted.size() >= limit) {
      break;
    }
    const auto [a, b] = candidates[k];
    if (partner[a] >= 0 || partner[b] >= 0) {
      throw std::invalid_argument("candidate gates must not share atoms");
    }
    Reject last = Reject::None;
    for (const auto& option : pinOptions(placement, a, b, arch)) {
      last = attempt(option, a, b);
      if (last == Reject::None) {
        break;
      }
    }
    if (last == Reject::None) {
      sel.accepted.push_back(k);
    } else {
      count(sel.counters, last);
    }
  }
  return sel;
}

namespace {

Schedule routeWithLimit(const RoutedCircuit& routed, const Placement& placement,
                        const ArchConfig& arch, std::size_t limit) {
  const auto n = routed.circuit.n_qubits;
  if (placement.size() != n) {
    throw std::invalid_argument("placement does not cover the circuit");
  }
  placement.validate(arch);

  const auto dag = buildDag(routed.circuit);
  const auto descendants = dag.descendantCounts();
  FrontTracker front(dag);

  Schedule s;
  s.n_atoms = n;
  s.placement = placement;
  s.initial = initialLanes(arch);
  s.final_permutation = routed.final_permutation;
  LaneAssignment current = s.initial;

  while (!front.done()) {
    Stage stage;
    while (true) {
      std::vector<Gate> layer;
      bool progress = false;
      const auto ready = front.front();
      for (auto node : ready) {
        const auto& g = dag.gate(node);
        if (g.kind == GateKind::U) {
          layer.push_back(g);
        } else if (g.kind != GateKind::Barrier) {
          if (g.kind != GateKind::CZ) {
            throw std::invalid_argument("route expects a basis circuit");
          }
          continue;
        }
        front.execute(node);
        progress = true;
      }
      if (!progress) {
        break;
      }
      if (!layer.empty()) {
        stage.raman.push_back(std::move(layer));
      }
    }

    if (front.done()) {
      if (!stage.raman.empty()) {
        stage.lanes = current;
        stage.distances_um.assign(n, 0.0);
        s.stages.push_back(std::move(stage));
      }
      break;
    }

    auto nodes = front.front();
    std::stable_sort(nodes.begin(), nodes.end(),
                     [&](std::size_t x, std::size_t y) {
                       return descendants[x] > descendants[y];
                     });
    std::vector<AtomPair> pairs;
    pairs.reserve(nodes.size());
    for (auto node : nodes) {
      const auto& q = dag.gate(node).qubits;
      pairs.emplace_back(q[0], q[1]);
    }
    auto sel = selectParallelGates(pairs, placement, current, arch, limit);
    if (sel.accepted.empty()) {
      throw std::logic_error("no front CZ could be scheduled");
    }
    for (auto i : sel.accepted) {
      stage.cz.push_back(pairs[i]);
      front.execute(nodes[i]);
    }
    stage.lanes = std::move(sel.motion.lanes);
    stage.distances_um = std::move(sel.motion.distances_um);
    stage.move_time_s = arch.T_per_move;
    s.counters += sel.counters;
    current = stage.lanes;
    s.stages.push_back(std::move(stage));
  }
  return s;
}

} // namespace

Schedule route(const RoutedCircuit& routed, const Placement& placement,
               const ArchConfig& arch) {
  return routeWithLimit(routed, placement, arch,
                        std::numeric_limits<std::size_t>::max());
}

Schedule routeSerial(const RoutedCircuit& routed, const Placement& placement,
                     const ArchConfig& arch) {
  return routeWithLimit(routed, placement, arch, 1);
}

ArchConfig relaxConstraint(const ArchConfig& arch, std::string_view which) {
  ArchConfig out = arch;
  if (which == "C1" || which == "c1") {
    out.constraints.c1 = false;
  } else if (which == "C2" || which == "c2") {
    out.constraints.c2 = false;
  } else if (which == "C3" || which == "c3") {
    out.constraints.c3 = false;
  } else {
    throw std::invalid_argument("unknown constraint '" + std::string(which) +
                                "' (expected C1, C2 or C3)");
  }
  return out;
}

std::vector<std::string> checkStageLanes(const Stage& stage,
                                         const ArchConfig& arch) {
  std::vector<std::string> issues;
  const auto [rlo, rhi] = arch.rowLaneBounds();
  const auto [clo, chi] = arch.colLaneBounds();
  auto checkAxis = [&](const std::vector<Lane>& lanes, std::size_t t,
                       const char* axis, int lo, int hi) {
    const auto name = "aod " + std::to_string(t) + " " + axis + " ";
    for (std::size_t i = 0; i < lanes.size(); ++i) {
      if (lanes[i].index < lo || lanes[i].index > hi) {
        issues.push_back(name + std::to_string(i) + " outside lane bounds");
      }
      for (std::size_t j = i + 1; j < lanes.size(); ++j) {
        if (arch.constraints.c3 && lanes[i].index == lanes[j].index) {
          issues.push_back(name + std::to_string(i) + "," + std::to_string(j) +
                           " share a lane");
        } else if (arch.constraints.c2 && lanes[i].index > lanes[j].index) {
          issues.push_back(name + std::to_string(i) + "," + std::to_string(j) +
                           " out of order");
        }
      }
    }
  };
  if (stage.lanes.aods.size() != static_cast<std::size_t>(arch.n_aod)) {
    issues.emplace_back("lane configuration does not match n_aod");
    return issues;
  }
  for (std::size_t t = 0; t < stage.lanes.aods.size(); ++t) {
    const auto& shape = arch.shape(static_cast<int>(t) + 1);
    const auto& al = stage.lanes.aods[t];
    if (al.rows.size() != static_cast<std::size_t>(shape.rows) ||
        al.cols.size() != static_cast<std::size_t>(shape.cols)) {
      issues.push_back("aod " + std::to_string(t) + " lane count mismatch");
      continue;
    }
    checkAxis(al.rows, t, "rows", rlo, rhi);
    checkAxis(al.cols, t, "cols", clo, chi);
  }
  return issues;
}

std::vector<StageViolation> auditSchedule(const Schedule& schedule,
                                          const ArchConfig& arch) {
  std::vector<StageViolation> out;
  for (std::size_t i = 0; i < schedule.stages.size(); ++i) {
    const auto& stage = schedule.stages[i];
    if (!stage.hasMove()) {
      continue;
    }
    const auto atoms = atomPositions(arch, schedule.placement, stage.lanes);
    for (const auto& v : minSeparationAudit(atoms, stage.cz, arch)) {
      out.push_back(StageViolation{i, v});
    }
  }
  return out;
}

} // namespace atomique
