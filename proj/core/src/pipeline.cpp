#include "atomique/pipeline.hpp"

#include "atomique/atom_mapper.hpp"
#include "atomique/dag.hpp"

#include <json.hpp>

#include <stdexcept>

namespace atomique {

VertexOrder parseVertexOrder(std::string_view name) {
  if (name == "index") {
    return VertexOrder::Index;
  }
  if (name == "weight") {
    return VertexOrder::Weight;
  }
  throw std::invalid_argument("alg1_order must be 'index' or 'weight', got '" +
                              std::string(name) + "'");
}

CompilerOptions compilerOptionsFromJson(std::string_view json,
                                        CompilerOptions base) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("<config>", e.what());
  }
  if (!doc.is_object() || !doc.contains("compiler")) {
    return base;
  }
  const auto& c = doc["compiler"];
  if (!c.is_object()) {
    throw ConfigError("compiler", "expected an object");
  }
  for (const auto& [key, value] : c.items()) {
    try {
      if (key == "gamma") {
        base.gamma = value.get<double>();
      } else if (key == "alg1_order") {
        base.alg1_order = parseVertexOrder(value.get<std::string>());
      } else if (key == "lookahead") {
        base.swap.lookahead_window = value.get<std::size_t>();
      } else if (key == "decay") {
        base.swap.decay = value.get<double>();
      } else if (key == "serial_router") {
        base.serial_router = value.get<bool>();
      } else if (key == "array_mapper") {
        const auto s = value.get<std::string>();
        if (s == "greedy") {
          base.array_mapper = ArrayMapperKind::Greedy;
        } else if (s == "random") {
          base.array_mapper = ArrayMapperKind::Random;
        } else {
          throw std::invalid_argument("expected 'greedy' or 'random'");
        }
      } else if (key == "atom_mapper") {
        const auto s = value.get<std::string>();
        if (s == "aligned") {
          base.atom_mapper = AtomMapperKind::Aligned;
        } else if (s == "random") {
          base.atom_mapper = AtomMapperKind::Random;
        } else if (s == "row-major") {
          base.atom_mapper = AtomMapperKind::RowMajor;
        } else {
          throw std::invalid_argument(
              "expected 'aligned', 'random' or 'row-major'");
        }
      } else if (key == "per_gate_durations") {
        base.fidelity.per_gate_durations = value.get<bool>();
      } else if (key == "seed") {
        base.seed = value.get<std::uint64_t>();
      } else {
        throw ConfigError("compiler." + key, "unknown compiler option");
      }
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("compiler." + key, e.what());
    } catch (const std::invalid_argument& e) {
      throw ConfigError("compiler." + key, e.what());
    }
  }
  return base;
}

StatsReport summarize(const CompileResult& r) {
  StatsReport s;
  s.n_qubits = r.basis.n_qubits;
  s.n_1Q = r.schedule.oneQubitCount();
  s.n_2Q = r.schedule.czCount();
  s.input_2Q = r.basis.countTwoQubit();
  s.added_cx = r.routed.added_cx;
  s.swaps = r.routed.swaps;
  s.two_qubit_depth = r.schedule.depth();
  s.n_stages = r.schedule.stages.size();
  s.execution_time_s = executionTime(r.score.ledger);
  s.total_move_distance_mm = r.schedule.totalDistanceUm() / 1000.0;
  s.counters = r.schedule.counters;
  s.fidelity = r.score.report;
  s.ledger = r.score.ledger;
  return s;
}

CompileResult compile(const Circuit& input, const DeviceConfig& device,
                      const CompilerOptions& options) {
  input.validate();
  CompileResult r;
  r.arch = device.arch;
  for (const auto& name : options.relax) {
    r.arch = relaxConstraint(r.arch, name);
  }
  r.arch.validate();
  r.hw = device.hw;
  r.hw.validate();
  r.options = options;

  r.basis = toBasis(stripBarriers(input));
  const auto n = r.basis.n_qubits;
  const auto caps = r.arch.capacities();
  const auto k = static_cast<std::size_t>(r.arch.numArrays());

  if (options.array_mapper == ArrayMapperKind::Random) {
    r.assignment = randomAssignment(n, caps, options.seed);
  } else {
    const auto graph = gateFrequencyGraph(r.basis, options.gamma);
    const auto partitions =
        greedyMaxKCut(graph, k, caps, options.alg1_order);
    r.assignment = bindPartitionsToArrays(partitions, caps);
  }

  r.routed = routeInterArray(r.basis, r.assignment, options.swap);
  if (r.routed.intraArrayCz() != 0) {
    throw std::logic_error("inter-array routing left intra-array CZ gates");
  }

  switch (options.atom_mapper) {
  case AtomMapperKind::Aligned:
    r.placement = mapAtoms(r.routed, r.arch);
    break;
  case AtomMapperKind::Random:
    r.placement = mapAtomsRandom(r.routed, r.arch, options.seed);
    break;
  case AtomMapperKind::RowMajor:
    r.placement = mapAtomsRowMajor(r.routed, r.arch);
    break;
  }

  r.schedule = options.serial_router ? routeSerial(r.routed, r.placement, r.arch)
                                     : route(r.routed, r.placement, r.arch);
  r.score = applySchedule(r.schedule, r.hw, options.fidelity);
  annotateCooling(r.schedule, r.score);
  r.stats = summarize(r);
  return r;
}

CompileResult rescore(const CompileResult& result, const HardwareParams& hw,
                      std::optional<double> T_per_move) {
  hw.validate();
  CompileResult r = result;
  r.hw = hw;
  if (T_per_move) {
    r.arch.T_per_move = *T_per_move;
    r.schedule = withMoveTime(result.schedule, *T_per_move);
  }
  r.score = applySchedule(r.schedule, r.hw, r.options.fidelity);
  annotateCooling(r.schedule, r.score);
  r.stats = summarize(r);
  return r;
}

} // namespace atomique
