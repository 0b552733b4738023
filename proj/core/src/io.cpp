#include "atomique/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace atomique {

using nlohmann::json;

namespace {

json lanesJson(const LaneAssignment& lanes) {
  json out = json::array();
  for (const auto& al : lanes.aods) {
    json rows = json::array();
    json rowOff = json::array();
    json cols = json::array();
    json colOff = json::array();
    for (const auto& l : al.rows) {
      rows.push_back(l.index);
      rowOff.push_back(l.offset);
    }
    for (const auto& l : al.cols) {
      cols.push_back(l.index);
      colOff.push_back(l.offset);
    }
    out.push_back({{"row_lanes", rows},
                   {"row_offsets_um", rowOff},
                   {"col_lanes", cols},
                   {"col_offsets_um", colOff}});
  }
  return out;
}

LaneAssignment lanesFrom(const json& j) {
  LaneAssignment lanes;
  for (const auto& a : j) {
    ArrayLanes al;
    const auto& rows = a.at("row_lanes");
    const auto& rowOff = a.at("row_offsets_um");
    const auto& cols = a.at("col_lanes");
    const auto& colOff = a.at("col_offsets_um");
    if (rows.size() != rowOff.size() || cols.size() != colOff.size()) {
      throw std::runtime_error("lane and offset lists differ in length");
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      al.rows.push_back(Lane{rows[i].get<int>(), rowOff[i].get<double>()});
    }
    for (std::size_t i = 0; i < cols.size(); ++i) {
      al.cols.push_back(Lane{cols[i].get<int>(), colOff[i].get<double>()});
    }
    lanes.aods.push_back(std::move(al));
  }
  return lanes;
}

json archJson(const ArchConfig& a) {
  json rows = json::array();
  json cols = json::array();
  for (const auto& s : a.shapes) {
    rows.push_back(s.rows);
    cols.push_back(s.cols);
  }
  json relaxed = json::array();
  if (!a.constraints.c1) {
    relaxed.push_back("C1");
  }
  if (!a.constraints.c2) {
    relaxed.push_back("C2");
  }
  if (!a.constraints.c3) {
    relaxed.push_back("C3");
  }
  return {{"n_aod", a.n_aod},       {"rows", rows},
          {"cols", cols},           {"D_site", a.D_site},
          {"r_b", a.r_b},           {"delta", a.delta},
          {"T_per_move", a.T_per_move}, {"relax", relaxed}};
}

ArchConfig archFrom(const json& j) {
  ArchConfig a;
  a.n_aod = j.at("n_aod").get<int>();
  const auto& rows = j.at("rows");
  const auto& cols = j.at("cols");
  if (rows.size() != cols.size()) {
    throw std::runtime_error("rows and cols differ in length");
  }
  a.shapes.clear();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    a.shapes.push_back(ArrayShape{rows[i].get<int>(), cols[i].get<int>()});
  }
  a.D_site = j.at("D_site").get<double>();
  a.r_b = j.at("r_b").get<double>();
  a.delta = j.at("delta").get<double>();
  a.T_per_move = j.at("T_per_move").get<double>();
  for (const auto& name : j.value("relax", json::array())) {
    const auto s = name.get<std::string>();
    if (s == "C1") {
      a.constraints.c1 = false;
    } else if (s == "C2") {
      a.constraints.c2 = false;
    } else if (s == "C3") {
      a.constraints.c3 = false;
    } else {
      throw std::runtime_error("unknown constraint '" + s + "'");
    }
  }
  a.validate();
  return a;
}

json placementJson(const Placement& p) {
  json out = json::array();
  for (const auto& s : p.slots) {
    out.push_back({s.array, s.row, s.col});
  }
  return out;
}

json fidelityJson(const FidelityReport& r) {
  json neglog = json::object();
  for (const auto& [name, v] : negLogBreakdown(r)) {
    neglog[name] = v;
  }
  return {{"F_1Q", r.F_1Q},
          {"F_2Q", r.F_2Q},
          {"F_transfer", r.F_transfer},
          {"F_mov_heating", r.F_mov_heating},
          {"F_mov_loss", r.F_mov_loss},
          {"F_mov_cooling", r.F_mov_cooling},
          {"F_mov_deco", r.F_mov_deco},
          {"F_total", r.F_total},
          {"N_1Q", r.N_1Q},
          {"N_2Q", r.N_2Q},
          {"N_transfer", r.N_transfer},
          {"N_cooling", r.N_cooling},
          {"max_n_vib", r.max_n_vib},
          {"neg_log", neglog}};
}

json countersJson(const RouterCounters& c) {
  return {{"conflict_rejections", c.conflict_rejections},
          {"order_rejections", c.order_rejections},
          {"overlap_rejections", c.overlap_rejections},
          {"cell_rejections", c.cell_rejections},
          {"parking_rejections", c.parking_rejections}};
}

} // namespace

std::string scheduleToJson(const Schedule& s, const ArchConfig& arch) {
  json stages = json::array();
  for (const auto& st : s.stages) {
    json raman = json::array();
    for (const auto& layer : st.raman) {
      json l = json::array();
      for (const auto& g : layer) {
        l.push_back({{"q", g.qubits.at(0)},
                     {"u3", {g.angles[0], g.angles[1], g.angles[2]}}});
      }
      raman.push_back(std::move(l));
    }
    json cz = json::array();
    for (const auto& [a, b] : st.cz) {
      cz.push_back({a, b});
    }
    stages.push_back({{"raman", raman},
                      {"cz", cz},
                      {"aod", lanesJson(st.lanes)},
                      {"distances_um", st.distances_um},
                      {"move_time_s", st.move_time_s},
                      {"cooling", st.cooling}});
  }
  const json doc = {{"schema_version", kSchemaVersion},
                    {"arch", archJson(arch)},
                    {"n_atoms", s.n_atoms},
                    {"placement", placementJson(s.placement)},
                    {"initial", lanesJson(s.initial)},
                    {"final_permutation", s.final_permutation},
                    {"counters", countersJson(s.counters)},
                    {"depth", s.depth()},
                    {"stages", stages}};
  return doc.dump(1) + "\n";
}

LoadedSchedule scheduleFromJson(std::string_view text) {
  LoadedSchedule out;
  try {
    const auto doc = json::parse(text);
    if (doc.at("schema_version").get<int>() != kSchemaVersion) {
      throw std::runtime_error("unsupported schema_version");
    }
    out.arch = archFrom(doc.at("arch"));
    auto& s = out.schedule;
    s.n_atoms = doc.at("n_atoms").get<std::size_t>();
    for (const auto& slot : doc.at("placement")) {
      s.placement.slots.push_back(
          Slot{slot.at(0).get<int>(), slot.at(1).get<int>(), slot.at(2).get<int>()});
    }
    if (s.placement.size() != s.n_atoms) {
      throw std::runtime_error("placement does not list every atom");
    }
    s.placement.validate(out.arch);
    s.initial = lanesFrom(doc.at("initial"));
    s.final_permutation =
        doc.at("final_permutation").get<std::vector<Qubit>>();
    const auto& c = doc.value("counters", json::object());
    s.counters.conflict_rejections = c.value("conflict_rejections", 0U);
    s.counters.order_rejections = c.value("order_rejections", 0U);
    s.counters.overlap_rejections = c.value("overlap_rejections", 0U);
    s.counters.cell_rejections = c.value("cell_rejections", 0U);
    s.counters.parking_rejections = c.value("parking_rejections", 0U);
    for (const auto& js : doc.at("stages")) {
      Stage st;
      for (const auto& layer : js.at("raman")) {
        std::vector<Gate> gates;
        for (const auto& g : layer) {
          Gate gate;
          gate.kind = GateKind::U;
          gate.qubits = {g.at("q").get<Qubit>()};
          const auto& a = g.at("u3");
          gate.angles = {a.at(0).get<double>(), a.at(1).get<double>(),
                         a.at(2).get<double>()};
          gates.push_back(std::move(gate));
        }
        st.raman.push_back(std::move(gates));
      }
      for (const auto& p : js.at("cz")) {
        st.cz.emplace_back(p.at(0).get<Qubit>(), p.at(1).get<Qubit>());
      }
      st.lanes = lanesFrom(js.at("aod"));
      st.distances_um = js.at("distances_um").get<std::vector<double>>();
      st.move_time_s = js.at("move_time_s").get<double>();
      st.cooling = js.at("cooling").get<std::vector<int>>();
      for (const auto& [a, b] : st.cz) {
        if (a >= s.n_atoms || b >= s.n_atoms || a == b) {
          throw std::runtime_error("stage references an unknown atom");
        }
      }
      s.stages.push_back(std::move(st));
    }
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed schedule: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("malformed schedule: ") + e.what());
  }
  return out;
}

LoadedSchedule loadSchedule(const std::string& path) {
  return scheduleFromJson(readFile(path));
}

std::string statsToJson(const StatsReport& st, const Placement& placement) {
  json doc = {{"schema_version", kSchemaVersion},
              {"n_qubits", st.n_qubits},
              {"n_1Q", st.n_1Q},
              {"n_2Q", st.n_2Q},
              {"input_2Q", st.input_2Q},
              {"added_cx", st.added_cx},
              {"swaps", st.swaps},
              {"two_qubit_depth", st.two_qubit_depth},
              {"n_stages", st.n_stages},
              {"execution_time_s", st.execution_time_s},
              {"total_move_distance_mm", st.total_move_distance_mm},
              {"overlap_rejections", st.counters.overlap_rejections},
              {"rejections", countersJson(st.counters)},
              {"fidelity", fidelityJson(st.fidelity)},
              {"time",
               {{"T_1Q_total", st.ledger.T_1Q_total},
                {"T_2Q_total", st.ledger.T_2Q_total},
                {"T_move_total", st.ledger.T_move_total},
                {"T_transfer_total", st.ledger.T_transfer_total},
                {"rydberg_stages", st.ledger.rydberg_stages}}},
              {"placement", placementJson(placement)}};
  if (st.compile_wall_time_s) {
    doc["compile_wall_time_s"] = *st.compile_wall_time_s;
  }
  return doc.dump(2) + "\n";
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeFile(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write '" + path + "'");
  }
  out << content;
  if (!out) {
    throw std::runtime_error("write failed for '" + path + "'");
  }
}

} // namespace atomique
