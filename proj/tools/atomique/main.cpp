#include "render.hpp"

#include "atomique/io.hpp"
#include "atomique/pipeline.hpp"
#include "atomique/qasm.hpp"
#include "atomique/stage_router.hpp"
#include "atomique/sweep.hpp"
#include "atomique/verify.hpp"
#include "atomique/workloads.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace atomique;

namespace {

struct CommonFlags {
  std::string config;
  std::uint64_t seed = 0;
  bool serial = false;
  std::vector<std::string> relax;
  std::string alg1Order;
};

void addCommon(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config, "Device configuration (JSON)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--seed", f.seed, "Seed for randomized components");
  cmd->add_flag("--serial-router", f.serial, "Schedule one CZ per stage");
  cmd->add_option("--relax", f.relax, "Disable a router constraint")
      ->check(CLI::IsMember({"C1", "C2", "C3"}));
  cmd->add_option("--alg1-order", f.alg1Order,
                  "Array-mapper vertex order (index|weight)")
      ->check(CLI::IsMember({"index", "weight"}));
}

std::pair<DeviceConfig, CompilerOptions> resolve(const CommonFlags& f) {
  DeviceConfig device;
  CompilerOptions options;
  if (!f.config.empty()) {
    const auto text = readFile(f.config);
    device = parseConfig(text);
    options = compilerOptionsFromJson(text, options);
  }
  options.seed = f.seed;
  options.serial_router = options.serial_router || f.serial;
  options.relax = f.relax;
  if (!f.alg1Order.empty()) {
    options.alg1_order = parseVertexOrder(f.alg1Order);
  }
  return {device, options};
}

std::vector<double> parseValues(const std::string& values,
                                const std::string& range) {
  std::vector<double> out;
  if (!values.empty()) {
    std::stringstream ss(values);
    std::string item;
    while (std::getline(ss, item, ',')) {
      out.push_back(std::stod(item));
    }
  }
  if (!range.empty()) {
    double lo = 0.0;
    double hi = 0.0;
    double step = 0.0;
    char c1 = 0;
    char c2 = 0;
    std::stringstream ss(range);
    if (!(ss >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' ||
        step <= 0.0 || hi < lo) {
      throw std::invalid_argument("--range expects lo:hi:step");
    }
    const auto n = static_cast<long>((hi - lo) / step + 1e-9);
    for (long i = 0; i <= n; ++i) {
      out.push_back(lo + static_cast<double>(i) * step);
    }
  }
  if (out.empty()) {
    throw std::invalid_argument("sweep needs --values or --range");
  }
  return out;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    writeFile(path, text);
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compiler for reconfigurable neutral-atom arrays"};
  app.require_subcommand(1);

  // compile
  auto* compileCmd = app.add_subcommand("compile", "Compile a QASM circuit");
  CommonFlags compileFlags;
  std::string input;
  std::string schedulePath = "schedule.json";
  std::string statsPath = "stats.json";
  std::string qasmOut;
  bool timing = false;
  compileCmd->add_option("input", input, "OpenQASM 2 file")
      ->required()
      ->check(CLI::ExistingFile);
  addCommon(compileCmd, compileFlags);
  compileCmd->add_option("--schedule", schedulePath, "Schedule output");
  compileCmd->add_option("--stats", statsPath, "Stats output");
  compileCmd->add_option("--emit-qasm", qasmOut,
                         "Also write the routed basis circuit as QASM");
  compileCmd->add_flag("--timing", timing,
                       "Record compile_wall_time_s in the stats");

  // gen
  auto* genCmd = app.add_subcommand("gen", "Generate a benchmark circuit");
  WorkloadSpec spec;
  std::string family;
  std::string genOut;
  genCmd->add_option("family", family,
                     "qaoa-rand | qaoa-regular | qsim-rand | bv | random")
      ->required();
  genCmd->add_option("-n,--qubits", spec.n_qubits, "Qubit count")->required();
  genCmd->add_option("--p", spec.p, "Edge probability (qaoa-rand)");
  genCmd->add_option("--degree", spec.degree, "Degree (qaoa-regular)");
  genCmd->add_option("--p-nonI", spec.p_nonI,
                     "Non-identity probability (qsim-rand)");
  genCmd->add_option("--strings", spec.n_strings, "Pauli strings (qsim-rand)");
  genCmd->add_option("--secret", spec.secret, "Secret bits (bv)");
  genCmd->add_option("--gates-per-qubit", spec.gates_per_qubit,
                     "Two-qubit gates per qubit (random)");
  genCmd->add_option("--seed", spec.seed, "Generator seed");
  genCmd->add_option("-o,--output", genOut, "Output file (default stdout)");

  // sweep
  auto* sweepCmd = app.add_subcommand("sweep", "Hardware parameter sweep");
  CommonFlags sweepFlags;
  std::string param;
  std::string values;
  std::string range;
  std::string sweepInput;
  std::string sweepOut;
  sweepCmd->add_option("--param", param,
                       "T_per_move | D_site | n_cool_threshold | T1 | f_2Q")
      ->required();
  sweepCmd->add_option("--values", values, "Comma-separated values");
  sweepCmd->add_option("--range", range, "lo:hi:step");
  sweepCmd->add_option("input", sweepInput, "OpenQASM 2 workload")
      ->required()
      ->check(CLI::ExistingFile);
  sweepCmd->add_option("-o,--output", sweepOut, "CSV output (default stdout)");
  addCommon(sweepCmd, sweepFlags);

  // audit
  auto* auditCmd = app.add_subcommand("audit", "Check a schedule's geometry");
  std::string auditPath;
  auditCmd->add_option("schedule", auditPath, "Schedule JSON")
      ->required()
      ->check(CLI::ExistingFile);

  // check
  auto* checkCmd =
      app.add_subcommand("check", "Check a schedule against its source");
  std::string checkInput;
  std::string checkSchedule;
  checkCmd->add_option("input", checkInput, "OpenQASM 2 file")
      ->required()
      ->check(CLI::ExistingFile);
  checkCmd->add_option("schedule", checkSchedule, "Schedule JSON")
      ->required()
      ->check(CLI::ExistingFile);

  // render
  auto* renderCmd = app.add_subcommand("render", "Per-stage SVG frames");
  std::string renderPath;
  std::string renderDir = ".";
  renderCmd->add_option("schedule", renderPath, "Schedule JSON")
      ->required()
      ->check(CLI::ExistingFile);
  renderCmd->add_option("-d,--out-dir", renderDir, "Output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compileCmd->parsed()) {
      const auto start = std::chrono::steady_clock::now();
      const auto parsed = parseQasmWithWarnings(readFile(input));
      for (const auto& w : parsed.warnings) {
        std::cerr << "warning: " << w << "\n";
      }
      const auto [device, options] = resolve(compileFlags);
      auto result = compile(parsed.circuit, device, options);
      if (timing) {
        result.stats.compile_wall_time_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
      }
      writeFile(schedulePath, scheduleToJson(result.schedule, result.arch));
      writeFile(statsPath, statsToJson(result.stats, result.placement));
      if (!qasmOut.empty()) {
        writeFile(qasmOut, emitQasm(result.routed.circuit));
      }
      return 0;
    }
    if (genCmd->parsed()) {
      spec.family = parseFamily(family);
      emit(genOut, emitQasm(generate(spec)));
      return 0;
    }
    if (sweepCmd->parsed()) {
      const auto p = parseSweepParam(param);
      const auto vals = parseValues(values, range);
      const auto circuit = parseQasm(readFile(sweepInput));
      const auto [device, options] = resolve(sweepFlags);
      emit(sweepOut, sweepCsv(p, runSweep(circuit, device, options, p, vals)));
      return 0;
    }
    if (auditCmd->parsed()) {
      const auto loaded = loadSchedule(auditPath);
      std::size_t problems = 0;
      for (std::size_t i = 0; i < loaded.schedule.stages.size(); ++i) {
        for (const auto& issue :
             checkStageLanes(loaded.schedule.stages[i], loaded.arch)) {
          std::cout << "stage " << i << ": " << issue << "\n";
          ++problems;
        }
      }
      for (const auto& v : auditSchedule(loaded.schedule, loaded.arch)) {
        std::cout << "stage " << v.stage << ": " << toString(v.violation.kind)
                  << " atoms " << v.violation.a << "," << v.violation.b
                  << " at " << v.violation.distance << " um\n";
        ++problems;
      }
      std::cout << loaded.schedule.stages.size() << " stages, " << problems
                << " violations\n";
      return problems == 0 ? 0 : 1;
    }
    if (checkCmd->parsed()) {
      const auto loaded = loadSchedule(checkSchedule);
      const auto source = toBasis(stripBarriers(parseQasm(readFile(checkInput))));
      const bool ok = equivalentUpToPermutation(
          source, flatten(loaded.schedule), loaded.schedule.final_permutation);
      std::cout << (ok ? "equivalent" : "NOT equivalent") << "\n";
      return ok ? 0 : 1;
    }
    if (renderCmd->parsed()) {
      const auto n = cli::renderSchedule(loadSchedule(renderPath), renderDir);
      std::cout << n << " frames written to " << renderDir << "\n";
      return 0;
    }
  } catch (const QasmError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
