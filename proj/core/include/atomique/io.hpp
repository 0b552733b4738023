#pragma once

#include "atomique/arch.hpp"
#include "atomique/fidelity.hpp"
#include "atomique/pipeline.hpp"
#include "atomique/stage_router.hpp"

#include <string>
#include <string_view>

namespace atomique {

inline constexpr int kSchemaVersion = 1;

/// Schedule document: geometry, placement, initial lanes and every stage.
std::string scheduleToJson(const Schedule& schedule, const ArchConfig& arch);

struct LoadedSchedule {
  ArchConfig arch;
  Schedule schedule;
};

/// Inverse of scheduleToJson. Throws std::runtime_error on malformed input.
LoadedSchedule scheduleFromJson(std::string_view json);
LoadedSchedule loadSchedule(const std::string& path);

/// Stats document with the fidelity breakdown and the placement.
std::string statsToJson(const StatsReport& stats, const Placement& placement);

/// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string readFile(const std::string& path);
void writeFile(const std::string& path, std::string_view content);

} // namespace atomique
