#pragma once

#include "atomique/io.hpp"

#include <cstddef>
#include <string>

namespace atomique::cli {

/// SVG frame of one stage: SLM atoms, AOD atoms colored by array and a
/// line per executed CZ. The viewport covers the full lane range.
std::string renderStageSvg(const LoadedSchedule& loaded, std::size_t stage);

/// Writes stage_000.svg, stage_001.svg, ... into `dir`; returns the count.
std::size_t renderSchedule(const LoadedSchedule& loaded, const std::string& dir);

} // namespace atomique::cli
