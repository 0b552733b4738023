#include "render.hpp"

#include <array>
#include <cstdio>
#include <filesystem>

namespace atomique::cli {

namespace {

constexpr double kScale = 2.0; // px per micrometre
constexpr double kMargin = 20.0;
constexpr std::array<const char*, 6> kPalette{"#d62728", "#1f77b4", "#2ca02c",
                                              "#9467bd", "#ff7f0e", "#17becf"};

std::string fmt(const char* pattern, double a, double b, double c = 0.0,
                double d = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b, c, d);
  return buf;
}

} // namespace

std::string renderStageSvg(const LoadedSchedule& loaded, std::size_t stage) {
  const auto& arch = loaded.arch;
  const auto& s = loaded.schedule;
  const auto& st = s.stages.at(stage);
  const auto [rlo, rhi] = arch.rowLaneBounds();
  const auto [clo, chi] = arch.colLaneBounds();
  const double half = arch.halfPitch();
  const double x0 = clo * half;
  const double y0 = rlo * half;
  const double width = (chi - clo) * half * kScale + 2 * kMargin;
  const double height = (rhi - rlo) * half * kScale + 2 * kMargin;
  auto px = [&](double x) { return (x - x0) * kScale + kMargin; };
  auto py = [&](double y) { return (y - y0) * kScale + kMargin; };

  const auto atoms = atomPositions(arch, s.placement, st.lanes);
  std::string svg = fmt("<svg xmlns=\"http://www.w3.org/2000/svg\" "
                        "width=\"%.0f\" height=\"%.0f\">\n",
                        width, height);
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  char title[96];
  std::snprintf(title, sizeof title,
                "<text x=\"4\" y=\"14\" font-size=\"12\">stage %zu: %zu CZ"
                "</text>\n",
                stage, st.cz.size());
  svg += title;
  for (const auto& [a, b] : st.cz) {
    const auto& pa = atoms[a];
    const auto& pb = atoms[b];
    svg += fmt("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
               "stroke=\"black\" stroke-width=\"3\"/>\n",
               px(pa.x), py(pa.y), px(pb.x), py(pb.y));
  }
  for (const auto& atom : atoms) {
    const char* color =
        atom.array == 0 ? "#7f7f7f"
                        : kPalette[static_cast<std::size_t>(atom.array - 1) %
                                   kPalette.size()];
    svg += fmt("<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.1f\" ", px(atom.x),
               py(atom.y), atom.array == 0 ? 4.0 : 3.0);
    svg += std::string("fill=\"") + color + "\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

std::size_t renderSchedule(const LoadedSchedule& loaded,
                           const std::string& dir) {
  std::filesystem::create_directories(dir);
  const auto n = loaded.schedule.stages.size();
  for (std::size_t i = 0; i < n; ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "stage_%03zu.svg", i);
    writeFile((std::filesystem::path(dir) / name).string(),
              renderStageSvg(loaded, i));
  }
  return n;
}

} // namespace atomique::cli
