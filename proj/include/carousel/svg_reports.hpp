#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "carousel/hexagon_flow.hpp"

namespace carousel {

struct LevelSetPlotOptions {
    std::vector<double> levels; // each inside the closed-orbit energy window
    double step = 1e-3;
    int sample_stride = 10;
};

// 800x800 phase-plane picture: region boundary, critical point, and one closed
// polyline per level, traced by marching along the Hamiltonian flow.
std::string render_levelsets_svg(const LevelSetPlotOptions& opts);

// Phase portrait of an integrated orbit in the same frame.
std::string render_orbit_svg(const Orbit& orbit);

struct HexagonFramesResult {
    std::string svg;
    double max_side_error = 0.0;
    int frames = 0;
};

// Strip of hexagon snapshots at equal time fractions of the orbit; each frame
// carries a title annotation with its time and measured side lengths.
HexagonFramesResult render_hexagon_frames(const Orbit& orbit, int frames);

// Throws IOFailure when the file cannot be written.
void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace carousel
