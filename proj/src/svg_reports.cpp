#include "carousel/svg_reports.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "carousel/errors.hpp"
#include "carousel/period_engine.hpp"
#include "carousel/polygon_lab.hpp"

namespace carousel {

namespace {

constexpr int kCanvas = 800;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

// Phase-plane frame: the admissible triangle with a small pad, y up.
struct Frame {
    double lo = kPi / 2.0 - 0.12;
    double hi = kPi + 0.12;

    double px(double x) const { return (x - lo) / (hi - lo) * kCanvas; }
    double py(double y) const { return kCanvas - (y - lo) / (hi - lo) * kCanvas; }
};

void append_polyline(std::string& svg, const std::vector<Vec2>& pts, const Frame& f,
                     const std::string& stroke, const std::string& title) {
    svg += "<polyline fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"1.5\" points=\"";
    for (const Vec2& p : pts) {
        svg += num(f.px(p.x)) + "," + num(f.py(p.y)) + " ";
    }
    svg += "\">";
    if (!title.empty()) svg += "<title>" + title + "</title>";
    svg += "</polyline>\n";
}

void append_region_boundary(std::string& svg, const Frame& f) {
    const double a = kPi / 2.0;
    const double b = kPi;
    svg += "<polygon fill=\"none\" stroke=\"#444444\" stroke-width=\"1.0\" points=\"";
    svg += num(f.px(a)) + "," + num(f.py(a)) + " ";
    svg += num(f.px(b)) + "," + num(f.py(a)) + " ";
    svg += num(f.px(a)) + "," + num(f.py(b));
    svg += "\"><title>region boundary</title></polygon>\n";
}

void append_critical_point(std::string& svg, const Frame& f) {
    svg += "<circle cx=\"" + num(f.px(kRegularState.x)) + "\" cy=\"" + num(f.py(kRegularState.y)) +
           "\" r=\"3.000000\" fill=\"#cc2222\"><title>critical point</title></circle>\n";
}

std::string svg_open() {
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 800\">\n"
           "<rect width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n";
}

}  // namespace

std::string render_levelsets_svg(const LevelSetPlotOptions& opts) {
    for (double level : opts.levels) {
        if (!(level > kOrbitEnergyMin && level < kOrbitEnergyMax)) {
            throw std::invalid_argument("render_levelsets_svg: level outside the energy window");
        }
    }
    const Frame frame;
    std::string svg = svg_open();
    append_region_boundary(svg, frame);
    for (double level : opts.levels) {
        // The flow preserves H, so the orbit through the section point traces
        // exactly this level curve.
        const TurningPoints tp = turning_points(level);
        const AngleState start{tp.u_minus, tp.u_minus};
        std::vector<Vec2> pts{{start.x, start.y}};
        AngleState s = start;
        double t = 0.0;
        int step_index = 0;
        while (t < 12.0) {
            s = flow_step(s, opts.step);
            t += opts.step;
            ++step_index;
            if (step_index % opts.sample_stride == 0) {
                pts.push_back({s.x, s.y});
            }
            const double dx = s.x - start.x;
            const double dy = s.y - start.y;
            if (t > 1.0 && std::sqrt(dx * dx + dy * dy) < 2.0 * opts.step) {
                break;
            }
        }
        pts.push_back({start.x, start.y});
        append_polyline(svg, pts, frame, "#2255cc", "H=" + num(level));
    }
    append_critical_point(svg, frame);
    svg += "</svg>\n";
    return svg;
}

std::string render_orbit_svg(const Orbit& orbit) {
    const Frame frame;
    std::string svg = svg_open();
    append_region_boundary(svg, frame);
    std::vector<Vec2> pts;
    pts.reserve(orbit.samples.size());
    for (const OrbitSample& sample : orbit.samples) {
        pts.push_back({sample.state.x, sample.state.y});
    }
    append_polyline(svg, pts, frame, "#2255cc", "orbit");
    if (!pts.empty()) {
        svg += "<circle cx=\"" + num(frame.px(pts.front().x)) + "\" cy=\"" +
               num(frame.py(pts.front().y)) +
               "\" r=\"3.000000\" fill=\"#22aa22\"><title>start</title></circle>\n";
    }
    append_critical_point(svg, frame);
    svg += "</svg>\n";
    return svg;
}

HexagonFramesResult render_hexagon_frames(const Orbit& orbit, int frames) {
    if (frames < 1 || orbit.samples.empty()) {
        throw std::invalid_argument("render_hexagon_frames: need frames >= 1 and a nonempty orbit");
    }
    const double duration = orbit.samples.back().t;
    const int cell = 150;
    const double scale = 27.0;

    HexagonFramesResult out;
    out.frames = frames;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 %d %d\">\n",
                  cell * frames, cell);
    out.svg = buf;
    out.svg += "<rect width=\"" + std::to_string(cell * frames) + "\" height=\"" +
               std::to_string(cell) + "\" fill=\"#ffffff\"/>\n";

    for (int j = 0; j < frames; ++j) {
        const double target = duration * j / frames;
        // nearest recorded sample
        const OrbitSample* pick = &orbit.samples.front();
        for (const OrbitSample& sample : orbit.samples) {
            if (std::abs(sample.t - target) < std::abs(pick->t - target)) pick = &sample;
        }
        const double x3 = 2.0 * kPi - pick->state.x - pick->state.y;
        Hexagon hex = hexagon_from_angles(
            {pick->state.x, pick->state.y, x3, pick->state.x, pick->state.y, x3});
        const Vec2 center = midpoint(hex.v[0], hex.v[3]);

        std::string title = "t=" + num(pick->t) + " sides=";
        const std::array<double, 6> sides = hex.side_lengths();
        for (int i = 0; i < 6; ++i) {
            out.max_side_error = std::max(out.max_side_error, std::abs(sides[i] - 2.0));
            title += num(sides[i]);
            if (i < 5) title += ",";
        }

        out.svg += "<polygon fill=\"none\" stroke=\"#2255cc\" stroke-width=\"1.5\" points=\"";
        for (int i = 0; i < 6; ++i) {
            const Vec2 p = hex.v[i] - center;
            out.svg += num(cell * j + cell / 2.0 + scale * p.x) + "," +
                       num(cell / 2.0 - scale * p.y) + (i < 5 ? " " : "");
        }
        out.svg += "\"><title>" + title + "</title></polygon>\n";
    }
    out.svg += "</svg>\n";
    return out;
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IOFailure("cannot open for writing: " + path.string());
    }
    out << content;
    out.flush();
    if (!out) {
        throw IOFailure("write failed: " + path.string());
    }
}

}  // namespace carousel
