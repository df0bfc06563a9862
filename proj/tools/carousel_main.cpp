#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "carousel/boundary_tracer.hpp"
#include "carousel/cli_config.hpp"
#include "carousel/errors.hpp"
#include "carousel/hexagon_flow.hpp"
#include "carousel/period_engine.hpp"
#include "carousel/polygon_lab.hpp"
#include "carousel/rigidity_auditor.hpp"
#include "carousel/scalar_kernel.hpp"
#include "carousel/scan.hpp"
#include "carousel/svg_reports.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace carousel;

namespace {

struct RunConfig {
    std::string h_text = "2.42:2.59:50";
    double step = 1e-3;
    std::string out_dir = "out";
    std::string format = "csv";
    std::string curve = "circle:2";
    int n = 6;
    int kmax = 10;
    int mmax = 10;
    long seed = 12345;
    int threads = 0;
    int grid_points = 1001;
    int samples = 100;
    double dt = 1e-5;
    int frames = 8;
    double x0 = 2.0;
    double y0 = 2.2;
    double duration = 0.0; // 0 = one period
    std::string levels_text;
};

fs::path prepare_out(const RunConfig& cfg) {
    fs::path dir(cfg.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IOFailure("cannot create output directory " + dir.string());
    return dir;
}

std::vector<double> energy_values(const RunConfig& cfg) {
    const ClampedGrid grid = clamped_energy_grid(parse_grid(cfg.h_text));
    if (grid.clamped) {
        std::cerr << "warning: H grid clamped into the open window (" << fmt(kOrbitEnergyMin)
                  << ", " << fmt(kOrbitEnergyMax) << ")\n";
    }
    return grid.values;
}

void emit(const json& summary) { std::cout << summary.dump() << "\n"; }

int cmd_period_scan(const RunConfig& cfg) {
    const std::vector<double> grid = energy_values(cfg);
    const auto rows = scan::period_scan_parallel(grid, cfg.grid_points);
    const fs::path dir = prepare_out(cfg);

    double t_min = rows.empty() ? 0.0 : rows.front().t;
    double t_max = t_min;
    for (const auto& r : rows) {
        t_min = std::min(t_min, r.t);
        t_max = std::max(t_max, r.t);
    }

    fs::path file;
    if (cfg.format == "json") {
        json out = json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& r = rows[i];
            int sign = 0;
            if (i > 0) sign = r.t > rows[i - 1].t ? 1 : (r.t < rows[i - 1].t ? -1 : 0);
            out.push_back({{"H", r.h},
                           {"u_minus", r.u_minus},
                           {"u_plus", r.u_plus},
                           {"T", r.t},
                           {"quadrature_error", r.quadrature_error},
                           {"r_min", r.r_min},
                           {"r_max", r.r_max},
                           {"lower_margin", r.lower_margin},
                           {"upper_margin", r.upper_margin},
                           {"dT_sign", sign}});
        }
        file = dir / "period_scan.json";
        write_text_file(file, out.dump());
    } else {
        std::string csv = "H,u_minus,u_plus,T,quadrature_error,r_min,r_max,lower_margin,upper_margin\n";
        for (const auto& r : rows) {
            csv += fmt(r.h) + "," + fmt(r.u_minus) + "," + fmt(r.u_plus) + "," + fmt(r.t) + "," +
                   fmt(r.quadrature_error) + "," + fmt(r.r_min) + "," + fmt(r.r_max) + "," +
                   fmt(r.lower_margin) + "," + fmt(r.upper_margin) + "\n";
        }
        file = dir / "period_scan.csv";
        write_text_file(file, csv);
    }
    emit({{"command", "period-scan"},
          {"rows", rows.size()},
          {"T_min", t_min},
          {"T_max", t_max},
          {"file", file.generic_string()}});
    return 0;
}

int cmd_orbit(const RunConfig& cfg) {
    const AngleState s0{cfg.x0, cfg.y0};
    const EnergyLevel h = hamiltonian(s0);
    double duration = cfg.duration;
    if (duration <= 0.0) {
        duration = (h > kOrbitEnergyMin && h < kOrbitEnergyMax) ? period(h).t : 10.0;
    }
    OrbitOptions opts;
    opts.step = cfg.step;
    const Orbit orbit = integrate_orbit(s0, duration, opts);

    const fs::path dir = prepare_out(cfg);
    std::string csv = "t,x,y\n";
    for (const OrbitSample& sample : orbit.samples) {
        csv += fmt(sample.t) + "," + fmt(sample.state.x) + "," + fmt(sample.state.y) + "\n";
    }
    const fs::path csv_file = dir / "orbit.csv";
    write_text_file(csv_file, csv);
    const fs::path svg_file = dir / "orbit.svg";
    write_text_file(svg_file, render_orbit_svg(orbit));
    const HexagonFramesResult frames = render_hexagon_frames(orbit, cfg.frames);
    const fs::path frames_file = dir / "hexagon_frames.svg";
    write_text_file(frames_file, frames.svg);

    emit({{"command", "orbit"},
          {"H", h},
          {"duration", duration},
          {"samples", orbit.samples.size()},
          {"H_max_drift", orbit.h_max_drift},
          {"frame_side_error", frames.max_side_error},
          {"files", {csv_file.generic_string(), svg_file.generic_string(),
                     frames_file.generic_string()}}});
    return 0;
}

int cmd_reconstruct(const RunConfig& cfg, bool use_h) {
    AngleState s0{cfg.x0, cfg.y0};
    EnergyLevel h = 0.0;
    if (use_h) {
        const GridSpec spec = parse_grid(cfg.h_text);
        h = spec.lo;
        if (kOrbitEnergyMax - h <= 1e-9) {
            s0 = kRegularState;
        } else {
            const TurningPoints tp = turning_points(h);
            s0 = {tp.u_minus, tp.u_minus};
        }
    } else {
        h = hamiltonian(s0);
    }
    double duration = cfg.duration;
    if (duration <= 0.0) {
        const StateVelocity f = vector_field(s0);
        const bool fixed_point = std::sqrt(f.dx * f.dx + f.dy * f.dy) < 1e-12;
        duration = fixed_point ? 2.2 : 1.7 * period(hamiltonian(s0)).t;
    }
    const VertexFlow flow = trace(s0, duration, cfg.step);

    const fs::path dir = prepare_out(cfg);
    std::string csv = "t,i,x,y\n";
    for (std::size_t k = 0; k < flow.samples.size(); k += 10) {
        const TraceSample& sample = flow.samples[k];
        for (int i = 0; i < 6; ++i) {
            csv += fmt(sample.t) + "," + std::to_string(i + 1) + "," + fmt(sample.v[i].x) + "," +
                   fmt(sample.v[i].y) + "\n";
        }
    }
    const fs::path file = dir / "trace.csv";
    write_text_file(file, csv);

    emit({{"command", "reconstruct"},
          {"H", hamiltonian(flow.samples.front().state)},
          {"return_time", flow.return_time},
          {"closure_defect", flow.closure_defect},
          {"next_slot_defect", flow.next_slot_defect},
          {"radius_residual", flow.radius_residual},
          {"max_side_error", flow.max_side_error},
          {"slot_time", flow.slot_time},
          {"swept_perimeter", 6.0 * flow.slot_time},
          {"file", file.generic_string()}});
    return 0;
}

int cmd_closure_scan(const RunConfig& cfg) {
    const std::vector<double> grid = energy_values(cfg);
    const auto rows = scan::closure_scan_parallel(grid, cfg.step);
    const fs::path dir = prepare_out(cfg);

    fs::path file;
    if (cfg.format == "json") {
        json out = json::array();
        for (const auto& r : rows) {
            out.push_back({{"H", r.h},
                           {"closure_defect", r.closure_defect},
                           {"radius_residual", r.radius_residual}});
        }
        file = dir / "closure_scan.json";
        write_text_file(file, out.dump());
    } else {
        std::string csv = "H,closure_defect,radius_residual\n";
        for (const auto& r : rows) {
            csv += fmt(r.h) + "," + fmt(r.closure_defect) + "," + fmt(r.radius_residual) + "\n";
        }
        file = dir / "closure_scan.csv";
        write_text_file(file, csv);
    }
    emit({{"command", "closure-scan"}, {"rows", rows.size()}, {"file", file.generic_string()}});
    return 0;
}

int cmd_verify_bounds(const RunConfig& cfg) {
    const std::vector<double> grid = energy_values(cfg);
    const auto audits = scan::bound_audit_scan_parallel(grid, cfg.grid_points);
    const fs::path dir = prepare_out(cfg);

    bool all_pass = true;
    double min_lower = std::numeric_limits<double>::infinity();
    double min_upper = min_lower;
    double min_curvature = min_lower;
    for (const auto& a : audits) {
        all_pass = all_pass && a.pass;
        min_lower = std::min(min_lower, a.lower_margin);
        min_upper = std::min(min_upper, a.upper_margin);
        min_curvature = std::min(min_curvature, a.curvature_margin);
    }

    fs::path file;
    if (cfg.format == "json") {
        json out = json::array();
        for (const auto& a : audits) {
            out.push_back({{"H", a.h},
                           {"grid", a.grid},
                           {"lower_margin", a.lower_margin},
                           {"upper_margin", a.upper_margin},
                           {"curvature_margin", a.curvature_margin},
                           {"pass", a.pass}});
        }
        file = dir / "bounds.json";
        write_text_file(file, out.dump());
    } else {
        std::string csv = "H,lower_margin,upper_margin,curvature_margin,pass\n";
        for (const auto& a : audits) {
            csv += fmt(a.h) + "," + fmt(a.lower_margin) + "," + fmt(a.upper_margin) + "," +
                   fmt(a.curvature_margin) + "," + (a.pass ? "1" : "0") + "\n";
        }
        file = dir / "bounds.csv";
        write_text_file(file, csv);
    }
    emit({{"command", "verify-bounds"},
          {"rows", audits.size()},
          {"min_lower_margin", min_lower},
          {"min_upper_margin", min_upper},
          {"min_curvature_margin", min_curvature},
          {"pass", all_pass},
          {"file", file.generic_string()}});
    return all_pass ? 0 : 1;
}

int cmd_verify_proof(const RunConfig& cfg) {
    const auto rows = feasibility_scan(cfg.kmax, cfg.mmax);
    const PerimeterBounds p = perimeter_bounds();
    bool any_feasible = false;
    json row_list = json::array();
    for (const auto& r : rows) {
        any_feasible = any_feasible || r.feasible;
        row_list.push_back({{"k", r.k}, {"m", r.m}, {"feasible", r.feasible}, {"reason", r.reason}});
    }
    json report = {{"perimeter_bounds", {p.low, p.high}},
                   {"T_bounds", {kPeriodLowerBound, kPeriodUpperBound}},
                   {"rows", row_list},
                   {"conclusion", any_feasible ? "feasible_pairs_found" : "empty_feasible_set"}};
    const fs::path dir = prepare_out(cfg);
    const fs::path file = dir / "proof.json";
    write_text_file(file, report.dump());
    std::cout << report.dump() << "\n";
    return any_feasible ? 1 : 0;
}

int cmd_levelsets(const RunConfig& cfg) {
    LevelSetPlotOptions opts;
    if (cfg.levels_text.empty()) {
        opts.levels = {kOrbitEnergyMin + 0.01, 2.45, 2.5, 2.55, kOrbitEnergyMax - 0.005};
    } else {
        opts.levels = parse_levels(cfg.levels_text);
    }
    opts.step = cfg.step;
    const std::string svg = render_levelsets_svg(opts);
    const fs::path dir = prepare_out(cfg);
    const fs::path file = dir / "levelsets.svg";
    write_text_file(file, svg);
    emit({{"command", "levelsets"}, {"levels", opts.levels.size()}, {"file", file.generic_string()}});
    return 0;
}

int cmd_carousel_defect(const RunConfig& cfg) {
    const auto curve = make_curve(cfg.curve);
    const double defect = carousel_defect(*curve, cfg.n, cfg.samples);
    const double parallel_defect = midpoint_parallel_defect(*curve, cfg.n, 0.0, cfg.dt);
    const InscribedPolygon poly = inscribed_polygon(*curve, 0.0, cfg.n);
    double mean_side = 0.0;
    for (double s : poly.sides) mean_side += s;
    mean_side /= static_cast<double>(poly.sides.size());

    const fs::path dir = prepare_out(cfg);
    std::string csv = "i,x,y\n";
    for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
        csv += std::to_string(i + 1) + "," + fmt(poly.vertices[i].x) + "," +
               fmt(poly.vertices[i].y) + "\n";
    }
    const fs::path file = dir / "polygon.csv";
    write_text_file(file, csv);

    emit({{"command", "carousel-defect"},
          {"curve", cfg.curve},
          {"n", cfg.n},
          {"t_samples", cfg.samples},
          {"carousel_defect", defect},
          {"midpoint_parallel_defect", parallel_defect},
          {"mean_side", mean_side},
          {"file", file.generic_string()}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Numerical laboratory for the hexagonal floating-body carousel"};
    app.set_help_flag("--help", "print help"); // frees -h; the energy flag is --h
    app.set_config("--config", "", "key=value config file (flags win)");
    app.require_subcommand(1);

    app.add_option("--h", cfg.h_text, "energy grid lo:hi:count (or a single value)");
    app.add_option("--step", cfg.step, "integration step");
    app.add_option("--out", cfg.out_dir, "output directory");
    app.add_option("--format", cfg.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--curve", cfg.curve, "curve spec circle:R or ellipse:a,b");
    app.add_option("--n", cfg.n, "polygon vertex count");
    app.add_option("--kmax", cfg.kmax, "max rotation half-order");
    app.add_option("--mmax", cfg.mmax, "max period multiplier");
    app.add_option("--seed", cfg.seed, "seed for randomized sweeps");
    app.add_option("--threads", cfg.threads, "worker threads (0 = library default)");
    app.add_option("--grid-points", cfg.grid_points, "u-grid points per bound audit");
    app.add_option("--samples", cfg.samples, "t samples for carousel diagnostics");
    app.add_option("--dt", cfg.dt, "finite-difference spacing for midpoint velocities");
    app.add_option("--frames", cfg.frames, "hexagon snapshot count");
    app.add_option("--x0", cfg.x0, "initial angle x");
    app.add_option("--y0", cfg.y0, "initial angle y");
    app.add_option("--duration", cfg.duration, "integration duration (0 = one period)");
    app.add_option("--levels", cfg.levels_text, "comma-separated H levels");

    CLI::App* sub_period = app.add_subcommand("period-scan", "period and bound table over an H grid");
    CLI::App* sub_orbit = app.add_subcommand("orbit", "integrate one orbit; phase portrait + frames");
    CLI::App* sub_reconstruct =
        app.add_subcommand("reconstruct", "trace the six vertex flows for one energy");
    CLI::App* sub_closure = app.add_subcommand("closure-scan", "closure defect over an H grid");
    CLI::App* sub_bounds = app.add_subcommand("verify-bounds", "audit the parabolic bounds");
    CLI::App* sub_proof = app.add_subcommand("verify-proof", "feasibility scan of (k, m) pairs");
    CLI::App* sub_levels = app.add_subcommand("levelsets", "level curves of the conserved quantity");
    CLI::App* sub_defect = app.add_subcommand("carousel-defect", "inscribed-polygon diagnostics");
    for (CLI::App* sub : {sub_period, sub_orbit, sub_reconstruct, sub_closure, sub_bounds,
                          sub_proof, sub_levels, sub_defect}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    scan::set_threads(cfg.threads);

    try {
        if (sub_period->parsed()) return cmd_period_scan(cfg);
        if (sub_orbit->parsed()) return cmd_orbit(cfg);
        if (sub_reconstruct->parsed()) {
            const bool use_h = app.count("--h") > 0;
            return cmd_reconstruct(cfg, use_h);
        }
        if (sub_closure->parsed()) return cmd_closure_scan(cfg);
        if (sub_bounds->parsed()) return cmd_verify_bounds(cfg);
        if (sub_proof->parsed()) return cmd_verify_proof(cfg);
        if (sub_levels->parsed()) return cmd_levelsets(cfg);
        if (sub_defect->parsed()) return cmd_carousel_defect(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
