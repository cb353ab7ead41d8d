// Command-line front end: run simulations, sweeps, method comparisons,
// runtime profiles, and offline diagnostics over SGF1 dumps.
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "sgdec/config.hpp"
#include "sgdec/diagnostics.hpp"
#include "sgdec/output.hpp"
#include "sgdec/simulate.hpp"
#include "sgdec/sweep.hpp"

using namespace sgdec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitBlowup = 2;
constexpr int kExitIo = 3;

SimulationConfig resolve_config(const std::string& config_path, const std::string& preset,
                                const std::vector<std::string>& overrides) {
    nlohmann::json doc;
    if (!preset.empty())
        doc = preset_json(preset);
    else
        doc = nlohmann::json::parse(std::ifstream(config_path));
    doc = apply_overrides(doc, overrides);
    return load_config(doc);
}

int cmd_run(const std::string& config_path, const std::string& preset, const std::string& out_dir,
            const std::vector<std::string>& overrides, const std::string& method_name, bool audit) {
    SimulationConfig cfg = resolve_config(config_path, preset, overrides);
    if (!out_dir.empty()) cfg.output.dir = out_dir;
    RunOptions o;
    o.audit = audit;
    if (method_name == "euler") o.method = Method::euler;
    else if (method_name == "cn") o.method = Method::crank_nicolson;
    RunResult res = run_simulation(cfg, o);
    std::printf("%s: %lld steps in %.2fs", cfg.name.c_str(), static_cast<long long>(res.steps),
                res.wall_seconds);
    if (audit) std::printf(", worst face residual %.3e", res.worst_face_residual);
    std::printf("\n");
    if (!res.track.empty())
        std::printf("final kink: x=%.3f polarity=%+d\n", res.track.back().position,
                    res.track.back().polarity);
    return kExitOk;
}

int cmd_presets(bool as_json) {
    for (const auto& name : preset_names()) {
        if (as_json)
            std::cout << preset_json(name).dump(2) << "\n";
        else
            std::printf("%-28s %s\n", name.c_str(), preset_description(name).c_str());
    }
    return kExitOk;
}

int cmd_sweep(const std::string& spec_path, const std::string& out_dir) {
    nlohmann::json doc = nlohmann::json::parse(std::ifstream(spec_path));
    SweepSpec spec = parse_sweep(doc);
    if (!out_dir.empty()) spec.out_dir = out_dir;
    SweepReport report = run_sweep(spec);
    std::size_t failed = 0;
    for (const auto& r : report.rows) failed += r.failed ? 1 : 0;
    std::printf("sweep: %zu points (%zu from cache, %zu failed)\n", report.rows.size(),
                report.completed_from_cache, failed);
    if (!spec.out_dir.empty()) {
        std::filesystem::create_directories(spec.out_dir);
        write_sweep_csv(spec.out_dir + "/report.csv", report, spec);
        std::printf("report: %s/report.csv\n", spec.out_dir.c_str());
    }
    return kExitOk;
}

int cmd_compare(const std::string& preset, const std::string& methods, const std::string& out_dir,
                const std::vector<std::string>& overrides) {
    SimulationConfig cfg = resolve_config("", preset, overrides);
    std::filesystem::create_directories(out_dir);
    std::stringstream ms(methods);
    std::string m;
    while (std::getline(ms, m, ',')) {
        RunOptions o;
        o.write_outputs = false;
        if (m == "dec") o.method = Method::dec;
        else if (m == "euler") o.method = Method::euler;
        else if (m == "cn") o.method = Method::crank_nicolson;
        else {
            std::fprintf(stderr, "unknown method '%s'\n", m.c_str());
            return kExitConfig;
        }
        RunResult res = run_simulation(cfg, o);
        for (const auto& s : res.probes) {
            Series named = s;
            named.name = m + "_" + s.name;
            write_series_csv(out_dir + "/" + named.name + ".csv", named);
        }
        std::printf("%-6s %lld steps in %6.2fs\n", m.c_str(), static_cast<long long>(res.steps),
                    res.wall_seconds);
    }
    return kExitOk;
}

int cmd_profile(const std::string& preset, const std::vector<double>& dxs, double T, bool with_cn) {
    SimulationConfig base = load_config(preset_json(preset));
    auto rows = profile_runtimes(base, dxs, T, with_cn);
    std::printf("%8s %8s %10s %12s %12s %12s\n", "dx", "nx", "steps", "dec [s]", "euler [s]", "cn [s]");
    for (const auto& r : rows) {
        std::printf("%8.3f %8lld %10lld %12.3f %12.3f ", r.dx, static_cast<long long>(r.nx),
                    static_cast<long long>(r.nsteps), r.seconds_dec, r.seconds_euler);
        if (r.seconds_cn >= 0.0)
            std::printf("%12.3f\n", r.seconds_cn);
        else
            std::printf("%12s\n", "-");
    }
    // log-log scaling slope in total gridpoints
    if (rows.size() >= 2) {
        std::vector<double> lx, ld, le;
        for (const auto& r : rows) {
            lx.push_back(std::log(static_cast<double>(r.nx) * static_cast<double>(r.nsteps)));
            ld.push_back(std::log(r.seconds_dec));
            le.push_back(std::log(r.seconds_euler));
        }
        std::printf("scaling slope (log time vs log gridpoints): dec %.3f, euler %.3f\n",
                    fit_line(lx, ld).slope, fit_line(lx, le).slope);
    }
    return kExitOk;
}

int cmd_diagnose(const std::string& sgf_path, const std::string& out_dir) {
    Sgf1File f = read_sgf1(sgf_path);
    PhysicsModel model; // offline pass knows no model; plain wave-medium diagnostics
    Coefficients coeffs = evaluate_coefficients(model, f.grid);
    Series s;
    s.name = "diagnostics";
    s.columns = {"gradient", "kinetic_backward", "potential", "winding", "kinks"};
    s.cols.resize(5);
    for (std::size_t k = 0; k < f.times.size(); ++k) {
        // only the trailing temporal edge is stored, so the kinetic estimate
        // here is the backward-difference one
        double grad = 0.0, kin = 0.0, pot = 0.0;
        for (int i = 0; i + 1 < f.grid.nx; ++i) grad += f.phi_x[k][i] * f.phi_x[k][i] / (2.0 * f.grid.dx);
        for (int i = 0; i < f.grid.nx; ++i) {
            const double v = f.phi_t[k][i] / f.grid.dt;
            kin += f.grid.dx * v * v / 2.0;
            pot += f.grid.dx * (1.0 - std::cos(f.varphi[k][i]));
        }
        const double winding = (f.varphi[k][f.grid.nx - 1] - f.varphi[k][0]) / (2.0 * std::numbers::pi);
        s.t.push_back(f.times[k]);
        s.cols[0].push_back(grad);
        s.cols[1].push_back(kin);
        s.cols[2].push_back(pot);
        s.cols[3].push_back(winding);
        s.cols[4].push_back(static_cast<double>(locate_kinks(f.grid, f.varphi[k]).size()));
    }
    std::filesystem::create_directories(out_dir);
    write_series_csv(out_dir + "/diagnostics.csv", s);
    std::printf("%zu snapshots, nx=%d, dx=%g, dt=%g -> %s/diagnostics.csv\n", f.times.size(), f.grid.nx,
                f.grid.dx, f.grid.dt, out_dir.c_str());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"structure-preserving space-time solver for sine-Gordon-family wave equations"};
    app.require_subcommand(1);

    std::string config_path, preset, out_dir = "out", methods = "dec,euler", sgf_path, spec_path;
    std::string method = "dec";
    std::vector<std::string> overrides;
    std::vector<double> dxs = {0.05, 0.1, 0.2, 0.4};
    double profile_T = 2000.0;
    bool as_json = false, audit = false, with_cn = false;

    auto* run = app.add_subcommand("run", "run one simulation");
    run->add_option("config", config_path, "config JSON path");
    run->add_option("--preset", preset, "preset name instead of a config file");
    run->add_option("--out", out_dir, "output directory");
    run->add_option("--override", overrides, "path=value config overrides");
    run->add_option("--method", method, "dec | euler | cn")->default_val("dec");
    run->add_flag("--audit", audit, "per-step face-residual audit");

    auto* presets = app.add_subcommand("presets", "list the preset catalog");
    presets->add_flag("--json", as_json, "emit full config documents");

    auto* sweep = app.add_subcommand("sweep", "run a parameter sweep");
    sweep->add_option("spec", spec_path, "sweep spec JSON")->required();
    sweep->add_option("--out", out_dir, "output directory (enables resume)");

    auto* compare = app.add_subcommand("compare", "run several methods on one config");
    compare->add_option("--preset", preset, "preset name")->required();
    compare->add_option("--methods", methods, "comma list of dec,euler,cn");
    compare->add_option("--out", out_dir, "output directory");
    compare->add_option("--override", overrides, "path=value config overrides");

    auto* profile = app.add_subcommand("profile", "integrator runtime table");
    profile->add_option("--preset", preset, "preset name")->default_val("bare_fluxon");
    profile->add_option("--resolutions", dxs, "dx values");
    profile->add_option("--T", profile_T, "simulated duration");
    profile->add_flag("--cn", with_cn, "include Crank-Nicolson when the model is linear");

    auto* diagnose = app.add_subcommand("diagnose", "recompute diagnostics from an SGF1 dump");
    diagnose->add_option("file", sgf_path, "SGF1 file")->required();
    diagnose->add_option("--out", out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitConfig : kExitOk;
    }

    try {
        if (run->parsed()) {
            if (config_path.empty() && preset.empty()) {
                std::fprintf(stderr, "run: need a config file or --preset\n");
                return kExitConfig;
            }
            return cmd_run(config_path, preset, out_dir, overrides, method, audit);
        }
        if (presets->parsed()) return cmd_presets(as_json);
        if (sweep->parsed()) return cmd_sweep(spec_path, out_dir);
        if (compare->parsed()) return cmd_compare(preset, methods, out_dir, overrides);
        if (profile->parsed()) return cmd_profile(preset, dxs, profile_T, with_cn);
        if (diagnose->parsed()) return cmd_diagnose(sgf_path, out_dir);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return kExitConfig;
    } catch (const BlowupError& e) {
        std::fprintf(stderr, "numerical blow-up: %s\n", e.what());
        return kExitBlowup;
    } catch (const IoError& e) {
        std::fprintf(stderr, "I/O error: %s\n", e.what());
        return kExitIo;
    } catch (const nlohmann::json::exception& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    }
    return kExitOk;
}
