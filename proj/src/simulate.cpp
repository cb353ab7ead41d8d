#include "sgdec/simulate.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <memory>

namespace sgdec {

namespace {

struct ProbeWorker {
    ProbeConfig cfg;
    Series series;
    int vertex = 0; // for positional probes

    void init(const SpacetimeGrid& grid) {
        series.name = cfg.name;
        if (cfg.what == "energy" || cfg.what == "energy_window")
            series.columns = {"gradient", "kinetic", "potential", "field", "total"};
        else
            series.columns = {cfg.name};
        series.cols.resize(series.columns.size());
        vertex = grid.nearest_vertex(cfg.x);
    }
};

} // namespace

RunResult run_simulation(const SimulationConfig& cfg, const RunOptions& opts) {
    RunResult res;
    const SpacetimeGrid& grid = cfg.grid;
    res.coeffs = evaluate_coefficients(cfg.model, grid);

    const double steps_exact = cfg.T / grid.dt;
    std::int64_t nsteps = static_cast<std::int64_t>(std::floor(steps_exact + 1e-9));
    if (std::fabs(steps_exact - std::round(steps_exact)) > 1e-6)
        std::fprintf(stderr, "warning: T=%g is not a multiple of dt=%g; running %lld steps\n", cfg.T,
                     grid.dt, static_cast<long long>(nsteps));

    std::vector<ProbeWorker> probes;
    for (const auto& p : cfg.probes) {
        ProbeWorker w;
        w.cfg = p;
        w.init(grid);
        probes.push_back(std::move(w));
    }

    // snapshot schedule: uniform stride, always including the final step
    std::int64_t dump_every = 0;
    std::uint32_t dump_count = 0;
    std::unique_ptr<Sgf1Writer> sgf;
    std::vector<std::vector<double>> heat_rows;
    const bool writing = opts.write_outputs && !cfg.output.dir.empty();
    if (writing && cfg.output.snapshots > 0) {
        dump_every = std::max<std::int64_t>(1, nsteps / cfg.output.snapshots);
        dump_count = static_cast<std::uint32_t>(nsteps / dump_every + 1);
        std::filesystem::create_directories(cfg.output.dir);
        sgf = std::make_unique<Sgf1Writer>(cfg.output.dir + "/fields.sgf1", grid, dump_count);
    } else if (writing) {
        std::filesystem::create_directories(cfg.output.dir);
    }

    const auto t_start = std::chrono::steady_clock::now();

    if (opts.method == Method::dec) {
        FieldState init = seed_initial_layer(cfg.ic, grid, res.coeffs);
        Stepper stepper(grid, res.coeffs, cfg.boundary, std::move(init));
        stepper.set_parallel(opts.parallel);
        stepper.set_audit(opts.audit);

        auto sample = [&](std::int64_t j) {
            const FieldState& st = stepper.state();
            const double t = stepper.time();
            for (auto& w : probes) {
                if (j % w.cfg.stride != 0) continue;
                const auto& c = w.cfg;
                if (c.what == "energy" || c.what == "energy_window") {
                    // needs the next layer's edges; handled post-step below
                    continue;
                }
                double v = 0.0;
                if (c.what == "phi") v = st.varphi[w.vertex];
                else if (c.what == "phi_x") v = st.phi_x[std::min(w.vertex, grid.nx - 2)];
                else if (c.what == "phi_t") v = st.phi_t[w.vertex];
                else if (c.what == "J") v = res.coeffs.g * st.phi_t[w.vertex] / grid.dt;
                else if (c.what == "E") v = res.coeffs.g * st.varphi[w.vertex] + res.coeffs.F[w.vertex];
                else if (c.what == "rho") v = -res.coeffs.g * st.phi_x[std::min(w.vertex, grid.nx - 2)] / grid.dx;
                else if (c.what == "Q") v = -res.coeffs.g * (st.varphi[grid.nx - 1] - st.varphi[0]);
                else if (c.what == "residual") v = stepper.last_face_residual();
                else continue;
                w.series.t.push_back(t);
                w.series.cols[0].push_back(v);
            }
            if (cfg.track && j % cfg.track->stride == 0) {
                auto kinks = locate_kinks(grid, st.varphi, cfg.track->merge_radius);
                if (!kinks.empty()) {
                    // dominant: nearest to the previous sample, else the first
                    std::size_t pick = 0;
                    if (!res.track.empty()) {
                        double best = 1e300;
                        for (std::size_t k = 0; k < kinks.size(); ++k) {
                            const double dd = std::fabs(kinks[k].position - res.track.back().position);
                            if (dd < best) {
                                best = dd;
                                pick = k;
                            }
                        }
                    }
                    res.track.push_back({t, kinks[pick].position, kinks[pick].polarity});
                }
            }
            if (sgf && (j % dump_every == 0 || j == nsteps)) {
                sgf->append(t, st);
                if (cfg.output.heatmap == "phi") heat_rows.push_back(st.varphi);
                else if (cfg.output.heatmap == "phi_x") heat_rows.push_back(st.phi_x);
                else if (cfg.output.heatmap == "phi_t") heat_rows.push_back(st.phi_t);
            }
        };

        // slice-centered energies need the edges on both sides of a layer, so
        // energy probes sample layer j right after the step to j+1
        auto sample_energy = [&](std::int64_t j_prev, const std::vector<double>& varphi_prev,
                                 const std::vector<double>& phi_x_prev) {
            for (auto& w : probes) {
                if (w.cfg.what != "energy" && w.cfg.what != "energy_window") continue;
                if (j_prev % w.cfg.stride != 0) continue;
                const double t = stepper.time() - grid.dt;
                EnergyBreakdown e;
                if (w.cfg.what == "energy")
                    e = total_energy(grid, res.coeffs, varphi_prev, phi_x_prev,
                                     stepper.phi_t_prev_layer(), stepper.state().phi_t, t);
                else
                    e = windowed_energy(grid, res.coeffs, varphi_prev, phi_x_prev,
                                        stepper.phi_t_prev_layer(), stepper.state().phi_t, t, w.cfg.a,
                                        w.cfg.b);
                w.series.t.push_back(t);
                w.series.cols[0].push_back(e.gradient);
                w.series.cols[1].push_back(e.kinetic);
                w.series.cols[2].push_back(e.potential);
                w.series.cols[3].push_back(e.field);
                w.series.cols[4].push_back(e.total);
            }
        };

        const bool need_energy = [&] {
            for (const auto& w : probes)
                if (w.cfg.what == "energy" || w.cfg.what == "energy_window") return true;
            return false;
        }();
        std::vector<double> varphi_prev, phi_x_prev;

        sample(0);
        for (std::int64_t j = 0; j < nsteps; ++j) {
            if (need_energy) {
                varphi_prev = stepper.state().varphi;
                phi_x_prev = stepper.state().phi_x;
            }
            stepper.step();
            if (need_energy) sample_energy(j, varphi_prev, phi_x_prev);
            sample(j + 1);
        }
        res.worst_face_residual = stepper.worst_face_residual();
        res.final_state = stepper.state();
        res.steps = nsteps;
    } else if (opts.method == Method::euler) {
        EulerStepper stepper(grid, res.coeffs, cfg.boundary, cfg.ic);
        stepper.set_parallel(opts.parallel);
        auto sample = [&](std::int64_t j) {
            const auto& st = stepper.state();
            const double t = stepper.time();
            for (auto& w : probes) {
                if (j % w.cfg.stride != 0) continue;
                const auto& c = w.cfg;
                if (c.what == "energy") {
                    const EnergyBreakdown e = stepper.energy_backward(res.coeffs);
                    w.series.t.push_back(t);
                    w.series.cols[0].push_back(e.gradient);
                    w.series.cols[1].push_back(e.kinetic);
                    w.series.cols[2].push_back(e.potential);
                    w.series.cols[3].push_back(e.field);
                    w.series.cols[4].push_back(e.total);
                    continue;
                }
                double v = 0.0;
                if (c.what == "phi") v = st.varphi_curr[w.vertex];
                else if (c.what == "J")
                    v = res.coeffs.g * (st.varphi_curr[w.vertex] - st.varphi_prev[w.vertex]) / grid.dt;
                else if (c.what == "E") v = res.coeffs.g * st.varphi_curr[w.vertex] + res.coeffs.F[w.vertex];
                else if (c.what == "Q") v = -res.coeffs.g * (st.varphi_curr[grid.nx - 1] - st.varphi_curr[0]);
                else continue;
                w.series.t.push_back(t);
                w.series.cols[0].push_back(v);
            }
            if (cfg.track && j % cfg.track->stride == 0) {
                auto kinks = locate_kinks(grid, st.varphi_curr, cfg.track->merge_radius);
                if (!kinks.empty()) {
                    std::size_t pick = 0;
                    if (!res.track.empty()) {
                        double best = 1e300;
                        for (std::size_t k = 0; k < kinks.size(); ++k) {
                            const double dd = std::fabs(kinks[k].position - res.track.back().position);
                            if (dd < best) {
                                best = dd;
                                pick = k;
                            }
                        }
                    }
                    res.track.push_back({t, kinks[pick].position, kinks[pick].polarity});
                }
            }
        };
        sample(1);
        for (std::int64_t j = 1; j < nsteps; ++j) {
            stepper.step();
            sample(j + 1);
        }
        res.final_state_second = stepper.state();
        res.steps = nsteps;
    } else {
        CrankNicolson cn(grid, res.coeffs, cfg.boundary, cfg.ic);
        for (std::int64_t j = 1; j < nsteps; ++j) {
            cn.step();
            if (!cn.energy_ready()) continue;
            for (auto& w : probes) {
                if (w.cfg.what != "energy" || j % w.cfg.stride != 0) continue;
                const EnergyBreakdown e = cn.energy_centered(res.coeffs);
                w.series.t.push_back(e.t);
                w.series.cols[0].push_back(e.gradient);
                w.series.cols[1].push_back(e.kinetic);
                w.series.cols[2].push_back(e.potential);
                w.series.cols[3].push_back(e.field);
                w.series.cols[4].push_back(e.total);
            }
        }
        res.final_state_second = cn.state();
        res.steps = nsteps;
    }

    const auto t_end = std::chrono::steady_clock::now();
    res.wall_seconds = std::chrono::duration<double>(t_end - t_start).count();

    for (auto& w : probes) res.probes.push_back(std::move(w.series));

    if (writing) {
        for (const auto& s : res.probes)
            write_series_csv(cfg.output.dir + "/" + s.name + ".csv", s);
        if (!res.track.empty()) {
            Series ts;
            ts.name = "track";
            ts.columns = {"position", "polarity"};
            ts.cols.resize(2);
            for (const auto& s : res.track) {
                ts.t.push_back(s.t);
                ts.cols[0].push_back(s.position);
                ts.cols[1].push_back(s.polarity);
            }
            write_series_csv(cfg.output.dir + "/track.csv", ts);
        }
        if (sgf) sgf->close();
        if (!heat_rows.empty() && cfg.output.heatmap != "none")
            write_heatmap_ppm(cfg.output.dir + "/heatmap_" + cfg.output.heatmap + ".ppm", heat_rows);
    }
    return res;
}

std::vector<ProfileRow> profile_runtimes(const SimulationConfig& base, const std::vector<double>& dxs,
                                         double T, bool include_cn) {
    std::vector<ProfileRow> rows;
    for (double dx : dxs) {
        nlohmann::json doc = base.raw;
        doc["grid"]["dx"] = dx;
        doc["grid"]["dt"] = 0.8 * dx;
        doc["time"]["T"] = T;
        doc.erase("probes");
        doc.erase("track");
        doc.erase("output");
        SimulationConfig cfg = load_config(doc);

        RunOptions o;
        o.parallel = false;
        o.write_outputs = false;

        ProfileRow row;
        row.dx = dx;
        row.dt = 0.8 * dx;
        row.nx = cfg.grid.nx;
        row.nsteps = static_cast<std::int64_t>(std::floor(T / cfg.grid.dt + 1e-9));

        o.method = Method::dec;
        row.seconds_dec = run_simulation(cfg, o).wall_seconds;
        o.method = Method::euler;
        row.seconds_euler = run_simulation(cfg, o).wall_seconds;
        row.seconds_cn = -1.0;
        if (include_cn) {
            bool linear = true;
            for (const auto& c : evaluate_coefficients(cfg.model, cfg.grid).mu)
                if (c != 0.0) linear = false;
            if (linear) {
                o.method = Method::crank_nicolson;
                row.seconds_cn = run_simulation(cfg, o).wall_seconds;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace sgdec
