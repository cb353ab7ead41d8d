#include "sgdec/sweep.hpp"

#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <thread>

#include "sgdec/diagnostics.hpp"
#include "sgdec/output.hpp"

namespace sgdec {

using nlohmann::json;

std::uint64_t content_hash(const json& doc) {
    const std::string s = doc.dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

void set_path(json& doc, const std::string& path, const json& value) {
    json* node = &doc;
    std::size_t pos = 0;
    while (true) {
        const std::size_t dot = path.find('.', pos);
        const std::string key = path.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
        if (dot == std::string::npos) {
            (*node)[key] = value;
            return;
        }
        node = &(*node)[key];
        pos = dot + 1;
    }
}

std::map<std::string, double> apply_reducers(const std::vector<std::string>& reducers,
                                             const SimulationConfig& cfg, const RunResult& res) {
    std::map<std::string, double> out;
    for (const auto& r : reducers) {
        if (r == "collisions") {
            double u = 0.55;
            if (const auto* k = std::get_if<analytic::Kink>(&cfg.ic)) u = std::fabs(k->u);
            if (const auto* p = std::get_if<analytic::KinkAntikink>(&cfg.ic)) u = std::fabs(p->u);
            out[r] = count_boundary_collisions(res.track, cfg.grid, std::sqrt(1.0 - u * u));
        } else if (r == "final_position") {
            out[r] = res.track.empty() ? std::nan("") : res.track.back().position;
        } else if (r == "final_polarity") {
            out[r] = res.track.empty() ? 0.0 : res.track.back().polarity;
        } else if (r == "bound_state" || r == "ewin_late") {
            double mean = std::nan("");
            for (const auto& s : res.probes) {
                if (s.name != "Ewin" || s.t.empty()) continue;
                const double t_end = s.t.back();
                const double t_from = t_end - 0.1 * (t_end - s.t.front());
                double acc = 0.0;
                std::size_t n = 0;
                for (std::size_t k = 0; k < s.t.size(); ++k) {
                    if (s.t[k] < t_from) continue;
                    acc += s.cols[4][k];
                    ++n;
                }
                if (n) mean = acc / static_cast<double>(n);
            }
            out[r] = r == "ewin_late" ? mean : (mean > 0.5 ? 1.0 : 0.0);
        } else if (r == "kink_census") {
            auto kinks = locate_kinks(cfg.grid, res.final_state.varphi);
            out[r] = static_cast<double>(kinks.size());
        } else {
            throw std::invalid_argument("unknown reducer '" + r + "'");
        }
    }
    return out;
}

} // namespace

SweepSpec parse_sweep(const json& doc) {
    SweepSpec spec;
    if (doc.contains("preset"))
        spec.base = preset_json(doc["preset"].get<std::string>());
    else if (doc.contains("base"))
        spec.base = doc["base"];
    else
        throw ConfigError({"sweep: need 'base' or 'preset'"});
    if (!doc.contains("axes") || !doc["axes"].is_array() || doc["axes"].empty())
        throw ConfigError({"sweep: need a non-empty 'axes' array"});
    for (const auto& a : doc["axes"]) {
        SweepAxis axis;
        if (a.contains("path"))
            axis.paths = {a["path"].get<std::string>()};
        else if (a.contains("paths"))
            for (const auto& p : a["paths"]) axis.paths.push_back(p.get<std::string>());
        else
            throw ConfigError({"sweep axis: need 'path' or 'paths'"});
        for (const auto& vrow : a["values"]) {
            if (axis.paths.size() == 1 && !vrow.is_array())
                axis.values.push_back({vrow});
            else {
                std::vector<json> tuple(vrow.begin(), vrow.end());
                if (tuple.size() != axis.paths.size())
                    throw ConfigError({"sweep axis: tuple width does not match paths"});
                axis.values.push_back(std::move(tuple));
            }
        }
        spec.axes.push_back(std::move(axis));
    }
    if (doc.contains("reducers"))
        for (const auto& r : doc["reducers"]) spec.reducers.push_back(r.get<std::string>());
    spec.max_parallel = doc.value("max_parallel", 0);
    spec.out_dir = doc.value("out_dir", "");
    return spec;
}

SweepReport run_sweep(const SweepSpec& spec) {
    // enumerate the cartesian product in row-major order
    std::size_t total = 1;
    for (const auto& a : spec.axes) total *= a.values.size();

    std::vector<json> docs(total);
    std::vector<std::map<std::string, json>> points(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        json doc = spec.base;
        std::size_t rem = idx;
        for (std::size_t ax = spec.axes.size(); ax-- > 0;) {
            const auto& a = spec.axes[ax];
            const std::size_t k = rem % a.values.size();
            rem /= a.values.size();
            for (std::size_t p = 0; p < a.paths.size(); ++p) {
                set_path(doc, a.paths[p], a.values[k][p]);
                points[idx][a.paths[p]] = a.values[k][p];
            }
        }
        doc.erase("output"); // sweep points never write their own files
        docs[idx] = std::move(doc);
    }

    SweepReport report;
    report.rows.resize(total);

    const bool caching = !spec.out_dir.empty();
    std::filesystem::path rows_dir;
    if (caching) {
        rows_dir = std::filesystem::path(spec.out_dir) / "rows";
        std::filesystem::create_directories(rows_dir);
    }

    std::atomic<std::size_t> cursor{0};
    std::atomic<std::size_t> cached{0};
    unsigned nthreads = spec.max_parallel > 0 ? static_cast<unsigned>(spec.max_parallel)
                                              : std::max(1u, std::thread::hardware_concurrency());
    nthreads = std::min<unsigned>(nthreads, static_cast<unsigned>(total));

    auto worker = [&] {
        while (true) {
            const std::size_t idx = cursor.fetch_add(1);
            if (idx >= total) return;
            SweepRow row;
            row.index = idx;
            row.point = points[idx];
            const std::uint64_t h = content_hash(docs[idx]);
            const std::filesystem::path cache_file =
                caching ? rows_dir / (std::to_string(h) + ".json") : std::filesystem::path();
            bool from_cache = false;
            if (caching && std::filesystem::exists(cache_file)) {
                try {
                    std::ifstream f(cache_file);
                    json cached_row = json::parse(f);
                    for (auto it = cached_row["results"].begin(); it != cached_row["results"].end(); ++it)
                        row.results[it.key()] = it.value().get<double>();
                    row.failed = cached_row.value("failed", false);
                    row.error = cached_row.value("error", "");
                    from_cache = true;
                } catch (...) {
                    from_cache = false; // corrupt cache entry: recompute
                }
            }
            if (!from_cache) {
                try {
                    SimulationConfig cfg = load_config(docs[idx]);
                    RunOptions o;
                    o.parallel = false; // parallelism lives across points
                    o.write_outputs = false;
                    RunResult res = run_simulation(cfg, o);
                    row.results = apply_reducers(spec.reducers, cfg, res);
                } catch (const std::exception& e) {
                    row.failed = true;
                    row.error = e.what();
                }
                if (caching) {
                    json j;
                    j["hash"] = h;
                    j["failed"] = row.failed;
                    j["error"] = row.error;
                    j["results"] = row.results;
                    std::ofstream f(cache_file);
                    f << j.dump(2);
                }
            } else {
                cached.fetch_add(1);
            }
            report.rows[idx] = std::move(row);
        }
    };

    std::vector<std::thread> pool;
    for (unsigned k = 0; k < nthreads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    report.completed_from_cache = cached.load();
    return report;
}

void write_sweep_csv(const std::string& path, const SweepReport& report, const SweepSpec& spec) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path + " for writing");
    f << "index";
    std::vector<std::string> point_cols;
    if (!report.rows.empty())
        for (const auto& [k, v] : report.rows.front().point) point_cols.push_back(k);
    for (const auto& c : point_cols) f << "," << csv_escape(c);
    for (const auto& r : spec.reducers) f << "," << csv_escape(r);
    f << ",failed\n";
    for (const auto& row : report.rows) {
        f << row.index;
        for (const auto& c : point_cols) {
            const auto it = row.point.find(c);
            f << ",";
            if (it != row.point.end())
                f << (it->second.is_number() ? format_double(it->second.get<double>())
                                             : it->second.dump());
        }
        for (const auto& r : spec.reducers) {
            const auto it = row.results.find(r);
            f << "," << (it == row.results.end() ? "" : format_double(it->second));
        }
        f << "," << (row.failed ? "1" : "0") << "\n";
    }
    if (!f) throw IoError("write failed for " + path);
}

} // namespace sgdec
