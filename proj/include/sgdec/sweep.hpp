#ifndef SGDEC_SWEEP_HPP
#define SGDEC_SWEEP_HPP

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "sgdec/simulate.hpp"

namespace sgdec {

/// One sweep axis assigns a tuple of config paths per value, so linked
/// parameters (e.g. a pair separation tied to its velocity) vary together.
struct SweepAxis {
    std::vector<std::string> paths;
    std::vector<std::vector<nlohmann::json>> values; // values[k][p] for paths[p]
};

struct SweepSpec {
    nlohmann::json base;                // config document
    std::vector<SweepAxis> axes;        // cartesian product
    std::vector<std::string> reducers;  // named per-point reducers
    int max_parallel = 0;               // 0: hardware_concurrency
    std::string out_dir;                // row cache + report; empty: in-memory only
};

struct SweepRow {
    std::size_t index = 0;
    std::map<std::string, nlohmann::json> point; // path -> value
    std::map<std::string, double> results;
    bool failed = false;
    std::string error;
};

struct SweepReport {
    std::vector<SweepRow> rows;
    std::size_t completed_from_cache = 0;
};

/// Runs the cartesian sweep. Points execute on a small thread pool (each
/// simulation runs its serial kernel, so per-point results are independent of
/// the schedule); rows are assembled in point order. With out_dir set, each
/// finished point is cached as rows/<hash>.json keyed by the content hash of
/// its config, and a rerun skips cached points.
///
/// Reducers: "collisions" (boundary-collision count from the track),
/// "final_position" / "final_polarity" (last track sample),
/// "bound_state" (1 when the late-time mean of the Ewin probe total exceeds
/// 0.5), "ewin_late" (that mean), "kink_census" (net winding count at the
/// final step).
SweepReport run_sweep(const SweepSpec& spec);

void write_sweep_csv(const std::string& path, const SweepReport& report, const SweepSpec& spec);

/// Parses the sweep document: {"base": {...} | "preset": "name",
///  "axes": [{"path": "ic.u", "values": [...]} |
///           {"paths": [..], "values": [[..], ..]}],
///  "reducers": [...], "max_parallel": N}
SweepSpec parse_sweep(const nlohmann::json& doc);

/// FNV-1a over the canonical serialization; the sweep cache key.
std::uint64_t content_hash(const nlohmann::json& doc);

} // namespace sgdec

#endif
