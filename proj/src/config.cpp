#include "sgdec/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace sgdec {

using nlohmann::json;

namespace {
constexpr double kPi = std::numbers::pi;

std::string join_errors(const std::vector<std::string>& errs) {
    std::ostringstream os;
    os << "config validation failed:";
    for (const auto& e : errs) os << "\n  - " << e;
    return os.str();
}

struct Validator {
    std::vector<std::string> errors;

    void require_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
        if (!obj.is_object()) {
            errors.push_back(where + ": expected an object");
            return;
        }
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            bool ok = false;
            for (const char* k : allowed)
                if (it.key() == k) ok = true;
            if (!ok) errors.push_back(where + ": unknown key '" + it.key() + "'");
        }
    }
    double num(const json& obj, const std::string& where, const char* key, std::optional<double> def = {}) {
        if (!obj.contains(key)) {
            if (def) return *def;
            errors.push_back(where + ": missing '" + std::string(key) + "'");
            return 0.0;
        }
        if (!obj[key].is_number()) {
            errors.push_back(where + "." + key + ": expected a number");
            return def.value_or(0.0);
        }
        return obj[key].get<double>();
    }
    int integer(const json& obj, const std::string& where, const char* key, int def) {
        if (!obj.contains(key)) return def;
        if (!obj[key].is_number_integer()) {
            errors.push_back(where + "." + key + ": expected an integer");
            return def;
        }
        return obj[key].get<int>();
    }
    std::string str(const json& obj, const std::string& where, const char* key, std::string def = "") {
        if (!obj.contains(key)) return def;
        if (!obj[key].is_string()) {
            errors.push_back(where + "." + key + ": expected a string");
            return def;
        }
        return obj[key].get<std::string>();
    }
};

BcSpec parse_bc(Validator& v, const json& b, const std::string& where) {
    v.require_keys(b, where, {"type", "eta", "xi", "value", "hold", "A", "omega", "sigma_rise",
                              "sigma_fall", "T_p", "order", "U"});
    const std::string type = v.str(b, where, "type", "neumann");
    if (type == "neumann") {
        return NeumannBias{v.num(b, where, "eta", 0.0), v.num(b, where, "xi", 0.0)};
    }
    if (type == "dirichlet") {
        DirichletBc d;
        d.hold = b.value("hold", false);
        const double val = v.num(b, where, "value", 0.0);
        d.value = [val](double) { return val; };
        return d;
    }
    if (type == "pulse") {
        PulseBc p;
        p.A = v.num(b, where, "A");
        p.omega = v.num(b, where, "omega");
        p.sigma_rise = v.num(b, where, "sigma_rise", 1.0);
        p.sigma_fall = v.num(b, where, "sigma_fall", 1.0);
        p.T_p = v.num(b, where, "T_p");
        if (!(p.sigma_rise > 0.0) || !(p.sigma_fall > 0.0))
            v.errors.push_back(where + ": pulse sigmas must be positive");
        return p;
    }
    if (type == "outgoing") {
        OutgoingBc o;
        o.order = v.integer(b, where, "order", 1);
        o.U = v.num(b, where, "U", -1.0);
        if (o.order != 0 && o.order != 1) v.errors.push_back(where + ": outgoing order must be 0 or 1");
        return o;
    }
    v.errors.push_back(where + ": unknown boundary type '" + type + "'");
    return NeumannBias{};
}

InitialCondition parse_ic(Validator& v, const json& ic, const std::string& where) {
    v.require_keys(ic, where, {"type", "x0", "u", "n", "polarity", "d", "nu", "t0"});
    const std::string type = v.str(ic, where, "type", "zero");
    if (type == "zero") return ZeroIc{};
    if (type == "kink") {
        analytic::Kink k;
        k.x0 = v.num(ic, where, "x0", 0.0);
        k.u = v.num(ic, where, "u", 0.0);
        k.n = v.integer(ic, where, "n", 0);
        k.polarity = v.integer(ic, where, "polarity", +1);
        if (!(std::fabs(k.u) < 1.0)) v.errors.push_back(where + ": |u| must be < 1");
        if (k.polarity != 1 && k.polarity != -1) v.errors.push_back(where + ": polarity must be +-1");
        return k;
    }
    if (type == "kink_antikink") {
        analytic::KinkAntikink p;
        p.x0 = v.num(ic, where, "x0", 0.0);
        p.u = v.num(ic, where, "u", 0.0);
        p.d = v.num(ic, where, "d", 0.0);
        if (!(std::fabs(p.u) < 1.0) || p.u == 0.0)
            v.errors.push_back(where + ": pair requires 0 < |u| < 1");
        if (!(p.d > 0.0)) v.errors.push_back(where + ": pair separation d must be positive");
        return p;
    }
    if (type == "breather") {
        analytic::Breather b;
        b.nu = v.num(ic, where, "nu", 0.0);
        b.x0 = v.num(ic, where, "x0", 0.0);
        b.t0 = v.num(ic, where, "t0", 0.0);
        b.u = v.num(ic, where, "u", 0.0);
        if (!(b.nu > 0.0 && b.nu < kPi / 2.0)) v.errors.push_back(where + ": nu must lie in (0, pi/2)");
        if (!(std::fabs(b.u) < 1.0)) v.errors.push_back(where + ": |u| must be < 1");
        return b;
    }
    v.errors.push_back(where + ": unknown ic type '" + type + "'");
    return ZeroIc{};
}
} // namespace

ConfigError::ConfigError(std::vector<std::string> errs)
    : std::runtime_error(join_errors(errs)), errors(std::move(errs)) {}

SimulationConfig load_config(const json& doc) {
    Validator v;
    SimulationConfig cfg;
    cfg.raw = doc;

    v.require_keys(doc, "config",
                   {"schema_version", "name", "grid", "model", "ic", "boundary", "time", "probes",
                    "track", "output", "description"});
    const int version = v.integer(doc, "config", "schema_version", 0);
    if (version != 1) v.errors.push_back("config.schema_version: expected 1");
    cfg.name = v.str(doc, "config", "name", "unnamed");

    // grid
    double L = 0, dx = 0, dt = 0, x_min = 0;
    if (doc.contains("grid")) {
        const json& g = doc["grid"];
        v.require_keys(g, "grid", {"L", "dx", "dt", "x_min"});
        L = v.num(g, "grid", "L");
        dx = v.num(g, "grid", "dx");
        dt = v.num(g, "grid", "dt");
        x_min = v.num(g, "grid", "x_min", 0.0);
        if (dx > 0 && !(dt < dx))
            v.errors.push_back("grid: dt must be smaller than dx (explicit-stencil stability)");
    } else {
        v.errors.push_back("config: missing 'grid'");
    }

    // model
    if (doc.contains("model")) {
        const json& m = doc["model"];
        v.require_keys(m, "model",
                       {"kind", "alpha", "beta", "g", "mass2", "mu0", "constrictions", "microshorts",
                        "source"});
        const std::string kind = v.str(m, "model", "kind", "sg");
        PhysicsModel& pm = cfg.model;
        pm.alpha = v.num(m, "model", "alpha", 0.0);
        pm.g = v.num(m, "model", "g", 0.0);
        if (kind == "sg") {
            pm.mu0 = 1.0;
            pm.mass2 = 0.0;
        } else if (kind == "massless_schwinger") {
            pm.mu0 = 0.0;
            pm.mass2 = pm.g * pm.g;
        } else if (kind == "massive_schwinger") {
            pm.mu0 = 1.0;
            pm.mass2 = pm.g * pm.g;
        } else {
            v.errors.push_back("model.kind: must be sg, massless_schwinger or massive_schwinger");
        }
        if (m.contains("mu0")) pm.mu0 = v.num(m, "model", "mu0");
        if (m.contains("mass2")) pm.mass2 = v.num(m, "model", "mass2");
        if (pm.alpha < 0.0) v.errors.push_back("model.alpha: must be >= 0");
        if (pm.mass2 < 0.0) v.errors.push_back("model.mass2: must be >= 0");
        if (pm.mu0 < 0.0) v.errors.push_back("model.mu0: must be >= 0");
        if (m.contains("constrictions")) {
            for (std::size_t k = 0; k < m["constrictions"].size(); ++k) {
                const json& c = m["constrictions"][k];
                const std::string where = "model.constrictions[" + std::to_string(k) + "]";
                v.require_keys(c, where, {"center", "length", "taper", "mu_cs"});
                Constriction cc;
                cc.center = v.num(c, where, "center");
                cc.length = v.num(c, where, "length");
                cc.taper = v.num(c, where, "taper");
                cc.mu_cs = v.num(c, where, "mu_cs");
                if (!(cc.length > 0) || !(cc.taper > 0)) v.errors.push_back(where + ": length and taper must be positive");
                cfg.model.constrictions.push_back(cc);
            }
        }
        if (m.contains("microshorts")) {
            for (std::size_t k = 0; k < m["microshorts"].size(); ++k) {
                const json& c = m["microshorts"][k];
                const std::string where = "model.microshorts[" + std::to_string(k) + "]";
                v.require_keys(c, where, {"x_s", "mu_s"});
                Microshort ms;
                ms.x_s = v.num(c, where, "x_s");
                ms.mu_s = v.num(c, where, "mu_s");
                if (!(ms.mu_s > 0)) v.errors.push_back(where + ": mu_s must be positive");
                cfg.model.microshorts.push_back(ms);
            }
        }
        if (m.contains("source")) {
            const json& s = m["source"];
            v.require_keys(s, "model.source", {"type", "beta", "Q", "Lc", "x_c"});
            const std::string st = v.str(s, "model.source", "type", "none");
            if (st == "none") {
                pm.source = SourceKind::none;
            } else if (st == "bias") {
                pm.source = SourceKind::bias;
                pm.beta = v.num(s, "model.source", "beta");
            } else if (st == "capacitor") {
                pm.source = SourceKind::capacitor;
                pm.source_Q = v.num(s, "model.source", "Q");
                pm.source_Lc = v.num(s, "model.source", "Lc");
            } else if (st == "point_charge") {
                pm.source = SourceKind::point_charge;
                pm.source_Q = v.num(s, "model.source", "Q");
                pm.source_xc = v.num(s, "model.source", "x_c", 0.0);
            } else {
                v.errors.push_back("model.source.type: unknown '" + st + "'");
            }
        }
    } else {
        v.errors.push_back("config: missing 'model'");
    }

    if (doc.contains("ic")) cfg.ic = parse_ic(v, doc["ic"], "ic");
    if (doc.contains("boundary")) {
        const json& b = doc["boundary"];
        v.require_keys(b, "boundary", {"left", "right"});
        if (b.contains("left")) cfg.boundary.left = parse_bc(v, b["left"], "boundary.left");
        if (b.contains("right")) cfg.boundary.right = parse_bc(v, b["right"], "boundary.right");
    }

    if (doc.contains("time")) {
        v.require_keys(doc["time"], "time", {"T"});
        cfg.T = v.num(doc["time"], "time", "T");
        if (!(cfg.T > 0)) v.errors.push_back("time.T: must be positive");
    } else {
        v.errors.push_back("config: missing 'time'");
    }

    if (doc.contains("probes")) {
        for (std::size_t k = 0; k < doc["probes"].size(); ++k) {
            const json& p = doc["probes"][k];
            const std::string where = "probes[" + std::to_string(k) + "]";
            v.require_keys(p, where, {"name", "what", "x", "a", "b", "stride"});
            ProbeConfig pc;
            pc.name = v.str(p, where, "name");
            pc.what = v.str(p, where, "what");
            pc.x = v.num(p, where, "x", 0.0);
            pc.a = v.num(p, where, "a", 0.0);
            pc.b = v.num(p, where, "b", 0.0);
            pc.stride = v.integer(p, where, "stride", 1);
            static const char* kinds[] = {"phi", "phi_x", "phi_t", "J", "E", "rho",
                                          "energy", "energy_window", "Q", "residual"};
            bool ok = false;
            for (const char* kk : kinds)
                if (pc.what == kk) ok = true;
            if (!ok) v.errors.push_back(where + ": unknown probe kind '" + pc.what + "'");
            if (pc.stride < 1) v.errors.push_back(where + ": stride must be >= 1");
            if (pc.what == "energy_window" && !(pc.a < pc.b))
                v.errors.push_back(where + ": energy_window requires a < b");
            if (pc.name.empty()) v.errors.push_back(where + ": missing name");
            cfg.probes.push_back(pc);
        }
    }
    if (doc.contains("track")) {
        const json& t = doc["track"];
        v.require_keys(t, "track", {"stride", "merge_radius"});
        TrackConfig tc;
        tc.stride = v.integer(t, "track", "stride", 25);
        tc.merge_radius = v.num(t, "track", "merge_radius", 2.0);
        if (tc.stride < 1) v.errors.push_back("track.stride: must be >= 1");
        cfg.track = tc;
    }
    if (doc.contains("output")) {
        const json& o = doc["output"];
        v.require_keys(o, "output", {"dir", "snapshots", "heatmap"});
        cfg.output.dir = v.str(o, "output", "dir", "");
        cfg.output.snapshots = v.integer(o, "output", "snapshots", 500);
        cfg.output.heatmap = v.str(o, "output", "heatmap", "phi_x");
        if (cfg.output.snapshots < 0) v.errors.push_back("output.snapshots: must be >= 0");
    }

    // grid construction last so we can report everything else too
    if (v.errors.empty()) {
        try {
            cfg.grid = build_grid(L, dx, dt, x_min);
        } catch (const std::exception& e) {
            v.errors.push_back(std::string("grid: ") + e.what());
        }
    }
    // probes must lie inside the domain
    if (v.errors.empty()) {
        for (const auto& p : cfg.probes) {
            const bool positional = p.what == "phi" || p.what == "phi_x" || p.what == "phi_t" ||
                                    p.what == "J" || p.what == "E" || p.what == "rho";
            if (positional && !cfg.grid.contains(p.x))
                v.errors.push_back("probe '" + p.name + "': x outside the domain");
        }
        for (const auto& s : cfg.model.microshorts)
            if (!cfg.grid.contains(s.x_s))
                v.errors.push_back("microshort at x=" + std::to_string(s.x_s) + " outside the domain");
    }

    if (!v.errors.empty()) throw ConfigError(std::move(v.errors));
    return cfg;
}

SimulationConfig load_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError({"cannot open config file " + path});
    json doc;
    try {
        doc = json::parse(f);
    } catch (const json::parse_error& e) {
        throw ConfigError({std::string("JSON parse error: ") + e.what()});
    }
    return load_config(doc);
}

nlohmann::json apply_overrides(json doc, std::span<const std::string> overrides) {
    for (const auto& ov : overrides) {
        const auto eq = ov.find('=');
        if (eq == std::string::npos) throw ConfigError({"override '" + ov + "' is not of the form path=value"});
        const std::string path = ov.substr(0, eq);
        const std::string valstr = ov.substr(eq + 1);
        json value;
        try {
            value = json::parse(valstr);
        } catch (...) {
            value = valstr; // plain string
        }
        json* node = &doc;
        std::size_t pos = 0;
        while (true) {
            const std::size_t dot = path.find('.', pos);
            const std::string key = path.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
            if (key.empty()) throw ConfigError({"override '" + ov + "': empty path segment"});
            if (dot == std::string::npos) {
                (*node)[key] = value;
                break;
            }
            node = &(*node)[key];
            pos = dot + 1;
        }
    }
    return doc;
}

// ---------------------------------------------------------------------------
// Preset catalog
// ---------------------------------------------------------------------------

namespace {

json grid_json(double L, double dx, double dt, double x_min) {
    return json{{"L", L}, {"dx", dx}, {"dt", dt}, {"x_min", x_min}};
}
json neumann(double eta = 0.0, double xi = 0.0) {
    return json{{"type", "neumann"}, {"eta", eta}, {"xi", xi}};
}
json outgoing(int order = 1) { return json{{"type", "outgoing"}, {"order", order}}; }

struct Preset {
    const char* name;
    const char* description;
    json (*build)();
};

json base_doc(const char* name, json grid, json model, json ic, json bc_left, json bc_right, double T) {
    return json{{"schema_version", 1}, {"name", name},         {"grid", std::move(grid)},
                {"model", std::move(model)}, {"ic", std::move(ic)}, {"boundary", {{"left", std::move(bc_left)}, {"right", std::move(bc_right)}}},
                {"time", {{"T", T}}}};
}

json kink_ic(double x0, double u, int polarity = 1) {
    return json{{"type", "kink"}, {"x0", x0}, {"u", u}, {"polarity", polarity}};
}

const Preset kPresets[] = {
    {"bare_fluxon", "single fluxon in an unperturbed junction, L=100, u=0.55, closed ends; the long-time bounce benchmark",
     [] {
         json d = base_doc("bare_fluxon", grid_json(100, 0.05, 0.04, -50), {{"kind", "sg"}},
                           kink_ic(0, 0.55), neumann(), neumann(), 50000);
         d["track"] = {{"stride", 25}};
         return d;
     }},
    {"bare_fluxon_desk", "bare_fluxon shortened to T=5000 for quick runs",
     [] {
         json d = preset_json("bare_fluxon");
         d["name"] = "bare_fluxon_desk";
         d["time"]["T"] = 5000;
         return d;
     }},
    {"fluxon_benchmark_pinned", "bare fluxon with held (pinned) boundary vertices; the coarse-grid method-ranking variant",
     [] {
         json d = preset_json("bare_fluxon");
         d["name"] = "fluxon_benchmark_pinned";
         d["boundary"]["left"] = {{"type", "dirichlet"}, {"hold", true}};
         d["boundary"]["right"] = {{"type", "dirichlet"}, {"hold", true}};
         return d;
     }},
    {"fluxon_pair", "kink-antikink pair, d=66, u=0.55, no perturbations: solitons pass through each other",
     [] {
         json d = base_doc("fluxon_pair", grid_json(100, 0.05, 0.04, -50), {{"kind", "sg"}},
                           {{"type", "kink_antikink"}, {"x0", 0}, {"u", 0.55}, {"d", 66}}, neumann(),
                           neumann(), 1000);
         d["track"] = {{"stride", 25}};
         return d;
     }},
    {"breather", "traveling breather, nu=pi/3, boosted to u=0.55",
     [] {
         return base_doc("breather", grid_json(100, 0.05, 0.04, -50), {{"kind", "sg"}},
                         {{"type", "breather"}, {"nu", 1.0471975511965976}, {"x0", -25}, {"u", 0.55}},
                         neumann(), neumann(), 1000);
     }},
    {"breather_rest", "breather at rest in the middle of the junction",
     [] {
         return base_doc("breather_rest", grid_json(100, 0.05, 0.04, -50), {{"kind", "sg"}},
                         {{"type", "breather"}, {"nu", 1.0471975511965976}, {"x0", 0}}, neumann(),
                         neumann(), 1000);
     }},
    {"fluxon_lossy", "fluxon in a lossy junction, alpha=0.003: slow friction deceleration",
     [] {
         json d = base_doc("fluxon_lossy", grid_json(100, 0.05, 0.04, -50),
                           {{"kind", "sg"}, {"alpha", 0.003}}, kink_ic(0, 0.55),
                           neumann(0.002, 0.006), neumann(0.002, 0.006), 1000);
         d["track"] = {{"stride", 25}};
         return d;
     }},
    {"fluxon_lossy_strong", "fluxon with alpha=0.03: stops before reaching a boundary",
     [] {
         json d = base_doc("fluxon_lossy_strong", grid_json(100, 0.05, 0.04, -50),
                           {{"kind", "sg"}, {"alpha", 0.03}}, kink_ic(0, 0.55), neumann(0.002, 0.006),
                           neumann(0.002, 0.006), 1000);
         d["track"] = {{"stride", 25}};
         return d;
     }},
    {"fluxon_biased", "fluxon with alpha=0.003 and bias current beta=0.001: stop-and-reverse dynamics",
     [] {
         json d = base_doc("fluxon_biased", grid_json(100, 0.05, 0.04, -50),
                           {{"kind", "sg"},
                            {"alpha", 0.003},
                            {"source", {{"type", "bias"}, {"beta", 0.001}}}},
                           kink_ic(0, 0.55), neumann(0.002, 0.006), neumann(0.002, 0.006), 1000);
         d["track"] = {{"stride", 25}};
         return d;
     }},
    {"breather_lossy", "breather in a lossy junction, alpha=0.003: spreads and decays",
     [] {
         return base_doc("breather_lossy", grid_json(100, 0.05, 0.04, -50),
                         {{"kind", "sg"}, {"alpha", 0.003}},
                         {{"type", "breather"}, {"nu", 1.0471975511965976}, {"x0", -25}, {"u", 0.55}},
                         neumann(), neumann(), 1000);
     }},
    {"vav_annihilation", "pair at u=0.4 in a lossy junction: binds into a decaying breather on the second encounter",
     [] {
         json d = base_doc("vav_annihilation", grid_json(100, 0.05, 0.04, -50),
                           {{"kind", "sg"}, {"alpha", 0.003}},
                           {{"type", "kink_antikink"}, {"x0", 0}, {"u", 0.4}, {"d", 66}}, neumann(),
                           neumann(), 1500);
         d["track"] = {{"stride", 25}};
         return d;
     }},
    {"vav_escape", "pair at u=0.55 in the same lossy junction: escapes binding, stops as two solitons",
     [] {
         json d = preset_json("vav_annihilation");
         d["name"] = "vav_escape";
         d["ic"]["u"] = 0.55;
         return d;
     }},
    {"microshort_pinned", "fluxon at terminal velocity 0.3 (beta=0.002) pinned by a microshort at x=-10",
     [] {
         json d = base_doc("microshort_pinned", grid_json(40, 0.05, 0.04, -20),
                           {{"kind", "sg"},
                            {"alpha", 0.005},
                            {"microshorts", json::array({{{"x_s", -10.0}, {"mu_s", 0.5}}})},
                            {"source", {{"type", "bias"}, {"beta", 0.002}}}},
                           kink_ic(10, -0.3), neumann(), neumann(), 1500);
         d["track"] = {{"stride", 25}};
         return d;
     }},
    {"microshort_passing", "fluxon at terminal velocity 0.618 (beta=0.005) passes the same microshort",
     [] {
         json d = preset_json("microshort_pinned");
         d["name"] = "microshort_passing";
         d["model"]["source"]["beta"] = 0.005;
         d["ic"]["u"] = -0.618;
         d["time"]["T"] = 300;
         return d;
     }},
    {"constriction_blocked", "fluxon at u=0.85 repelled by a mu=10 constriction (length 40, tapers 10)",
     [] {
         json d = base_doc(
             "constriction_blocked", grid_json(200, 0.05, 0.04, -100),
             {{"kind", "sg"},
              {"constrictions",
               json::array({{{"center", 0.0}, {"length", 40.0}, {"taper", 10.0}, {"mu_cs", 10.0}}})}},
             kink_ic(-60, 0.85), neumann(), neumann(), 400);
         d["track"] = {{"stride", 25}};
         return d;
     }},
    {"constriction_passing", "fluxon at u=0.85 crosses a mu=3 constriction, slowing inside and recovering",
     [] {
         json d = preset_json("constriction_blocked");
         d["name"] = "constriction_passing";
         d["model"]["constrictions"][0]["mu_cs"] = 3.0;
         return d;
     }},
    {"constriction_triple", "fluxon at u=0.85 through three mu=3 constrictions; a few percent of its kinetic energy radiates",
     [] {
         json cons = json::array();
         for (double c : {-50.0, 0.0, 50.0})
             cons.push_back({{"center", c}, {"length", 20.0}, {"taper", 2.3}, {"mu_cs", 3.0}});
         json d = base_doc("constriction_triple", grid_json(280, 0.05, 0.04, -120),
                           {{"kind", "sg"}, {"constrictions", cons}}, kink_ic(-95, 0.85), neumann(),
                           neumann(), 500);
         d["track"] = {{"stride", 10}};
         return d;
     }},
    {"biased_boundary_longtime", "bare fluxon with boundary bias eta=0.002, xi=0.006 over T=50000: the soliton speeds up",
     [] {
         json d = preset_json("bare_fluxon");
         d["name"] = "biased_boundary_longtime";
         d["boundary"]["left"] = neumann(0.002, 0.006);
         d["boundary"]["right"] = neumann(0.002, 0.006);
         return d;
     }},
    {"pulse_multi", "junction driven by a boundary pulse A=1.5, omega=0.8: a train of solitons and radiation",
     [] {
         json pulse = {{"type", "pulse"}, {"A", 1.5}, {"omega", 0.8}, {"sigma_rise", 10.0},
                       {"sigma_fall", 10.0}, {"T_p", 250.0}};
         json d = base_doc("pulse_multi", grid_json(160, 0.02, 0.016, 0), {{"kind", "sg"}},
                           {{"type", "zero"}}, pulse, neumann(), 250);
         d["track"] = {{"stride", 125}};
         return d;
     }},
    {"pulse_tuned", "boundary pulse tuned to create exactly one fluxon, one antifluxon and one breather",
     [] {
         json pulse = {{"type", "pulse"}, {"A", 1.5}, {"omega", 0.6}, {"sigma_rise", 10.0},
                       {"sigma_fall", 10.0}, {"T_p", 80.0}};
         json d = base_doc("pulse_tuned", grid_json(160, 0.02, 0.016, 0), {{"kind", "sg"}},
                           {{"type", "zero"}}, pulse, neumann(), 250);
         d["track"] = {{"stride", 125}};
         return d;
     }},
    {"capacitor_massless", "massless model, capacitor Q=4 at -+20, g=1.2, radiative ends; probes the current at x=100",
     [] {
         json d = base_doc("capacitor_massless", grid_json(600, 0.05, 0.04, -300),
                           {{"kind", "massless_schwinger"},
                            {"g", 1.2},
                            {"source", {{"type", "capacitor"}, {"Q", 4.0}, {"Lc", 40.0}}}},
                           {{"type", "zero"}}, outgoing(1), outgoing(1), 5000);
         d["probes"] = json::array({{{"name", "J_100"}, {"what", "J"}, {"x", 100.0}, {"stride", 1}},
                                    {{"name", "E_0"}, {"what", "E"}, {"x", 0.0}, {"stride", 5}},
                                    {{"name", "Q"}, {"what", "Q"}, {"stride", 25}}});
         return d;
     }},
    {"capacitor_energy", "capacitor discharge on the coarse comparison grid (dx=0.333, dt=0.125), closed large domain",
     [] {
         json d = base_doc("capacitor_energy", grid_json(2200, 0.333, 0.125, -1100),
                           {{"kind", "massless_schwinger"},
                            {"g", 1.2},
                            {"source", {{"type", "capacitor"}, {"Q", 4.0}, {"Lc", 40.0}}}},
                           {{"type", "zero"}}, neumann(), neumann(), 1000);
         d["probes"] = json::array({{{"name", "energy"}, {"what", "energy"}, {"stride", 1}}});
         return d;
     }},
    {"capacitor_massive", "massive model discharge, Q=100 plates at -+20, g=1.2: fast anharmonic oscillations",
     [] {
         json d = base_doc("capacitor_massive", grid_json(600, 0.05, 0.04, -300),
                           {{"kind", "massive_schwinger"},
                            {"g", 1.2},
                            {"source", {{"type", "capacitor"}, {"Q", 100.0}, {"Lc", 40.0}}}},
                           {{"type", "zero"}}, outgoing(1), outgoing(1), 2000);
         d["probes"] = json::array({{{"name", "E_0"}, {"what", "E"}, {"x", 0.0}, {"stride", 5}},
                                    {{"name", "E_100"}, {"what", "E"}, {"x", 100.0}, {"stride", 5}}});
         return d;
     }},
    {"schwinger_atom", "g=0.3 soliton released at x0=-10 toward a fixed opposite charge at the origin; binds into an atom",
     [] {
         json d = base_doc("schwinger_atom", grid_json(200, 0.05, 0.04, -100),
                           {{"kind", "massive_schwinger"},
                            {"g", 0.3},
                            {"source", {{"type", "point_charge"}, {"Q", -2.0 * kPi * 0.3}, {"x_c", 0.0}}}},
                           kink_ic(-10, 0.55, -1), outgoing(1), outgoing(1), 2000);
         d["track"] = {{"stride", 25}};
         d["probes"] = json::array(
             {{{"name", "Ewin"}, {"what", "energy_window"}, {"a", -16.0}, {"b", 16.0}, {"stride", 25}}});
         return d;
     }},
    {"schwinger_atom_centered", "soliton released exactly on top of the fixed charge with u=0.55",
     [] {
         json d = preset_json("schwinger_atom");
         d["name"] = "schwinger_atom_centered";
         d["ic"]["x0"] = 0.0;
         return d;
     }},
    {"schwinger_atom_free", "same setup with the dynamical mass term removed: the soliton escapes to -inf",
     [] {
         json d = preset_json("schwinger_atom");
         d["name"] = "schwinger_atom_free";
         d["ic"]["x0"] = 0.0;
         d["model"]["mass2"] = 0.0;
         d["grid"] = grid_json(1100, 0.05, 0.04, -1000);
         d["time"]["T"] = 1000;
         return d;
     }},
    {"positronium", "g=0.3 soliton-antisoliton pair, d=22, u=0.55: relaxes into a persistent bound oscillation",
     [] {
         json d = base_doc("positronium", grid_json(300, 0.05, 0.04, -150),
                           {{"kind", "massive_schwinger"}, {"g", 0.3}},
                           {{"type", "kink_antikink"}, {"x0", 0}, {"u", 0.55}, {"d", 22}}, outgoing(1),
                           outgoing(1), 4000);
         d["probes"] = json::array(
             {{{"name", "Ewin"}, {"what", "energy_window"}, {"a", -16.0}, {"b", 16.0}, {"stride", 25}},
              {{"name", "phi_0"}, {"what", "phi"}, {"x", 0.0}, {"stride", 5}}});
         return d;
     }},
    {"positronium_scatter", "g=0.4 pair at d=22: turns into breathers that eventually disperse",
     [] {
         json d = preset_json("positronium");
         d["name"] = "positronium_scatter";
         d["model"]["g"] = 0.4;
         d["time"]["T"] = 1000;
         return d;
     }},
};

} // namespace

std::vector<std::string> preset_names() {
    std::vector<std::string> out;
    for (const auto& p : kPresets) out.push_back(p.name);
    return out;
}

nlohmann::json preset_json(const std::string& name) {
    for (const auto& p : kPresets)
        if (name == p.name) return p.build();
    throw std::out_of_range("unknown preset '" + name + "'");
}

std::string preset_description(const std::string& name) {
    for (const auto& p : kPresets)
        if (name == p.name) return p.description;
    throw std::out_of_range("unknown preset '" + name + "'");
}

} // namespace sgdec
