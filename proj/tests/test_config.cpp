#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sgdec/config.hpp"

using namespace sgdec;
using nlohmann::json;

TEST_CASE("preset catalog is populated and loads") {
    const auto names = preset_names();
    CHECK(names.size() >= 14);
    for (const auto& n : names) {
        INFO("preset ", n);
        SimulationConfig cfg = load_config(preset_json(n));
        CHECK(cfg.name == n);
        CHECK(!preset_description(n).empty());
    }
    CHECK_THROWS_AS(preset_json("no_such_preset"), std::out_of_range);
}

TEST_CASE("preset parameters match the reference table") {
    // transcribed scenario parameters, one assert per load-bearing value
    SimulationConfig bare = load_config(preset_json("bare_fluxon"));
    CHECK(bare.grid.nx == 2001);
    CHECK(bare.grid.dx == 0.05);
    CHECK(bare.grid.dt == 0.04);
    CHECK(bare.grid.length() == doctest::Approx(100.0));
    CHECK(bare.T == 50000.0);
    CHECK(bare.model.alpha == 0.0);
    CHECK(bare.model.source == SourceKind::none);
    const auto* bk = std::get_if<analytic::Kink>(&bare.ic);
    REQUIRE(bk);
    CHECK(bk->u == 0.55);
    CHECK(bk->x0 == 0.0);
    const auto* nb = std::get_if<NeumannBias>(&bare.boundary.left);
    REQUIRE(nb);
    CHECK(nb->eta == 0.0);
    CHECK(nb->xi == 0.0);

    SimulationConfig biased = load_config(preset_json("biased_boundary_longtime"));
    const auto* bb = std::get_if<NeumannBias>(&biased.boundary.left);
    REQUIRE(bb);
    CHECK(bb->eta == 0.002);
    CHECK(bb->xi == 0.006);
    CHECK(biased.T == 50000.0);

    SimulationConfig lossy = load_config(preset_json("fluxon_lossy"));
    CHECK(lossy.model.alpha == 0.003);
    SimulationConfig lossy_strong = load_config(preset_json("fluxon_lossy_strong"));
    CHECK(lossy_strong.model.alpha == 0.03);
    SimulationConfig biased_f = load_config(preset_json("fluxon_biased"));
    CHECK(biased_f.model.beta == 0.001);
    CHECK(biased_f.model.alpha == 0.003);

    SimulationConfig pair = load_config(preset_json("fluxon_pair"));
    const auto* pp = std::get_if<analytic::KinkAntikink>(&pair.ic);
    REQUIRE(pp);
    CHECK(pp->d == 66.0);
    CHECK(pp->u == 0.55);

    SimulationConfig vav = load_config(preset_json("vav_annihilation"));
    CHECK(std::get_if<analytic::KinkAntikink>(&vav.ic)->u == 0.4);
    CHECK(vav.model.alpha == 0.003);
    CHECK(vav.T == 1500.0);

    SimulationConfig shortp = load_config(preset_json("microshort_pinned"));
    CHECK(shortp.model.alpha == 0.005);
    CHECK(shortp.model.beta == 0.002);
    REQUIRE(shortp.model.microshorts.size() == 1);
    CHECK(shortp.model.microshorts[0].x_s == -10.0);
    CHECK(std::get_if<analytic::Kink>(&shortp.ic)->u == -0.3);
    CHECK(std::get_if<analytic::Kink>(&shortp.ic)->x0 == 10.0);
    SimulationConfig shortpass = load_config(preset_json("microshort_passing"));
    CHECK(shortpass.model.beta == 0.005);
    CHECK(std::get_if<analytic::Kink>(&shortpass.ic)->u == -0.618);

    SimulationConfig cons = load_config(preset_json("constriction_blocked"));
    REQUIRE(cons.model.constrictions.size() == 1);
    CHECK(cons.model.constrictions[0].mu_cs == 10.0);
    CHECK(cons.model.constrictions[0].length == 40.0);
    CHECK(cons.model.constrictions[0].taper == 10.0);
    CHECK(std::get_if<analytic::Kink>(&cons.ic)->u == 0.85);
    CHECK(load_config(preset_json("constriction_passing")).model.constrictions[0].mu_cs == 3.0);
    CHECK(load_config(preset_json("constriction_triple")).model.constrictions.size() == 3);

    SimulationConfig pulse = load_config(preset_json("pulse_tuned"));
    const auto* pb = std::get_if<PulseBc>(&pulse.boundary.left);
    REQUIRE(pb);
    CHECK(pb->A == 1.5);
    CHECK(pb->omega == 0.6);
    CHECK(pb->sigma_rise == 10.0);
    CHECK(pulse.grid.length() == doctest::Approx(160.0));
    CHECK(pulse.grid.dx == 0.02);
    SimulationConfig multi = load_config(preset_json("pulse_multi"));
    const auto* pm = std::get_if<PulseBc>(&multi.boundary.left);
    REQUIRE(pm);
    CHECK(pm->A == 1.5);
    CHECK(pm->omega == 0.8);

    SimulationConfig cap = load_config(preset_json("capacitor_massless"));
    CHECK(cap.model.g == 1.2);
    CHECK(cap.model.mass2 == doctest::Approx(1.44));
    CHECK(cap.model.mu0 == 0.0);
    CHECK(cap.model.source_Q == 4.0);
    CHECK(cap.model.source_Lc == 40.0);
    CHECK(std::get_if<OutgoingBc>(&cap.boundary.left));

    SimulationConfig cape = load_config(preset_json("capacitor_energy"));
    CHECK(cape.grid.dx == 0.333);
    CHECK(cape.grid.dt == 0.125);
    CHECK(cape.T == 1000.0);

    SimulationConfig atom = load_config(preset_json("schwinger_atom"));
    CHECK(atom.model.g == 0.3);
    CHECK(atom.model.mass2 == doctest::Approx(0.09));
    CHECK(atom.model.mu0 == 1.0);
    CHECK(atom.model.source_Q == doctest::Approx(-2.0 * std::numbers::pi * 0.3));
    CHECK(std::get_if<analytic::Kink>(&atom.ic)->x0 == -10.0);
    CHECK(std::get_if<analytic::Kink>(&atom.ic)->u == 0.55);
    CHECK(std::get_if<analytic::Kink>(&atom.ic)->polarity == -1);
    CHECK(load_config(preset_json("schwinger_atom_free")).model.mass2 == 0.0);

    SimulationConfig pos = load_config(preset_json("positronium"));
    CHECK(pos.model.g == 0.3);
    CHECK(std::get_if<analytic::KinkAntikink>(&pos.ic)->d == 22.0);
    CHECK(std::get_if<analytic::KinkAntikink>(&pos.ic)->u == 0.55);
    CHECK(pos.T == 4000.0);
    CHECK(load_config(preset_json("positronium_scatter")).model.g == 0.4);
}

TEST_CASE("stability rule rejected with a named error") {
    json doc = preset_json("bare_fluxon");
    doc["grid"]["dt"] = 1.2 * doc["grid"]["dx"].get<double>();
    try {
        load_config(doc);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        REQUIRE(!e.errors.empty());
        CHECK(e.errors.front().find("stability") != std::string::npos);
    }
}

TEST_CASE("all validation errors are collected") {
    json doc = preset_json("bare_fluxon");
    doc["grid"]["dt"] = 0.1;          // breaks stability
    doc["ic"]["u"] = 1.5;             // breaks |u| < 1
    doc["model"]["alpha"] = -1.0;     // negative loss
    doc["time"]["T"] = -5.0;          // negative duration
    try {
        load_config(doc);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.errors.size() >= 4);
    }
}

TEST_CASE("unknown keys are rejected") {
    json doc = preset_json("bare_fluxon");
    doc["grid"]["dy"] = 0.1;
    doc["typo_section"] = 1;
    try {
        load_config(doc);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.errors.size() == 2);
    }
}

TEST_CASE("overrides reach nested keys") {
    json doc = preset_json("capacitor_massless");
    const std::vector<std::string> ov = {"grid.dt=0.125", "grid.dx=0.333", "time.T=1000"};
    doc = apply_overrides(doc, ov);
    SimulationConfig cfg = load_config(doc);
    CHECK(cfg.grid.dt == 0.125);
    CHECK(cfg.grid.dx == 0.333);
    CHECK(cfg.T == 1000.0);
    CHECK_THROWS_AS(apply_overrides(doc, std::vector<std::string>{"no_equals_sign"}), ConfigError);
}

TEST_CASE("probes are validated") {
    json doc = preset_json("capacitor_massless");
    doc["probes"][0]["x"] = 1e6; // outside the domain
    CHECK_THROWS_AS(load_config(doc), ConfigError);
    doc = preset_json("capacitor_massless");
    doc["probes"][0]["what"] = "no_such_probe";
    CHECK_THROWS_AS(load_config(doc), ConfigError);
}
