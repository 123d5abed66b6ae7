#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "kkspace/config.hpp"

using namespace kkspace;

TEST_CASE("defaults resolve to the reference parameter set") {
    RunConfig config = default_run_config();
    finalize(config);
    CHECK(config.params.medium.gamma12 == doctest::Approx(2.87e6));
    CHECK(config.params.medium.d12 == doctest::Approx(1.79e-29));
    CHECK(config.params.medium.n0 == doctest::Approx(2.0e19));
    CHECK(config.params.medium.lambda_p == doctest::Approx(795e-9));
    CHECK(config.params.geometry.length == doctest::Approx(5e-6));
    CHECK(config.params.control.delta0() == doctest::Approx(100.0));
    CHECK(config.params.threads >= 1);
    CHECK(validate(config.params.medium, config.params.control, config.params.geometry)
              .ok());
}

TEST_CASE("sign-flipped shift is accepted and maps to a negative control detuning") {
    RunConfig config = default_run_config();
    apply_key_value(config, "delta0", "-100");
    finalize(config);
    CHECK(config.params.control.delta0() == doctest::Approx(-100.0));
    CHECK(config.params.control.delta_c < 0.0);
    CHECK(validate(config.params.medium, config.params.control, config.params.geometry)
              .ok());
}

TEST_CASE("unknown keys are rejected by name") {
    RunConfig config = default_run_config();
    try {
        apply_key_value(config, "густота", "12");
        FAIL("expected ConfigError");
    } catch (const ConfigError &e) {
        CHECK(std::string(e.what()).find("густота") != std::string::npos);
    }
}

TEST_CASE("unparseable values are rejected by key") {
    RunConfig config = default_run_config();
    try {
        apply_key_value(config, "gamma12", "fast");
        FAIL("expected ConfigError");
    } catch (const ConfigError &e) {
        CHECK(std::string(e.what()).find("gamma12") != std::string::npos);
    }
}

TEST_CASE("invalid geometry is reported against its key") {
    RunConfig config = default_run_config();
    apply_key_value(config, "L", "-1");
    finalize(config);
    const ValidationReport report =
        validate(config.params.medium, config.params.control, config.params.geometry);
    CHECK_FALSE(report.ok());
    bool named = false;
    for (const auto &v : report.violations)
        if (v.find("L") != std::string::npos) named = true;
    CHECK(named);
}

TEST_CASE("config text parses comments, blanks, and spacing") {
    RunConfig config = default_run_config();
    apply_config_text(config, "# comment only\n"
                              "\n"
                              "delta_p = -42.5   # trailing comment\n"
                              "  model=three_level\n");
    CHECK(config.delta_p == -42.5);
    CHECK(config.params.model == Model::ThreeLevel);
}

TEST_CASE("malformed lines are rejected with their line number") {
    RunConfig config = default_run_config();
    try {
        apply_config_text(config, "delta_p -42.5\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError &e) {
        CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }
}

TEST_CASE("wrong schema version is rejected") {
    RunConfig config = default_run_config();
    CHECK_THROWS_AS(apply_key_value(config, "schema_version", "999"), ConfigError);
}

TEST_CASE("explicit control fields switch off the delta0 synthesis") {
    RunConfig config = default_run_config();
    apply_key_value(config, "omega_c0", "5000");
    apply_key_value(config, "delta_c", "-250000");
    finalize(config);
    CHECK(config.params.control.omega_c0 == 5000.0);
    CHECK(config.params.control.delta_c == -250000.0);
    CHECK(config.params.control.delta0() == doctest::Approx(-100.0));
}

TEST_CASE("round trip: parse(write(config)) is equivalent") {
    RunConfig original = default_run_config();
    apply_config_text(original, "delta0 = -35\n"
                                "model = three_level\n"
                                "delta_p_min = -120\n"
                                "delta_p_max = 60\n"
                                "delta_p_step = 0.5\n"
                                "lengths = 1e-05,1.5e-05\n"
                                "density = lattice\n"
                                "a = 4e-07\n"
                                "delta_x = 6.6e-08\n"
                                "t_unbroken = 0.04\n"
                                "threads = 3\n"
                                "format = structured\n");
    finalize(original);

    RunConfig reparsed = default_run_config();
    apply_config_text(reparsed, to_config_text(original));
    finalize(reparsed);

    CHECK(reparsed.params.medium.gamma12 == original.params.medium.gamma12);
    CHECK(reparsed.params.medium.gamma23 == original.params.medium.gamma23);
    CHECK(reparsed.params.control.omega_c0 == original.params.control.omega_c0);
    CHECK(reparsed.params.control.delta_c == original.params.control.delta_c);
    CHECK(reparsed.params.geometry.length == original.params.geometry.length);
    CHECK(reparsed.params.geometry.lattice_period ==
          original.params.geometry.lattice_period);
    CHECK(reparsed.params.geometry.density_model ==
          original.params.geometry.density_model);
    CHECK(reparsed.params.model == original.params.model);
    CHECK(reparsed.grid.delta_p.min == original.grid.delta_p.min);
    CHECK(reparsed.grid.delta_p.max == original.grid.delta_p.max);
    CHECK(reparsed.grid.delta_p.step == original.grid.delta_p.step);
    CHECK(reparsed.grid.lengths == original.grid.lengths);
    CHECK(reparsed.params.kk.unbroken == original.params.kk.unbroken);
    CHECK(reparsed.params.threads == original.params.threads);
    CHECK(reparsed.format == original.format);
    CHECK(to_config_text(reparsed) == to_config_text(original));
}

TEST_CASE("lattice preset carries the comb geometry") {
    RunConfig config = lattice_run_config();
    finalize(config);
    CHECK(config.params.geometry.density_model == DensityModel::Lattice);
    CHECK(config.params.medium.n0 == doctest::Approx(2.0e18));
    CHECK(config.params.geometry.length == doctest::Approx(60e-6));
    CHECK(config.params.control.delta0() == doctest::Approx(30.0));
    CHECK(config.params.geometry.lattice_period == doctest::Approx(400e-9));
    CHECK(config.params.geometry.lattice_width == doctest::Approx(400e-9 / 6.0));
}
