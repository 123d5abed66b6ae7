#include "kkspace/cli.hpp"

#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "kkspace/config.hpp"
#include "kkspace/errors.hpp"
#include "kkspace/output.hpp"

namespace kkspace {

namespace {

struct PendingOverrides {
    std::string config_path;
    std::vector<std::pair<std::string, std::string>> key_values;
};

// Every parameter flag mirrors a config key and funnels through
// apply_key_value, so flag and file validation behave identically.
void add_shared_options(CLI::App *cmd, PendingOverrides *pending) {
    cmd->add_option("--config", pending->config_path, "config file (key = value lines)");

    static const std::vector<std::pair<std::string, std::string>> keys = {
        {"d12", "probe dipole moment, C*m"},
        {"gamma12", "1-2 dephasing rate, rad/s"},
        {"gamma13", "1-3 dephasing rate, rad/s"},
        {"N0", "peak atomic density, m^-3"},
        {"lambda_p", "probe wavelength, m"},
        {"L", "sample length, m"},
        {"slice_len", "transfer-matrix slice length, m"},
        {"density", "density model: uniform|lattice"},
        {"a", "lattice period, m"},
        {"delta_x", "lattice trap width, m"},
        {"delta0", "maximal level shift, gamma12 units"},
        {"omega_c0", "control Rabi frequency, gamma12 units"},
        {"delta_c", "control detuning, gamma12 units"},
        {"control_ratio", "|delta_c/omega_c0| used when built from delta0"},
        {"model", "susceptibility model: two_level|three_level"},
        {"delta_p", "probe detuning, gamma12 units"},
        {"delta_p_min", "spectrum axis minimum, gamma12 units"},
        {"delta_p_max", "spectrum axis maximum, gamma12 units"},
        {"delta_p_step", "spectrum axis step, gamma12 units"},
        {"delta0_min", "map delta0 axis minimum, gamma12 units"},
        {"delta0_max", "map delta0 axis maximum, gamma12 units"},
        {"delta0_step", "map delta0 axis step, gamma12 units"},
        {"lengths", "comma-separated sample lengths, m"},
        {"t_unbroken", "unbroken-regime |D_kk| threshold"},
        {"t_broken", "broken-regime |D_kk| threshold"},
        {"kk_residual_tol", "pointwise KK residual tolerance"},
        {"contrast_threshold", "contrast band threshold"},
        {"max_evaluations", "scan size limit"},
        {"out", "output path (default: stdout)"},
        {"format", "output format: csv|structured"},
    };
    for (const auto &[key, help] : keys) {
        cmd->add_option_function<std::string>(
            "--" + key,
            [pending, key = key](const std::string &v) {
                pending->key_values.emplace_back(key, v);
            },
            help);
    }
    cmd->add_option_function<std::string>(
           "--threads",
           [pending](const std::string &v) {
               pending->key_values.emplace_back("threads", v);
           },
           "worker threads (0 = auto)")
        ->envname("KKSPACE_THREADS");
}

RunConfig resolve(const PendingOverrides &pending, bool lattice_defaults,
                  double *contrast_threshold) {
    RunConfig config = lattice_defaults ? lattice_run_config() : default_run_config();
    if (!pending.config_path.empty()) apply_config_file(config, pending.config_path);
    for (const auto &[key, value] : pending.key_values) {
        if (key == "contrast_threshold") {
            // Reporting knob, not part of the physics schema.
            char *end = nullptr;
            const double v = std::strtod(value.c_str(), &end);
            if (end == value.c_str() || *end != '\0')
                throw ConfigError("invalid value for key 'contrast_threshold': " + value);
            *contrast_threshold = v;
            continue;
        }
        apply_key_value(config, key, value);
    }
    finalize(config);
    return config;
}

// Hard invariant violations end the run before any computation starts.
void require_valid(const RunConfig &config) {
    const ValidationReport report =
        validate(config.params.medium, config.params.control, config.params.geometry);
    for (const std::string &w : report.warnings)
        std::cerr << "warning: " << w << "\n";
    if (!report.ok()) {
        for (const std::string &v : report.violations)
            std::cerr << "error: " << v << "\n";
        throw ConfigError("configuration invalid: " + report.violations.front());
    }
}

int dispatch(const std::string &sub, const PendingOverrides &pending) {
    double contrast_threshold = 0.9;
    RunConfig config = resolve(pending, sub == "lattice", &contrast_threshold);

    if (sub == "validate") {
        const ValidationReport report = validate(
            config.params.medium, config.params.control, config.params.geometry);
        std::cout << to_config_text(config);
        for (const std::string &w : report.warnings)
            std::cout << "# warning: " << w << "\n";
        for (const std::string &v : report.violations)
            std::cout << "# violation: " << v << "\n";
        if (!report.ok()) return exit_config_error;
        std::cout << "# ok\n";
        return exit_ok;
    }

    require_valid(config);

    if (sub == "profile") {
        const ProfileTable table = run_profile(config.delta_p, config.params);
        write_to_destination(config, std::cout,
                             [&](std::ostream &os) { write_profile(os, table, config.format); });
        return exit_ok;
    }
    if (sub == "spectrum") {
        ScanGrid grid = config.grid;
        grid.delta0.reset();
        grid.lengths.clear();
        grid.validate_or_throw();
        const std::vector<SpectrumRow> rows = run_spectrum(grid.delta_p, config.params);
        write_to_destination(config, std::cout,
                             [&](std::ostream &os) { write_spectrum(os, rows, config.format); });
        return exit_ok;
    }
    if (sub == "dkk") {
        const KkReport report =
            kk_report_at(config.delta_p, config.params.medium, config.params.control,
                         config.params.geometry, config.params.model, config.params.kk);
        if (!report.d_kk) {
            std::cerr << "error: D_kk is indeterminate at delta_p = " << config.delta_p
                      << " (denominator below floor, residual = " << report.residual
                      << ")\n";
            return exit_numerical_error;
        }
        std::cout << format_number(*report.d_kk) << "\n";
        return exit_ok;
    }
    if (sub == "map") {
        ScanGrid grid = config.grid;
        grid.lengths.clear();
        if (!grid.delta0) grid.delta0 = AxisRange{-199.0, 199.0, 2.0};
        if (!config.delta_p_axis_touched) grid.delta_p = AxisRange{-249.0, 49.5, 1.5};
        grid.validate_or_throw();
        const MapResult map = run_map(grid, config.params);
        write_to_destination(config, std::cout,
                             [&](std::ostream &os) { write_map(os, map, config.format); });
        return exit_ok;
    }
    if (sub == "lengths") {
        ScanGrid grid = config.grid;
        grid.delta0.reset();
        if (grid.lengths.empty()) grid.lengths = {10e-6, 15e-6, 20e-6};
        grid.validate_or_throw();
        const std::vector<LengthSpectrum> sweep =
            run_length_sweep(grid.lengths, grid.delta_p, config.params);
        write_to_destination(config, std::cout, [&](std::ostream &os) {
            write_length_sweep(os, sweep, config.format);
        });
        return exit_ok;
    }
    if (sub == "lattice") {
        ScanGrid grid = config.grid;
        grid.delta0.reset();
        grid.lengths.clear();
        grid.validate_or_throw();
        const LatticeResult result =
            run_lattice(grid.delta_p, config.params, contrast_threshold);
        write_to_destination(config, std::cout, [&](std::ostream &os) {
            write_lattice(os, result, config.format);
        });
        if (!config.out_path.empty()) {
            std::cout << "max_C = " << format_number(result.max_contrast) << "\n";
            if (result.has_contrast_band) {
                std::cout << "contrast_band = [" << format_number(result.contrast_band_lo)
                          << ", " << format_number(result.contrast_band_hi) << "]\n";
            } else {
                std::cout << "contrast_band = none\n";
            }
            std::cout << "max_R_r_unbroken = " << format_number(result.max_R_r_unbroken)
                      << " (R_l there = " << format_number(result.R_l_at_max_R_r) << ")\n";
        }
        return exit_ok;
    }

    throw ConfigError("unknown subcommand: " + sub);
}

} // namespace

int run_cli(int argc, const char *const *argv) {
    CLI::App app{"Spatial Kramers-Kronig susceptibility and 1-D scattering toolkit"};
    app.require_subcommand(1);

    PendingOverrides pending;
    const std::vector<std::pair<std::string, std::string>> subcommands = {
        {"validate", "resolve and check a configuration without computing"},
        {"profile", "susceptibility profile chi(x) and its KK reconstruction"},
        {"spectrum", "reflection/transmission spectrum with D_kk and regimes"},
        {"dkk", "single D_kk value at one probe detuning"},
        {"map", "D_kk, R_l, R_r over the (delta0, delta_p) plane"},
        {"lengths", "spectra for several sample lengths"},
        {"lattice", "Bragg-lattice contrast study"},
    };
    for (const auto &[name, help] : subcommands)
        add_shared_options(app.add_subcommand(name, help), &pending);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        std::cerr << "run with --help for usage\n";
        return exit_config_error;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), pending);
    } catch (const ConfigError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config_error;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config_error;
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_io_error;
    } catch (const NumericalError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_numerical_error;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_numerical_error;
    }
}

} // namespace kkspace
