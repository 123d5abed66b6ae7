#include "kkspace/config.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace kkspace {

namespace {

std::string trim(const std::string &s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string &key, const std::string &value) {
    errno = 0;
    char *end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0' || errno == ERANGE)
        throw ConfigError("invalid value for key '" + key + "': " + value);
    return v;
}

long parse_long(const std::string &key, const std::string &value) {
    errno = 0;
    char *end = nullptr;
    const long v = std::strtol(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0' || errno == ERANGE)
        throw ConfigError("invalid value for key '" + key + "': " + value);
    return v;
}

std::vector<double> parse_list(const std::string &key, const std::string &value) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty())
            throw ConfigError("invalid value for key '" + key + "': " + value);
        out.push_back(parse_double(key, item));
    }
    if (out.empty())
        throw ConfigError("invalid value for key '" + key + "': " + value);
    return out;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

AxisRange &delta0_axis(RunConfig &c) {
    if (!c.grid.delta0) c.grid.delta0 = AxisRange{-199.0, 199.0, 2.0};
    return *c.grid.delta0;
}

} // namespace

RunConfig default_run_config() {
    RunConfig c;
    c.params = reference_params();
    c.params.threads = 0; // auto
    return c;
}

RunConfig lattice_run_config() {
    RunConfig c = default_run_config();
    c.params = lattice_reference_params();
    c.params.threads = 0;
    c.control_from_delta0 = true;
    c.delta0 = 30.0;
    c.grid.delta_p = AxisRange{-40.0, 10.0, 0.25};
    c.delta_p = -15.0;
    return c;
}

void apply_key_value(RunConfig &c, const std::string &raw_key,
                     const std::string &raw_value) {
    const std::string key = trim(raw_key);
    const std::string value = trim(raw_value);
    if (key.empty()) throw ConfigError("empty key");

    if (key == "schema_version") {
        if (parse_long(key, value) != schema_version)
            throw ConfigError("unsupported schema_version: " + value);
    } else if (key == "d12") {
        c.params.medium.d12 = parse_double(key, value);
    } else if (key == "gamma12") {
        c.params.medium.gamma12 = parse_double(key, value);
        c.params.medium.gamma23 = c.params.medium.gamma12 + c.params.medium.gamma13;
    } else if (key == "gamma13") {
        c.params.medium.gamma13 = parse_double(key, value);
        c.params.medium.gamma23 = c.params.medium.gamma12 + c.params.medium.gamma13;
    } else if (key == "N0") {
        c.params.medium.n0 = parse_double(key, value);
    } else if (key == "lambda_p") {
        c.params.medium.lambda_p = parse_double(key, value);
    } else if (key == "L") {
        c.params.geometry.length = parse_double(key, value);
    } else if (key == "slice_len") {
        c.params.geometry.slice_len = parse_double(key, value);
    } else if (key == "density") {
        if (value == "uniform") c.params.geometry.density_model = DensityModel::Uniform;
        else if (value == "lattice") c.params.geometry.density_model = DensityModel::Lattice;
        else throw ConfigError("invalid value for key 'density': " + value);
    } else if (key == "a") {
        c.params.geometry.lattice_period = parse_double(key, value);
    } else if (key == "delta_x") {
        c.params.geometry.lattice_width = parse_double(key, value);
    } else if (key == "delta0") {
        c.delta0 = parse_double(key, value);
        c.control_from_delta0 = true;
    } else if (key == "omega_c0") {
        c.params.control.omega_c0 = parse_double(key, value);
        c.control_from_delta0 = false;
    } else if (key == "delta_c") {
        c.params.control.delta_c = parse_double(key, value);
        c.control_from_delta0 = false;
    } else if (key == "control_ratio") {
        const double r = parse_double(key, value);
        if (!(r > 0.0)) throw ConfigError("invalid value for key 'control_ratio': " + value);
        c.control_ratio = r;
    } else if (key == "model") {
        if (value == "two_level") c.params.model = Model::TwoLevel;
        else if (value == "three_level") c.params.model = Model::ThreeLevel;
        else throw ConfigError("invalid value for key 'model': " + value);
    } else if (key == "delta_p") {
        c.delta_p = parse_double(key, value);
    } else if (key == "delta_p_min") {
        c.grid.delta_p.min = parse_double(key, value);
        c.delta_p_axis_touched = true;
    } else if (key == "delta_p_max") {
        c.grid.delta_p.max = parse_double(key, value);
        c.delta_p_axis_touched = true;
    } else if (key == "delta_p_step") {
        c.grid.delta_p.step = parse_double(key, value);
        c.delta_p_axis_touched = true;
    } else if (key == "delta0_min") {
        delta0_axis(c).min = parse_double(key, value);
    } else if (key == "delta0_max") {
        delta0_axis(c).max = parse_double(key, value);
    } else if (key == "delta0_step") {
        delta0_axis(c).step = parse_double(key, value);
    } else if (key == "lengths") {
        c.grid.lengths = parse_list(key, value);
    } else if (key == "t_unbroken") {
        c.params.kk.unbroken = parse_double(key, value);
    } else if (key == "t_broken") {
        c.params.kk.broken = parse_double(key, value);
    } else if (key == "kk_residual_tol") {
        c.params.kk.residual_tol = parse_double(key, value);
    } else if (key == "max_evaluations") {
        const long n = parse_long(key, value);
        if (n <= 0) throw ConfigError("invalid value for key 'max_evaluations': " + value);
        c.grid.max_evaluations = static_cast<std::size_t>(n);
    } else if (key == "threads") {
        const long n = parse_long(key, value);
        if (n < 0) throw ConfigError("invalid value for key 'threads': " + value);
        c.params.threads = static_cast<int>(n);
    } else if (key == "out") {
        c.out_path = value;
    } else if (key == "format") {
        if (value == "csv") c.format = OutputFormat::Csv;
        else if (value == "structured") c.format = OutputFormat::Structured;
        else throw ConfigError("invalid value for key 'format': " + value);
    } else {
        throw ConfigError("unknown key '" + key + "'");
    }
}

void apply_config_text(RunConfig &config, const std::string &text) {
    std::stringstream ss(text);
    std::string line;
    int line_no = 0;
    while (std::getline(ss, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            std::ostringstream msg;
            msg << "line " << line_no << ": expected key = value, got '" << line << "'";
            throw ConfigError(msg.str());
        }
        apply_key_value(config, line.substr(0, eq), line.substr(eq + 1));
    }
}

void apply_config_file(RunConfig &config, const std::string &path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    apply_config_text(config, buffer.str());
}

std::string to_config_text(const RunConfig &c) {
    std::ostringstream out;
    out << "schema_version = " << schema_version << "\n";
    out << "d12 = " << fmt(c.params.medium.d12) << "\n";
    out << "gamma12 = " << fmt(c.params.medium.gamma12) << "\n";
    out << "gamma13 = " << fmt(c.params.medium.gamma13) << "\n";
    out << "N0 = " << fmt(c.params.medium.n0) << "\n";
    out << "lambda_p = " << fmt(c.params.medium.lambda_p) << "\n";
    out << "L = " << fmt(c.params.geometry.length) << "\n";
    out << "slice_len = " << fmt(c.params.geometry.slice_len) << "\n";
    out << "density = "
        << (c.params.geometry.density_model == DensityModel::Lattice ? "lattice"
                                                                     : "uniform")
        << "\n";
    if (c.params.geometry.density_model == DensityModel::Lattice) {
        out << "a = " << fmt(c.params.geometry.lattice_period) << "\n";
        out << "delta_x = " << fmt(c.params.geometry.lattice_width) << "\n";
    }
    if (c.control_from_delta0) {
        out << "delta0 = " << fmt(c.delta0) << "\n";
        out << "control_ratio = " << fmt(c.control_ratio) << "\n";
    } else {
        out << "omega_c0 = " << fmt(c.params.control.omega_c0) << "\n";
        out << "delta_c = " << fmt(c.params.control.delta_c) << "\n";
    }
    out << "model = "
        << (c.params.model == Model::ThreeLevel ? "three_level" : "two_level") << "\n";
    out << "delta_p = " << fmt(c.delta_p) << "\n";
    out << "delta_p_min = " << fmt(c.grid.delta_p.min) << "\n";
    out << "delta_p_max = " << fmt(c.grid.delta_p.max) << "\n";
    out << "delta_p_step = " << fmt(c.grid.delta_p.step) << "\n";
    if (c.grid.delta0) {
        out << "delta0_min = " << fmt(c.grid.delta0->min) << "\n";
        out << "delta0_max = " << fmt(c.grid.delta0->max) << "\n";
        out << "delta0_step = " << fmt(c.grid.delta0->step) << "\n";
    }
    if (!c.grid.lengths.empty()) {
        out << "lengths = ";
        for (std::size_t i = 0; i < c.grid.lengths.size(); ++i)
            out << (i ? "," : "") << fmt(c.grid.lengths[i]);
        out << "\n";
    }
    out << "t_unbroken = " << fmt(c.params.kk.unbroken) << "\n";
    out << "t_broken = " << fmt(c.params.kk.broken) << "\n";
    out << "kk_residual_tol = " << fmt(c.params.kk.residual_tol) << "\n";
    out << "max_evaluations = " << c.grid.max_evaluations << "\n";
    out << "threads = " << c.params.threads << "\n";
    if (!c.out_path.empty()) out << "out = " << c.out_path << "\n";
    out << "format = " << (c.format == OutputFormat::Structured ? "structured" : "csv")
        << "\n";
    return out.str();
}

void finalize(RunConfig &c) {
    if (c.control_from_delta0)
        c.params.control = ControlField::from_delta0(c.delta0, c.control_ratio);
    if (c.params.threads <= 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        c.params.threads = hw > 0 ? static_cast<int>(hw) : 1;
    }
}

} // namespace kkspace
