#include "kkspace/medium.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace kkspace {

namespace {

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

void check_medium(const AtomMedium &m, std::vector<std::string> &out) {
    if (!positive(m.d12)) out.push_back("d12 must be > 0");
    if (!positive(m.gamma12)) out.push_back("gamma12 must be > 0");
    if (!positive(m.gamma13)) out.push_back("gamma13 must be > 0");
    if (!positive(m.gamma23)) out.push_back("gamma23 must be > 0");
    if (!positive(m.n0)) out.push_back("N0 must be > 0");
    if (!positive(m.lambda_p)) out.push_back("lambda_p must be > 0");
    if (positive(m.gamma12) && positive(m.gamma13) && positive(m.gamma23)) {
        const double sum = m.gamma12 + m.gamma13;
        if (std::abs(m.gamma23 - sum) > 4.0 * std::abs(sum) * 2.220446049250313e-16)
            out.push_back("gamma23 must equal gamma12 + gamma13");
    }
}

} // namespace

AtomMedium AtomMedium::from_decay_rates(double big_gamma21, double big_gamma31,
                                        double d12, double n0, double lambda_p) {
    AtomMedium m;
    m.d12 = d12;
    m.gamma12 = big_gamma21 / 2.0;
    m.gamma13 = big_gamma31 / 2.0;
    m.gamma23 = m.gamma12 + m.gamma13;
    m.n0 = n0;
    m.lambda_p = lambda_p;
    return m;
}

ControlField ControlField::from_delta0(double delta0, double detuning_ratio) {
    if (delta0 == 0.0) {
        // No shift: an arbitrarily far-detuned, vanishing control.
        return ControlField{0.0, detuning_ratio * detuning_ratio};
    }
    ControlField c;
    c.omega_c0 = detuning_ratio * std::abs(delta0);
    c.delta_c = detuning_ratio * detuning_ratio * delta0;
    return c;
}

int SampleGeometry::slice_count() const {
    if (!(length > 0.0) || !(slice_len > 0.0)) return 0;
    return static_cast<int>(std::llround(length / slice_len));
}

double SampleGeometry::effective_slice_len() const {
    const int j = slice_count();
    return j > 0 ? length / static_cast<double>(j) : 0.0;
}

ValidationReport validate(const AtomMedium &medium, const ControlField &control,
                          const SampleGeometry &geometry) {
    ValidationReport report;
    check_medium(medium, report.violations);

    if (control.delta_c == 0.0 || !std::isfinite(control.delta_c))
        report.violations.push_back("delta_c must be nonzero");
    if (control.omega_c0 < 0.0 || !std::isfinite(control.omega_c0))
        report.violations.push_back("omega_c0 must be >= 0");

    if (!positive(geometry.length)) report.violations.push_back("L must be > 0");
    if (!positive(geometry.slice_len))
        report.violations.push_back("slice_len must be > 0");
    if (positive(geometry.length) && positive(geometry.slice_len)) {
        if (geometry.slice_len > geometry.length)
            report.violations.push_back("slice_len must be <= L");
        else if (geometry.slice_count() < 10)
            report.violations.push_back("slice count round(L/slice_len) must be >= 10");
    }
    if (geometry.density_model == DensityModel::Lattice) {
        if (!positive(geometry.lattice_period))
            report.violations.push_back("a (lattice period) must be > 0");
        if (!positive(geometry.lattice_width))
            report.violations.push_back("delta_x (lattice width) must be > 0");
        if (positive(geometry.lattice_period) && positive(geometry.lattice_width)) {
            if (!(geometry.lattice_width < geometry.lattice_period))
                report.violations.push_back("delta_x must be < a");
            if (positive(geometry.length) && !(geometry.lattice_period <= geometry.length))
                report.violations.push_back("a must be <= L");
        }
    }

    // Soft condition: the adiabatic elimination behind the reduced two-level
    // description needs |delta_c| >> omega_c0, gamma13.
    if (control.delta_c != 0.0 && positive(medium.gamma12)) {
        const double gamma13_red = medium.gamma13 / medium.gamma12;
        const double bound = 10.0 * std::max(control.omega_c0, gamma13_red);
        if (std::abs(control.delta_c) < bound) {
            std::ostringstream msg;
            msg << "far-detuning condition weak: |delta_c| = " << std::abs(control.delta_c)
                << " < 10*max(omega_c0, gamma13) = " << bound << " (gamma12 units)";
            report.warnings.push_back(msg.str());
        }
    }
    return report;
}

double dimensionless_amplitude(const AtomMedium &medium) {
    std::vector<std::string> problems;
    check_medium(medium, problems);
    if (!problems.empty())
        throw std::invalid_argument("invalid medium: " + problems.front());
    return medium.n0 * medium.d12 * medium.d12 /
           (constants::vacuum_permittivity * constants::reduced_planck * medium.gamma12);
}

// 87Rb D1 probe with the D2 control transition. Caption rates are taken as
// angular frequencies (gamma12 = 2.87e6 rad/s); see README.
AtomMedium reference_medium() {
    return AtomMedium::from_decay_rates(5.74e6, 6.0666e6, 1.79e-29, 2.0e19, 795e-9);
}

ControlField reference_control() { return ControlField::from_delta0(100.0); }

SampleGeometry reference_geometry() {
    SampleGeometry g;
    g.length = 5e-6;
    g.slice_len = 1e-8;
    return g;
}

AtomMedium lattice_reference_medium() {
    AtomMedium m = reference_medium();
    m.n0 = 2.0e18;
    return m;
}

ControlField lattice_reference_control() { return ControlField::from_delta0(30.0); }

SampleGeometry lattice_reference_geometry() {
    SampleGeometry g;
    g.length = 60e-6;
    g.slice_len = 1e-8;
    g.density_model = DensityModel::Lattice;
    g.lattice_period = 400e-9;
    g.lattice_width = 400e-9 / 6.0;
    return g;
}

} // namespace kkspace
