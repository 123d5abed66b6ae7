#include "kkspace/susceptibility.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "kkspace/errors.hpp"

namespace kkspace {

using complexd = std::complex<double>;

double level_shift(double x, const ControlField &control, double length) {
    if (!(length > 0.0)) throw std::domain_error("sample length must be > 0");
    if (x < 0.0 || x > length) {
        std::ostringstream msg;
        msg << "position " << x << " outside sample [0, " << length << "]";
        throw std::domain_error(msg.str());
    }
    return x * control.delta0() / length;
}

double effective_detuning(double delta_p, double x, const ControlField &control,
                          double length) {
    return delta_p + level_shift(x, control, length);
}

double density_envelope(double x, const SampleGeometry &geometry,
                        const AtomMedium &medium) {
    if (geometry.density_model == DensityModel::Uniform) return medium.n0;

    const double a = geometry.lattice_period;
    const double dx = geometry.lattice_width;
    // Trap centers x_j = (j - 1/2)*a with x_j in [0, L].
    const int n_traps = static_cast<int>(std::floor(geometry.length / a + 0.5));
    // Only traps within 5*delta_x matter; beyond that exp(-25) is negligible.
    int j_lo = static_cast<int>(std::ceil((x - 5.0 * dx) / a + 0.5));
    int j_hi = static_cast<int>(std::floor((x + 5.0 * dx) / a + 0.5));
    j_lo = std::max(j_lo, 1);
    j_hi = std::min(j_hi, n_traps);

    double sum = 0.0;
    for (int j = j_lo; j <= j_hi; ++j) {
        const double center = (static_cast<double>(j) - 0.5) * a;
        const double arg = (x - center) / dx;
        sum += std::exp(-arg * arg);
    }
    return medium.n0 * sum;
}

complexd chi_two(double delta_p, double x, const AtomMedium &medium,
                 const ControlField &control, const SampleGeometry &geometry) {
    const double k_amp = dimensionless_amplitude(medium);
    const double u = effective_detuning(delta_p, x, control, geometry.length);
    const complexd chi = complexd(0.0, k_amp) / complexd(1.0, -u);
    return chi * (density_envelope(x, geometry, medium) / medium.n0);
}

complexd chi_three(double delta_p, double x, const AtomMedium &medium,
                   const ControlField &control, const SampleGeometry &geometry) {
    const double k_amp = dimensionless_amplitude(medium);
    if (!(geometry.length > 0.0)) throw std::domain_error("sample length must be > 0");
    if (x < 0.0 || x > geometry.length)
        throw std::domain_error("position outside sample");

    // Everything in gamma12 units.
    const double g13 = medium.gamma13 / medium.gamma12;
    const double g23 = medium.gamma23 / medium.gamma12;
    const double dc = control.delta_c;
    // Linear intensity ramp |Omega_c(x)|^2 = x*omega_c0^2/L.
    const double w = (x / geometry.length) * control.omega_c0 * control.omega_c0;

    const double a_sat = g13 * g13 + dc * dc + w;
    const complexd two_photon(g23, dc - delta_p); // gamma23 + i(delta_c - delta_p)
    const complexd probe(1.0, -delta_p);          // gamma12 - i*delta_p
    const complexd num = a_sat * two_photon - w * complexd(g13, -dc);
    const complexd den = a_sat * (two_photon * probe + w);
    if (den == complexd(0.0, 0.0))
        throw NumericalError("chi_three denominator vanished");

    const complexd chi = complexd(0.0, k_amp) * num / den;
    return chi * (density_envelope(x, geometry, medium) / medium.n0);
}

SusceptibilityProfile sample_profile(double delta_p, const AtomMedium &medium,
                                     const ControlField &control,
                                     const SampleGeometry &geometry, Model model) {
    const int j_count = geometry.slice_count();
    if (j_count < 1) throw std::domain_error("geometry yields no slices");
    const double h = geometry.effective_slice_len();

    SusceptibilityProfile profile;
    profile.delta_p = delta_p;
    profile.length = geometry.length;
    profile.positions.resize(j_count);
    profile.chi.resize(j_count);

    const double k_amp = dimensionless_amplitude(medium);
    const double gain_floor = -1e-12 * k_amp;
    for (int j = 0; j < j_count; ++j) {
        const double x = (static_cast<double>(j) + 0.5) * h;
        profile.positions[j] = x;
        const complexd chi = (model == Model::TwoLevel)
                                 ? chi_two(delta_p, x, medium, control, geometry)
                                 : chi_three(delta_p, x, medium, control, geometry);
        if (chi.imag() < gain_floor) {
            std::ostringstream msg;
            msg << "chi'' = " << chi.imag() << " < 0 at x = " << x
                << " (gain is outside the supported regime)";
            throw NumericalError(msg.str());
        }
        profile.chi[j] = chi;
    }
    return profile;
}

} // namespace kkspace
