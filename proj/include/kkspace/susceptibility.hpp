#ifndef KKSPACE_SUSCEPTIBILITY_HPP
#define KKSPACE_SUSCEPTIBILITY_HPP

#include <complex>
#include <vector>

#include "kkspace/medium.hpp"

namespace kkspace {

enum class Model { TwoLevel, ThreeLevel };

// Position-dependent ground-level shift delta(x) = x*delta0/L, gamma12 units.
// Throws std::domain_error for x outside [0, L].
double level_shift(double x, const ControlField &control, double length);

// delta_p + delta(x), gamma12 units.
double effective_detuning(double delta_p, double x, const ControlField &control,
                          double length);

// Local atomic density in m^-3. Uniform -> N0; Lattice -> sum of Gaussian
// traps N0*exp(-((x-x_j)/delta_x)^2) with centers x_j = (j-1/2)*a inside
// [0, L]. Traps farther than 5*delta_x contribute < e^-25 and are skipped.
double density_envelope(double x, const SampleGeometry &geometry,
                        const AtomMedium &medium);

// Two-level susceptibility i*K/(1 - i*(delta_p + delta(x))) scaled by the
// local density fraction N(x)/N0.
std::complex<double> chi_two(double delta_p, double x, const AtomMedium &medium,
                             const ControlField &control,
                             const SampleGeometry &geometry);

// Full three-level V-configuration susceptibility with the control intensity
// ramp |Omega_c(x)|^2 = x*omega_c0^2/L. Reduces to the bare two-level value
// at x = 0 and converges to chi_two as |delta_c| grows at fixed delta0.
std::complex<double> chi_three(double delta_p, double x, const AtomMedium &medium,
                               const ControlField &control,
                               const SampleGeometry &geometry);

// Complex susceptibility sampled at slice centers x_j = (j-1/2)*L/J.
struct SusceptibilityProfile {
    double delta_p = 0.0; // probe detuning, gamma12 units
    double length = 0.0;  // sample length, m
    std::vector<double> positions;
    std::vector<std::complex<double>> chi;

    double spacing() const {
        return positions.empty() ? 0.0 : length / static_cast<double>(positions.size());
    }
};

// Throws NumericalError if any sampled chi'' is negative beyond roundoff
// (gain is outside the supported regime).
SusceptibilityProfile sample_profile(double delta_p, const AtomMedium &medium,
                                     const ControlField &control,
                                     const SampleGeometry &geometry, Model model);

} // namespace kkspace

#endif
