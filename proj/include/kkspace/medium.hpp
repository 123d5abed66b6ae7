#ifndef KKSPACE_MEDIUM_HPP
#define KKSPACE_MEDIUM_HPP

#include <string>
#include <vector>

namespace kkspace {

namespace constants {
inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double vacuum_permittivity = 8.8541878128e-12; // F/m
inline constexpr double reduced_planck = 1.054571817e-34;       // J*s
} // namespace constants

// Atomic and probe constants fixing the susceptibility scale.
// All rates are angular frequencies in rad/s; lengths in meters.
struct AtomMedium {
    double d12 = 0.0;      // probe transition dipole moment, C*m
    double gamma12 = 0.0;  // |1>-|2> coherence dephasing rate, rad/s
    double gamma13 = 0.0;  // |1>-|3> coherence dephasing rate, rad/s
    double gamma23 = 0.0;  // |2>-|3> coherence dephasing rate, rad/s
    double n0 = 0.0;       // peak atomic density, m^-3
    double lambda_p = 0.0; // probe wavelength, m

    // gamma12 = Gamma21/2, gamma13 = Gamma31/2, gamma23 = gamma12 + gamma13.
    static AtomMedium from_decay_rates(double big_gamma21, double big_gamma31,
                                       double d12, double n0, double lambda_p);
};

// Control beam in reduced units: Rabi frequency and detuning are stored in
// units of gamma12. delta0 = omega_c0^2/delta_c is the maximal level shift.
struct ControlField {
    double omega_c0 = 0.0; // maximal control Rabi frequency, gamma12 units
    double delta_c = 1.0;  // control detuning, gamma12 units (nonzero)

    double delta0() const { return omega_c0 * omega_c0 / delta_c; }

    // Synthesize a far-detuned control realizing the requested shift:
    // omega_c0 = ratio*|delta0|, delta_c = ratio^2*delta0.
    static ControlField from_delta0(double delta0, double detuning_ratio = 50.0);
};

enum class DensityModel { Uniform, Lattice };

// Sample window and slicing for the transfer-matrix discretization.
struct SampleGeometry {
    double length = 0.0;      // sample length L, m
    double slice_len = 1e-8;  // requested slice length, m
    DensityModel density_model = DensityModel::Uniform;
    double lattice_period = 0.0; // trap period a, m (lattice only)
    double lattice_width = 0.0;  // trap 1/e half-width delta_x, m (lattice only)

    // J = round(L/slice_len); the effective slice length L/J is what the
    // discretization actually uses so that the slices tile [0, L] exactly.
    int slice_count() const;
    double effective_slice_len() const;
};

struct ValidationReport {
    std::vector<std::string> violations;
    std::vector<std::string> warnings;
    bool ok() const { return violations.empty(); }
};

// Checks every hard invariant and the soft far-detuning condition
// |delta_c| >= 10*max(omega_c0, gamma13/gamma12).
ValidationReport validate(const AtomMedium &medium, const ControlField &control,
                          const SampleGeometry &geometry);

// K = N0*|d12|^2/(eps0*hbar*gamma12), the dimensionless susceptibility scale.
// Throws std::invalid_argument when the medium violates its invariants.
double dimensionless_amplitude(const AtomMedium &medium);

// Reference parameter sets (87Rb D1 probe; see README for unit conventions).
AtomMedium reference_medium();
ControlField reference_control();     // delta0 = 100 gamma12
SampleGeometry reference_geometry();  // L = 5 um, 10 nm slices

// Bragg-lattice study: tenfold lower density, L = 60 um, delta0 = 30 gamma12,
// a = 400 nm traps of width a/6.
AtomMedium lattice_reference_medium();
ControlField lattice_reference_control();
SampleGeometry lattice_reference_geometry();

} // namespace kkspace

#endif
