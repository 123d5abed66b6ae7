#ifndef KKSPACE_KK_HPP
#define KKSPACE_KK_HPP

#include <optional>
#include <vector>

#include "kkspace/susceptibility.hpp"

namespace kkspace {

enum class Regime { Unbroken, Transitional, Broken, Indeterminate };

const char *regime_name(Regime r);

struct KkThresholds {
    double unbroken = 0.05; // |D_kk| below this -> unbroken
    double broken = 0.95;   // |D_kk| above this -> broken
    // Denominator floor for the D_kk ratio, in units of K*L.
    double denominator_floor_scale = 1e-12;
    // Pointwise reconstruction residual below which a 0/0 ratio is reported
    // as 0 (spatial KK relation satisfied) instead of indeterminate.
    double residual_tol = 0.05;
};

// Spatial Kramers-Kronig reconstruction of chi' from chi'':
//   chi'_KK(x) = (1/pi) PV int_0^L chi''(s)/(s - x) ds
// evaluated at every grid point by singularity subtraction,
//   PV int f(s)/(s-x) ds = int [f(s)-f(x)]/(s-x) ds + f(x)*ln((L-x)/x),
// with the regular integral done by the composite midpoint rule on the
// profile's own slice-center grid. Requires at least 3 points.
std::vector<double> kk_reconstruct(const SusceptibilityProfile &profile);

struct KkReport {
    double delta_p = 0.0;
    std::optional<double> d_kk; // empty -> indeterminate
    Regime regime = Regime::Indeterminate;
    double residual = 0.0; // max|chi' - chi'_KK| / max|chi'|
};

Regime classify_regime(const std::optional<double> &d_kk,
                       const KkThresholds &thresholds);

// Figure of merit for the spatial KK relation,
//   D_kk = int_0^L [chi'(x) - chi'_KK(x)] dx / |int_0^L chi'(x) dx|,
// 0 when the relation holds over the window, +-1 when fully broken.
// `amplitude_scale` sets the denominator floor (pass dimensionless_amplitude);
// `forward_ramp` selects the kernel orientation: false mirrors the
// reconstruction for a decreasing level-shift ramp (delta0 < 0) so that the
// unbroken regime is detected for either ramp direction.
KkReport kk_report(const SusceptibilityProfile &profile, double amplitude_scale,
                   bool forward_ramp, const KkThresholds &thresholds);

// Convenience wrapper: samples the profile and reports D_kk for the given
// parameters (orientation follows the sign of delta0).
KkReport kk_report_at(double delta_p, const AtomMedium &medium,
                      const ControlField &control, const SampleGeometry &geometry,
                      Model model, const KkThresholds &thresholds);

std::optional<double> d_kk(double delta_p, const AtomMedium &medium,
                           const ControlField &control,
                           const SampleGeometry &geometry, Model model,
                           const KkThresholds &thresholds);

} // namespace kkspace

#endif
