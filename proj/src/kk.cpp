#include "kkspace/kk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace kkspace {

const char *regime_name(Regime r) {
    switch (r) {
    case Regime::Unbroken: return "unbroken";
    case Regime::Transitional: return "transitional";
    case Regime::Broken: return "broken";
    case Regime::Indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

namespace {

// Core reconstruction on the raw chi'' samples of a midpoint grid. The
// regular (subtracted) integral uses the composite midpoint rule, the rule
// this grid registration tiles [0, L] with; it is second-order accurate and
// keeps the endpoint cells covered.
std::vector<double> reconstruct(const std::vector<double> &f,
                                const std::vector<double> &x, double length) {
    const std::size_t n = f.size();
    const double h = length / static_cast<double>(n);

    // 1/((j-i)*h) lookup; index differences keep the kernel antisymmetric
    // to the last bit on symmetric grids.
    std::vector<double> inv_dist(n, 0.0);
    for (std::size_t d = 1; d < n; ++d)
        inv_dist[d] = 1.0 / (static_cast<double>(d) * h);

    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double fi = f[i];
        double sum = 0.0;
        for (std::size_t j = 0; j < i; ++j)
            sum -= (f[j] - fi) * inv_dist[i - j];
        for (std::size_t j = i + 1; j < n; ++j)
            sum += (f[j] - fi) * inv_dist[j - i];

        // Diagonal term: the integrand's limit is f'(x_i).
        double diag;
        if (i == 0)
            diag = (f[1] - f[0]) / h;
        else if (i == n - 1)
            diag = (f[n - 1] - f[n - 2]) / h;
        else
            diag = (f[i + 1] - f[i - 1]) / (2.0 * h);
        sum += diag;

        const double log_term = fi * std::log((length - x[i]) / x[i]);
        out[i] = (h * sum + log_term) / constants::pi;
    }
    return out;
}

} // namespace

std::vector<double> kk_reconstruct(const SusceptibilityProfile &profile) {
    const std::size_t n = profile.chi.size();
    if (n < 3)
        throw std::invalid_argument("kk_reconstruct needs at least 3 grid points");
    std::vector<double> f(n);
    for (std::size_t j = 0; j < n; ++j) f[j] = profile.chi[j].imag();
    return reconstruct(f, profile.positions, profile.length);
}

Regime classify_regime(const std::optional<double> &d_kk,
                       const KkThresholds &thresholds) {
    if (!d_kk || !std::isfinite(*d_kk)) return Regime::Indeterminate;
    const double mag = std::abs(*d_kk);
    if (mag < thresholds.unbroken) return Regime::Unbroken;
    if (mag > thresholds.broken) return Regime::Broken;
    return Regime::Transitional;
}

KkReport kk_report(const SusceptibilityProfile &profile, double amplitude_scale,
                   bool forward_ramp, const KkThresholds &thresholds) {
    const std::size_t n = profile.chi.size();
    if (n < 3) throw std::invalid_argument("kk_report needs at least 3 grid points");
    const double h = profile.length / static_cast<double>(n);

    std::vector<double> chi_re(n), chi_im(n);
    for (std::size_t j = 0; j < n; ++j) {
        chi_re[j] = profile.chi[j].real();
        chi_im[j] = profile.chi[j].imag();
    }

    std::vector<double> chi_kk;
    if (forward_ramp) {
        chi_kk = reconstruct(chi_im, profile.positions, profile.length);
    } else {
        // Decreasing ramp: the spatial KK relation holds for the mirrored
        // sample, so reconstruct the reversed profile and map back.
        std::vector<double> rev(chi_im.rbegin(), chi_im.rend());
        chi_kk = reconstruct(rev, profile.positions, profile.length);
        std::reverse(chi_kk.begin(), chi_kk.end());
    }

    double numerator = 0.0, denominator = 0.0;
    double max_abs_re = 0.0, max_abs_err = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        numerator += chi_re[j] - chi_kk[j];
        denominator += chi_re[j];
        max_abs_re = std::max(max_abs_re, std::abs(chi_re[j]));
        max_abs_err = std::max(max_abs_err, std::abs(chi_re[j] - chi_kk[j]));
    }
    numerator *= h;
    denominator = std::abs(denominator * h);

    KkReport report;
    report.delta_p = profile.delta_p;
    report.residual = max_abs_re > 0.0
                          ? max_abs_err / max_abs_re
                          : std::numeric_limits<double>::infinity();

    const double floor =
        thresholds.denominator_floor_scale * amplitude_scale * profile.length;
    if (denominator >= floor) {
        report.d_kk = numerator / denominator;
    } else if (std::abs(numerator) < floor && report.residual < thresholds.residual_tol) {
        // 0/0 at the denominator zero-crossing with the relation satisfied
        // pointwise: the defect integral is zero at quadrature precision.
        report.d_kk = 0.0;
    }
    report.regime = classify_regime(report.d_kk, thresholds);
    return report;
}

KkReport kk_report_at(double delta_p, const AtomMedium &medium,
                      const ControlField &control, const SampleGeometry &geometry,
                      Model model, const KkThresholds &thresholds) {
    const SusceptibilityProfile profile =
        sample_profile(delta_p, medium, control, geometry, model);
    return kk_report(profile, dimensionless_amplitude(medium),
                     control.delta0() >= 0.0, thresholds);
}

std::optional<double> d_kk(double delta_p, const AtomMedium &medium,
                           const ControlField &control,
                           const SampleGeometry &geometry, Model model,
                           const KkThresholds &thresholds) {
    return kk_report_at(delta_p, medium, control, geometry, model, thresholds).d_kk;
}

} // namespace kkspace
