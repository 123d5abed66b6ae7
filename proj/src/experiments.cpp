#include "kkspace/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "kkspace/errors.hpp"
#include "kkspace/parallel.hpp"

namespace kkspace {

int AxisRange::count() const {
    if (!(step > 0.0) || max < min) return 0;
    return static_cast<int>(std::llround((max - min) / step)) + 1;
}

std::size_t ScanGrid::total_points() const {
    std::size_t n = static_cast<std::size_t>(std::max(delta_p.count(), 0));
    if (delta0) n *= static_cast<std::size_t>(std::max(delta0->count(), 0));
    if (!lengths.empty()) n *= lengths.size();
    return n;
}

void ScanGrid::validate_or_throw() const {
    auto check_axis = [](const AxisRange &axis, const char *name) {
        if (!(axis.step > 0.0))
            throw std::invalid_argument(std::string(name) + " step must be > 0");
        if (axis.max < axis.min)
            throw std::invalid_argument(std::string(name) + " range is empty");
    };
    check_axis(delta_p, "delta_p");
    if (delta0) check_axis(*delta0, "delta0");
    for (double l : lengths)
        if (!(l > 0.0)) throw std::invalid_argument("lengths must be > 0");
    if (total_points() == 0) throw std::invalid_argument("scan grid is empty");
    if (total_points() > max_evaluations) {
        std::ostringstream msg;
        msg << "scan grid has " << total_points() << " points, above the limit of "
            << max_evaluations;
        throw std::invalid_argument(msg.str());
    }
}

ExperimentParams reference_params() {
    ExperimentParams p;
    p.medium = reference_medium();
    p.control = reference_control();
    p.geometry = reference_geometry();
    return p;
}

ExperimentParams lattice_reference_params() {
    ExperimentParams p;
    p.medium = lattice_reference_medium();
    p.control = lattice_reference_control();
    p.geometry = lattice_reference_geometry();
    return p;
}

ProfileTable run_profile(double delta_p, const ExperimentParams &params) {
    const SusceptibilityProfile profile = sample_profile(
        delta_p, params.medium, params.control, params.geometry, params.model);

    std::vector<double> chi_im(profile.chi.size());
    for (std::size_t j = 0; j < profile.chi.size(); ++j)
        chi_im[j] = profile.chi[j].imag();

    // Reconstruction oriented along the level-shift ramp, as in kk_report.
    std::vector<double> chi_kk;
    if (params.control.delta0() >= 0.0) {
        chi_kk = kk_reconstruct(profile);
    } else {
        SusceptibilityProfile mirrored = profile;
        std::reverse(mirrored.chi.begin(), mirrored.chi.end());
        chi_kk = kk_reconstruct(mirrored);
        std::reverse(chi_kk.begin(), chi_kk.end());
    }

    ProfileTable table;
    table.x = profile.positions;
    table.chi_re.resize(profile.chi.size());
    table.chi_im = std::move(chi_im);
    table.chi_kk_re = std::move(chi_kk);
    for (std::size_t j = 0; j < profile.chi.size(); ++j)
        table.chi_re[j] = profile.chi[j].real();
    return table;
}

namespace {

SpectrumRow spectrum_point(double delta_p, const ExperimentParams &params,
                           double amplitude) {
    const SusceptibilityProfile profile = sample_profile(
        delta_p, params.medium, params.control, params.geometry, params.model);

    const KkReport report = kk_report(profile, amplitude,
                                      params.control.delta0() >= 0.0, params.kk);
    const ScatteringResult scatter =
        scattering(total_matrix(profile, params.medium.lambda_p), delta_p);

    SpectrumRow row;
    row.delta_p = delta_p;
    row.R_l = scatter.R_l;
    row.R_r = scatter.R_r;
    row.T = scatter.T;
    row.C = contrast(scatter.R_l, scatter.R_r);
    row.d_kk = report.d_kk;
    row.regime = report.regime;
    row.residual = report.residual;
    return row;
}

} // namespace

std::vector<SpectrumRow> run_spectrum(const AxisRange &delta_p_axis,
                                      const ExperimentParams &params) {
    const int n = delta_p_axis.count();
    if (n <= 0) throw std::invalid_argument("empty delta_p axis");

    const double amplitude = dimensionless_amplitude(params.medium);
    std::vector<SpectrumRow> rows(static_cast<std::size_t>(n));
    parallel_for_index(rows.size(), params.threads, [&](std::size_t i) {
        rows[i] = spectrum_point(delta_p_axis.value(static_cast<int>(i)), params,
                                 amplitude);
    });
    return rows;
}

MapResult run_map(const ScanGrid &grid, const ExperimentParams &params) {
    if (!grid.delta0) throw std::invalid_argument("run_map needs a delta0 axis");
    grid.validate_or_throw();

    MapResult result;
    const int n0 = grid.delta0->count();
    const int np = grid.delta_p.count();
    result.delta0_axis.resize(static_cast<std::size_t>(n0));
    result.delta_p_axis.resize(static_cast<std::size_t>(np));
    for (int i = 0; i < n0; ++i) result.delta0_axis[i] = grid.delta0->value(i);
    for (int j = 0; j < np; ++j) result.delta_p_axis[j] = grid.delta_p.value(j);

    const double amplitude = dimensionless_amplitude(params.medium);
    result.cells.resize(static_cast<std::size_t>(n0) * static_cast<std::size_t>(np));
    parallel_for_index(result.cells.size(), params.threads, [&](std::size_t idx) {
        const std::size_t i = idx / result.delta_p_axis.size();
        const std::size_t j = idx % result.delta_p_axis.size();

        ExperimentParams local = params;
        local.control = ControlField::from_delta0(result.delta0_axis[i]);
        const SpectrumRow row =
            spectrum_point(result.delta_p_axis[j], local, amplitude);
        result.cells[idx] = MapCell{row.d_kk, row.R_l, row.R_r, row.regime};
    });
    return result;
}

std::vector<LengthSpectrum> run_length_sweep(const std::vector<double> &lengths,
                                             const AxisRange &delta_p_axis,
                                             const ExperimentParams &params) {
    if (lengths.empty()) throw std::invalid_argument("no lengths given");
    std::vector<LengthSpectrum> sweep;
    sweep.reserve(lengths.size());
    for (double length : lengths) {
        ExperimentParams local = params;
        local.geometry.length = length;
        sweep.push_back(LengthSpectrum{length, run_spectrum(delta_p_axis, local)});
    }
    return sweep;
}

std::optional<std::pair<std::size_t, std::size_t>>
unbroken_band(const std::vector<SpectrumRow> &rows) {
    // Indeterminate rows between unbroken neighbors belong to the band
    // (the D_kk denominator crosses zero inside it).
    auto in_band = [&](std::size_t i) {
        if (rows[i].regime == Regime::Unbroken) return true;
        if (rows[i].regime != Regime::Indeterminate) return false;
        bool left = false, right = false;
        for (std::size_t l = i; l-- > 0;) {
            if (rows[l].regime == Regime::Indeterminate) continue;
            left = rows[l].regime == Regime::Unbroken;
            break;
        }
        for (std::size_t r = i + 1; r < rows.size(); ++r) {
            if (rows[r].regime == Regime::Indeterminate) continue;
            right = rows[r].regime == Regime::Unbroken;
            break;
        }
        return left && right;
    };

    std::optional<std::pair<std::size_t, std::size_t>> best;
    std::size_t start = 0;
    bool open = false;
    for (std::size_t i = 0; i <= rows.size(); ++i) {
        if (i < rows.size() && in_band(i)) {
            if (!open) { start = i; open = true; }
        } else if (open) {
            open = false;
            const std::size_t end = i - 1;
            if (!best || end - start > best->second - best->first)
                best = std::make_pair(start, end);
        }
    }
    return best;
}

double estimate_oscillation_period(const std::vector<SpectrumRow> &band_rows,
                                   double prominence_floor) {
    std::vector<std::size_t> maxima;
    const std::size_t n = band_rows.size();
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double r = band_rows[i].R_r;
        if (!(r > band_rows[i - 1].R_r) || !(r > band_rows[i + 1].R_r)) continue;
        // Prominence: drop to the lowest point before the next equal-or-higher
        // value on each side.
        double left_min = r, right_min = r;
        for (std::size_t l = i; l-- > 0;) {
            left_min = std::min(left_min, band_rows[l].R_r);
            if (band_rows[l].R_r >= r) break;
        }
        for (std::size_t q = i + 1; q < n; ++q) {
            right_min = std::min(right_min, band_rows[q].R_r);
            if (band_rows[q].R_r >= r) break;
        }
        if (r - std::max(left_min, right_min) >= prominence_floor)
            maxima.push_back(i);
    }

    if (maxima.size() < 3) {
        std::ostringstream msg;
        msg << "oscillation period needs >= 3 reflectivity maxima, found "
            << maxima.size();
        throw InsufficientDataError(msg.str());
    }

    double spacing_sum = 0.0;
    for (std::size_t k = 1; k < maxima.size(); ++k)
        spacing_sum += band_rows[maxima[k]].delta_p - band_rows[maxima[k - 1]].delta_p;
    return spacing_sum / static_cast<double>(maxima.size() - 1);
}

LatticeResult run_lattice(const AxisRange &delta_p_axis,
                          const ExperimentParams &params,
                          double contrast_threshold) {
    LatticeResult result;
    result.contrast_threshold = contrast_threshold;
    result.rows = run_spectrum(delta_p_axis, params);

    // Widest contiguous C > threshold interval.
    std::optional<std::pair<std::size_t, std::size_t>> band;
    std::size_t start = 0;
    bool open = false;
    for (std::size_t i = 0; i <= result.rows.size(); ++i) {
        const bool good = i < result.rows.size() && result.rows[i].C &&
                          *result.rows[i].C > contrast_threshold;
        if (good) {
            if (!open) { start = i; open = true; }
        } else if (open) {
            open = false;
            if (!band || (i - 1) - start > band->second - band->first)
                band = std::make_pair(start, i - 1);
        }
    }
    if (band) {
        result.has_contrast_band = true;
        result.contrast_band_lo = result.rows[band->first].delta_p;
        result.contrast_band_hi = result.rows[band->second].delta_p;
    }

    for (const SpectrumRow &row : result.rows)
        if (row.C) result.max_contrast = std::max(result.max_contrast, *row.C);

    if (const auto unb = unbroken_band(result.rows)) {
        for (std::size_t i = unb->first; i <= unb->second; ++i) {
            if (result.rows[i].R_r > result.max_R_r_unbroken) {
                result.max_R_r_unbroken = result.rows[i].R_r;
                result.R_l_at_max_R_r = result.rows[i].R_l;
                result.delta_p_at_max_R_r = result.rows[i].delta_p;
            }
        }
    }
    return result;
}

} // namespace kkspace
