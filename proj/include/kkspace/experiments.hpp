#ifndef KKSPACE_EXPERIMENTS_HPP
#define KKSPACE_EXPERIMENTS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "kkspace/kk.hpp"
#include "kkspace/transfer_matrix.hpp"

namespace kkspace {

// Inclusive uniform axis min, min+step, ..., min + (count-1)*step.
struct AxisRange {
    double min = 0.0;
    double max = 0.0;
    double step = 1.0;

    int count() const;
    double value(int i) const { return min + step * static_cast<double>(i); }
};

struct ScanGrid {
    AxisRange delta_p{-150.0, 50.0, 0.25};
    std::optional<AxisRange> delta0; // second axis for 2-D maps
    std::vector<double> lengths;     // m, for length sweeps
    std::size_t max_evaluations = 4'000'000;

    std::size_t total_points() const;
    // Throws std::invalid_argument on empty ranges, nonpositive steps, or
    // point counts above max_evaluations.
    void validate_or_throw() const;
};

struct ExperimentParams {
    AtomMedium medium;
    ControlField control;
    SampleGeometry geometry;
    Model model = Model::TwoLevel;
    KkThresholds kk;
    int threads = 1;
};

ExperimentParams reference_params();
ExperimentParams lattice_reference_params();

struct SpectrumRow {
    double delta_p = 0.0;
    double R_l = 0.0, R_r = 0.0, T = 0.0;
    std::optional<double> C;    // empty when R_l = R_r = 0
    std::optional<double> d_kk; // empty when indeterminate
    Regime regime = Regime::Indeterminate;
    double residual = 0.0;
};

// Spatial susceptibility profile plus its KK reconstruction, as plotted
// against position.
struct ProfileTable {
    std::vector<double> x;         // m
    std::vector<double> chi_re;
    std::vector<double> chi_im;
    std::vector<double> chi_kk_re;
};

ProfileTable run_profile(double delta_p, const ExperimentParams &params);

// One row per detuning: reflectivities, transmissivity, contrast, D_kk and
// the regime label. Rows are computed in parallel and assembled by grid
// index, so the result is independent of the thread count.
std::vector<SpectrumRow> run_spectrum(const AxisRange &delta_p_axis,
                                      const ExperimentParams &params);

struct MapCell {
    std::optional<double> d_kk;
    double R_l = 0.0, R_r = 0.0;
    Regime regime = Regime::Indeterminate;
};

// Row-major over (delta0, delta_p): cell(i, j) = cells[i*delta_p_axis + j].
struct MapResult {
    std::vector<double> delta0_axis;
    std::vector<double> delta_p_axis;
    std::vector<MapCell> cells;

    const MapCell &cell(std::size_t i_delta0, std::size_t j_delta_p) const {
        return cells[i_delta0 * delta_p_axis.size() + j_delta_p];
    }
};

MapResult run_map(const ScanGrid &grid, const ExperimentParams &params);

struct LengthSpectrum {
    double length = 0.0; // m
    std::vector<SpectrumRow> rows;
};

// Re-runs the spectrum for each sample length at fixed density.
std::vector<LengthSpectrum> run_length_sweep(const std::vector<double> &lengths,
                                             const AxisRange &delta_p_axis,
                                             const ExperimentParams &params);

// Index range [first, last] of the widest contiguous unbroken run in `rows`.
// Interior indeterminate points (the D_kk denominator zero-crossing) do not
// split the band. Empty when no unbroken rows exist.
std::optional<std::pair<std::size_t, std::size_t>>
unbroken_band(const std::vector<SpectrumRow> &rows);

// Mean detuning spacing between successive local maxima of R_r within the
// given rows. Maxima are strict three-point peaks with prominence above
// `prominence_floor`. Throws InsufficientDataError below 3 maxima.
double estimate_oscillation_period(const std::vector<SpectrumRow> &band_rows,
                                   double prominence_floor = 0.005);

struct LatticeResult {
    std::vector<SpectrumRow> rows;
    double max_contrast = 0.0;
    // Widest contiguous interval with C > contrast_threshold.
    bool has_contrast_band = false;
    double contrast_band_lo = 0.0, contrast_band_hi = 0.0;
    double contrast_threshold = 0.9;
    // Strongest reflection inside the unbroken band and the simultaneous
    // opposite-side reflectivity.
    double max_R_r_unbroken = 0.0;
    double R_l_at_max_R_r = 0.0;
    std::optional<double> delta_p_at_max_R_r;
};

LatticeResult run_lattice(const AxisRange &delta_p_axis,
                          const ExperimentParams &params,
                          double contrast_threshold = 0.9);

} // namespace kkspace

#endif
