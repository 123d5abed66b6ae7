#include "kkspace/transfer_matrix.hpp"

#include <cmath>

#include "kkspace/errors.hpp"

namespace kkspace {

using complexd = std::complex<double>;

TransferMatrix operator*(const TransferMatrix &a, const TransferMatrix &b) {
    return TransferMatrix{
        a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
        a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

TransferMatrix slice_matrix(std::complex<double> chi, double slice_len,
                            double lambda_p) {
    if (!(slice_len > 0.0)) throw std::domain_error("slice_len must be > 0");
    if (!(lambda_p > 0.0)) throw std::domain_error("lambda_p must be > 0");

    // Decaying-wave branch: Im(n) >= 0, and Re(n) >= 0 on the real axis.
    complexd n = std::sqrt(complexd(1.0, 0.0) + chi);
    if (n.imag() < 0.0 || (n.imag() == 0.0 && n.real() < 0.0)) n = -n;
    if (n == complexd(0.0, 0.0))
        throw NumericalError("singular refractive index: chi = -1 gives n = 0");

    const double k = 2.0 * constants::pi / lambda_p;
    const complexd phi = n * (k * slice_len);
    const complexd cos_phi = std::cos(phi);
    const complexd sin_phi = std::sin(phi);
    const complexd n2 = n * n;
    const complexd plus = complexd(0.0, 1.0) * (n2 + 1.0) / (2.0 * n) * sin_phi;
    const complexd cross = complexd(0.0, 1.0) * (n2 - 1.0) / (2.0 * n) * sin_phi;

    return TransferMatrix{cos_phi + plus, cross, -cross, cos_phi - plus};
}

TransferMatrix total_matrix(const SusceptibilityProfile &profile, double lambda_p) {
    if (profile.chi.empty())
        throw std::invalid_argument("total_matrix: empty profile");
    const double l = profile.spacing();
    TransferMatrix total = TransferMatrix::identity();
    for (const complexd &chi : profile.chi)
        total = slice_matrix(chi, l, lambda_p) * total;
    return total;
}

ScatteringResult scattering(const TransferMatrix &m, double delta_p) {
    if (m.m22 == complexd(0.0, 0.0))
        throw NumericalError("scattering: m22 = 0 (degenerate transfer matrix)");

    ScatteringResult result;
    result.delta_p = delta_p;
    result.t = 1.0 / m.m22;
    result.r_l = -m.m21 / m.m22;
    result.r_r = m.m12 / m.m22;
    result.R_l = std::norm(result.r_l);
    result.R_r = std::norm(result.r_r);
    result.T = std::norm(result.t);
    return result;
}

std::optional<double> contrast(double R_l, double R_r) {
    const double sum = R_l + R_r;
    if (!(sum > 0.0)) return std::nullopt;
    return (R_r - R_l) / sum;
}

} // namespace kkspace
