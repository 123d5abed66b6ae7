#ifndef KKSPACE_TRANSFER_MATRIX_HPP
#define KKSPACE_TRANSFER_MATRIX_HPP

#include <complex>
#include <optional>

#include "kkspace/susceptibility.hpp"

namespace kkspace {

// 2x2 unimodular matrix mapping the forward/backward field pair (E+, E-) at
// a slice's left face to its right face.
struct TransferMatrix {
    std::complex<double> m11{1.0, 0.0};
    std::complex<double> m12{0.0, 0.0};
    std::complex<double> m21{0.0, 0.0};
    std::complex<double> m22{1.0, 0.0};

    std::complex<double> det() const { return m11 * m22 - m12 * m21; }
    static TransferMatrix identity() { return {}; }
};

// Matrix product; (a*b) applies b first.
TransferMatrix operator*(const TransferMatrix &a, const TransferMatrix &b);

// Transfer matrix of a homogeneous slab of susceptibility chi between vacuum
// half-spaces, n = sqrt(1 + chi) on the Im(n) >= 0 branch:
//   m11 = cos(phi) + i*(n^2+1)/(2n)*sin(phi),  phi = n*k*l
//   m12 = i*(n^2-1)/(2n)*sin(phi) = -m21
//   m22 = cos(phi) - i*(n^2+1)/(2n)*sin(phi)
// (the interface-propagation-interface product in closed form; det = 1
// identically). Throws NumericalError at chi = -1 (n = 0).
TransferMatrix slice_matrix(std::complex<double> chi, double slice_len,
                            double lambda_p);

// Ordered product M_J * ... * M_1 over the profile's slices, leftmost slice
// applied first.
TransferMatrix total_matrix(const SusceptibilityProfile &profile, double lambda_p);

struct ScatteringResult {
    double delta_p = 0.0;
    std::complex<double> r_l, r_r, t;
    double R_l = 0.0, R_r = 0.0, T = 0.0;
};

// Reflection/transmission amplitudes from the total matrix:
//   t = 1/m22, r_l = -m21/m22, r_r = m12/m22.
// Throws NumericalError when |m22| = 0.
ScatteringResult scattering(const TransferMatrix &m, double delta_p);

// Reflectivity contrast C = (R_r - R_l)/(R_r + R_l); empty when both vanish.
std::optional<double> contrast(double R_l, double R_r);

} // namespace kkspace

#endif
