#pragma once

#include <complex>

namespace specsing {

using cplx = std::complex<double>;

// Unit system: energies in eV (hbar = 1), lengths in nm, wave numbers in nm^-1.
struct PhysicalConstants
{
    static constexpr double hbar_c = 197.3269804;  // eV nm
    static constexpr double c = 1.0;               // natural units
};

inline constexpr double kHbarC = PhysicalConstants::hbar_c;
inline constexpr double kPi = 3.14159265358979323846;

/// Square root on the branch with arg(w) in [0, pi).
///
/// The standard std::sqrt returns arg in (-pi/2, pi/2]; whenever that lands in
/// the lower half-plane (or on the negative real axis) it is negated.
cplx principal_sqrt_upper(cplx u);

/// omega [eV] -> omega/c [nm^-1]. Throws std::invalid_argument for negative input.
double ev_to_inverse_nm(double omega_ev);

/// sin(x)/x, entire; Taylor branch near zero.
cplx sinc(cplx x);

}  // namespace specsing
