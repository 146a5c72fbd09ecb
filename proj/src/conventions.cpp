#include "specsing/conventions.hpp"

#include <cmath>
#include <stdexcept>

namespace specsing {

cplx principal_sqrt_upper(cplx u)
{
    const cplx s = std::sqrt(u);
    if (s.imag() > 0.0 || (s.imag() == 0.0 && s.real() >= 0.0))
        return s;
    return -s;
}

double ev_to_inverse_nm(double omega_ev)
{
    if (!(omega_ev >= 0.0))
        throw std::invalid_argument("ev_to_inverse_nm: energy must be non-negative");
    return omega_ev / kHbarC;
}

cplx sinc(cplx x)
{
    if (std::abs(x) < 1e-4) {
        const cplx x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

}  // namespace specsing
