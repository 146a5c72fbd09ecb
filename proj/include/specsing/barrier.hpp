#pragma once

#include <stdexcept>
#include <vector>

#include "specsing/conventions.hpp"

namespace specsing {

// Complex barrier v(x) = z for |x| < alpha, 0 otherwise.
struct BarrierSpec
{
    double alpha = 1.0;  // half-length (nm), > 0
    cplx z{0.0, 0.0};    // coupling (nm^-2)
};

// Relates plane-wave coefficients (A, B) of A e^{ikx} + B e^{-ikx}:
// (A+, B+) = M (A-, B-).
struct TransferMatrix
{
    cplx m11{1.0, 0.0};
    cplx m12{0.0, 0.0};
    cplx m21{0.0, 0.0};
    cplx m22{1.0, 0.0};

    cplx det() const { return m11 * m22 - m12 * m21; }
};

struct ScatteringAmplitudes
{
    cplx t;        // T^l = T^r
    cplx r_left;   // R^l
    cplx r_right;  // R^r

    // |T|^2 + |R|^2; left and right reflection coincide for the symmetric barrier.
    double total_intensity() const { return std::norm(t) + std::norm(r_left); }
};

struct ReducedVariables
{
    cplx w;  // sqrt(1 - z/k^2), arg in [0, pi)
    double rho = 0.0;
    double sigma = 0.0;
    double y = 0.0;
    double q = 0.0;
    double r = 0.0;
};

enum class Incidence { Left, Right };

// Thrown when M22 vanishes exactly: reflection and transmission are infinite.
class ExactSingularityError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class NumericalDegeneracyError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// e^{-2i chi w}(1+w)^2 - e^{2i chi w}(1-w)^2
cplx f_func(cplx w, double chi);

/// Closed-form transfer matrix of the barrier at wave number k > 0.
///
/// Entries are evaluated through cos(2 alpha k w) and sinc(2 alpha k w), which
/// equals e^{+-2i alpha k} f(w, +-alpha k)/(4w) identically and stays finite
/// at w = 0 (z = k^2).
TransferMatrix transfer_matrix(const BarrierSpec& spec, double k);

/// t = 1/m22, r_left = -m21/m22, r_right = m12/m22.
ScatteringAmplitudes amplitudes(const TransferMatrix& m);

/// Scale-free distance of M22 from zero: |M22| / sqrt(|M11 M22| + |M12 M21|).
/// Unit determinant makes the denominator 1 at a spectral singularity, and
/// the value is at least 1/sqrt(2) for any real potential.
double m22_residual(const BarrierSpec& spec, double k);

/// rho, sigma, y, q, r and w for the given barrier and k. Requires Re(z) != k^2.
ReducedVariables reduced_variables(const BarrierSpec& spec, double k);

/// Independent construction of M by matching plane waves at x = -alpha and
/// x = +alpha (dense 4x4 solve per basis column). Does not use the closed form.
TransferMatrix oracle_transfer_matrix(const BarrierSpec& spec, double k);

/// Scattering solution psi(x) for a unit-amplitude wave incident from the
/// chosen side, evaluated at each x. psi and psi' are continuous at +-alpha.
std::vector<cplx> wavefunction_profile(const BarrierSpec& spec, double k, Incidence which,
                                       const std::vector<double>& xs);

}  // namespace specsing
