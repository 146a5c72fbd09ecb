#include "specsing/barrier.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "specsing/locus.hpp"

namespace specsing {

namespace {

constexpr cplx I{0.0, 1.0};

void require_positive_k(double k)
{
    if (!(k > 0.0))
        throw std::invalid_argument("wave number k must be positive");
}

}  // namespace

cplx f_func(cplx w, double chi)
{
    const cplx phase = 2.0 * I * chi * w;
    return std::exp(-phase) * (1.0 + w) * (1.0 + w) - std::exp(phase) * (1.0 - w) * (1.0 - w);
}

namespace {

// Entries of M, optionally all multiplied by exp(-|Im theta|). The common
// factor cancels in ratios and keeps strongly evanescent barriers finite.
TransferMatrix entries(const BarrierSpec& spec, double k, bool rescale)
{
    require_positive_k(k);
    if (!(spec.alpha > 0.0))
        throw std::invalid_argument("barrier half-length alpha must be positive");

    const double ak = spec.alpha * k;
    const cplx w = principal_sqrt_upper(1.0 - spec.z / (k * k));
    const cplx w2 = w * w;
    const cplx theta = 2.0 * ak * w;

    cplx c, s_over_2w;  // cos(theta) and sin(2 ak w) / (2w)
    const double b = theta.imag();
    if (rescale && std::abs(b) > 20.0) {
        const cplx up = std::exp(-b - std::abs(b)) * std::polar(1.0, theta.real());
        const cplx down = std::exp(b - std::abs(b)) * std::polar(1.0, -theta.real());
        c = 0.5 * (up + down);
        s_over_2w = (up - down) / (2.0 * I) / (2.0 * w);
    } else {
        c = std::cos(theta);
        s_over_2w = ak * sinc(theta);
    }

    TransferMatrix m;
    m.m11 = std::exp(-2.0 * I * ak) * (c + I * (1.0 + w2) * s_over_2w);
    m.m22 = std::exp(2.0 * I * ak) * (c - I * (1.0 + w2) * s_over_2w);
    m.m12 = I * (w2 - 1.0) * s_over_2w;
    m.m21 = -m.m12;
    return m;
}

}  // namespace

TransferMatrix transfer_matrix(const BarrierSpec& spec, double k)
{
    return entries(spec, k, false);
}

ScatteringAmplitudes amplitudes(const TransferMatrix& m)
{
    if (m.m22 == cplx{0.0, 0.0})
        throw ExactSingularityError("M22 = 0: exact spectral singularity");
    return {1.0 / m.m22, -m.m21 / m.m22, m.m12 / m.m22};
}

double m22_residual(const BarrierSpec& spec, double k)
{
    const TransferMatrix m = entries(spec, k, true);
    const double scale = std::abs(m.m11) * std::abs(m.m22) + std::abs(m.m12) * std::abs(m.m21);
    return std::abs(m.m22) / std::sqrt(scale);
}

ReducedVariables reduced_variables(const BarrierSpec& spec, double k)
{
    require_positive_k(k);
    ReducedVariables rv;
    const double k2 = k * k;
    rv.w = principal_sqrt_upper(1.0 - spec.z / k2);
    rv.rho = spec.z.real() / k2;
    rv.sigma = spec.z.imag() / k2;
    if (rv.rho == 1.0)
        throw std::invalid_argument("reduced_variables: rho = 1 leaves y undefined");
    rv.y = rv.sigma / (1.0 - rv.rho);
    rv.q = q_of(rv.rho, rv.y, spec.alpha * k);
    rv.r = r_of(rv.rho, rv.y, spec.alpha * k);
    return rv;
}

TransferMatrix oracle_transfer_matrix(const BarrierSpec& spec, double k)
{
    require_positive_k(k);
    const double a = spec.alpha;
    const cplx kappa = k * std::sqrt(cplx(1.0) - spec.z / (k * k));
    if (std::abs(kappa) < 1e-300)
        throw NumericalDegeneracyError("oracle: interior wave number vanishes");

    const cplx el = std::exp(-I * k * a);      // e^{ik(-a)}
    const cplx er = std::exp(I * k * a);       // e^{ik(+a)}
    const cplx il = std::exp(-I * kappa * a);  // e^{i kappa (-a)}
    const cplx ir = std::exp(I * kappa * a);   // e^{i kappa (+a)}

    // Unknowns (C, D, A+, B+); interior C e^{i kappa x} + D e^{-i kappa x}.
    Eigen::Matrix4cd sys;
    sys << il, 1.0 / il, 0.0, 0.0,
           I * kappa * il, -I * kappa / il, 0.0, 0.0,
           ir, 1.0 / ir, -er, -1.0 / er,
           I * kappa * ir, -I * kappa / ir, -I * k * er, I * k / er;

    // Evanescent interiors spread the entries over many decades, which the LU
    // rank threshold misreads as rank loss; judge the solve by its residual instead.
    Eigen::FullPivLU<Eigen::Matrix4cd> lu(sys);
    lu.setThreshold(0.0);

    auto column = [&](cplx a_minus, cplx b_minus) {
        Eigen::Vector4cd rhs;
        rhs << a_minus * el + b_minus / el,
               I * k * (a_minus * el - b_minus / el),
               0.0, 0.0;
        const Eigen::Vector4cd sol = lu.solve(rhs);
        // Componentwise backward error, row by row.
        const Eigen::Vector4d slack = 1e-8 * (sys.cwiseAbs() * sol.cwiseAbs() + rhs.cwiseAbs());
        if (!sol.allFinite() || !((sys * sol - rhs).cwiseAbs().array() <= slack.array()).all())
            throw NumericalDegeneracyError("oracle: singular plane-wave matching system");
        return std::pair<cplx, cplx>{sol(2), sol(3)};
    };

    const auto [a1, b1] = column(1.0, 0.0);
    const auto [a2, b2] = column(0.0, 1.0);
    return {a1, a2, b1, b2};
}

std::vector<cplx> wavefunction_profile(const BarrierSpec& spec, double k, Incidence which,
                                       const std::vector<double>& xs)
{
    const ScatteringAmplitudes amp = amplitudes(transfer_matrix(spec, k));
    const double a = spec.alpha;
    const cplx kappa = k * principal_sqrt_upper(1.0 - spec.z / (k * k));

    cplx a_minus, b_minus, a_plus, b_plus;
    if (which == Incidence::Left) {
        a_minus = 1.0;
        b_minus = amp.r_left;
        a_plus = amp.t;
        b_plus = 0.0;
    } else {
        a_minus = 0.0;
        b_minus = amp.t;
        a_plus = amp.r_right;
        b_plus = 1.0;
    }

    // Interior psi = P cos(kappa x) + Q x sinc(kappa x), matched at x = -a.
    const cplx el = std::exp(-I * k * a);
    const cplx psi_l = a_minus * el + b_minus / el;
    const cplx dpsi_l = I * k * (a_minus * el - b_minus / el);
    const cplx c = std::cos(kappa * a);
    const cplx s_a = a * sinc(kappa * a);  // sin(kappa a)/kappa
    const cplx p = c * psi_l + s_a * dpsi_l;
    const cplx q = -kappa * kappa * s_a * psi_l + c * dpsi_l;

    std::vector<cplx> out;
    out.reserve(xs.size());
    for (double x : xs) {
        if (x < -a) {
            const cplx e = std::exp(I * k * x);
            out.push_back(a_minus * e + b_minus / e);
        } else if (x > a) {
            const cplx e = std::exp(I * k * x);
            out.push_back(a_plus * e + b_plus / e);
        } else {
            out.push_back(p * std::cos(kappa * x) + q * x * sinc(kappa * x));
        }
    }
    return out;
}

}  // namespace specsing
