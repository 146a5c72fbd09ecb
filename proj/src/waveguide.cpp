#include "specsing/waveguide.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace specsing {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_positive_omega(double omega)
{
    if (!(omega > 0.0))
        throw std::invalid_argument("frequency must be positive");
}

double k_at_offset(const WaveguideGeometry& geom, double t)
{
    return std::sqrt(t * (2.0 * geom.cutoff() + t)) / kHbarC;
}

// Root function along C^Omega: sign of F_n^- at (rho(t), y(t)); NaN where rho >= 1.
double gap_at_offset(const GainMedium& medium, const WaveguideGeometry& geom, BranchLabel branch,
                     double t)
{
    const auto [rho, sigma] = rho_sigma_at_offset(medium, geom, t);
    if (!(rho < 1.0) || sigma == 0.0)
        return kNaN;
    return branch_gap(branch, rho, sigma / (1.0 - rho));
}

template <class Fn>
double bisect(Fn&& fn, double lo, double hi, double f_lo)
{
    for (;;) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            return lo;
        const double f_mid = fn(mid);
        if (f_mid == 0.0)
            return mid;
        if (std::isnan(f_mid))
            return kNaN;
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
}

// Bisection on fn near t0, widening the bracket until a sign change appears.
template <class Fn>
double local_root(Fn&& fn, double t0)
{
    const double f0 = fn(t0);
    if (f0 == 0.0)
        return t0;
    for (double width = 1e-10; width < 1.0; width *= 4.0) {
        for (double other : {t0 * (1.0 + width), t0 * (1.0 - width)}) {
            const double f_other = fn(other);
            if ((f_other < 0.0) != (f0 < 0.0))
                return other > t0 ? bisect(fn, t0, other, f0) : bisect(fn, other, t0, f_other);
        }
    }
    return kNaN;
}

}  // namespace

double WaveguideGeometry::cutoff() const { return kPi * m * kHbarC / (2.0 * beta); }

WaveguideGeometry WaveguideGeometry::from_two_beta_over_m(double two_beta_over_m_nm, int m)
{
    if (!(two_beta_over_m_nm > 0.0) || m < 1)
        throw std::invalid_argument("waveguide height and mode index must be positive");
    WaveguideGeometry g;
    g.m = m;
    g.beta = 0.5 * two_beta_over_m_nm * m;
    return g;
}

cplx permittivity(const GainMedium& medium, double omega)
{
    require_positive_omega(omega);
    const cplx denom{omega * omega - medium.omega0 * medium.omega0, 2.0 * medium.delta * omega};
    return 1.0 - medium.omega_p_sq / denom;
}

double k_of(const WaveguideGeometry& geom, double omega)
{
    const double cutoff = geom.cutoff();
    if (!(omega > cutoff))
        throw CutoffError("frequency at or below the waveguide cutoff");
    return k_at_offset(geom, omega - cutoff);
}

cplx coupling_of(const GainMedium& medium, double omega)
{
    const double big_k = ev_to_inverse_nm(omega);
    return big_k * big_k * (1.0 - permittivity(medium, omega));
}

std::pair<double, double> rho_sigma_at_offset(const GainMedium& medium,
                                              const WaveguideGeometry& geom, double t)
{
    if (!(t > 0.0))
        throw CutoffError("frequency at or below the waveguide cutoff");
    const double cutoff = geom.cutoff();
    const double omega = cutoff + t;
    const double detune = omega * omega - medium.omega0 * medium.omega0;
    const double propagating = t * (2.0 * cutoff + t) / (omega * omega);
    const double denom =
        (detune * detune + 4.0 * omega * omega * medium.delta * medium.delta) * propagating;
    return {medium.omega_p_sq * detune / denom, -2.0 * omega * medium.omega_p_sq * medium.delta / denom};
}

std::pair<double, double> rho_sigma_of(const GainMedium& medium, const WaveguideGeometry& geom,
                                       double omega)
{
    require_positive_omega(omega);
    return rho_sigma_at_offset(medium, geom, omega - geom.cutoff());
}

std::vector<std::pair<double, double>> physical_curve(const GainMedium& medium,
                                                      const WaveguideGeometry& geom,
                                                      const std::vector<double>& omega_grid)
{
    std::vector<std::pair<double, double>> out;
    out.reserve(omega_grid.size());
    for (double omega : omega_grid) {
        try {
            out.push_back(rho_sigma_of(medium, geom, omega));
        } catch (const CutoffError&) {
        }
    }
    return out;
}

std::vector<SingularitySolution> find_singularities(const GainMedium& medium,
                                                    const WaveguideGeometry& geom, int n,
                                                    const SearchOptions& opts)
{
    if (n < 1)
        throw std::invalid_argument("find_singularities: n must be >= 1");
    const double cutoff = geom.cutoff();
    const double omega_lo = opts.omega_min.value_or(cutoff * (1.0 + 1e-9));
    const double omega_hi = opts.omega_max.value_or(10.0 * medium.omega0);
    if (!(omega_lo > cutoff))
        throw CutoffError("search window starts at or below the waveguide cutoff");
    if (!(omega_hi > omega_lo))
        return {};

    const BranchLabel branch{n, -1};
    auto gap = [&](double t) { return gap_at_offset(medium, geom, branch, t); };

    const double t_lo = omega_lo - cutoff;
    const double t_hi = omega_hi - cutoff;
    const int count = std::max(opts.grid_points, 2);
    const double step = std::log(t_hi / t_lo) / (count - 1);

    std::vector<double> roots;
    double t_prev = t_lo;
    double g_prev = gap(t_prev);
    for (int i = 1; i < count; ++i) {
        const double t_next = i == count - 1 ? t_hi : t_lo * std::exp(step * i);
        const double g_next = gap(t_next);
        if (g_prev == 0.0)
            roots.push_back(t_prev);
        else if (!std::isnan(g_prev) && !std::isnan(g_next) && g_next != 0.0 &&
                 (g_prev < 0.0) != (g_next < 0.0))
            roots.push_back(bisect(gap, t_prev, t_next, g_prev));
        t_prev = t_next;
        g_prev = g_next;
    }

    std::vector<SingularitySolution> out;
    for (double t : roots) {
        if (std::isnan(t))
            continue;
        const auto [rho, sigma] = rho_sigma_at_offset(medium, geom, t);
        if (!(rho < 1.0) || !(sigma > 0.0))
            continue;
        const double alpha_k = G_of(branch, rho, sigma / (1.0 - rho));

        SingularitySolution s;
        s.branch = branch;
        s.rho_star = rho;
        s.sigma_star = sigma;
        s.omega = cutoff + t;
        s.k = k_at_offset(geom, t);
        s.alpha = alpha_k / s.k;
        s.lambda = 2.0 * kPi * kHbarC / s.omega;
        s.epsilon = permittivity(medium, s.omega);
        s.refractive_index = std::sqrt(s.epsilon);
        if (!(s.alpha > 0.0))
            continue;
        s.residual = m22_residual(BarrierSpec{s.alpha, s.k * s.k * cplx{rho, sigma}}, s.k);
        if (!(s.residual < opts.certify_tol))
            continue;
        out.push_back(s);
    }

    std::stable_sort(out.begin(), out.end(), [](const SingularitySolution& a, const SingularitySolution& b) {
        if (std::abs(a.rho_star - b.rho_star) >= 1e-12)
            return a.rho_star > b.rho_star;
        return a.sigma_star < b.sigma_star;
    });
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i].ell = static_cast<int>(i) + 1;
    return out;
}

std::pair<double, double> consistency_omegas(const GainMedium& medium,
                                             const WaveguideGeometry& geom,
                                             const SingularitySolution& sol)
{
    const double cutoff = geom.cutoff();
    const double t0 = sol.omega - cutoff;
    auto rho_eq = [&](double t) {
        return t > 0.0 ? rho_sigma_at_offset(medium, geom, t).first - sol.rho_star : kNaN;
    };
    auto sigma_eq = [&](double t) {
        return t > 0.0 ? rho_sigma_at_offset(medium, geom, t).second - sol.sigma_star : kNaN;
    };
    return {cutoff + local_root(rho_eq, t0), cutoff + local_root(sigma_eq, t0)};
}

std::vector<std::pair<double, double>> gain_scan(const SingularitySolution& solution,
                                                 const GainMedium& medium,
                                                 const WaveguideGeometry& geom,
                                                 const std::vector<double>& ratio_grid)
{
    std::vector<std::pair<double, double>> out;
    out.reserve(ratio_grid.size());
    for (double ratio : ratio_grid) {
        const double omega = ratio * solution.omega;
        const double k = k_of(geom, omega);
        const TransferMatrix m = transfer_matrix(BarrierSpec{solution.alpha, coupling_of(medium, omega)}, k);
        double value = kGainScanCap;
        if (std::abs(m.m22) >= 1e-300) {
            try {
                value = std::log10(amplitudes(m).total_intensity());
            } catch (const ExactSingularityError&) {
            }
        }
        out.emplace_back(ratio, value);
    }
    return out;
}

}  // namespace specsing
