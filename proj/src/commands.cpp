#include "specsing/commands.hpp"

#include <cmath>
#include <cstdio>

#include "specsing/barrier.hpp"
#include "specsing/locus.hpp"
#include "specsing/tables.hpp"
#include "specsing/waveguide.hpp"

namespace specsing {

std::string format_sci(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

std::string format_cplx(cplx v)
{
    std::string im = format_sci(v.imag());
    if (im.front() != '-')
        im.insert(im.begin(), '+');
    return format_sci(v.real()) + im + "i";
}

std::vector<double> ratio_grid(double span, int points)
{
    std::vector<double> grid;
    if (points == 1)
        return {1.0};
    grid.reserve(points);
    for (int i = 0; i < points; ++i)
        grid.push_back(1.0 + span * (2.0 * i / (points - 1) - 1.0));
    return grid;
}

int cmd_transfer(cplx z, double alpha, double k, std::ostream& out)
{
    const BarrierSpec spec{alpha, z};
    const TransferMatrix m = transfer_matrix(spec, k);
    out << "m11=" << format_cplx(m.m11) << '\n'
        << "m12=" << format_cplx(m.m12) << '\n'
        << "m21=" << format_cplx(m.m21) << '\n'
        << "m22=" << format_cplx(m.m22) << '\n'
        << "det=" << format_cplx(m.det()) << '\n';
    try {
        const ScatteringAmplitudes a = amplitudes(m);
        out << "T=" << format_cplx(a.t) << '\n'
            << "R=" << format_cplx(a.r_left) << '\n'
            << "T2_plus_R2=" << format_sci(a.total_intensity()) << '\n';
    } catch (const ExactSingularityError&) {
        out << "T=inf\nR=inf\nT2_plus_R2=inf\n";
    }
    out << "residual=" << format_sci(m22_residual(spec, k)) << '\n';
    return kExitOk;
}

int cmd_curve(int n, double rho_min, double rho_max, int samples, std::ostream& out)
{
    const auto pts = trace_curve(BranchLabel{n, -1}, rho_min, rho_max, samples);
    out << "rho,sigma,alpha_k,residual\n";
    for (const auto& p : pts)
        out << format_sci(p.rho) << ',' << format_sci(p.sigma) << ',' << format_sci(p.alpha_k) << ','
            << format_sci(p.residual) << '\n';
    return kExitOk;
}

int cmd_design(const RunConfig& config, int n, std::optional<int> ell, std::ostream& out)
{
    auto sols = find_singularities(config.medium, config.geometry, n, config.search);
    if (ell)
        std::erase_if(sols, [&](const SingularitySolution& s) { return s.ell != *ell; });
    out << "n,ell,omega_eV,lambda_nm,two_alpha_mm,sqrt_eps_re,sqrt_eps_im,residual\n";
    for (const auto& s : sols)
        out << s.branch.n << ',' << s.ell << ',' << format_sci(s.omega) << ',' << format_sci(s.lambda) << ','
            << format_sci(s.two_alpha_mm()) << ',' << format_sci(s.refractive_index.real()) << ','
            << format_sci(s.refractive_index.imag()) << ',' << format_sci(s.residual) << '\n';
    return sols.empty() ? kExitNoSolution : kExitOk;
}

int cmd_scan(const RunConfig& config, int n, int ell, double span, int points, std::ostream& out)
{
    const auto sols = find_singularities(config.medium, config.geometry, n, config.search);
    const SingularitySolution* chosen = nullptr;
    for (const auto& s : sols)
        if (s.ell == ell)
            chosen = &s;
    if (chosen == nullptr)
        return kExitNoSolution;

    const auto rows = gain_scan(*chosen, config.medium, config.geometry, ratio_grid(span, points));
    out << "# solution n=" << n << " ell=" << ell << " omega_s_eV=" << format_sci(chosen->omega)
        << " two_alpha_mm=" << format_sci(chosen->two_alpha_mm())
        << " two_beta_over_m_nm=" << format_sci(2.0 * config.geometry.beta / config.geometry.m)
        << " lambda_nm=" << format_sci(chosen->lambda) << '\n'
        << "# log10 values are capped at " << format_sci(kGainScanCap) << " where |M22| < 1e-300\n"
        << "omega_ratio,log10_T2_plus_R2\n";
    for (const auto& [ratio, value] : rows)
        out << format_sci(ratio) << ',' << format_sci(value) << '\n';
    return kExitOk;
}

int cmd_tables(int which, std::ostream& out)
{
    const auto rows = reproduce_table(which);
    char buf[512];
    std::snprintf(buf, sizeof buf, "%-12s %6s %3s %14s %14s %9s %14s %14s %9s %26s %9s\n", "geometry", "n", "ell",
                  "lambda_nm", "ref", "dev", "two_alpha_mm", "ref", "dev", "sqrt_eps", "dev");
    out << buf;
    double worst = 0.0;
    for (const auto& r : rows) {
        worst = std::max(worst, r.max_deviation());
        if (!r.computed) {
            std::snprintf(buf, sizeof buf, "%-12s %6d %3d   (no certified solution)\n", r.label.c_str(), r.n, r.ell);
            out << buf;
            continue;
        }
        const auto& s = *r.computed;
        char eps[64];
        std::snprintf(eps, sizeof eps, "%.6f%+.5ei", s.refractive_index.real(), s.refractive_index.imag());
        std::snprintf(buf, sizeof buf, "%-12s %6d %3d %14.6g %14.6g %9.2e %14.6g %14.6g %9.2e %26s %9.2e\n",
                      r.label.c_str(), r.n, r.ell, s.lambda, r.lambda_nm, r.dev_lambda(), s.two_alpha_mm(),
                      r.two_alpha_mm, r.dev_two_alpha(), eps,
                      std::max(r.dev_sqrt_eps_re(), r.dev_sqrt_eps_im()));
        out << buf;
    }
    std::snprintf(buf, sizeof buf, "max relative deviation %.3e (tolerance %.0e)\n", worst, kTableTolerance);
    out << buf;
    return kExitOk;
}

}  // namespace specsing
