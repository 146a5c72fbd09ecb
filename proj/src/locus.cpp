#include "specsing/locus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "specsing/barrier.hpp"
#include "specsing/conventions.hpp"

namespace specsing {

namespace {

void require_rho_not_one(double rho)
{
    if (rho == 1.0)
        throw std::invalid_argument("rho = 1 is excluded");
}

// Pieces shared by Q and R. With a = |1-rho|, s = sqrt(y^2+1):
//   d = (1-rho)^2 y^2 + rho^2,
//   v = a s + rho - 1 >= 0,
//   u = 1 - a s,          d = u^2 + 2 v.
struct Pieces
{
    double a, s, s_minus_1, d, v, u;
};

Pieces pieces(double rho, double y)
{
    Pieces p;
    p.a = std::abs(1.0 - rho);
    p.s = std::hypot(y, 1.0);
    p.s_minus_1 = y * y / (p.s + 1.0);
    const double ty = (1.0 - rho) * y;
    p.d = ty * ty + rho * rho;
    if (!(p.d > 0.0))
        throw std::invalid_argument("(rho, y) = (0, 0) is the free real case");
    p.v = rho < 1.0 ? p.a * p.s_minus_1 : p.a * p.s + rho - 1.0;
    p.u = 1.0 - p.a * p.s;
    return p;
}

// arccos(u / sqrt(d)) without cancellation near +-1.
double arccos_term(const Pieces& p)
{
    const double root_d = std::sqrt(p.d);
    if (p.u >= 0.0) {
        const double one_minus = 2.0 * p.v / (root_d * (root_d + p.u));
        return 2.0 * std::asin(std::min(1.0, std::sqrt(0.5 * one_minus)));
    }
    const double one_plus = 2.0 * p.v / (root_d * (root_d - p.u));
    return kPi - 2.0 * std::asin(std::min(1.0, std::sqrt(0.5 * one_plus)));
}

// |1-rho| s + 1 - rho, computed as v' = a (s - 1) when rho > 1.
double q_numerator(double rho, const Pieces& p)
{
    return rho < 1.0 ? p.a * p.s + 1.0 - rho : p.a * p.s_minus_1;
}

double tilde_factor(const Pieces& p) { return std::sqrt(p.s_minus_1 / (p.s + 1.0)); }

double R_from(BranchLabel b, const Pieces& p) { return kPi * b.n + b.eps * arccos_term(p); }

LocusPoint make_point(BranchLabel branch, double rho, double y)
{
    LocusPoint pt;
    pt.branch = branch;
    pt.rho = rho;
    pt.y = y;
    pt.sigma = (1.0 - rho) * y;
    pt.alpha_k = G_of(branch, rho, y);
    pt.residual = std::numeric_limits<double>::quiet_NaN();
    return pt;
}

}  // namespace

double q_of(double rho, double y, double alpha_k)
{
    require_rho_not_one(rho);
    const double s = std::hypot(y, 1.0);
    const double sgn = (y > 0.0) - (y < 0.0);
    return alpha_k * std::sqrt(2.0 * std::abs(1.0 - rho) * (y * y / (s + 1.0))) * sgn;
}

double r_of(double rho, double y, double alpha_k)
{
    require_rho_not_one(rho);
    return alpha_k * std::sqrt(2.0 * std::abs(1.0 - rho) * (std::hypot(y, 1.0) + 1.0));
}

double Q_of(double rho, double y)
{
    const Pieces p = pieces(rho, y);
    return std::asinh(std::sqrt(2.0 * q_numerator(rho, p) / p.d));
}

double R_of(BranchLabel branch, double rho, double y) { return R_from(branch, pieces(rho, y)); }

double G_of(BranchLabel branch, double rho, double y)
{
    require_rho_not_one(rho);
    const Pieces p = pieces(rho, y);
    return R_from(branch, p) / std::sqrt(2.0 * p.a * (p.s + 1.0));
}

double Q_tilde_of(BranchLabel branch, double rho, double y)
{
    const Pieces p = pieces(rho, y);
    return R_from(branch, p) * tilde_factor(p);
}

double F_of(BranchLabel branch, double rho, double y)
{
    const Pieces p = pieces(rho, y);
    const double sh = std::sinh(tilde_factor(p) * R_from(branch, p));
    return q_numerator(rho, p) / p.d - 0.5 * sh * sh;
}

double branch_gap(BranchLabel branch, double rho, double y)
{
    const Pieces p = pieces(rho, y);
    return std::asinh(std::sqrt(2.0 * q_numerator(rho, p) / p.d)) - tilde_factor(p) * R_from(branch, p);
}

double certify(double rho, double sigma, double alpha_k)
{
    if (!(alpha_k > 0.0) || !std::isfinite(alpha_k))
        return std::numeric_limits<double>::infinity();
    return m22_residual(BarrierSpec{alpha_k, cplx{rho, sigma}}, 1.0);
}

double split_equation_mismatch(double rho, double sigma, double alpha_k)
{
    const double y = sigma / (1.0 - rho);
    const double q = q_of(rho, y, alpha_k);
    const double r = r_of(rho, y, alpha_k);
    const double om = 1.0 - rho;
    const double d = om * om * y * y + rho * rho;
    const double re_rhs = (1.0 - om * om * (y * y + 1.0)) / d;
    const double im_rhs = -2.0 * om * y / d;
    const double lhs_re = std::cos(r) * std::cosh(q);
    const double lhs_im = std::sin(r) * std::sinh(q);
    const double top = std::max(std::abs(lhs_re - re_rhs), std::abs(lhs_im - im_rhs));
    const double bottom = std::max(std::abs(lhs_re + re_rhs), std::abs(lhs_im + im_rhs));
    return std::min(top, bottom);
}

std::vector<LocusPoint> candidate_points(BranchLabel branch, double rho,
                                         const RootSearchOptions& opts)
{
    if (!branch.admissible())
        throw std::invalid_argument("inadmissible branch label");
    if (!(rho < 1.0))
        throw std::invalid_argument("candidate_points: rho must be < 1");

    const double decades = std::log10(opts.y_max / opts.y_min);
    const int count = std::max(2, static_cast<int>(std::ceil(decades * opts.points_per_decade)) + 1);
    const double step = std::log(opts.y_max / opts.y_min) / (count - 1);

    auto gap = [&](double y) { return branch_gap(branch, rho, y); };

    std::vector<LocusPoint> out;
    double y_prev = opts.y_min;
    double g_prev = gap(y_prev);
    for (int i = 1; i < count; ++i) {
        const double y_next = opts.y_min * std::exp(step * i);
        const double g_next = gap(y_next);
        if (g_prev == 0.0) {
            out.push_back(make_point(branch, rho, y_prev));
        } else if ((g_prev < 0.0) != (g_next < 0.0) && g_next != 0.0) {
            double lo = y_prev, hi = y_next, g_lo = g_prev;
            while ((hi - lo) > opts.rel_tol * lo) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi)
                    break;
                const double g_mid = gap(mid);
                if (g_mid == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if ((g_mid < 0.0) == (g_lo < 0.0)) {
                    lo = mid;
                    g_lo = g_mid;
                } else {
                    hi = mid;
                }
            }
            out.push_back(make_point(branch, rho, 0.5 * (lo + hi)));
        }
        y_prev = y_next;
        g_prev = g_next;
    }
    for (auto& pt : out)
        pt.residual = certify(pt.rho, pt.sigma, pt.alpha_k);
    return out;
}

std::vector<LocusPoint> candidate_points(BranchLabel branch, double rho)
{
    return candidate_points(branch, rho, RootSearchOptions{});
}

std::vector<LocusPoint> solve_sigma(BranchLabel branch, double rho, const RootSearchOptions& opts)
{
    std::vector<LocusPoint> pts = candidate_points(branch, rho, opts);
    std::erase_if(pts, [&](const LocusPoint& p) { return !(p.residual < opts.certify_tol); });
    return pts;
}

std::vector<LocusPoint> solve_sigma(BranchLabel branch, double rho)
{
    return solve_sigma(branch, rho, RootSearchOptions{});
}

std::vector<LocusPoint> trace_curve(BranchLabel branch, double rho_min, double rho_max, int samples)
{
    if (!(rho_min < rho_max && rho_max < 1.0) || samples < 2)
        throw std::invalid_argument("trace_curve: need rho_min < rho_max < 1 and samples >= 2");

    // Uniform in log(1 - rho): dense near rho = 1.
    const double lo = std::log(1.0 - rho_max);
    const double hi = std::log(1.0 - rho_min);
    std::vector<LocusPoint> out;
    for (int i = 0; i < samples; ++i) {
        double rho = 1.0 - std::exp(lo + (hi - lo) * i / (samples - 1));
        if (i == 0)
            rho = rho_max;
        if (i == samples - 1)
            rho = rho_min;
        auto pts = solve_sigma(branch, rho);
        out.insert(out.end(), pts.begin(), pts.end());
    }
    std::stable_sort(out.begin(), out.end(), [](const LocusPoint& a, const LocusPoint& b) {
        if (a.rho != b.rho)
            return a.rho > b.rho;
        return a.sigma < b.sigma;
    });
    return out;
}

}  // namespace specsing
