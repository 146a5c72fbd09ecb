// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "specsing/barrier.hpp"
#include "specsing/commands.hpp"
#include "specsing/locus.hpp"
#include "specsing/tables.hpp"
#include "specsing/waveguide.hpp"

using namespace specsing;

namespace {

struct Verdict
{
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* pattern, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

double rel_entry_error(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

const SingularitySolution* pick(const std::vector<SingularitySolution>& sols, int ell)
{
    for (const auto& s : sols)
        if (s.ell == ell)
            return &s;
    return nullptr;
}

Verdict table(int which, double budget_s)
{
    const auto t0 = std::chrono::steady_clock::now();
    const auto rows = reproduce_table(which);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    double worst = 0.0;
    std::string worst_row;
    int solved = 0;
    for (const auto& r : rows) {
        solved += r.computed.has_value();
        if (r.max_deviation() >= worst) {
            worst = r.max_deviation();
            worst_row = r.label + " n=" + std::to_string(r.n) + " ell=" + std::to_string(r.ell);
        }
    }
    const bool ok = solved == static_cast<int>(rows.size()) && worst <= kTableTolerance && secs < budget_s;
    return {ok, fmt("%d/%zu rows solved, max rel deviation %.2e at %s (tol %.0e), %.2f s (limit %.0f s)", solved,
                    rows.size(), worst, worst_row.c_str(), kTableTolerance, secs, budget_s)};
}

Verdict gain_peak()
{
    const auto t0 = std::chrono::steady_clock::now();
    const GainMedium medium;
    const auto geom = WaveguideGeometry::from_two_beta_over_m(1e7);
    const auto sols = find_singularities(medium, geom, 10000);
    const SingularitySolution* star = pick(sols, 2);
    if (star == nullptr)
        return {false, "no n=10000 ell=2 solution at 2beta/m = 1 cm"};

    const double centre = gain_scan(*star, medium, geom, {1.0})[0].second;

    // Side peaks: local maxima on a grid of step 1e-8 over 1 +- 5e-4.
    const double step = 1e-8;
    const auto rows = gain_scan(*star, medium, geom, ratio_grid(5e-4, 100001));
    std::vector<std::pair<double, double>> peaks;
    for (std::size_t i = 1; i + 1 < rows.size(); ++i)
        if (rows[i].second > rows[i - 1].second && rows[i].second > rows[i + 1].second && rows[i].second > 1.0)
            peaks.push_back(rows[i]);
    bool sides_ok = true;
    double worst_offset = 0.0, highest_side = -1e300;
    int found = 0;
    for (int j = -4; j <= 4; ++j) {
        if (j == 0)
            continue;
        const double target = 1.0 + 1e-4 * j;
        auto best = peaks.end();
        for (auto it = peaks.begin(); it != peaks.end(); ++it)
            if (std::abs(it->first - target) < 5e-5 && (best == peaks.end() || it->second > best->second))
                best = it;
        if (best == peaks.end()) {
            sides_ok = false;
            continue;
        }
        ++found;
        worst_offset = std::max(worst_offset, std::abs(best->first - target));
        highest_side = std::max(highest_side, best->second);
    }
    // Peaks sharper than the grid can sit up to ~1e-6 away from the nominal spacing.
    sides_ok = sides_ok && worst_offset <= 2e-6 && highest_side < centre;

    // |T|^2 + |R|^2 > 1 over the wide window.
    const auto wide = gain_scan(*star, medium, geom, ratio_grid(0.1, 200001));
    double wide_min = 1e300;
    for (const auto& [ratio, value] : wide)
        wide_min = std::min(wide_min, value);

    // The same barrier built from the rounded reference numbers: peak within +-2e-6.
    const double omega_lit = 2.15548, alpha_lit = 0.5 * 2.878644e6;
    double lit_peak = -1e300;
    for (double r : ratio_grid(2e-6, 4001)) {
        const double omega = r * omega_lit;
        const BarrierSpec spec{alpha_lit, coupling_of(medium, omega)};
        lit_peak = std::max(lit_peak, std::log10(amplitudes(transfer_matrix(spec, k_of(geom, omega))).total_intensity()));
    }

    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = centre >= 15.0 && sides_ok && found == 8 && wide_min > 0.0 && lit_peak >= 15.0 && secs < 10.0;
    return {ok, fmt("centre log10 = %.2f; %d/8 side peaks, max offset %.1e (grid step %.0e), highest side %.2f; "
                    "min log10 on [0.9,1.1] = %.3f; rounded-values peak %.2f; %.2f s (limit 10 s)",
                    centre, found, worst_offset, step, highest_side, wide_min, lit_peak, secs)};
}

Verdict oracle_equivalence()
{
    // det M = 1 is a cancellation of |M11 M22| ~ exp(4 ak |Im w|) down to 1, so it is
    // only observable at 1e-12 for ak |Im w| <= 2. Those draws check both properties;
    // a second unrestricted set (ak up to 20) checks the entries alone.
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> log_k(-3.0, 1.0), log_ak(-2.0, std::log10(20.0)), urs(-4.0, 4.0);
    int bounded = 0, wide = 0, skipped_near_w0 = 0;
    double worst_bounded = 0.0, worst_wide = 0.0, worst_det = 0.0;
    while (bounded < 1000 || wide < 1000) {
        const double k = std::pow(10.0, log_k(rng));
        const double ak = std::pow(10.0, log_ak(rng));
        const cplx reduced(urs(rng), urs(rng));
        const cplx w = principal_sqrt_upper(1.0 - reduced);
        if (std::abs(w) <= 1e-3) {
            ++skipped_near_w0;
            continue;
        }
        const bool in_det_range = ak * std::abs(w.imag()) <= 2.0;
        if ((in_det_range && bounded >= 1000) || (!in_det_range && wide >= 1000))
            continue;
        const BarrierSpec spec{ak / k, k * k * reduced};
        const TransferMatrix m = transfer_matrix(spec, k);
        const TransferMatrix o = oracle_transfer_matrix(spec, k);
        const double rel = std::max({rel_entry_error(m.m11, o.m11), rel_entry_error(m.m12, o.m12),
                                     rel_entry_error(m.m21, o.m21), rel_entry_error(m.m22, o.m22)});
        if (in_det_range) {
            worst_bounded = std::max(worst_bounded, rel);
            worst_det = std::max(worst_det, std::abs(m.det() - 1.0));
            ++bounded;
        } else {
            worst_wide = std::max(worst_wide, rel);
            ++wide;
        }
    }
    return {worst_bounded <= 1e-10 && worst_wide <= 1e-10 && worst_det <= 1e-12,
            fmt("%d draws with ak|Im w| <= 2: max entry rel error %.2e, max |det-1| %.2e; %d wider draws: "
                "max entry rel error %.2e; %d skipped with |w| <= 1e-3",
                bounded, worst_bounded, worst_det, wide, worst_wide, skipped_near_w0)};
}

Verdict unitarity()
{
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> log_k(-3.0, 1.0), log_ak(-2.0, 1.0), urho(-4.0, 4.0);
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        const double k = std::pow(10.0, log_k(rng));
        const BarrierSpec spec{std::pow(10.0, log_ak(rng)) / k, k * k * urho(rng)};
        worst = std::max(worst, std::abs(amplitudes(transfer_matrix(spec, k)).total_intensity() - 1.0));
    }
    return {worst <= 1e-12, fmt("500 real couplings: max ||T|^2+|R|^2 - 1| = %.2e", worst)};
}

Verdict reduction_consistency()
{
    int points = 0, mirror_failures = 0;
    double worst_res = 0.0, worst_split = 0.0, weakest_mirror = 1e300;
    for (int n : {1, 2, 3}) {
        std::ostringstream out;
        cmd_curve(n, -2.0, 0.999, 400, out);
        std::istringstream in(out.str());
        std::string line;
        std::getline(in, line);  // header
        while (std::getline(in, line)) {
            double rho, sigma, ak, printed;
            if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &rho, &sigma, &ak, &printed) != 4)
                return {false, "unparseable curve row: " + line};
            ++points;
            worst_res = std::max({worst_res, printed, certify(rho, sigma, ak)});
            worst_split = std::max(worst_split, split_equation_mismatch(rho, sigma, ak));
            const double mirror = certify(rho, -sigma, ak);
            weakest_mirror = std::min(weakest_mirror, mirror);
            mirror_failures += mirror >= 1e-9;
        }
    }
    const bool ok = points > 0 && worst_res < 1e-9 && worst_split < 1e-9 && mirror_failures == points;
    return {ok, fmt("%d curve points (n=1,2,3): max residual %.2e, max split mismatch %.2e; "
                    "%d/%d mirrored points rejected, smallest mirrored residual %.2e",
                    points, worst_res, worst_split, mirror_failures, points, weakest_mirror)};
}

Verdict asymptote()
{
    const BranchLabel n1{1, -1};
    // Largest verified rho: sample the whole rho < 1 range.
    double largest = -std::numeric_limits<double>::infinity();
    for (const auto& p : trace_curve(n1, -2.0, 1.0 - 1e-6, 2000))
        largest = std::max(largest, p.rho);

    // Edge of the existence interval: bisect between an empty and a populated rho.
    double lo = 0.6, hi = 0.7;
    while (hi - lo > 1e-7) {
        const double mid = 0.5 * (lo + hi);
        (solve_sigma(n1, mid).empty() ? lo : hi) = mid;
    }
    const bool edge_ok = hi >= 0.666 && hi <= 0.668;
    return {largest >= 0.666 && largest <= 0.668,
            fmt("largest verified rho on C1 = %.7f (required in [0.666, 0.668]); the curve instead starts at "
                "rho = %.7f (%s) and continues to rho -> 1",
                largest, hi, edge_ok ? "inside [0.666, 0.668]" : "outside [0.666, 0.668]")};
}

Verdict no_gain_exclusion()
{
    const GainMedium lossy{5.0, 0.04, 1.25};
    std::size_t total = 0;
    int solves = 0;
    for (double tb : {1e3, 1e6, 1e7})
        for (int n : {1, 2, 3, 2000, 5000, 10000}) {
            total += find_singularities(lossy, WaveguideGeometry::from_two_beta_over_m(tb), n).size();
            ++solves;
        }

    double min_real = 1e300;
    for (double ak = 1e-3; ak < 1e3; ak *= 1.02)
        for (double rho = -20.0; rho <= 20.0; rho += 0.01)
            min_real = std::min(min_real, m22_residual(BarrierSpec{ak, rho}, 1.0));
    return {total == 0 && min_real > 1e-3,
            fmt("omega_p^2 = +0.04: %zu solutions over %d solves; min residual over real couplings %.3f", total,
                solves, min_real)};
}

Verdict height_insensitivity()
{
    const GainMedium medium;
    const auto mm = find_singularities(medium, WaveguideGeometry::from_two_beta_over_m(1e6), 10000);
    const auto cm = find_singularities(medium, WaveguideGeometry::from_two_beta_over_m(1e7), 10000);
    const SingularitySolution* a = pick(mm, 2);
    const SingularitySolution* b = pick(cm, 2);
    if (a == nullptr || b == nullptr)
        return {false, "missing ell=2 solution"};
    const double dev = std::max({relative_deviation(a->lambda, b->lambda),
                                 relative_deviation(a->two_alpha_mm(), b->two_alpha_mm()),
                                 relative_deviation(a->refractive_index.real(), b->refractive_index.real()),
                                 relative_deviation(a->refractive_index.imag(), b->refractive_index.imag())});
    return {dev <= kTableTolerance,
            fmt("1 mm vs 1 cm: lambda %.6f / %.6f nm, 2alpha %.6f / %.6f mm; max rel deviation %.2e", a->lambda,
                b->lambda, a->two_alpha_mm(), b->two_alpha_mm(), dev)};
}

}  // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
        {"table 1 reproduction", [] { return table(1, 30.0); }},
        {"table 2 reproduction", [] { return table(2, 30.0); }},
        {"gain peak at the showcase design", gain_peak},
        {"closed form vs plane-wave matching", oracle_equivalence},
        {"unitarity for real couplings", unitarity},
        {"reduction consistency of curve output", reduction_consistency},
        {"n = 1 asymptote", asymptote},
        {"no singularities without gain", no_gain_exclusion},
        {"height insensitivity", height_insensitivity},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failures += !v.pass;
        std::printf("%s %zu %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
