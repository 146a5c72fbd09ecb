#pragma once

#include <vector>

namespace specsing {

// (n, eps) labels the arccos branch in R_n^eps = pi n + eps * arccos(...).
struct BranchLabel
{
    int n = 1;
    int eps = -1;  // +1 or -1

    // n > 0 with any sign, or n = 0 with eps = +.
    bool admissible() const { return (n > 0 && (eps == 1 || eps == -1)) || (n == 0 && eps == 1); }
    // Only these branches carry spectral singularities.
    bool physical() const { return n > 0 && eps == -1; }
};

// Point of a singularity curve in the (rho, sigma) = z/k^2 plane.
struct LocusPoint
{
    double rho = 0.0;
    double sigma = 0.0;
    double y = 0.0;
    double alpha_k = 0.0;   // G_n^eps(rho, y)
    double residual = 0.0;  // m22_residual of the unit-k realization
    BranchLabel branch;
};

double q_of(double rho, double y, double alpha_k);
double r_of(double rho, double y, double alpha_k);

/// asinh sqrt( 2(sqrt(y^2+1)|1-rho| + 1 - rho) / ((1-rho)^2 y^2 + rho^2) )
double Q_of(double rho, double y);

/// pi n + eps * arccos( (1 - |1-rho| sqrt(y^2+1)) / sqrt((1-rho)^2 y^2 + rho^2) )
double R_of(BranchLabel branch, double rho, double y);

/// alpha k forced at a locus point.
double G_of(BranchLabel branch, double rho, double y);

/// Q~_n^eps = R_n^eps * sqrt((sqrt(y^2+1) - 1) / (sqrt(y^2+1) + 1))
double Q_tilde_of(BranchLabel branch, double rho, double y);

/// (sinh^2 Q - sinh^2 Q~) / 2, written out explicitly. Overflows to -inf once
/// Q~ exceeds ~355; use branch_gap for root finding.
double F_of(BranchLabel branch, double rho, double y);

/// Q - Q~. Same sign as F_of wherever R_n^eps >= 0, finite for all n.
double branch_gap(BranchLabel branch, double rho, double y);

/// Roots y > 0 of F at fixed rho, before certification (points of C_n^eps).
std::vector<LocusPoint> candidate_points(BranchLabel branch, double rho);

/// Certified points of the spectral-singularity curve at fixed rho < 1.
std::vector<LocusPoint> solve_sigma(BranchLabel branch, double rho);

/// solve_sigma over rho sampled uniformly in log(1 - rho); descending rho,
/// then ascending sigma.
std::vector<LocusPoint> trace_curve(BranchLabel branch, double rho_min, double rho_max,
                                    int samples);

/// m22_residual of the realization k = 1, alpha = alpha_k, z = rho + i sigma.
double certify(double rho, double sigma, double alpha_k);

/// Largest mismatch in the real/imaginary split
///   cos r cosh q = +-(1 - (1-rho)^2 (y^2+1)) / ((1-rho)^2 y^2 + rho^2)
///   sin r sinh q = -+2(1-rho) y / ((1-rho)^2 y^2 + rho^2)
/// minimized over the common sign choice.
double split_equation_mismatch(double rho, double sigma, double alpha_k);

struct RootSearchOptions
{
    double y_min = 1e-6;
    double y_max = 1e6;
    int points_per_decade = 400;
    double rel_tol = 1e-13;
    double certify_tol = 1e-9;
};

std::vector<LocusPoint> candidate_points(BranchLabel branch, double rho,
                                         const RootSearchOptions& opts);
std::vector<LocusPoint> solve_sigma(BranchLabel branch, double rho, const RootSearchOptions& opts);

}  // namespace specsing
