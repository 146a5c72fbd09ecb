#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "specsing/barrier.hpp"
#include "specsing/conventions.hpp"
#include "specsing/locus.hpp"

namespace specsing {

// Lorentz-oscillator active region. Energies are hbar*omega in eV.
// Defaults: hbar w0 = 5 eV, hbar^2 wp^2 = -0.04 eV^2, hbar delta = 1.25 eV.
struct GainMedium
{
    double omega0 = 5.0;
    double omega_p_sq = -0.04;  // negative: population inversion (gain)
    double delta = 1.25;
};

// Rectangular waveguide |x| < beta with perfectly conducting walls.
struct WaveguideGeometry
{
    double beta = 5e6;  // half-height (nm)
    int m = 1;          // transverse mode index
    std::optional<double> gamma;  // half-width (nm); TE fields do not depend on it

    /// Cutoff hbar*Omega = pi m hbar c / (2 beta), in eV.
    double cutoff() const;

    static WaveguideGeometry from_two_beta_over_m(double two_beta_over_m_nm, int m = 1);
};

class CutoffError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

struct SingularitySolution
{
    BranchLabel branch;
    int ell = 0;
    double omega = 0.0;   // eV
    double k = 0.0;       // nm^-1
    double alpha = 0.0;   // nm
    double lambda = 0.0;  // nm, 2 pi hbar c / omega
    cplx epsilon;
    cplx refractive_index;  // principal sqrt(epsilon); Im < 0 is gain
    double residual = 0.0;
    double rho_star = 0.0;
    double sigma_star = 0.0;

    double two_alpha_mm() const { return 2.0 * alpha * 1e-6; }
};

/// 1 - wp^2 / (w^2 - w0^2 + 2 i delta w)
cplx permittivity(const GainMedium& medium, double omega);

/// Longitudinal wave number sqrt(w^2 - Omega^2)/(hbar c). Throws CutoffError for omega <= Omega.
double k_of(const WaveguideGeometry& geom, double omega);

/// Coupling z = (omega/hbar c)^2 (1 - epsilon) in nm^-2.
cplx coupling_of(const GainMedium& medium, double omega);

/// (rho, sigma) = z/k^2 at frequency omega.
std::pair<double, double> rho_sigma_of(const GainMedium& medium, const WaveguideGeometry& geom,
                                       double omega);

/// Same map parameterized by the offset t = omega - Omega > 0. Keeps full
/// relative precision of 1 - Omega^2/omega^2 = t (2 Omega + t) / omega^2.
std::pair<double, double> rho_sigma_at_offset(const GainMedium& medium,
                                              const WaveguideGeometry& geom, double t);

/// Parametric curve C^Omega; frequencies at or below cutoff are skipped.
std::vector<std::pair<double, double>> physical_curve(const GainMedium& medium,
                                                      const WaveguideGeometry& geom,
                                                      const std::vector<double>& omega_grid);

struct SearchOptions
{
    std::optional<double> omega_min;  // default Omega (1 + 1e-9)
    std::optional<double> omega_max;  // default 10 omega0
    int grid_points = 20000;          // geometric in omega - Omega
    double certify_tol = 1e-9;
};

/// Intersections of C^Omega with the n-th singularity curve, labeled by ell in
/// order of decreasing rho. Candidates failing certification are dropped.
std::vector<SingularitySolution> find_singularities(const GainMedium& medium,
                                                    const WaveguideGeometry& geom, int n,
                                                    const SearchOptions& opts = {});

/// Frequencies solving rho(omega) = rho_star and sigma(omega) = sigma_star
/// separately near the solution; they coincide at a genuine intersection.
std::pair<double, double> consistency_omegas(const GainMedium& medium,
                                             const WaveguideGeometry& geom,
                                             const SingularitySolution& sol);

inline constexpr double kGainScanCap = 600.0;

/// (omega/omega_s, log10(|T|^2 + |R|^2)) at fixed alpha and geometry. Values
/// with |M22| < 1e-300 are reported as kGainScanCap.
std::vector<std::pair<double, double>> gain_scan(const SingularitySolution& solution,
                                                 const GainMedium& medium,
                                                 const WaveguideGeometry& geom,
                                                 const std::vector<double>& ratio_grid);

}  // namespace specsing
