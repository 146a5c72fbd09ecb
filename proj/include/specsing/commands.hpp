#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "specsing/config.hpp"
#include "specsing/conventions.hpp"

namespace specsing {

enum ExitCode : int {
    kExitOk = 0,
    kExitNoSolution = 2,
    kExitInvalidInput = 3,
};

/// "%.16e"
std::string format_sci(double v);
/// "<re>+<im>i" with both parts in "%.16e"
std::string format_cplx(cplx v);

/// Key-value record: M entries, det, T, R, |T|^2+|R|^2, residual.
int cmd_transfer(cplx z, double alpha, double k, std::ostream& out);

/// CSV rho,sigma,alpha_k,residual for the n-th singularity curve.
int cmd_curve(int n, double rho_min, double rho_max, int samples, std::ostream& out);

/// CSV n,ell,omega_eV,lambda_nm,two_alpha_mm,sqrt_eps_re,sqrt_eps_im,residual.
int cmd_design(const RunConfig& config, int n, std::optional<int> ell, std::ostream& out);

/// CSV omega_ratio,log10_T2_plus_R2 on 1 +- span with `points` samples.
int cmd_scan(const RunConfig& config, int n, int ell, double span, int points, std::ostream& out);

/// Recomputed rows of table 1 or 2 next to the reference values.
int cmd_tables(int which, std::ostream& out);

/// 1 + span * (2i/(points-1) - 1); the centre is exactly 1 for odd `points`.
std::vector<double> ratio_grid(double span, int points);

}  // namespace specsing
