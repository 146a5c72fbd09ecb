#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specsing/conventions.hpp"
#include "specsing/waveguide.hpp"

namespace specsing {

// One reference design row together with the recomputed solution.
struct TableRow
{
    std::string label;        // e.g. "2beta/m=1cm"
    double two_beta_over_m_nm = 0.0;
    int n = 0;
    int ell = 0;
    double lambda_nm = 0.0;      // reference
    double two_alpha_mm = 0.0;   // reference
    cplx sqrt_eps;               // reference
    std::optional<SingularitySolution> computed;

    double dev_lambda() const;
    double dev_two_alpha() const;
    double dev_sqrt_eps_re() const;
    double dev_sqrt_eps_im() const;
    double max_deviation() const;
};

// Relative deviation pinned for five-significant-figure agreement.
inline constexpr double kTableTolerance = 1e-4;

/// Reference rows of table 1 (n = 10000, three heights) or table 2
/// (2beta/m = 1 cm, n = 2000..5000, ell = 2, 3), without solutions.
std::vector<TableRow> reference_rows(int which);

/// Reference rows with `computed` filled from find_singularities.
std::vector<TableRow> reproduce_table(int which, const GainMedium& medium = {},
                                      const SearchOptions& opts = {});

double relative_deviation(double computed, double expected);

}  // namespace specsing
