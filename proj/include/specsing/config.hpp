#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "specsing/conventions.hpp"
#include "specsing/waveguide.hpp"

namespace specsing {

class ConfigError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Name of the environment variable that overrides the frequency grid density.
inline constexpr const char* kGridPointsEnv = "SPECSING_GRID_POINTS";

struct RunConfig
{
    GainMedium medium;
    WaveguideGeometry geometry = WaveguideGeometry::from_two_beta_over_m(1e7);
    SearchOptions search;
};

/// "1.0cm", "500 nm", "2um", "0.3mm", "1m"; a bare number is taken in nm.
double parse_length_nm(const std::string& text);

/// "1+2i", "-0.5e-3-4i", "3", "2i".
cplx parse_complex(const std::string& text);

/// Flat JSON object. Recognized keys: omega0_eV, omega_p_sq_eV2, delta_eV,
/// two_beta_over_m, m, gamma, grid_points, omega_min_eV, omega_max_eV.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);

/// Applies SPECSING_GRID_POINTS when set.
void apply_env_overrides(RunConfig& config);

}  // namespace specsing
