// specsing: spectral singularities of the complex barrier and resonating waveguide designs.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "specsing/commands.hpp"
#include "specsing/config.hpp"

using namespace specsing;

namespace {

struct Output
{
    std::unique_ptr<std::ofstream> file;
    std::ostream* stream = &std::cout;
};

Output open_output(const std::string& path)
{
    Output o;
    if (path.empty() || path == "-")
        return o;
    o.file = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*o.file)
        throw ConfigError("cannot write to '" + path + "'");
    o.stream = o.file.get();
    return o;
}

RunConfig make_config(const std::string& path, const std::string& height_override)
{
    RunConfig cfg = path.empty() ? RunConfig{} : load_config(path);
    if (!height_override.empty()) {
        const int m = cfg.geometry.m;
        const auto gamma = cfg.geometry.gamma;
        cfg.geometry = WaveguideGeometry::from_two_beta_over_m(parse_length_nm(height_override), m);
        cfg.geometry.gamma = gamma;
    }
    apply_env_overrides(cfg);
    return cfg;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spectral singularities of the complex barrier potential and waveguide resonator designs"};
    app.require_subcommand(1);
    app.fallthrough();
    bool quiet = false;
    app.add_flag("-q,--quiet", quiet, "Suppress diagnostics on stderr");

    std::string z_text = "0+0i";
    double alpha = 1.0, k = 1.0;
    auto* transfer = app.add_subcommand("transfer", "Transfer matrix and amplitudes of a single barrier");
    transfer->add_option("--z", z_text, "Coupling in nm^-2, e.g. 1-0.5i")->required();
    transfer->add_option("--alpha", alpha, "Half-length in nm")->required();
    transfer->add_option("--k", k, "Wave number in nm^-1")->required();

    int curve_n = 1, samples = 400;
    double rho_min = -2.0, rho_max = 0.999;
    std::string out_path;
    auto* curve = app.add_subcommand("curve", "Trace a spectral-singularity curve in the rho-sigma plane (CSV)");
    curve->add_option("--n", curve_n, "Curve index n >= 1")->required()->check(CLI::PositiveNumber);
    curve->add_option("--rho-min", rho_min, "Smallest rho");
    curve->add_option("--rho-max", rho_max, "Largest rho (< 1)");
    curve->add_option("--samples", samples, "Number of rho samples")->check(CLI::Range(2, 10000000));
    curve->add_option("--out", out_path, "Output CSV (default stdout)");

    std::string config_path, height;
    int design_n = 10000;
    std::optional<int> design_ell;
    auto* design = app.add_subcommand("design", "Solve for waveguide designs with a spectral singularity");
    design->add_option("--config", config_path, "JSON configuration file");
    design->add_option("--n", design_n, "Curve index n >= 1")->required()->check(CLI::PositiveNumber);
    design->add_option("--ell", design_ell, "Keep only this intersection index");
    design->add_option("--two-beta-over-m", height, "Override 2beta/m, e.g. 1cm");

    int scan_n = 10000, scan_ell = 2, points = 2001;
    double span = 5e-4;
    auto* scan = app.add_subcommand("scan", "log10(|T|^2+|R|^2) around a design frequency (CSV)");
    scan->add_option("--config", config_path, "JSON configuration file");
    scan->add_option("--n", scan_n, "Curve index n >= 1")->required()->check(CLI::PositiveNumber);
    scan->add_option("--ell", scan_ell, "Intersection index")->required()->check(CLI::PositiveNumber);
    scan->add_option("--span", span, "Half-width of omega/omega_s window")->check(CLI::PositiveNumber);
    scan->add_option("--points", points, "Number of samples")->check(CLI::Range(1, 100000000));
    scan->add_option("--two-beta-over-m", height, "Override 2beta/m, e.g. 1cm");
    scan->add_option("--out", out_path, "Output CSV (default stdout)");

    int which = 1;
    auto* tables = app.add_subcommand("tables", "Recompute the reference design tables");
    tables->add_option("--which", which, "Table 1 or 2")->required()->check(CLI::IsMember({1, 2}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidInput;
    }

    try {
        if (*transfer)
            return cmd_transfer(parse_complex(z_text), alpha, k, std::cout);
        if (*curve) {
            Output o = open_output(out_path);
            return cmd_curve(curve_n, rho_min, rho_max, samples, *o.stream);
        }
        if (*design) {
            const int rc = cmd_design(make_config(config_path, height), design_n, design_ell, std::cout);
            if (rc == kExitNoSolution && !quiet)
                std::cerr << "no certified spectral singularity for n=" << design_n << '\n';
            return rc;
        }
        if (*scan) {
            const RunConfig cfg = make_config(config_path, height);
            Output o = open_output(out_path);
            const int rc = cmd_scan(cfg, scan_n, scan_ell, span, points, *o.stream);
            if (rc == kExitNoSolution && !quiet)
                std::cerr << "no design with n=" << scan_n << " ell=" << scan_ell << '\n';
            return rc;
        }
        if (*tables)
            return cmd_tables(which, std::cout);
    } catch (const std::exception& e) {
        if (!quiet)
            std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
