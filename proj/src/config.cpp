#include "specsing/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

namespace specsing {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& text, const char* what)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ConfigError(std::string("cannot parse ") + what + ": '" + text + "'");
    }
    if (used != text.size())
        throw ConfigError(std::string("trailing characters in ") + what + ": '" + text + "'");
    return v;
}

double length_value(const nlohmann::json& v, const char* key)
{
    if (v.is_number())
        return v.get<double>();
    if (v.is_string())
        return parse_length_nm(v.get<std::string>());
    throw ConfigError(std::string("key '") + key + "' must be a length");
}

double number_value(const nlohmann::json& v, const char* key)
{
    if (!v.is_number())
        throw ConfigError(std::string("key '") + key + "' must be a number");
    return v.get<double>();
}

}  // namespace

double parse_length_nm(const std::string& text)
{
    const std::string s = trim(text);
    static const std::pair<const char*, double> units[] = {
        {"nm", 1.0}, {"um", 1e3}, {"\xce\xbcm", 1e3}, {"mm", 1e6}, {"cm", 1e7}, {"km", 1e12}, {"m", 1e9}};
    double scale = 1.0;
    std::string number = s;
    for (const auto& [suffix, factor] : units) {
        const std::string suf(suffix);
        if (s.size() > suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0) {
            number = trim(s.substr(0, s.size() - suf.size()));
            scale = factor;
            break;
        }
    }
    const double v = parse_number(number, "length") * scale;
    if (!(v > 0.0))
        throw ConfigError("length must be positive: '" + text + "'");
    return v;
}

cplx parse_complex(const std::string& text)
{
    static const std::regex full(
        R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*(?:([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*[ij])?\s*$)");
    static const std::regex imag_only(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*[ij]\s*$)");

    std::smatch mt;
    if (std::regex_match(text, mt, imag_only)) {
        const std::string im = mt[1].str();
        if (im.empty() || im == "+")
            return {0.0, 1.0};
        if (im == "-")
            return {0.0, -1.0};
        return {0.0, std::stod(im)};
    }
    if (std::regex_match(text, mt, full) && (mt[1].matched || mt[2].matched)) {
        const double re = mt[1].matched ? std::stod(mt[1].str()) : 0.0;
        double im = 0.0;
        if (mt[2].matched) {
            im = mt[3].matched ? std::stod(mt[3].str()) : 1.0;
            if (mt[2].str() == "-")
                im = -im;
        }
        return {re, im};
    }
    throw ConfigError("cannot parse complex number: '" + text + "'");
}

RunConfig parse_config(const std::string& json_text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("malformed configuration: ") + e.what());
    }
    if (!doc.is_object())
        throw ConfigError("configuration must be a flat object");

    RunConfig cfg;
    double two_beta_over_m = 1e7;
    int m = 1;
    std::optional<double> gamma;
    for (const auto& [key, value] : doc.items()) {
        if (key == "omega0_eV")
            cfg.medium.omega0 = number_value(value, "omega0_eV");
        else if (key == "omega_p_sq_eV2")
            cfg.medium.omega_p_sq = number_value(value, "omega_p_sq_eV2");
        else if (key == "delta_eV")
            cfg.medium.delta = number_value(value, "delta_eV");
        else if (key == "two_beta_over_m")
            two_beta_over_m = length_value(value, "two_beta_over_m");
        else if (key == "m") {
            if (!value.is_number_integer() || value.get<int>() < 1)
                throw ConfigError("key 'm' must be a positive integer");
            m = value.get<int>();
        } else if (key == "gamma")
            gamma = length_value(value, "gamma");
        else if (key == "grid_points") {
            if (!value.is_number_integer() || value.get<int>() < 2)
                throw ConfigError("key 'grid_points' must be an integer >= 2");
            cfg.search.grid_points = value.get<int>();
        } else if (key == "omega_min_eV")
            cfg.search.omega_min = number_value(value, "omega_min_eV");
        else if (key == "omega_max_eV")
            cfg.search.omega_max = number_value(value, "omega_max_eV");
        else
            throw ConfigError("unknown configuration key '" + key + "'");
    }
    if (!(cfg.medium.omega0 > 0.0) || !(cfg.medium.delta > 0.0))
        throw ConfigError("omega0_eV and delta_eV must be positive");
    if (!(two_beta_over_m > 0.0))
        throw ConfigError("two_beta_over_m must be positive");
    cfg.geometry = WaveguideGeometry::from_two_beta_over_m(two_beta_over_m, m);
    cfg.geometry.gamma = gamma;
    return cfg;
}

RunConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open configuration file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

void apply_env_overrides(RunConfig& config)
{
    const char* raw = std::getenv(kGridPointsEnv);
    if (raw == nullptr || *raw == '\0')
        return;
    const double v = parse_number(trim(raw), kGridPointsEnv);
    if (v < 2 || v != static_cast<int>(v))
        throw ConfigError(std::string(kGridPointsEnv) + " must be an integer >= 2");
    config.search.grid_points = static_cast<int>(v);
}

}  // namespace specsing
