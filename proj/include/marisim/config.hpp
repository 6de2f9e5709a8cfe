#pragma once

// Parameters of the generational marriage model.  Defaults are the
// constants of the original reference script.

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>

#include "error.hpp"

namespace marisim {

enum class MarriageMode { polygyny, monogamy };

inline std::string_view to_string(MarriageMode m) {
    return m == MarriageMode::polygyny ? "polygyny" : "monogamy";
}

inline MarriageMode parse_mode(std::string_view s) {
    if (s == "polygyny") return MarriageMode::polygyny;
    if (s == "monogamy") return MarriageMode::monogamy;
    throw SimError(ErrorKind::invalid_config, "unknown mode '" + std::string(s) + "'");
}

struct SimConfig {
    double lambda = 24.0;
    double mu = 30.0;
    int total_generations = 12;
    double average_fertility = 3.0;
    int initial_men = 100;
    int initial_women = 100;
    double initial_wealth_mean = 100.0;
    double initial_wealth_std = 400.0;
    double elite_fraction = 0.1;
    double elite_bonus_mean = 5000.0;
    double elite_bonus_std = 3000.0;
    double marriage_noise_std = 0.2;
    double fertility_noise_std = 0.3;
    double savings_mean = 10.0;
    double savings_std = 8.0;
    MarriageMode mode = MarriageMode::polygyny;
    std::uint64_t seed = 1;
    int population_cap = 20000;

    bool operator==(const SimConfig&) const = default;
};

/// Throws SimError(invalid_config) naming the first offending field.
inline void validate(const SimConfig& c) {
    auto fail = [](const std::string& msg) { throw SimError(ErrorKind::invalid_config, msg); };
    auto finite = [](double v) { return std::isfinite(v); };
    if (!(c.lambda > 0) || !finite(c.lambda)) fail("lambda must be > 0");
    if (!(c.mu > 0) || !finite(c.mu)) fail("mu must be > 0");
    if (c.total_generations < 1) fail("total_generations must be >= 1");
    if (!(c.average_fertility > 0) || !finite(c.average_fertility)) fail("average_fertility must be > 0");
    if (c.initial_men < 1) fail("initial_men must be >= 1");
    if (c.initial_women < 1) fail("initial_women must be >= 1");
    if (c.population_cap < 1) fail("population_cap must be >= 1");
    if (c.initial_men > c.population_cap || c.initial_women > c.population_cap)
        fail("initial population exceeds population_cap");
    if (!(c.elite_fraction >= 0 && c.elite_fraction <= 1)) fail("elite_fraction must be in [0,1]");
    const std::pair<const char*, double> stds[] = {
        {"initial_wealth_std", c.initial_wealth_std}, {"elite_bonus_std", c.elite_bonus_std},
        {"marriage_noise_std", c.marriage_noise_std}, {"fertility_noise_std", c.fertility_noise_std},
        {"savings_std", c.savings_std}};
    for (auto [name, v] : stds)
        if (!(v >= 0) || !finite(v)) fail(std::string(name) + " must be >= 0");
    const std::pair<const char*, double> means[] = {
        {"initial_wealth_mean", c.initial_wealth_mean}, {"elite_bonus_mean", c.elite_bonus_mean},
        {"savings_mean", c.savings_mean}};
    for (auto [name, v] : means)
        if (!finite(v)) fail(std::string(name) + " must be finite");
}

namespace detail {

inline std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

template <class T>
T parse_number(const std::string& key, const std::string& text) {
    T value{};
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw SimError(ErrorKind::invalid_config, "bad value for " + key + ": '" + text + "'");
    return value;
}

}  // namespace detail

/// Sets one field by its SimConfig name.  Unknown keys are an error.
inline void set_field(SimConfig& c, const std::string& key, const std::string& value) {
    using detail::parse_number;
    if (key == "mode") { c.mode = parse_mode(value); return; }
    if (key == "seed") { c.seed = parse_number<std::uint64_t>(key, value); return; }

    static const std::map<std::string, double SimConfig::*> reals = {
        {"lambda", &SimConfig::lambda},
        {"mu", &SimConfig::mu},
        {"average_fertility", &SimConfig::average_fertility},
        {"initial_wealth_mean", &SimConfig::initial_wealth_mean},
        {"initial_wealth_std", &SimConfig::initial_wealth_std},
        {"elite_fraction", &SimConfig::elite_fraction},
        {"elite_bonus_mean", &SimConfig::elite_bonus_mean},
        {"elite_bonus_std", &SimConfig::elite_bonus_std},
        {"marriage_noise_std", &SimConfig::marriage_noise_std},
        {"fertility_noise_std", &SimConfig::fertility_noise_std},
        {"savings_mean", &SimConfig::savings_mean},
        {"savings_std", &SimConfig::savings_std},
    };
    static const std::map<std::string, int SimConfig::*> ints = {
        {"total_generations", &SimConfig::total_generations},
        {"initial_men", &SimConfig::initial_men},
        {"initial_women", &SimConfig::initial_women},
        {"population_cap", &SimConfig::population_cap},
    };
    if (auto it = reals.find(key); it != reals.end()) {
        c.*(it->second) = parse_number<double>(key, value);
        return;
    }
    if (auto it = ints.find(key); it != ints.end()) {
        c.*(it->second) = parse_number<int>(key, value);
        return;
    }
    throw SimError(ErrorKind::invalid_config, "unknown config key '" + key + "'");
}

// Config file format: one `key = value` per line, keys are SimConfig field
// names, `#` starts a comment, blank lines are ignored.
inline SimConfig parse_config(std::istream& in, SimConfig base = {}) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto text = detail::trim(line);
        if (text.empty()) continue;
        auto eq = text.find('=');
        if (eq == std::string::npos)
            throw SimError(ErrorKind::invalid_config,
                           "line " + std::to_string(lineno) + ": expected key = value");
        set_field(base, detail::trim(text.substr(0, eq)), detail::trim(text.substr(eq + 1)));
    }
    return base;
}

inline SimConfig load_config(const std::string& path, SimConfig base = {}) {
    std::ifstream in(path);
    if (!in) throw SimError(ErrorKind::invalid_config, "cannot read config file " + path);
    return parse_config(in, base);
}

}  // namespace marisim
