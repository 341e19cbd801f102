#pragma once

/// Problem-instance representation and I/O.
///
/// An instance file is JSON, either {"even": n} for n evenly spaced
/// diameters or {"diameters": [radians, ...]}.  Angles outside [0, pi) are
/// folded back modulo pi with a warning — a diameter is the same diameter
/// whichever endpoint names it.

#include <cstdint>
#include <ostream>
#include <random>

#include "json.hpp"

#include "geometry.hpp"

namespace asympoly {

struct instance {
    std::vector<double> diameters;  // sorted angles in [0, pi)
    bool even = false;              // declared {"even": n} rather than listed angles

    [[nodiscard]] auto to_diameter_set() const -> diameter_set {
        return diameter_set::from_angles(diameters);
    }
};

[[nodiscard]] inline auto make_even_instance(int n) -> instance {
    return instance{diameter_set::evenly_spaced(n).diameter_angles(), true};
}

/// n uniform-random diameters, rejecting any candidate closer than
/// angle_epsilon (circularly, modulo pi) to an accepted one.  The generator
/// maps raw mt19937_64 output to [0, 1) directly, so a given seed produces
/// the same angles on every platform.
[[nodiscard]] inline auto make_random_instance(int n, std::uint64_t seed) -> instance {
    if (n < 3)
        throw std::invalid_argument("make_random_instance: need n >= 3");
    std::mt19937_64 rng(seed);
    std::vector<double> a;
    a.reserve(static_cast<std::size_t>(n));
    while (static_cast<int>(a.size()) < n) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const double t = u * pi;
        bool ok = true;
        for (double other : a) {
            const double d = std::abs(t - other);
            if (std::min(d, pi - d) < angle_epsilon) {
                ok = false;
                break;
            }
        }
        if (ok) a.push_back(t);
    }
    std::sort(a.begin(), a.end());
    return instance{std::move(a), false};
}

/// Parses an instance file.  Throws std::invalid_argument /
/// nlohmann::json::exception on malformed input; normalization warnings go
/// to `warn`.
[[nodiscard]] inline auto parse_instance_json(const std::string& text, std::ostream& warn) -> instance {
    const nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object())
        throw std::invalid_argument("instance: top level must be a JSON object");
    if (j.contains("even")) {
        if (!j["even"].is_number_integer())
            throw std::invalid_argument("instance: \"even\" must be an integer diameter count");
        const int n = j["even"].get<int>();
        if (n < 2)
            throw std::invalid_argument("instance: \"even\" needs n >= 2");
        return make_even_instance(n);
    }
    if (!j.contains("diameters") || !j["diameters"].is_array())
        throw std::invalid_argument("instance: need \"diameters\" array or \"even\" count");
    std::vector<double> a;
    a.reserve(j["diameters"].size());
    int folded = 0;
    for (const auto& v : j["diameters"]) {
        if (!v.is_number())
            throw std::invalid_argument("instance: diameters must be numbers");
        double x = v.get<double>();
        if (!std::isfinite(x))
            throw std::invalid_argument("instance: diameters must be finite");
        if (x < 0.0 || x >= pi) {
            x = std::fmod(x, pi);
            if (x < 0.0) x += pi;
            ++folded;
        }
        a.push_back(x);
    }
    if (folded > 0)
        warn << "warning: " << folded << " angle(s) normalized into [0, pi)\n";
    instance inst{std::move(a), false};
    inst.diameters = diameter_set::from_angles(inst.diameters).diameter_angles();  // sort + validate
    return inst;
}

[[nodiscard]] inline auto instance_to_json(const instance& inst) -> std::string {
    nlohmann::json j;
    if (inst.even)
        j["even"] = static_cast<int>(inst.diameters.size());
    else
        j["diameters"] = inst.diameters;
    return j.dump(2) + "\n";
}

}  // namespace asympoly
