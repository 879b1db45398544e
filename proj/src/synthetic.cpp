#include "grantha/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "grantha/error.hpp"

namespace grantha::synthetic {

namespace {

struct Xy {
    double x, y;
};

using Curve = std::function<Xy(double)>;

constexpr double kPi = std::numbers::pi;

Curve line(double degrees) {
    const double a = degrees * kPi / 180.0;
    return [c = std::cos(a), s = std::sin(a)](double u) { return Xy{u * c, u * s}; };
}

Curve arc(double from, double to) {
    return [=](double u) {
        const double a = from + u * (to - from);
        return Xy{std::cos(a), std::sin(a)};
    };
}

// A vertical shaft drawn downwards that curls into a half circle.
Curve hook(double side) {
    return [=](double u) {
        constexpr double shaft = 0.6;
        if (u <= shaft) return Xy{0.0, 1.0 - u / shaft};
        const double a = kPi + (u - shaft) / (1.0 - shaft) * kPi;
        return Xy{side * (0.25 + 0.25 * std::cos(a)), 0.25 * std::sin(a)};
    };
}

const std::vector<std::pair<std::string, Curve>>& curves() {
    static const std::vector<std::pair<std::string, Curve>> all = {
        {"line_0", line(0)},
        {"line_45", line(45)},
        {"line_90", line(90)},
        {"line_135", line(135)},
        {"arc_up", arc(kPi, 2 * kPi)},
        {"arc_down", arc(kPi, 0)},
        {"loop_ccw", arc(0, 2 * kPi)},
        {"loop_cw", arc(0, -2 * kPi)},
        {"hook_left", hook(-1.0)},
        {"hook_right", hook(1.0)},
    };
    return all;
}

}  // namespace

const std::vector<std::string>& class_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [id, curve] : curves()) v.push_back(id);
        return v;
    }();
    return ids;
}

InkSample make_sample(const std::string& class_id, std::uint64_t seed, const Params& params) {
    const auto& all = curves();
    const auto it = std::find_if(all.begin(), all.end(), [&](const auto& c) { return c.first == class_id; });
    if (it == all.end()) throw ArgumentError("unknown synthetic class '" + class_id + "'");
    if (params.min_points < 2 || params.max_points < params.min_points || params.gamma_min <= 0 ||
        params.gamma_max < params.gamma_min) {
        throw ArgumentError("invalid synthetic parameters");
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> count(params.min_points, params.max_points);
    std::uniform_real_distribution<double> log_gamma(std::log(params.gamma_min), std::log(params.gamma_max));
    std::uniform_real_distribution<double> scale(40.0, 400.0);
    std::uniform_real_distribution<double> offset(-500.0, 500.0);

    const std::size_t n = count(rng);
    const double gamma = std::exp(log_gamma(rng));
    const double k = scale(rng);
    const double dx = offset(rng), dy = offset(rng);

    std::vector<Xy> clean(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = static_cast<double>(i) / static_cast<double>(n - 1);
        const Xy p = it->second(std::pow(u, gamma));
        clean[i] = {p.x * k + dx, p.y * k + dy};
    }
    auto [xmin, xmax] = std::minmax_element(clean.begin(), clean.end(), [](Xy a, Xy b) { return a.x < b.x; });
    auto [ymin, ymax] = std::minmax_element(clean.begin(), clean.end(), [](Xy a, Xy b) { return a.y < b.y; });
    const double side = std::max(xmax->x - xmin->x, ymax->y - ymin->y);
    std::normal_distribution<double> noise(0.0, params.jitter * side);

    Stroke stroke;
    for (std::size_t i = 0; i < n; ++i) {
        stroke.points.push_back({clean[i].x + noise(rng), clean[i].y + noise(rng), 10.0 * static_cast<double>(i)});
    }
    return InkSample{{std::move(stroke)}, class_id};
}

Benchmark make_benchmark(std::size_t per_class, std::uint64_t seed, const Params& params) {
    std::mt19937_64 rng(seed);
    Benchmark b;
    for (auto* set : {&b.train, &b.test}) {
        for (const auto& id : class_ids()) {
            for (std::size_t i = 0; i < per_class; ++i) set->push_back(make_sample(id, rng(), params));
        }
    }
    return b;
}

}  // namespace grantha::synthetic
