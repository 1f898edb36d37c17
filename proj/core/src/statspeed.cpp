#include "tracespeed/statspeed.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

namespace tracespeed {

double GammaMatrix::max_eigenvalue() const {
    // y decouples; the xz block is 2x2 symmetric.
    const double a = entries(0, 0);
    const double c = entries(2, 2);
    const double b = entries(0, 2);
    const double mean = 0.5 * (a + c);
    const double disc = std::sqrt(0.25 * (a - c) * (a - c) + b * b);
    return std::max(entries(1, 1), mean + disc);
}

GammaMatrix gamma_analytic(const GroverParams& params, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("gamma_analytic: negative step count");
    const double n = static_cast<double>(params.n);
    const double theta_k = static_cast<double>(2 * k + 1) * params.theta;
    const double s = std::sin(theta_k);
    const double c = std::cos(theta_k);
    const double s2 = s * s;
    const double c2 = c * c;
    GammaMatrix g;
    g.entries(0, 0) = n + n * (n - 1.0) * c2 - n * n * c2 * c2;
    g.entries(1, 1) = n;
    g.entries(2, 2) = n + n * (n - 1.0) * s2 - n * n * s2 * s2;
    g.entries(0, 2) = g.entries(2, 0) = -n * n * s2 * c2;
    return g;
}

double ts_pure_analytic(const GroverParams& params, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("ts_pure_analytic: negative step count");
    const double n = static_cast<double>(params.n);
    const double f = std::cos(4.0 * static_cast<double>(2 * k + 1) * params.theta);
    const double root = std::sqrt(8.0 * (1.0 + f) + n * n * (1.0 - f) * (1.0 - f));
    return std::sqrt(0.125 * n * (4.0 + n - f * n + root));
}

double ts_pure_max(const GroverParams& params) {
    const double n = static_cast<double>(params.n);
    return std::sqrt(0.5 * n * (n + 1.0));
}

double ts_pseudopure(const GroverParams& params, std::int64_t k, double eps,
                     double min_eps_factor) {
    if (!(eps > 0.0 && eps <= 1.0)) {
        throw std::invalid_argument("ts_pseudopure: polarization must lie in (0, 1]");
    }
    if (eps < min_eps_factor / static_cast<double>(params.big_n)) {
        std::cerr << "ts_pseudopure: eps = " << eps << " is below " << min_eps_factor
                  << "/2^n; the eps-linear scaling regime assumption is violated\n";
    }
    return eps * ts_pure_analytic(params, k);
}

SpeedCurve speed_curve(const GroverParams& params, const PolarizationSchedule& schedule,
                       std::int64_t k_max) {
    if (k_max < 0) throw std::invalid_argument("speed_curve: negative k_max");
    SpeedCurve curve;
    curve.n = params.n;
    curve.points.reserve(static_cast<std::size_t>(k_max) + 1);
    curve.ts_max = -1.0;
    for (std::int64_t k = 0; k <= k_max; ++k) {
        const double ts = polarization_at(schedule, k) * ts_pure_analytic(params, k);
        curve.points.emplace_back(k, ts);
        if (ts > curve.ts_max) {  // strict: ties resolve to the smallest k
            curve.ts_max = ts;
            curve.k_at_max = k;
        }
    }
    return curve;
}

int entanglement_depth_witness(double ts, int n) {
    if (ts < 0.0 || n < 1) {
        throw std::invalid_argument("entanglement_depth_witness: ts must be >= 0 and n >= 1");
    }
    const double ts2 = ts * ts;
    auto r = static_cast<std::int64_t>(std::floor(ts2 / static_cast<double>(n)));
    // floor can land on (or overshoot) the boundary; the witness is strict
    while (r > 0 && !(ts2 > static_cast<double>(n) * static_cast<double>(r))) --r;
    return static_cast<int>(r) + 1;
}

}  // namespace tracespeed
