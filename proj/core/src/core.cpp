#include "tracespeed/core.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tracespeed {

double grover_angle(int n, int max_qubits) {
    if (n < 1 || n > max_qubits) {
        throw std::invalid_argument("grover_angle: qubit count " + std::to_string(n) +
                                    " outside [1, " + std::to_string(max_qubits) + "]");
    }
    // exp2(-n/2) avoids intermediate 2^n; exact to within one ulp up to the cap
    return std::asin(std::exp2(-0.5 * static_cast<double>(n)));
}

GroverParams GroverParams::make(int n, int max_qubits) {
    GroverParams p;
    p.theta = grover_angle(n, max_qubits);  // validates n
    p.n = n;
    p.big_n = std::uint64_t{1} << n;
    return p;
}

double success_prob_pure(const GroverParams& params, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("success_prob_pure: negative step count");
    const double s = std::sin(static_cast<double>(2 * k + 1) * params.theta);
    return s * s;
}

double success_prob_pseudopure(const GroverParams& params, std::int64_t k, double eps) {
    if (!(eps >= 0.0 && eps <= 1.0)) {
        throw std::invalid_argument("success_prob_pseudopure: polarization outside [0, 1]");
    }
    return eps * success_prob_pure(params, k) +
           (1.0 - eps) / static_cast<double>(params.big_n);
}

GroverConstants solve_grover_constants() {
    // g(r) = tan(2r) - 4r changes sign once on (0.4, pi/4): g(0.4) < 0 and
    // g -> +inf at the pole 2r = pi/2.
    double lo = 0.4;
    double hi = std::numbers::pi / 4.0 - 1e-9;
    auto g = [](double r) { return std::tan(2.0 * r) - 4.0 * r; };
    if (!(g(lo) < 0.0 && g(hi) > 0.0)) {
        throw std::runtime_error("solve_grover_constants: bracket lost the sign change");
    }
    while (hi - lo > 1e-14) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) < 0.0 ? lo : hi) = mid;
    }
    GroverConstants c;
    c.r = 0.5 * (lo + hi);
    const double s = std::sin(2.0 * c.r);
    c.k_factor = c.r / (s * s);
    return c;
}

const GroverConstants& grover_constants() {
    static const GroverConstants c = solve_grover_constants();
    return c;
}

double sqrt_register_size(const GroverParams& params) {
    return std::exp2(0.5 * static_cast<double>(params.n));
}

double critical_polarization(const GroverParams& params) {
    return grover_constants().k_factor / sqrt_register_size(params);
}

std::int64_t grover_step_count(const GroverParams& params) {
    return std::llround(std::numbers::pi / 4.0 * sqrt_register_size(params));
}

}  // namespace tracespeed
