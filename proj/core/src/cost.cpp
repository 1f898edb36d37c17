#include "tracespeed/cost.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "tracespeed/statspeed.hpp"

namespace tracespeed {

std::int64_t cost_search_limit(const GroverParams& params) {
    return static_cast<std::int64_t>(
        std::ceil(2.0 * (std::numbers::pi / 4.0) * sqrt_register_size(params)));
}

std::vector<CostEntry> cost_curve(const GroverParams& params,
                                  const PolarizationSchedule& schedule, std::int64_t k_max) {
    if (k_max < 0) throw std::invalid_argument("cost_curve: negative k_max");
    std::vector<CostEntry> curve;
    curve.reserve(static_cast<std::size_t>(k_max) + 1);
    for (std::int64_t k = 0; k <= k_max; ++k) {
        const double p = success_prob_pseudopure(params, k, polarization_at(schedule, k));
        const double cost =
            p > 0.0 ? static_cast<double>(k + 1) / p : std::numeric_limits<double>::infinity();
        curve.push_back({k, cost});
    }
    return curve;
}

namespace {

void check_sweep_size(const GroverParams& params, bool allow_large, const char* what) {
    if (params.n > kMaxSweepQubits && !allow_large) {
        throw std::invalid_argument(std::string(what) + ": n = " + std::to_string(params.n) +
                                    " sweeps ~sqrt(2^n) steps; pass allow_large to proceed");
    }
}

}  // namespace

std::pair<std::int64_t, double> optimal_cost(const GroverParams& params,
                                             const PolarizationSchedule& schedule,
                                             bool allow_large) {
    check_sweep_size(params, allow_large, "optimal_cost");
    const std::int64_t k_max = cost_search_limit(params);
    std::int64_t best_k = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::int64_t k = 0; k <= k_max; ++k) {
        const double p = success_prob_pseudopure(params, k, polarization_at(schedule, k));
        if (p <= 0.0) continue;
        const double cost = static_cast<double>(k + 1) / p;
        if (cost < best) {  // strict: ties resolve to the smallest k
            best = cost;
            best_k = k;
        }
    }
    return {best_k, best};
}

double classical_cost(const GroverParams& params, bool with_memory) {
    const double n_states = static_cast<double>(params.big_n);
    return with_memory ? 0.5 * n_states : n_states;
}

CostReport speedup_report(const GroverParams& params, const PolarizationSchedule& schedule,
                          bool allow_large) {
    check_sweep_size(params, allow_large, "speedup_report");
    CostReport report;
    report.n = params.n;
    report.cost_curve = cost_curve(params, schedule, cost_search_limit(params));
    report.k_opt = 0;
    report.c_qu = std::numeric_limits<double>::infinity();
    for (const auto& e : report.cost_curve) {
        if (e.cost < report.c_qu) {
            report.c_qu = e.cost;
            report.k_opt = e.k;
        }
    }
    report.c_cl = classical_cost(params, /*with_memory=*/true);
    report.speedup = report.c_cl / report.c_qu;
    // maximal scheduled trace speed over the steps actually executed
    double ts_max = 0.0;
    for (std::int64_t k = 0; k <= report.k_opt; ++k) {
        ts_max = std::max(ts_max, polarization_at(schedule, k) * ts_pure_analytic(params, k));
    }
    report.ts_max_observed = ts_max;
    report.bound = sqrt_register_size(params) / (2.0 * grover_constants().k_factor) * ts_max /
                   ts_pure_max(params);
    report.bound_satisfied = report.speedup <= report.bound + 1e-9;
    return report;
}

double pseudo_pure_cost_formula(const GroverParams& params, double eps) {
    const double eps_c = critical_polarization(params);
    if (!(eps > eps_c)) {
        throw std::invalid_argument(
            "pseudo_pure_cost_formula: eps <= eps_c; the cost is minimized at k = 0 and the "
            "large-n formula does not apply");
    }
    if (eps > 1.0) throw std::invalid_argument("pseudo_pure_cost_formula: eps > 1");
    return grover_constants().k_factor * sqrt_register_size(params) / eps;
}

namespace {

double margin_raw(const GroverParams& params, double x) {
    const double n = static_cast<double>(params.n);
    const double k_factor = grover_constants().k_factor;
    const double s = std::sin(2.0 * x);
    return n * sqrt_register_size(params) / (std::sqrt(8.0) * s * s) *
           (k_factor * (std::cos(4.0 * x) - 1.0) + 2.0 * x * std::sin(4.0 * x));
}

}  // namespace

double early_interruption_margin_at(const GroverParams& params, double x) {
    if (!(x > 0.0 && x <= std::numbers::pi / 8.0)) {
        throw std::invalid_argument("early_interruption_margin_at: x must lie in (0, pi/8]");
    }
    return margin_raw(params, x);
}

double early_interruption_margin(const GroverParams& params, std::int64_t k) {
    // round(k_Gr/2)/sqrt(2^n) may land slightly past pi/8 at small n, so the
    // step form validates in k, not x.
    const std::int64_t k_half = std::llround(0.5 * static_cast<double>(grover_step_count(params)));
    if (k < 1 || k > k_half) {
        throw std::invalid_argument(
            "early_interruption_margin: k must lie in [1, round(k_Gr/2)], the regime the "
            "derivation covers");
    }
    return margin_raw(params, static_cast<double>(k) / sqrt_register_size(params));
}

}  // namespace tracespeed
