#include "tracespeed/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "tracespeed/oracle.hpp"
#include "tracespeed/statspeed.hpp"

namespace tracespeed::verify {

namespace {

double oracle_tolerance(int n) {
    // the analytic formulas drop O(1/2^n) terms; empirically the discrepancy
    // stays well inside 10 n^2 / sqrt(2^n)
    return 10.0 * n * n / std::exp2(0.5 * n);
}

CheckResult finish(std::string name, double worst, double tol, std::string detail = {}) {
    CheckResult r;
    r.name = std::move(name);
    r.worst = worst;
    r.tolerance = tol;
    r.passed = worst <= tol;
    r.detail = std::move(detail);
    return r;
}

}  // namespace

CheckResult check_success_probabilities(int n_max) {
    double worst = 0.0;
    for (int n = 2; n <= n_max; ++n) {
        const auto params = GroverParams::make(n);
        const std::int64_t k_hi = 2 * grover_step_count(params);
        for (std::int64_t k = 0; k <= k_hi; ++k) {
            const auto state = simulate_grover_statevector(n, k, 0);
            const double overlap = std::norm(state.vector(0));
            worst = std::max(worst, std::abs(overlap - success_prob_pure(params, k)));
        }
    }
    return finish("probabilities-closed-form-vs-statevector", worst, 1e-12);
}

CheckResult check_gamma_matrices(int n_max) {
    double worst_scaled = 0.0;
    double worst_abs = 0.0;
    for (int n = 2; n <= n_max; ++n) {
        const auto params = GroverParams::make(n);
        const double tol = oracle_tolerance(n);
        const std::int64_t k_hi = 2 * grover_step_count(params);
        for (std::int64_t k = 0; k <= k_hi; ++k) {
            const auto state = simulate_grover_statevector(n, k, 0);
            const auto exact = gamma_numeric(state);
            const auto approx = gamma_analytic(params, k);
            const double gap = (exact.entries - approx.entries).cwiseAbs().maxCoeff();
            worst_abs = std::max(worst_abs, gap);
            worst_scaled = std::max(worst_scaled, gap / tol);
        }
    }
    std::ostringstream detail;
    detail << "worst entrywise gap " << worst_abs << " (tolerance scales as 10 n^2/sqrt(2^n))";
    return finish("gamma-analytic-vs-numeric", worst_scaled, 1.0, detail.str());
}

CheckResult check_ts_optimized(int n_max, int grid_points) {
    double worst_vs_gamma = 0.0;   // ts_optimized vs sqrt(lambda_max(gamma_numeric))
    double worst_analytic = 0.0;   // ts_pure_analytic vs ts_optimized, scaled by tolerance
    for (int n = 2; n <= std::min(n_max, kMaxOptimizeQubits); ++n) {
        const auto params = GroverParams::make(n);
        const double tol = oracle_tolerance(n);
        const std::int64_t k_hi = 2 * grover_step_count(params);
        for (std::int64_t k = 0; k <= k_hi; ++k) {
            const auto state = simulate_grover_statevector(n, k, 0);
            const auto rho = DenseState::density(n, to_density(state));
            const auto optimized = ts_optimized_numeric(rho, grid_points);
            const double exact = std::sqrt(std::max(0.0, gamma_numeric(state).max_eigenvalue()));
            worst_vs_gamma = std::max(worst_vs_gamma, std::abs(optimized.ts - exact));
            worst_analytic = std::max(
                worst_analytic, std::abs(ts_pure_analytic(params, k) - optimized.ts) / tol);
        }
    }
    std::ostringstream detail;
    detail << "analytic-vs-numeric stayed within its 10 n^2/sqrt(2^n) envelope (worst ratio "
           << worst_analytic << ")";
    const bool envelope_ok = worst_analytic <= 1.0;
    CheckResult r = finish("ts-optimized-vs-gamma-eigenvalue", worst_vs_gamma, 1e-6, detail.str());
    r.passed = r.passed && envelope_ok;
    return r;
}

CheckResult check_epsilon_linearity(int n_max, std::uint64_t seed, int samples) {
    std::mt19937_64 rng(seed ^ 0x5ca1ab1eULL);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max - 1));
        const auto params = GroverParams::make(n);
        const std::int64_t k = static_cast<std::int64_t>(
            rng() % static_cast<std::uint64_t>(2 * grover_step_count(params) + 1));
        const double eps = 0.05 + 0.95 * unit(rng);
        const auto dir = SpinDirection::from_angles(std::numbers::pi * unit(rng),
                                                    2.0 * std::numbers::pi * unit(rng));
        const auto psi = simulate_grover_statevector(n, k, 0);
        const double pure = ts_direct(DenseState::density(n, to_density(psi)), dir);
        const double mixed = ts_direct(pseudo_pure_density(psi, eps), dir);
        worst = std::max(worst, std::abs(mixed - eps * pure));
    }
    return finish("trace-speed-epsilon-linearity", worst, 1e-10);
}

CheckResult check_kolmogorov_bound(std::uint64_t seed, int samples) {
    std::mt19937_64 rng(seed ^ 0xc0c0ffeeULL);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = -std::numeric_limits<double>::infinity();
    for (int s = 0; s < samples; ++s) {
        const int n = 2 + static_cast<int>(rng() % 5);  // n in 2..6
        const Eigen::Index d = Eigen::Index{1} << n;
        Eigen::MatrixXcd a(d, d);
        for (Eigen::Index i = 0; i < d; ++i) {
            for (Eigen::Index j = 0; j < d; ++j) {
                a(i, j) = std::complex<double>(gauss(rng), gauss(rng));
            }
        }
        Eigen::MatrixXcd rho = a * a.adjoint();
        rho /= rho.trace().real();
        const auto state = DenseState::density(n, std::move(rho));
        const auto dir = SpinDirection::from_angles(std::numbers::pi * unit(rng),
                                                    2.0 * std::numbers::pi * unit(rng));
        const auto basis = MeasurementBasis::collective_axis(SpinDirection::from_angles(
            std::numbers::pi * unit(rng), 2.0 * std::numbers::pi * unit(rng)));
        const double kspeed = kolmogorov_speed(state, dir, basis);
        worst = std::max(worst, kspeed - ts_direct(state, dir));
    }
    return finish("kolmogorov-speed-lower-bound", worst, 1e-4);
}

std::vector<SampledSchedule> sample_bound_suite(std::uint64_t seed, int count, int n_min,
                                                int n_max) {
    std::mt19937_64 rng(seed ^ 0xb0bcafeULL);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<SampledSchedule> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) {
        SampledSchedule item;
        item.n = n_min + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max - n_min + 1));
        const auto params = GroverParams::make(item.n);
        const std::int64_t k_gr = grover_step_count(params);
        // eps floor keeps every draw in the pseudo-pure regime (eps >> 1/2^n
        // and above eps_c), which is what Eq.-(9)-style bounds presuppose
        const double floor = std::max(0.05, 16.0 / static_cast<double>(params.big_n));
        const double eps_initial = 0.3 + 0.7 * unit(rng);
        const double eps_final = floor + (eps_initial - floor) * unit(rng);
        const std::int64_t k_lo = std::max<std::int64_t>(2, k_gr / 4);
        const std::int64_t k_ref =
            k_lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(k_gr - k_lo + 1));
        switch (t % 4) {
            case 0:
                item.schedule = PolarizationSchedule::constant(eps_final);
                break;
            case 1:
                item.schedule = PolarizationSchedule::linear(eps_initial, eps_final, k_ref);
                break;
            case 2:
                item.schedule = PolarizationSchedule::exponential(eps_initial, eps_final, k_ref);
                break;
            case 3: {
                const int knots = 2 + static_cast<int>(rng() % 4);
                std::vector<double> eps_values(static_cast<std::size_t>(knots));
                for (auto& e : eps_values) e = eps_final + (eps_initial - eps_final) * unit(rng);
                std::sort(eps_values.rbegin(), eps_values.rend());
                std::vector<std::int64_t> steps;
                while (static_cast<int>(steps.size()) < knots) {
                    const auto candidate =
                        static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * k_gr));
                    if (std::find(steps.begin(), steps.end(), candidate) == steps.end()) {
                        steps.push_back(candidate);
                    }
                }
                std::sort(steps.begin(), steps.end());
                std::vector<std::pair<std::int64_t, double>> table;
                for (int i = 0; i < knots; ++i) {
                    table.emplace_back(steps[static_cast<std::size_t>(i)],
                                       eps_values[static_cast<std::size_t>(i)]);
                }
                item.schedule = PolarizationSchedule::tabulated(std::move(table));
                break;
            }
        }
        out.push_back(std::move(item));
    }
    return out;
}

CheckResult check_speedup_bound_suite(std::uint64_t seed, int samples, double k_fault_factor) {
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto& draw : sample_bound_suite(seed, samples)) {
        const auto params = GroverParams::make(draw.n);
        CostReport report = speedup_report(params, draw.schedule);
        const double bound = report.bound / k_fault_factor;  // bound carries 1/K
        worst = std::max(worst, report.speedup - bound);
    }
    return finish("eq9-speedup-bound-random-schedules", worst, 1e-9);
}

CheckResult check_cost_consistency(double k_fault_factor) {
    const auto params = GroverParams::make(20);
    const auto report = speedup_report(params, PolarizationSchedule::constant(1.0));
    const double k_factor = grover_constants().k_factor * k_fault_factor;
    const double predicted = sqrt_register_size(params) / (2.0 * k_factor);
    const double deviation = std::abs(report.speedup / predicted - 1.0);
    return finish("eq4-eq5-cost-speedup-consistency", deviation, 5e-3);
}

std::vector<CheckResult> run_all(const Options& options) {
    std::vector<CheckResult> results;
    results.push_back(check_success_probabilities(options.n_max));
    results.push_back(check_gamma_matrices(options.n_max));
    results.push_back(check_ts_optimized(options.n_max, options.grid_points));
    results.push_back(check_epsilon_linearity(options.n_max, options.seed));
    results.push_back(check_kolmogorov_bound(options.seed));
    results.push_back(
        check_speedup_bound_suite(options.seed, 200, options.k_fault_factor));
    results.push_back(check_cost_consistency(options.k_fault_factor));
    return results;
}

}  // namespace tracespeed::verify
