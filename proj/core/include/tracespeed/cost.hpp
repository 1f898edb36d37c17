#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tracespeed/core.hpp"
#include "tracespeed/dynamics.hpp"

namespace tracespeed {

/// Cost sweeps above this qubit count must be requested explicitly: the search
/// range grows as sqrt(2^n) (~1.6e6 steps at n = 40).
inline constexpr int kMaxSweepQubits = 40;

struct CostEntry {
    std::int64_t k = 0;
    double cost = 0.0;  ///< (k+1)/p_k; +inf where p_k vanishes
};

/// Full cost accounting for one schedule: the curve, its discrete minimizer,
/// the classical baseline, the speed-up and the trace-speed bound on it.
struct CostReport {
    int n = 0;
    std::vector<CostEntry> cost_curve;
    std::int64_t k_opt = 0;
    double c_qu = 0.0;
    double c_cl = 0.0;             ///< memory-assisted baseline 2^n / 2
    double speedup = 0.0;          ///< c_cl / c_qu
    double ts_max_observed = 0.0;  ///< max of eps(k) ts_pure(k) over k in [0, k_opt]
    double bound = 0.0;            ///< sqrt(2^n)/(2K) * ts_max_observed / ts_pure_max
    bool bound_satisfied = false;  ///< speedup <= bound + 1e-9
};

/// Upper end of the discrete search range, ceil(2 (pi/4) sqrt(2^n)); one full
/// oscillation past the first success-probability peak.
std::int64_t cost_search_limit(const GroverParams& params);

/// C_qu(k) = (k+1)/p_k for k = 0..k_max with p_k the pseudo-pure success
/// probability under the schedule's eps(k).
std::vector<CostEntry> cost_curve(const GroverParams& params,
                                  const PolarizationSchedule& schedule, std::int64_t k_max);

/// Exact discrete minimization of the cost over k in [0, cost_search_limit];
/// smallest minimizing k on ties. Throws for n > kMaxSweepQubits unless
/// allow_large is set.
std::pair<std::int64_t, double> optimal_cost(const GroverParams& params,
                                             const PolarizationSchedule& schedule,
                                             bool allow_large = false);

/// Classical search baseline: 2^n without memory, 2^n / 2 with memory
/// (the O(1) term of the memory-assisted search is dropped).
double classical_cost(const GroverParams& params, bool with_memory);

/// Runs the discrete minimization and assembles the CostReport, including the
/// trace-speed bound on the speed-up.
CostReport speedup_report(const GroverParams& params, const PolarizationSchedule& schedule,
                          bool allow_large = false);

/// Large-n pseudo-pure cost K sqrt(2^n) / eps. Only valid above the critical
/// polarization; throws for eps <= eps_c where measuring immediately wins.
double pseudo_pure_cost_formula(const GroverParams& params, double eps);

/// Early-interruption margin a(k) - b at x = k / sqrt(2^n):
///   n sqrt(2^n) / (sqrt(8) sin^2(2x)) * (K (cos 4x - 1) + 2x sin 4x).
/// Positive throughout 0 < x <= pi/8, which is what makes the speed-up bound
/// hold for interruptions before k_Gr/2. k must lie in [1, round(k_Gr/2)].
double early_interruption_margin(const GroverParams& params, std::int64_t k);

/// Same margin as a function of the continuous variable x in (0, pi/8].
double early_interruption_margin_at(const GroverParams& params, double x);

}  // namespace tracespeed
