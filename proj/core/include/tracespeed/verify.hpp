#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tracespeed/cost.hpp"
#include "tracespeed/dynamics.hpp"

namespace tracespeed::verify {

/// Outcome of one cross-check: worst observed margin against its tolerance.
struct CheckResult {
    std::string name;
    double worst = 0.0;      ///< largest observed deviation (check-specific meaning)
    double tolerance = 0.0;  ///< the deviation must stay at or below this
    bool passed = false;
    std::string detail;
};

struct Options {
    int n_max = 8;                 ///< oracle checks run for n = 2..n_max
    std::uint64_t seed = 0;        ///< RNG seed for the randomized suites
    int grid_points = 96;          ///< direction grid for ts_optimized_numeric
    double k_fault_factor = 1.0;   ///< scales K; != 1 is the negative control
};

/// One random monotone non-increasing schedule drawn from the Eq.-(9) suite
/// sampler: kinds cycle over constant/linear/exponential/table with eps in
/// [0.05, 1] (comfortably above eps_c for n >= 12) and k_ref in [k_Gr/4, k_Gr].
struct SampledSchedule {
    int n = 0;
    PolarizationSchedule schedule;
};
std::vector<SampledSchedule> sample_bound_suite(std::uint64_t seed, int count, int n_min = 12,
                                                int n_max = 24);

CheckResult check_success_probabilities(int n_max);
CheckResult check_gamma_matrices(int n_max);
CheckResult check_ts_optimized(int n_max, int grid_points);
CheckResult check_epsilon_linearity(int n_max, std::uint64_t seed, int samples = 50);
CheckResult check_kolmogorov_bound(std::uint64_t seed, int samples = 30);
CheckResult check_speedup_bound_suite(std::uint64_t seed, int samples = 200,
                                      double k_fault_factor = 1.0);
CheckResult check_cost_consistency(double k_fault_factor = 1.0);

/// Runs every check in a fixed order.
std::vector<CheckResult> run_all(const Options& options);

}  // namespace tracespeed::verify
