#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tracespeed/dynamics.hpp"
#include "tracespeed/io.hpp"

namespace tracespeed::cli {

/// One CLI invocation, resolved from flags and (optionally) a flat JSON
/// config file; flags win over config values.
struct RunConfig {
    std::string command;
    int n = 30;
    std::string schedule_spec;   ///< file path, inline JSON, or kind:... shorthand
    std::int64_t k_max = -1;     ///< optional step cap for figures; -1 = k_Gr
    std::string output_path;     ///< empty = stdout
    std::uint64_t seed = 0;
    std::string format = "csv";  ///< csv | json
    double eps_f = 0.3;          ///< fig2 final polarization
    int n_max = 8;               ///< verify: oracle checks cover n = 2..n_max
    int grid_points = 96;        ///< verify: direction grid resolution
    std::string svg_path;        ///< optional chart output for fig1/fig2
    std::string eps_list;        ///< cost-sweep: comma-separated eps overrides
    bool force_large = false;    ///< allow cost sweeps beyond 40 qubits
    bool inject_k_fault = false; ///< verify: perturb K by 1% (negative control)
};

/// Parses a schedule spec: inline JSON ({"kind": ...}), a path to a JSON
/// file, or the shorthand forms constant:E, linear:EI:EF[:KREF],
/// exponential:EI:EF[:KREF], table:K=E,K=E,... A missing k_ref defaults to
/// default_k_ref (conventionally k_Gr for the problem size at hand).
PolarizationSchedule parse_schedule_spec(const std::string& spec, std::int64_t default_k_ref);

Table constants_table(int n);
Table fig1_table(int n, std::int64_t k_max = -1);
Table fig2_table(int n, double eps_f, std::int64_t k_max = -1);
Table cost_sweep_table(int n, const std::string& schedule_spec, const std::string& eps_list,
                       bool force_large);
Table bound_check_table(int n, const std::string& schedule_spec, bool force_large);

/// Full CLI entry point; args exclude argv[0]. Returns the process exit code:
/// 0 on success, 1 for failed verification, 2 for usage/precondition errors.
int run(const std::vector<std::string>& args);

}  // namespace tracespeed::cli
