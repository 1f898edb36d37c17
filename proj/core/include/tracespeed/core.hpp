#pragma once

#include <cstdint>

namespace tracespeed {

/// Largest supported register: 2^63 still fits a 64-bit unsigned integer.
inline constexpr int kMaxQubits = 63;

/// A Grover search instance over n qubits. Single source of truth for the
/// derived quantities N = 2^n and the rotation angle theta = arcsin(2^{-n/2}).
struct GroverParams {
    int n = 0;                 ///< qubit count, n >= 1
    std::uint64_t big_n = 0;   ///< register size N = 2^n
    double theta = 0.0;        ///< arcsin(2^{-n/2}), radians

    /// Validates n and fills the derived fields. Throws std::invalid_argument
    /// for n < 1 or n > max_qubits.
    static GroverParams make(int n, int max_qubits = kMaxQubits);
};

/// r solves tan(2r) = 4r on (0, pi/4); K = r / sin^2(2r) is the prefactor of
/// the optimal quantum cost K*sqrt(2^n).
struct GroverConstants {
    double r = 0.0;
    double k_factor = 0.0;
};

/// theta = arcsin(2^{-n/2}). Throws for n < 1 or n > max_qubits.
double grover_angle(int n, int max_qubits = kMaxQubits);

/// Success probability after k iterations of the pure-state algorithm,
/// sin^2((2k+1) theta). k must be >= 0.
double success_prob_pure(const GroverParams& params, std::int64_t k);

/// Pseudo-pure success probability eps*sin^2((2k+1) theta) + (1-eps)/2^n.
/// Affine in eps; throws if eps is outside [0, 1].
double success_prob_pseudopure(const GroverParams& params, std::int64_t k, double eps);

/// Bisects tan(2r) - 4r on (0.4, pi/4) to 1e-12 and returns {r, K}.
GroverConstants solve_grover_constants();

/// Cached copy of solve_grover_constants(); solved once per process.
const GroverConstants& grover_constants();

/// Critical polarization eps_c = K / sqrt(2^n). Below it, measuring the
/// initial state immediately beats running Grover iterations.
double critical_polarization(const GroverParams& params);

/// k_Gr = round((pi/4) sqrt(2^n)), the step count at which the pure-state
/// success probability first peaks.
std::int64_t grover_step_count(const GroverParams& params);

/// sqrt(2^n) as a double.
double sqrt_register_size(const GroverParams& params);

}  // namespace tracespeed
