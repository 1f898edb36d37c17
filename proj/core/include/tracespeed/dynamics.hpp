#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "tracespeed/core.hpp"

namespace tracespeed {

/// Dense density matrices are limited to this many qubits (4^12 complex
/// entries is the largest block the oracle routines should ever allocate).
inline constexpr int kMaxDenseQubits = 12;

/// State after k Grover iterations in the {|w>, |w_perp>} plane,
/// |psi_k> = sin(theta_k)|w> + cos(theta_k)|w_perp> with theta_k = (2k+1) theta.
struct PureTrajectoryPoint {
    std::int64_t k = 0;
    double amp_target = 0.0;  ///< sin(theta_k)
    double amp_perp = 0.0;    ///< cos(theta_k)
    double theta_k = 0.0;     ///< (2k+1) theta, radians
};

enum class ScheduleKind { constant, linear, exponential, table };

/// Non-increasing polarization eps(k); models initial impurity plus partial
/// depolarization accrued during the run. All eps values live in (0, 1].
///
/// linear decays from eps_initial to eps_final at k_ref and clamps there;
/// exponential follows eps_initial * (eps_final/eps_initial)^(k/k_ref) and
/// keeps decaying past k_ref; table interpolates linearly between knots and
/// clamps at both ends.
struct PolarizationSchedule {
    ScheduleKind kind = ScheduleKind::constant;
    double eps_initial = 1.0;
    double eps_final = 1.0;
    std::int64_t k_ref = 1;
    std::vector<std::pair<std::int64_t, double>> table;  ///< (k, eps) knots, k strictly increasing

    static PolarizationSchedule constant(double eps);
    static PolarizationSchedule linear(double eps_initial, double eps_final, std::int64_t k_ref);
    static PolarizationSchedule exponential(double eps_initial, double eps_final, std::int64_t k_ref);
    static PolarizationSchedule tabulated(std::vector<std::pair<std::int64_t, double>> knots);
};

/// The system after k steps: pure amplitudes plus the polarization in effect,
/// i.e. rho_k = eps |psi_k><psi_k| + (1-eps) I / 2^n.
struct PseudoPureSnapshot {
    PureTrajectoryPoint point;
    double eps = 1.0;
    int n = 0;
};

/// Closed-form trajectory point; no iteration is performed.
PureTrajectoryPoint pure_state_at(const GroverParams& params, std::int64_t k);

/// eps(k) for the given schedule. k must be >= 0.
double polarization_at(const PolarizationSchedule& schedule, std::int64_t k);

/// Composes pure_state_at and polarization_at.
PseudoPureSnapshot snapshot(const GroverParams& params, const PolarizationSchedule& schedule,
                            std::int64_t k);

/// Materializes eps |psi_k><psi_k| + (1-eps) I / 2^n with the target fixed to
/// |0...0> and |w_perp> uniform over the remaining basis states. Only valid
/// for n <= kMaxDenseQubits.
Eigen::MatrixXcd dense_density_matrix(const PseudoPureSnapshot& snap);

}  // namespace tracespeed
