#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "tracespeed/core.hpp"
#include "tracespeed/dynamics.hpp"

namespace tracespeed {

/// Covariance matrix Gamma_ij = 4 (Re<J_i J_j> - <J_i><J_j>) of the collective
/// spin operators, indexed (x, y, z). For states on the Grover trajectory the
/// y row/column decouples (Gamma_xy = Gamma_yz = 0) and the optimized trace
/// speed is sqrt of the largest eigenvalue.
struct GammaMatrix {
    Eigen::Matrix3d entries = Eigen::Matrix3d::Zero();

    /// Largest eigenvalue via the closed form for the decoupled xz block;
    /// assumes the Grover block structure (zero xy and yz entries).
    double max_eigenvalue() const;
};

/// Trace speed sampled over iteration steps.
struct SpeedCurve {
    int n = 0;
    std::vector<std::pair<std::int64_t, double>> points;  ///< (k, ts)
    double ts_max = 0.0;
    std::int64_t k_at_max = 0;  ///< smallest maximizing k
};

/// Gamma matrix of |psi_k> with the O(1/2^n) terms dropped:
///   Gamma_xx = n + n(n-1) cos^2 - n^2 cos^4,  Gamma_yy = n,
///   Gamma_zz = n + n(n-1) sin^2 - n^2 sin^4,
///   Gamma_xz = -n^2 sin^2 cos^2, all at theta_k = (2k+1) theta.
GammaMatrix gamma_analytic(const GroverParams& params, std::int64_t k);

/// Optimized trace speed of the pure-state algorithm after k steps,
///   sqrt( n/8 (4 + n - f n + sqrt(8(1+f) + n^2 (1-f)^2)) ),  f = cos(4 theta_k).
/// Equals sqrt(lambda_max(gamma_analytic)) to high accuracy.
double ts_pure_analytic(const GroverParams& params, std::int64_t k);

/// Maximal pure-state trace speed sqrt(n(n+1)/2), attained near k = k_Gr/2.
double ts_pure_max(const GroverParams& params);

/// Pseudo-pure trace speed eps * ts_pure_analytic. The eps-linear scaling
/// assumes eps >> 1/2^n; calls with eps below min_eps_factor / 2^n emit a
/// warning on stderr but still return the scaled value.
double ts_pseudopure(const GroverParams& params, std::int64_t k, double eps,
                     double min_eps_factor = 16.0);

/// eps(k) * ts_pure_analytic(k) for k = 0..k_max, with the maximum and its
/// smallest argmax. Pure function of its inputs; disjoint k ranges may be
/// evaluated concurrently by the caller.
SpeedCurve speed_curve(const GroverParams& params, const PolarizationSchedule& schedule,
                       std::int64_t k_max);

/// Entanglement depth witnessed by a trace speed value: returns r+1 where r is
/// the largest integer with ts^2 > n r (strict), or 1 when ts^2 <= n.
int entanglement_depth_witness(double ts, int n);

}  // namespace tracespeed
