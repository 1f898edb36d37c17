#include "tracespeed/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tracespeed {

namespace {

void check_eps(double eps, const char* what) {
    if (!(eps > 0.0 && eps <= 1.0)) {
        throw std::invalid_argument(std::string(what) + ": polarization must lie in (0, 1]");
    }
}

}  // namespace

PolarizationSchedule PolarizationSchedule::constant(double eps) {
    check_eps(eps, "PolarizationSchedule::constant");
    PolarizationSchedule s;
    s.kind = ScheduleKind::constant;
    s.eps_initial = eps;
    s.eps_final = eps;
    return s;
}

PolarizationSchedule PolarizationSchedule::linear(double eps_initial, double eps_final,
                                                  std::int64_t k_ref) {
    check_eps(eps_initial, "PolarizationSchedule::linear");
    check_eps(eps_final, "PolarizationSchedule::linear");
    if (eps_final > eps_initial) {
        throw std::invalid_argument("PolarizationSchedule::linear: eps(k) must be non-increasing");
    }
    if (k_ref < 1) throw std::invalid_argument("PolarizationSchedule::linear: k_ref must be >= 1");
    PolarizationSchedule s;
    s.kind = ScheduleKind::linear;
    s.eps_initial = eps_initial;
    s.eps_final = eps_final;
    s.k_ref = k_ref;
    return s;
}

PolarizationSchedule PolarizationSchedule::exponential(double eps_initial, double eps_final,
                                                       std::int64_t k_ref) {
    PolarizationSchedule s = linear(eps_initial, eps_final, k_ref);
    s.kind = ScheduleKind::exponential;
    return s;
}

PolarizationSchedule PolarizationSchedule::tabulated(
    std::vector<std::pair<std::int64_t, double>> knots) {
    if (knots.empty()) {
        throw std::invalid_argument("PolarizationSchedule::tabulated: empty table");
    }
    for (std::size_t i = 0; i < knots.size(); ++i) {
        check_eps(knots[i].second, "PolarizationSchedule::tabulated");
        if (knots[i].first < 0) {
            throw std::invalid_argument("PolarizationSchedule::tabulated: negative step index");
        }
        if (i > 0) {
            if (knots[i].first <= knots[i - 1].first) {
                throw std::invalid_argument(
                    "PolarizationSchedule::tabulated: steps must be strictly increasing");
            }
            if (knots[i].second > knots[i - 1].second) {
                throw std::invalid_argument(
                    "PolarizationSchedule::tabulated: eps(k) must be non-increasing");
            }
        }
    }
    PolarizationSchedule s;
    s.kind = ScheduleKind::table;
    s.eps_initial = knots.front().second;
    s.eps_final = knots.back().second;
    s.table = std::move(knots);
    return s;
}

PureTrajectoryPoint pure_state_at(const GroverParams& params, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("pure_state_at: negative step count");
    PureTrajectoryPoint p;
    p.k = k;
    p.theta_k = static_cast<double>(2 * k + 1) * params.theta;
    p.amp_target = std::sin(p.theta_k);
    p.amp_perp = std::cos(p.theta_k);
    return p;
}

double polarization_at(const PolarizationSchedule& schedule, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("polarization_at: negative step count");
    const double kk = static_cast<double>(k);
    const double kref = static_cast<double>(schedule.k_ref);
    switch (schedule.kind) {
        case ScheduleKind::constant:
            return schedule.eps_initial;
        case ScheduleKind::linear:
            return std::max(schedule.eps_final,
                            schedule.eps_initial -
                                (schedule.eps_initial - schedule.eps_final) * kk / kref);
        case ScheduleKind::exponential:
            return schedule.eps_initial *
                   std::pow(schedule.eps_final / schedule.eps_initial, kk / kref);
        case ScheduleKind::table: {
            const auto& t = schedule.table;
            if (k <= t.front().first) return t.front().second;
            if (k >= t.back().first) return t.back().second;
            auto hi = std::upper_bound(t.begin(), t.end(), k,
                                       [](std::int64_t v, const auto& p) { return v < p.first; });
            auto lo = hi - 1;
            const double w = static_cast<double>(k - lo->first) /
                             static_cast<double>(hi->first - lo->first);
            return lo->second + w * (hi->second - lo->second);
        }
    }
    throw std::logic_error("polarization_at: unknown schedule kind");
}

PseudoPureSnapshot snapshot(const GroverParams& params, const PolarizationSchedule& schedule,
                            std::int64_t k) {
    PseudoPureSnapshot s;
    s.point = pure_state_at(params, k);
    s.eps = polarization_at(schedule, k);
    s.n = params.n;
    return s;
}

Eigen::MatrixXcd dense_density_matrix(const PseudoPureSnapshot& snap) {
    if (snap.n < 1 || snap.n > kMaxDenseQubits) {
        throw std::invalid_argument("dense_density_matrix: dense form requires 1 <= n <= 12");
    }
    const Eigen::Index dim = Eigen::Index{1} << snap.n;
    // |w> = |0...0>, |w_perp> uniform over the remaining 2^n - 1 states
    Eigen::VectorXcd psi(dim);
    const double perp = snap.point.amp_perp / std::sqrt(static_cast<double>(dim - 1));
    psi.setConstant(perp);
    psi(0) = snap.point.amp_target;
    Eigen::MatrixXcd rho = snap.eps * (psi * psi.adjoint());
    rho.diagonal().array() += (1.0 - snap.eps) / static_cast<double>(dim);
    return rho;
}

}  // namespace tracespeed
