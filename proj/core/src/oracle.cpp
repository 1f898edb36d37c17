#include "tracespeed/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace tracespeed {

using std::complex;

namespace {

constexpr complex<double> kI{0.0, 1.0};

void check_oracle_n(int n, int cap, const char* what) {
    if (n < 1 || n > cap) {
        throw std::invalid_argument(std::string(what) + ": n = " + std::to_string(n) +
                                    " outside [1, " + std::to_string(cap) + "]");
    }
}

Eigen::Index dim_of(int n) { return Eigen::Index{1} << n; }

}  // namespace

SpinDirection SpinDirection::make(double x, double y, double z) {
    const double norm = std::sqrt(x * x + y * y + z * z);
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw std::invalid_argument("SpinDirection::make: cannot normalize a zero vector");
    }
    return SpinDirection{x / norm, y / norm, z / norm};
}

SpinDirection SpinDirection::from_angles(double polar, double azimuth) {
    const double s = std::sin(polar);
    return SpinDirection{s * std::cos(azimuth), s * std::sin(azimuth), std::cos(polar)};
}

double SpinDirection::polar() const { return std::atan2(std::hypot(x, y), z); }
double SpinDirection::azimuth() const { return std::atan2(y, x); }

DenseState DenseState::statevector(int n, Eigen::VectorXcd psi) {
    check_oracle_n(n, kMaxDenseQubits, "DenseState::statevector");
    if (psi.size() != dim_of(n)) {
        throw std::invalid_argument("DenseState::statevector: length is not 2^n");
    }
    if (std::abs(psi.norm() - 1.0) > 1e-12) {
        throw std::invalid_argument("DenseState::statevector: 2-norm deviates from 1");
    }
    DenseState s;
    s.n = n;
    s.kind = Kind::statevector;
    s.vector = std::move(psi);
    return s;
}

DenseState DenseState::density(int n, Eigen::MatrixXcd rho) {
    check_oracle_n(n, kMaxDenseQubits, "DenseState::density");
    const Eigen::Index d = dim_of(n);
    if (rho.rows() != d || rho.cols() != d) {
        throw std::invalid_argument("DenseState::density: matrix is not 2^n x 2^n");
    }
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-9) {
        throw std::invalid_argument("DenseState::density: not Hermitian");
    }
    if (std::abs(rho.trace().real() - 1.0) > 1e-9) {
        throw std::invalid_argument("DenseState::density: trace deviates from 1");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-9) {
        throw std::invalid_argument("DenseState::density: not positive semidefinite");
    }
    DenseState s;
    s.n = n;
    s.kind = Kind::density;
    s.matrix = std::move(rho);
    return s;
}

Eigen::MatrixXcd to_density(const DenseState& state) {
    if (state.kind == DenseState::Kind::density) return state.matrix;
    return state.vector * state.vector.adjoint();
}

DenseState pseudo_pure_density(const DenseState& psi, double eps) {
    if (psi.kind != DenseState::Kind::statevector) {
        throw std::invalid_argument("pseudo_pure_density: expected a statevector");
    }
    if (!(eps > 0.0 && eps <= 1.0)) {
        throw std::invalid_argument("pseudo_pure_density: polarization must lie in (0, 1]");
    }
    Eigen::MatrixXcd rho = eps * (psi.vector * psi.vector.adjoint());
    rho.diagonal().array() += (1.0 - eps) / static_cast<double>(dim_of(psi.n));
    return DenseState::density(psi.n, std::move(rho));
}

DenseState simulate_grover_statevector(int n, std::int64_t k, std::uint64_t target) {
    check_oracle_n(n, kMaxDenseQubits, "simulate_grover_statevector");
    if (k < 0) throw std::invalid_argument("simulate_grover_statevector: negative step count");
    const Eigen::Index d = dim_of(n);
    if (target >= static_cast<std::uint64_t>(d)) {
        throw std::invalid_argument("simulate_grover_statevector: target index out of range");
    }
    Eigen::VectorXcd psi =
        Eigen::VectorXcd::Constant(d, 1.0 / std::sqrt(static_cast<double>(d)));
    const auto t = static_cast<Eigen::Index>(target);
    for (std::int64_t step = 0; step < k; ++step) {
        psi(t) = -psi(t);                              // U_w  = I - 2|w><w|
        const complex<double> mean = psi.mean();       // U_d  = 2|in><in| - I
        psi = (2.0 * mean - psi.array()).matrix();
    }
    return DenseState::statevector(n, std::move(psi));
}

double trace_norm(const Eigen::MatrixXcd& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("trace_norm: matrix is not square");
    if (a.rows() > dim_of(kMaxDenseQubits)) {
        throw std::invalid_argument("trace_norm: side exceeds 2^12");
    }
    if (a.rows() == 0) return 0.0;
    const double scale = a.cwiseAbs().maxCoeff();
    if (scale == 0.0) return 0.0;
    const double tol = 1e-12 * scale;
    if ((a - a.adjoint()).cwiseAbs().maxCoeff() <= tol) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a, Eigen::EigenvaluesOnly);
        return es.eigenvalues().cwiseAbs().sum();
    }
    if ((a + a.adjoint()).cwiseAbs().maxCoeff() <= tol) {
        // i * a is Hermitian; its |eigenvalues| are the singular values of a
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es((kI * a).eval(),
                                                           Eigen::EigenvaluesOnly);
        return es.eigenvalues().cwiseAbs().sum();
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(a);
    return svd.singularValues().sum();
}

Eigen::MatrixXcd collective_hamiltonian(int n, const SpinDirection& dir) {
    check_oracle_n(n, kMaxDenseQubits, "collective_hamiltonian");
    const Eigen::Index d = dim_of(n);
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        const int pop = std::popcount(static_cast<std::uint64_t>(i));
        h(i, i) = dir.z * (0.5 * n - pop);  // sigma_z: |0> -> +, |1> -> -
        for (int q = 0; q < n; ++q) {
            const Eigen::Index j = i ^ (Eigen::Index{1} << q);
            const bool bit_set = (i >> q) & 1;
            // <j| sigma_x |i> = 1; <j| sigma_y |i> = +/- i depending on the bit
            h(j, i) += 0.5 * (dir.x + (bit_set ? -kI : kI) * dir.y);
        }
    }
    return h;
}

namespace {

double commutator_trace_norm(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& h) {
    // [rho, H] = rho H - (rho H)^+ for Hermitian rho, H
    const Eigen::MatrixXcd rh = rho * h;
    return trace_norm(rh - rh.adjoint());
}

}  // namespace

double ts_direct(const DenseState& rho, const SpinDirection& dir) {
    if (rho.kind != DenseState::Kind::density) {
        throw std::invalid_argument("ts_direct: expected a density operator");
    }
    return commutator_trace_norm(rho.matrix, collective_hamiltonian(rho.n, dir));
}

namespace {

/// Golden-section maximization of f on [lo, hi] to absolute tolerance tol.
template <typename F>
double golden_max(F&& f, double lo, double hi, double tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

bool direction_less(const SpinDirection& a, const SpinDirection& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
}

SpinDirection canonical_sign(SpinDirection d) {
    // TS(n) = TS(-n); report the representative with non-negative z
    if (d.z < 0.0 || (d.z == 0.0 && (d.y < 0.0 || (d.y == 0.0 && d.x < 0.0)))) {
        d.x = -d.x;
        d.y = -d.y;
        d.z = -d.z;
    }
    return d;
}

double angle_between(const SpinDirection& a, const SpinDirection& b) {
    const double dot = std::clamp(a.x * b.x + a.y * b.y + a.z * b.z, -1.0, 1.0);
    return std::acos(std::abs(dot));  // directions are axis-like, fold antipodes
}

}  // namespace

OptimizedSpeed ts_optimized_numeric(const DenseState& rho, int grid_points) {
    if (rho.kind != DenseState::Kind::density) {
        throw std::invalid_argument("ts_optimized_numeric: expected a density operator");
    }
    check_oracle_n(rho.n, kMaxOptimizeQubits, "ts_optimized_numeric");
    if (grid_points < 1) {
        throw std::invalid_argument("ts_optimized_numeric: grid_points must be >= 1");
    }

    // H(dir) = dx Sx + dy Sy + dz Sz; the three generators are built once
    const Eigen::MatrixXcd sx = collective_hamiltonian(rho.n, SpinDirection{1, 0, 0});
    const Eigen::MatrixXcd sy = collective_hamiltonian(rho.n, SpinDirection{0, 1, 0});
    const Eigen::MatrixXcd sz = collective_hamiltonian(rho.n, SpinDirection{0, 0, 1});
    auto eval_dir = [&](const SpinDirection& d) {
        return commutator_trace_norm(rho.matrix, d.x * sx + d.y * sy + d.z * sz);
    };
    auto eval_angles = [&](double polar, double azimuth) {
        return eval_dir(SpinDirection::from_angles(polar, azimuth));
    };

    // Fibonacci sphere scan; values land in a preallocated slot per index, so
    // the reduction below is deterministic no matter how threads interleave.
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    std::vector<SpinDirection> dirs(static_cast<std::size_t>(grid_points));
    for (int i = 0; i < grid_points; ++i) {
        const double z = 1.0 - 2.0 * (i + 0.5) / grid_points;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double a = golden_angle * i;
        dirs[static_cast<std::size_t>(i)] = SpinDirection{r * std::cos(a), r * std::sin(a), z};
    }
    std::vector<double> values(dirs.size());
    const unsigned workers =
        std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                           static_cast<unsigned>(dirs.size()));
    if (workers > 1) {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < dirs.size(); i += workers) {
                    values[i] = eval_dir(dirs[i]);
                }
            });
        }
        for (auto& t : pool) t.join();
    } else {
        for (std::size_t i = 0; i < dirs.size(); ++i) values[i] = eval_dir(dirs[i]);
    }

    // Up to three refinement seeds: the best grid point plus the best points
    // at least 0.6 rad away from those already chosen. The Gamma eigenvalue
    // landscape has its local maxima along orthogonal axes, so well-separated
    // seeds cover all basins even when the top eigenvalues nearly cross.
    std::vector<std::size_t> seeds;
    for (int pick = 0; pick < 3; ++pick) {
        std::size_t best = dirs.size();
        for (std::size_t i = 0; i < dirs.size(); ++i) {
            bool far_enough = true;
            for (std::size_t s : seeds) {
                if (angle_between(dirs[i], dirs[s]) < 0.6) {
                    far_enough = false;
                    break;
                }
            }
            if (!far_enough) continue;
            if (best == dirs.size() || values[i] > values[best]) best = i;
        }
        if (best == dirs.size()) break;
        seeds.push_back(best);
    }

    constexpr double angular_tol = 1e-6;
    const double spacing = std::sqrt(4.0 * std::numbers::pi / grid_points);
    OptimizedSpeed result{-1.0, SpinDirection{0, 0, 1}};
    for (std::size_t s : seeds) {
        double t = dirs[s].polar();
        double p = dirs[s].azimuth();
        double span = 1.6 * spacing;
        double value = values[s];
        for (int sweep = 0; sweep < 12; ++sweep) {
            const double t_new = golden_max([&](double x) { return eval_angles(x, p); },
                                            t - span, t + span, angular_tol);
            const double p_new = golden_max([&](double x) { return eval_angles(t_new, x); },
                                            p - span, p + span, angular_tol);
            const double moved = std::max(std::abs(t_new - t), std::abs(p_new - p));
            t = t_new;
            p = p_new;
            if (moved < angular_tol) break;
            span = std::max(4.0 * moved, 8.0 * angular_tol);
        }
        value = std::max(value, eval_angles(t, p));
        SpinDirection dir = canonical_sign(SpinDirection::from_angles(t, p));
        if (value > result.ts ||
            (value == result.ts && direction_less(dir, result.direction))) {
            result.ts = value;
            result.direction = dir;
        }
    }
    return result;
}

GammaMatrix gamma_numeric(const DenseState& psi) {
    if (psi.kind != DenseState::Kind::statevector) {
        throw std::invalid_argument("gamma_numeric: expected a statevector");
    }
    const int n = psi.n;
    const Eigen::Index d = dim_of(n);
    const Eigen::VectorXcd& v = psi.vector;

    // phi_m = J_m |psi> in O(n 2^n)
    Eigen::VectorXcd phi[3];
    for (auto& p : phi) p = Eigen::VectorXcd::Zero(d);
    for (Eigen::Index i = 0; i < d; ++i) {
        const int pop = std::popcount(static_cast<std::uint64_t>(i));
        phi[2](i) = (0.5 * n - pop) * v(i);
        for (int q = 0; q < n; ++q) {
            const Eigen::Index j = i ^ (Eigen::Index{1} << q);
            const bool bit_set = (i >> q) & 1;
            phi[0](i) += 0.5 * v(j);
            phi[1](i) += (bit_set ? kI : -kI) * 0.5 * v(j);
        }
    }

    double mu[3];
    for (int m = 0; m < 3; ++m) mu[m] = v.dot(phi[m]).real();
    GammaMatrix g;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            // <J_i J_j> = <phi_i | phi_j> since the J are Hermitian
            g.entries(i, j) = 4.0 * (phi[i].dot(phi[j]).real() - mu[i] * mu[j]);
        }
    }
    return g;
}

MeasurementBasis MeasurementBasis::computational() { return MeasurementBasis{}; }

MeasurementBasis MeasurementBasis::collective_axis(const SpinDirection& axis) {
    MeasurementBasis b;
    b.kind = Kind::collective_axis;
    b.axis = axis;
    return b;
}

MeasurementBasis MeasurementBasis::explicit_unitary(Eigen::MatrixXcd u) {
    if (u.rows() != u.cols() || u.rows() == 0) {
        throw std::invalid_argument("MeasurementBasis::explicit_unitary: not square");
    }
    const Eigen::MatrixXcd gram = u.adjoint() * u;
    if ((gram - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() > 1e-9) {
        throw std::invalid_argument("MeasurementBasis::explicit_unitary: columns not orthonormal");
    }
    MeasurementBasis b;
    b.kind = Kind::explicit_unitary;
    b.unitary = std::move(u);
    return b;
}

namespace {

Eigen::MatrixXcd basis_matrix(const MeasurementBasis& basis, int n) {
    const Eigen::Index d = dim_of(n);
    switch (basis.kind) {
        case MeasurementBasis::Kind::computational:
            return Eigen::MatrixXcd::Identity(d, d);
        case MeasurementBasis::Kind::collective_axis: {
            // single-qubit eigenbasis of axis.sigma, tensored n times
            const double t = basis.axis.polar();
            const double p = basis.axis.azimuth();
            Eigen::Matrix2cd u;
            u << std::cos(0.5 * t), -std::sin(0.5 * t),
                std::exp(kI * p) * std::sin(0.5 * t), std::exp(kI * p) * std::cos(0.5 * t);
            Eigen::MatrixXcd full = Eigen::MatrixXcd::Identity(1, 1);
            for (int q = 0; q < n; ++q) {
                Eigen::MatrixXcd next(full.rows() * 2, full.cols() * 2);
                next.topLeftCorner(full.rows(), full.cols()) = u(0, 0) * full;
                next.topRightCorner(full.rows(), full.cols()) = u(0, 1) * full;
                next.bottomLeftCorner(full.rows(), full.cols()) = u(1, 0) * full;
                next.bottomRightCorner(full.rows(), full.cols()) = u(1, 1) * full;
                full = std::move(next);
            }
            return full;
        }
        case MeasurementBasis::Kind::explicit_unitary:
            if (basis.unitary.rows() != d) {
                throw std::invalid_argument("kolmogorov_speed: basis dimension is not 2^n");
            }
            return basis.unitary;
    }
    throw std::logic_error("basis_matrix: unknown basis kind");
}

}  // namespace

double kolmogorov_speed(const DenseState& rho, const SpinDirection& dir,
                        const MeasurementBasis& basis, double dt) {
    if (rho.kind != DenseState::Kind::density) {
        throw std::invalid_argument("kolmogorov_speed: expected a density operator");
    }
    check_oracle_n(rho.n, kMaxOptimizeQubits, "kolmogorov_speed");
    if (!(dt >= 1e-6 && dt <= 1e-3)) {
        throw std::invalid_argument(
            "kolmogorov_speed: dt outside [1e-6, 1e-3], the validated discretization window");
    }

    const Eigen::MatrixXcd h = collective_hamiltonian(rho.n, dir);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("kolmogorov_speed: eigendecomposition failed");
    }
    const Eigen::MatrixXcd& v = es.eigenvectors();
    const Eigen::VectorXd& lam = es.eigenvalues();
    const Eigen::MatrixXcd rho_e = v.adjoint() * rho.matrix * v;
    const Eigen::MatrixXcd b = basis_matrix(basis, rho.n);

    auto distribution = [&](double t) {
        const Eigen::VectorXcd phase = (-kI * t * lam.array().cast<complex<double>>()).exp();
        const Eigen::MatrixXcd evolved =
            (v * phase.asDiagonal()) * rho_e * (v * phase.asDiagonal()).adjoint();
        return (b.adjoint() * evolved * b).diagonal().real().eval();
    };

    const Eigen::VectorXd forward = distribution(dt);
    const Eigen::VectorXd backward = distribution(-dt);
    return (forward - backward).cwiseAbs().sum() / (2.0 * dt);
}

}  // namespace tracespeed
