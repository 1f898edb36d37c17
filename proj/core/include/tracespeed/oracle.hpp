#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "tracespeed/statspeed.hpp"

namespace tracespeed {

/// Density-operator routines that pay a dense eigendecomposition per call are
/// limited to 10 qubits; plain statevector work goes up to kMaxDenseQubits.
inline constexpr int kMaxOptimizeQubits = 10;

/// A point on the unit sphere selecting the collective spin axis.
struct SpinDirection {
    double x = 0.0;
    double y = 0.0;
    double z = 1.0;

    /// Normalizes the components; throws on the zero vector.
    static SpinDirection make(double x, double y, double z);
    /// Direction from polar/azimuthal angles (radians).
    static SpinDirection from_angles(double polar, double azimuth);

    double polar() const;
    double azimuth() const;
};

/// Dense carrier for |psi> or rho at small n.
struct DenseState {
    enum class Kind { statevector, density };

    int n = 0;
    Kind kind = Kind::statevector;
    Eigen::VectorXcd vector;  ///< set when kind == statevector
    Eigen::MatrixXcd matrix;  ///< set when kind == density

    /// Validates the 2-norm (1e-12) and dimension 2^n.
    static DenseState statevector(int n, Eigen::VectorXcd psi);
    /// Validates Hermiticity, unit trace and positivity (1e-9) and dimension.
    static DenseState density(int n, Eigen::MatrixXcd rho);
};

/// rho = eps |psi><psi| + (1-eps) I / 2^n from an arbitrary statevector.
DenseState pseudo_pure_density(const DenseState& psi, double eps);

/// |psi><psi| for a statevector; pass-through for a density operator.
Eigen::MatrixXcd to_density(const DenseState& state);

/// k explicit Grover iterations (oracle reflection, then diffusion about the
/// uniform superposition) applied to the uniform initial state. Exact dense
/// arithmetic; n <= kMaxDenseQubits.
DenseState simulate_grover_statevector(int n, std::int64_t k, std::uint64_t target);

/// Trace norm ||A||_1 = tr sqrt(A^+ A), the sum of singular values. Hermitian
/// and anti-Hermitian inputs take the eigenvalue route (sum of |lambda|);
/// anything else falls back to an SVD.
double trace_norm(const Eigen::MatrixXcd& a);

/// Collective spin Hamiltonian sum_i (n . sigma^(i)) / 2 as a dense matrix of
/// side 2^n. Spectrum is {-n/2, -n/2+1, ..., n/2}.
Eigen::MatrixXcd collective_hamiltonian(int n, const SpinDirection& dir);

/// Trace speed ||[rho, H]||_1 for the collective Hamiltonian along dir,
/// computed from the dense commutator.
double ts_direct(const DenseState& rho, const SpinDirection& dir);

struct OptimizedSpeed {
    double ts = 0.0;
    SpinDirection direction;
};

/// Maximizes ts_direct over collective spin directions: a Fibonacci-sphere
/// scan (grid_points directions, evaluated concurrently) seeds a golden-
/// section coordinate refinement in the polar/azimuthal angles to 1e-6
/// angular tolerance. Refinement restarts from the three best well-separated
/// grid points so near-degenerate covariance spectra cannot trap it in the
/// wrong local maximum; results reduce deterministically (max, then
/// lexicographically smallest direction). n <= kMaxOptimizeQubits.
OptimizedSpeed ts_optimized_numeric(const DenseState& rho, int grid_points = 2000);

/// Gamma_ij = 4 (Re<J_i J_j> - <J_i><J_j>) from exact expectation values on a
/// statevector; no truncation.
GammaMatrix gamma_numeric(const DenseState& psi);

/// Projective measurement basis for kolmogorov_speed. Collective-rotation
/// product bases (all qubits measured along one axis) are the experimentally
/// natural family but do not exhaust the observables the trace speed
/// optimizes over, so an arbitrary orthonormal basis is accepted as well.
struct MeasurementBasis {
    enum class Kind { computational, collective_axis, explicit_unitary };

    Kind kind = Kind::computational;
    SpinDirection axis;        ///< collective_axis only
    Eigen::MatrixXcd unitary;  ///< explicit_unitary only; columns are the basis

    static MeasurementBasis computational();
    static MeasurementBasis collective_axis(const SpinDirection& axis);
    /// Validates U^+ U = I to 1e-9.
    static MeasurementBasis explicit_unitary(Eigen::MatrixXcd u);
};

/// Central-difference rate of change of the measurement distribution under
/// the flow generated by the collective Hamiltonian along dir:
///   sum_i |p_i(dt) - p_i(-dt)| / (2 dt),
/// a measurable lower bound on ts_direct(rho, dir). dt must lie in
/// [1e-6, 1e-3]; outside that window the discretization is not validated.
/// n <= kMaxOptimizeQubits.
double kolmogorov_speed(const DenseState& rho, const SpinDirection& dir,
                        const MeasurementBasis& basis = MeasurementBasis::computational(),
                        double dt = 1e-4);

}  // namespace tracespeed
