#include "eqmet/ancilla.hpp"

#include <cmath>
#include <numbers>
#include <unsupported/Eigen/KroneckerProduct>

#include "eqmet/interferometer.hpp"
#include "eqmet/measurement.hpp"
#include "eqmet/simd/kernels.hpp"

namespace eqmet {

namespace {

constexpr double kPi = std::numbers::pi;

Matrix qubit_identity() { return Matrix::Identity(2, 2); }

Matrix qubit_sigma_x() {
    Matrix s(2, 2);
    s << 0, 1, 1, 0;
    return s;
}

// sigma_y with |e> as the spin-up state; in the {|g>, |e>} ordering used for
// composite indices this reads [[0, i], [-i, 0]].
Matrix qubit_sigma_y() {
    Matrix s(2, 2);
    s << Complex(0, 0), Complex(0, 1), Complex(0, -1), Complex(0, 0);
    return s;
}

Matrix qubit_ry(double angle) {
    Matrix s = qubit_sigma_y();
    return std::cos(angle / 2.0) * qubit_identity() - Complex(0, 1) * std::sin(angle / 2.0) * s;
}

Matrix system_exp_sy(int n_particles, double factor) {
    const SpinOps ops = spin_ops(n_particles);
    Eigen::SelfAdjointEigenSolver<Matrix> es(ops.sy);
    Vector phases(n_particles + 1);
    for (int i = 0; i <= n_particles; ++i) phases(i) = std::polar(1.0, factor * es.eigenvalues()(i));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

void QsCoupling::validate() const {
    if (chi_qs == 0.0) throw ConfigError("chi_qs must be nonzero");
    if (n_particles < 1) throw InvalidN("particle number must be >= 1");
}

Matrix number_op_b(int n_particles) {
    const int dim = n_particles + 1;
    Matrix nb = Matrix::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) nb(i, i) = static_cast<double>(i);  // N/2 - m at descending m
    return nb;
}

Matrix h_qs(const QsCoupling& c) {
    c.validate();
    const int dim = c.n_particles + 1;
    Matrix ee = Matrix::Zero(2, 2);
    ee(1, 1) = 1.0;
    return Eigen::kroneckerProduct(Matrix::Identity(dim, dim), (c.omega_q * ee).eval()).eval() +
           Eigen::kroneckerProduct((c.chi_qs * number_op_b(c.n_particles)).eval(), ee).eval();
}

Matrix u_pi(const QsCoupling& c) {
    c.validate();
    const int dim = c.n_particles + 1;
    // rotating frame of the qubit: only the chi_qs term accumulates phase,
    // and at t = pi/chi_qs the phase per |e> branch is (-1)^{b^dag b}
    Matrix u = Matrix::Zero(2 * dim, 2 * dim);
    for (int i = 0; i < dim; ++i) {
        u(2 * i, 2 * i) = 1.0;
        u(2 * i + 1, 2 * i + 1) = std::polar(1.0, -kPi * static_cast<double>(i));
    }
    return u;
}

Matrix c_x_projector_form(int n_particles) {
    const GeneratorSpectrum spec = sz_spectrum(n_particles);
    Matrix pi_plus = zero_projector(spec);
    Matrix pi_minus = Matrix::Zero(spec.dim(), spec.dim());
    for (const auto& pr : projectors(spec)) (pr.parity > 0 ? pi_plus : pi_minus) += pr.proj;
    return Eigen::kroneckerProduct(pi_plus, qubit_identity()).eval() +
           Eigen::kroneckerProduct(pi_minus, qubit_sigma_x()).eval();
}

double global_phase_distance(const Matrix& c, const Matrix& t) {
    if (c.rows() != t.rows() || c.cols() != t.cols()) throw DimensionMismatch("matrix sizes differ");
    // align on the largest entry of the target
    int ri = 0, ci = 0;
    t.cwiseAbs().maxCoeff(&ri, &ci);
    const Complex ref = c(ri, ci);
    const Complex phase = std::abs(ref) > 0 ? t(ri, ci) / ref : Complex(1.0);
    return (c * phase - t).cwiseAbs().maxCoeff();
}

Matrix c_x(int n_particles, double chi_qs) {
    const QsCoupling c{0.0, chi_qs, n_particles};
    const Matrix upi = u_pi(c);
    const Matrix sys_fwd = system_exp_sy(n_particles, -kPi / 2.0);  // exp(-i pi Sy / 2)
    const Matrix ry = qubit_ry(kPi / 2.0);
    const Matrix gate = Eigen::kroneckerProduct(sys_fwd, ry.adjoint().eval()).eval() * upi *
                        Eigen::kroneckerProduct(sys_fwd.adjoint().eval(), ry).eval();
    const double dev = global_phase_distance(gate, c_x_projector_form(n_particles));
    if (dev > 1e-9)
        throw ConstructionMismatch("controlled-X differs from its projector form by " +
                                   std::to_string(dev));
    return gate;
}

ParityOutcome nondemolition_parity(const Vector& system_state, int n_particles, std::uint64_t seed,
                                   std::uint64_t stream) {
    const int dim = n_particles + 1;
    if (system_state.size() != dim) throw DimensionMismatch("system state does not match N");
    if (std::abs(system_state.norm() - 1.0) > kNormTol)
        throw NotNormalized("system state must be normalized");

    Vector qubit_g = Vector::Zero(2);
    qubit_g(0) = 1.0;
    Vector joint = Eigen::kroneckerProduct(system_state, qubit_g);
    joint = c_x(n_particles, 1.0) * joint;

    Vector sys_g(dim), sys_e(dim);
    for (int i = 0; i < dim; ++i) {
        sys_g(i) = joint(2 * i);
        sys_e(i) = joint(2 * i + 1);
    }
    const double q_g = sys_g.squaredNorm();

    double u = 0.0;
    simd::kernels().uniform_f64(seed, stream, 0, 1, &u);
    if (u < q_g) return {+1, sys_g / std::sqrt(q_g), q_g};
    return {-1, sys_e / sys_e.norm(), 1.0 - q_g};
}

}  // namespace eqmet
