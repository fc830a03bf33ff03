#include "eqmet/decoupling.hpp"

#include <cmath>
#include <unsupported/Eigen/KroneckerProduct>

#include "eqmet/states.hpp"

namespace eqmet {

int BathModel::system_dim() const {
    if (terms.empty()) throw ConfigError("bath model has no terms");
    return static_cast<int>(terms.front().h_sys.rows());
}

int BathModel::bath_dim() const {
    if (terms.empty()) throw ConfigError("bath model has no terms");
    return static_cast<int>(terms.front().b_bath.rows());
}

void BathModel::validate() const {
    if (terms.empty()) throw ConfigError("bath model has no terms");
    const int sd = system_dim(), bd = bath_dim();
    for (const auto& t : terms) {
        if (t.h_sys.rows() != sd || t.h_sys.cols() != sd || t.b_bath.rows() != bd ||
            t.b_bath.cols() != bd)
            throw DimensionMismatch("bath model terms have inconsistent dimensions");
        if ((t.h_sys - t.h_sys.adjoint()).cwiseAbs().maxCoeff() > 1e-12 ||
            (t.b_bath - t.b_bath.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
            throw Error("bath model operators must be Hermitian");
    }
    if (bath_state.size() != bd) throw DimensionMismatch("bath state does not match the bath dimension");
    if (std::abs(bath_state.norm() - 1.0) > kNormTol) throw NotNormalized("bath state must be normalized");

    // linear independence of the B_kappa through their Gram matrix
    const auto m = static_cast<int>(terms.size());
    Matrix gram(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            gram(i, j) = (terms[i].b_bath.adjoint() * terms[j].b_bath).trace();
    Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < 1e-10 * std::max(1.0, es.eigenvalues().maxCoeff()))
        throw Error("bath operators are not linearly independent");
}

bool commutes_with_parity(const Matrix& h, const Matrix& p_beta, double tol) {
    if (h.rows() != p_beta.rows() || h.cols() != p_beta.cols())
        throw DimensionMismatch("operator dimensions differ");
    return ((h * p_beta - p_beta * h).cwiseAbs().maxCoeff()) <= tol;
}

Matrix effective_hamiltonian(const Matrix& h, const Matrix& p_beta) {
    if (h.rows() != p_beta.rows() || h.cols() != p_beta.cols())
        throw DimensionMismatch("operator dimensions differ");
    return 0.5 * (h + p_beta * h * p_beta);
}

Matrix joint_hamiltonian(const BathModel& model) {
    Matrix h = Matrix::Zero(model.system_dim() * model.bath_dim(),
                            model.system_dim() * model.bath_dim());
    for (const auto& t : model.terms) h += Eigen::kroneckerProduct(t.h_sys, t.b_bath).eval();
    return h;
}

Matrix effective_joint_hamiltonian(const BathModel& model, const Matrix& p_beta) {
    Matrix h = Matrix::Zero(model.system_dim() * model.bath_dim(),
                            model.system_dim() * model.bath_dim());
    for (const auto& t : model.terms)
        h += Eigen::kroneckerProduct(effective_hamiltonian(t.h_sys, p_beta), t.b_bath).eval();
    return h;
}

namespace {

Matrix unitary_exp(const Matrix& h, double t) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    Vector phases(h.rows());
    for (int i = 0; i < h.rows(); ++i) phases(i) = std::polar(1.0, -es.eigenvalues()(i) * t);
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

Vector dd_evolve(const BathModel& model, const Vector& system_state, const Matrix& p_beta,
                 double tau, double total_time) {
    model.validate();
    if (tau <= 0.0) throw InvalidInterval("inter-pulse interval must be positive");
    const double cycles = total_time / tau;
    const auto n_pulses = static_cast<long long>(std::llround(cycles));
    if (std::abs(cycles - static_cast<double>(n_pulses)) > 1e-9 || n_pulses < 2 || n_pulses % 2 != 0)
        throw InvalidInterval("total_time/tau must be a positive even integer");
    if (system_state.size() != model.system_dim())
        throw DimensionMismatch("system state does not match the model");
    if (p_beta.rows() != model.system_dim())
        throw DimensionMismatch("pulse operator does not match the system dimension");

    const Matrix u_free = unitary_exp(joint_hamiltonian(model), tau);
    const Matrix pulse = Eigen::kroneckerProduct(p_beta, Matrix::Identity(model.bath_dim(),
                                                                          model.bath_dim()));
    Vector joint = Eigen::kroneckerProduct(system_state, model.bath_state);
    for (long long k = 0; k < n_pulses; ++k) joint = pulse * (u_free * joint);
    return joint;
}

Vector evolve_joint(const Matrix& h, const Vector& joint_state, double total_time) {
    return unitary_exp(h, total_time) * joint_state;
}

Matrix reduced_system_state(const Vector& joint, int system_dim, int bath_dim) {
    if (joint.size() != static_cast<long>(system_dim) * bath_dim)
        throw DimensionMismatch("joint state does not factor into the given dimensions");
    Matrix rho = Matrix::Zero(system_dim, system_dim);
    for (int i = 0; i < system_dim; ++i)
        for (int j = 0; j < system_dim; ++j)
            for (int b = 0; b < bath_dim; ++b)
                rho(i, j) += joint(i * bath_dim + b) * std::conj(joint(j * bath_dim + b));
    return rho;
}

double trace_distance(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sizes differ");
    Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(a - b), Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace eqmet
