#pragma once

#include <vector>

#include "eqmet/spectrum.hpp"

namespace eqmet {

struct BathTerm {
    Matrix h_sys;   ///< system operator H_kappa
    Matrix b_bath;  ///< bath operator B_kappa
};

/// System-bath model H = sum_kappa H_kappa (x) B_kappa with an explicit
/// small bath and a pure bath initial state.
struct BathModel {
    std::vector<BathTerm> terms;
    Vector bath_state;

    int system_dim() const;
    int bath_dim() const;
    void validate() const;  ///< Hermiticity, matching dims, B linear independence
};

/// True iff ||[H, P]||_max <= tol.
bool commutes_with_parity(const Matrix& h, const Matrix& p_beta, double tol = 1e-12);

/// Pulse-symmetrized average (H + P H P)/2; always commutes with P.
Matrix effective_hamiltonian(const Matrix& h, const Matrix& p_beta);

Matrix joint_hamiltonian(const BathModel& model);
Matrix effective_joint_hamiltonian(const BathModel& model, const Matrix& p_beta);

/// Free evolution under the joint Hamiltonian interleaved with instantaneous
/// P_beta (x) I pulses every tau; total_time/tau must be a positive even
/// integer. Returns the final joint state (system-major ordering).
Vector dd_evolve(const BathModel& model, const Vector& system_state, const Matrix& p_beta,
                 double tau, double total_time);

/// Joint evolution without pulses under an explicit Hamiltonian (used as the
/// reference for the averaged dynamics).
Vector evolve_joint(const Matrix& h, const Vector& joint_state, double total_time);

/// Partial trace over the bath of a joint pure state.
Matrix reduced_system_state(const Vector& joint, int system_dim, int bath_dim);

/// (1/2)||a - b||_1 for Hermitian matrices.
double trace_distance(const Matrix& a, const Matrix& b);

}  // namespace eqmet
