#pragma once

#include <cstdint>

#include "eqmet/spectrum.hpp"

namespace eqmet {

/// Ancilla-qubit coupling parameters (hbar = 1). The composite space is
/// system (x) qubit with system-major ordering and qubit basis {|g>, |e>}.
struct QsCoupling {
    double omega_q = 0.0;  ///< qubit splitting
    double chi_qs = 1.0;   ///< qubit-system coupling strength
    int n_particles = 2;

    void validate() const;
};

/// Mode-b number operator b^dag b = N/2 - Sz, diagonal in the canonical basis.
Matrix number_op_b(int n_particles);

/// H = omega_q I (x) |e><e| + chi_qs (b^dag b) (x) |e><e|.
Matrix h_qs(const QsCoupling& c);

/// Conditional-phase gate exp(-i H_qs t) at chi_qs t = pi in the qubit
/// rotating frame: (-1)^{b^dag b} (x) |e><e| + I (x) |g><g|.
Matrix u_pi(const QsCoupling& c);

/// Controlled-X construction from u_pi sandwiched between y rotations of
/// system and qubit. Verified against Pi^(+) (x) I + Pi^(-) (x) sigma_x
/// (zero sector in the even block) up to one global phase; throws
/// ConstructionMismatch beyond 1e-9.
Matrix c_x(int n_particles, double chi_qs);

/// The projector form Pi^(+) (x) I + Pi^(-) (x) sigma_x itself.
Matrix c_x_projector_form(int n_particles);

/// Largest |C - phase * T| over the best-aligning global phase.
double global_phase_distance(const Matrix& c, const Matrix& t);

struct ParityOutcome {
    int outcome;         ///< +1 (qubit found in |g>) or -1 (|e>)
    Vector state;        ///< collapsed system state
    double probability;  ///< Born probability of the realized outcome
};

/// Nondemolition parity measurement: couple the system to a |g>-prepared
/// qubit through c_x, then projectively read the qubit. Repeating on the
/// collapsed state reproduces the outcome with probability 1.
ParityOutcome nondemolition_parity(const Vector& system_state, int n_particles, std::uint64_t seed,
                                   std::uint64_t stream = 0);

}  // namespace eqmet
