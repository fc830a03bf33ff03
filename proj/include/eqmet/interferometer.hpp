#pragma once

#include <cstdint>
#include <vector>

#include "eqmet/measurement.hpp"

namespace eqmet {

/// Nonlinear two-mode interferometer parameters (hbar = 1 throughout).
struct NIConfig {
    int n_particles = 2;
    double chi = 1.0;        ///< nonlinear strength
    double bx_max = 0.0;     ///< initial transverse field, must be >= 20 N chi
    double ramp_time = 1.0;  ///< duration of each sweep
    int steps = 100;         ///< propagation steps per sweep
    double bz = 0.0;         ///< longitudinal field
    double dt_encode = 0.0;  ///< encoding interval, theta = bz * dt_encode

    void validate() const;
};

struct SpinOps {
    Matrix sx, sy, sz;
};

/// Collective spin-S matrices, S = N/2, in the descending-m basis (the
/// canonical ordering of sz_spectrum(N)).
SpinOps spin_ops(int n_particles);

/// H = -chi Sz^2 - bx Sx + bz Sz.
Matrix h_ni(int n_particles, double chi, double bx, double bz);

struct ScheduleStep {
    Matrix h;
    double dt;
};

/// Piecewise-constant schedule for a linear transverse-field sweep
/// bx_from -> bx_to; each segment samples the field at its midpoint.
std::vector<ScheduleStep> linear_ramp(int n_particles, double chi, double bz, double bx_from,
                                      double bx_to, double duration, int steps);

/// Piecewise-constant propagation exp(-i H dt) per step, each step applied
/// through an eigendecomposition. Warns on stderr when dt * ||H|| > 10.
Vector evolve(Vector psi, const std::vector<ScheduleStep>& schedule);

/// Same propagation applied to several column states at once.
Matrix evolve_columns(Matrix states, const std::vector<ScheduleStep>& schedule);

/// Bijection between S_x eigenstates at large transverse field and the
/// parity-definite sector states at zero field, built by adiabatic
/// continuation down the ramp.
struct AdiabaticMap {
    /// outcome key for each m_x, indexed by i = N/2 - m_x (descending m_x)
    std::vector<OutcomeKey> keys;
    double min_fidelity = 0.0;  ///< smallest dominant-component weight seen

    const OutcomeKey& key_for_mx_index(int i) const { return keys.at(i); }
};

AdiabaticMap adiabatic_map(int n_particles, double chi, double bx_max, double ramp_time, int steps);

struct ProtocolResult {
    OutcomeCounts counts;
    PureState input_state;        ///< equatorial state produced by the down ramp
    double parity_expectation;    ///< <P0> of the input state
    double min_map_fidelity;
};

/// The full interferometer sequence: prepare |m_x = N/2>, ramp down, encode
/// with bz for dt_encode, ramp up, sample S_x nu times, and translate the
/// m_x outcomes to (sector, parity) counts through the adiabatic map.
ProtocolResult full_protocol(const NIConfig& config, std::uint64_t seed, std::uint64_t nu);

/// (i)^N exp(-i pi Sx): the pulse recovering parity conservation; equals
/// parity_operator(sz_spectrum(N)) exactly in this phase convention.
Matrix parity_pulse(int n_particles);

/// Eigenvectors of S_x ordered by descending m_x (column i holds m_x = N/2 - i),
/// with a deterministic phase convention.
Matrix sx_eigenbasis(int n_particles);

}  // namespace eqmet
