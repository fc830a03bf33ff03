#include "eqmet/interferometer.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <string>

#include "eqmet/simd/kernels.hpp"

namespace eqmet {

namespace {
constexpr double kPi = std::numbers::pi;
}

void NIConfig::validate() const {
    if (n_particles < 1) throw InvalidN("particle number must be >= 1");
    if (chi <= 0.0) throw ConfigError("chi must be positive");
    if (bx_max < 20.0 * n_particles * chi)
        throw ConfigError("bx_max must be >= 20 N chi for the large-field regime");
    if (steps < 100) throw ConfigError("steps must be >= 100");
    if (ramp_time <= 0.0) throw ConfigError("ramp_time must be positive");
    if (dt_encode < 0.0) throw ConfigError("dt_encode must be non-negative");
}

SpinOps spin_ops(int n_particles) {
    if (n_particles < 1) throw InvalidN("particle number must be >= 1");
    const int dim = n_particles + 1;
    const double s = n_particles / 2.0;
    Matrix sx = Matrix::Zero(dim, dim), sy = Matrix::Zero(dim, dim), sz = Matrix::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) sz(i, i) = s - i;
    // basis is descending in m, so S+ couples row i-1 (m+1) to column i (m)
    for (int i = 1; i < dim; ++i) {
        const double m = s - i;
        const double c = 0.5 * std::sqrt(s * (s + 1.0) - m * (m + 1.0));
        sx(i - 1, i) = c;
        sx(i, i - 1) = c;
        sy(i - 1, i) = Complex(0.0, -c);
        sy(i, i - 1) = Complex(0.0, c);
    }
    return {sx, sy, sz};
}

Matrix h_ni(int n_particles, double chi, double bx, double bz) {
    const SpinOps ops = spin_ops(n_particles);
    return -chi * ops.sz * ops.sz - bx * ops.sx + bz * ops.sz;
}

std::vector<ScheduleStep> linear_ramp(int n_particles, double chi, double bz, double bx_from,
                                      double bx_to, double duration, int steps) {
    std::vector<ScheduleStep> schedule;
    schedule.reserve(steps);
    const double dt = duration / steps;
    for (int k = 0; k < steps; ++k) {
        const double frac = (k + 0.5) / steps;
        const double bx = bx_from + (bx_to - bx_from) * frac;
        schedule.push_back({h_ni(n_particles, chi, bx, bz), dt});
    }
    return schedule;
}

namespace {

struct StepPropagator {
    Matrix basis;         // eigenvectors V
    Matrix basis_adj;     // V^dagger
    Vector phases;        // exp(-i E dt)
    double max_abs_e{};
};

StepPropagator make_propagator(const ScheduleStep& step) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(step.h);
    StepPropagator prop;
    prop.basis = es.eigenvectors();
    prop.basis_adj = prop.basis.adjoint();
    prop.phases.resize(step.h.rows());
    for (int i = 0; i < step.h.rows(); ++i)
        prop.phases(i) = std::polar(1.0, -es.eigenvalues()(i) * step.dt);
    prop.max_abs_e = es.eigenvalues().cwiseAbs().maxCoeff();
    return prop;
}

void apply_propagator(const StepPropagator& prop, Vector& psi, Vector& work) {
    const auto n = static_cast<std::size_t>(psi.size());
    const auto& kern = simd::kernels();
    kern.cplx_matvec(prop.basis_adj.data(), n, psi.data(), work.data());
    kern.cplx_hadamard(work.data(), prop.phases.data(), n, work.data());
    kern.cplx_matvec(prop.basis.data(), n, work.data(), psi.data());
}

}  // namespace

Vector evolve(Vector psi, const std::vector<ScheduleStep>& schedule) {
    bool warned = false;
    Vector work(psi.size());
    for (const auto& step : schedule) {
        if (step.h.rows() != psi.size() || step.h.cols() != psi.size())
            throw DimensionMismatch("schedule Hamiltonian does not match the state dimension");
        const StepPropagator prop = make_propagator(step);
        if (!warned && step.dt * prop.max_abs_e > 10.0) {
            std::cerr << "warning: step too coarse (dt*||H|| = " << step.dt * prop.max_abs_e
                      << " > 10), accuracy degraded\n";
            warned = true;
        }
        apply_propagator(prop, psi, work);
    }
    return psi;
}

Matrix evolve_columns(Matrix states, const std::vector<ScheduleStep>& schedule) {
    Vector work(states.rows());
    for (const auto& step : schedule) {
        const StepPropagator prop = make_propagator(step);
        for (int c = 0; c < states.cols(); ++c) {
            Vector col = states.col(c);
            apply_propagator(prop, col, work);
            states.col(c) = col;
        }
    }
    return states;
}

Matrix sx_eigenbasis(int n_particles) {
    const SpinOps ops = spin_ops(n_particles);
    Eigen::SelfAdjointEigenSolver<Matrix> es(ops.sx);
    const int dim = n_particles + 1;
    // SelfAdjointEigenSolver sorts ascending; reorder to descending m_x and
    // fix each column's phase so its largest component is real positive
    Matrix basis(dim, dim);
    for (int i = 0; i < dim; ++i) {
        Vector col = es.eigenvectors().col(dim - 1 - i);
        int imax = 0;
        for (int r = 1; r < dim; ++r)
            if (std::abs(col(r)) > std::abs(col(imax))) imax = r;
        col *= std::polar(1.0, -std::arg(col(imax)));
        basis.col(i) = col;
    }
    return basis;
}

AdiabaticMap adiabatic_map(int n_particles, double chi, double bx_max, double ramp_time, int steps) {
    const GeneratorSpectrum spec = sz_spectrum(n_particles);
    const int dim = n_particles + 1;
    const Matrix p0 = parity_operator(spec);

    // block bases of the exact parity symmetry; the ramp Hamiltonian commutes
    // with P0, so adjacent-level gaps are only meaningful inside each block
    const int k = spec.num_sectors();
    Matrix even = Matrix::Zero(dim, k + spec.zero_multiplicity());
    Matrix odd = Matrix::Zero(dim, k);
    for (int n = 1; n <= k; ++n) {
        even(spec.up_index(n), n - 1) = 1.0 / std::sqrt(2.0);
        even(spec.down_index(n), n - 1) = 1.0 / std::sqrt(2.0);
        odd(spec.up_index(n), n - 1) = Complex(0.0, -1.0) / std::sqrt(2.0);
        odd(spec.down_index(n), n - 1) = Complex(0.0, 1.0) / std::sqrt(2.0);
    }
    for (int j = 0; j < spec.zero_multiplicity(); ++j) even(spec.zero_index(j), k + j) = 1.0;

    const auto schedule = linear_ramp(n_particles, chi, 0.0, bx_max, 0.0, ramp_time, steps);
    const double gap_floor = 1e-10 * n_particles * chi;
    for (const auto& step : schedule) {
        for (const Matrix* block : {&even, &odd}) {
            const Matrix hb = block->adjoint() * step.h * (*block);
            Eigen::SelfAdjointEigenSolver<Matrix> es(hb, Eigen::EigenvaluesOnly);
            for (int i = 1; i < es.eigenvalues().size(); ++i)
                if (es.eigenvalues()(i) - es.eigenvalues()(i - 1) < gap_floor)
                    throw DegenerateCrossing("adiabatic levels cross within one parity block");
        }
    }

    const Matrix finals = evolve_columns(sx_eigenbasis(n_particles), schedule);

    AdiabaticMap map;
    map.keys.resize(dim);
    map.min_fidelity = 1.0;
    std::vector<bool> claimed(dim, false);
    for (int i = 0; i < dim; ++i) {
        const Vector fin = finals.col(i);
        // targets share the even/odd column layout built above
        double best_w = -1.0;
        OutcomeKey best_key{};
        int best_col = -1;
        for (int c = 0; c < even.cols(); ++c) {
            const double w = std::norm(even.col(c).dot(fin));
            if (w > best_w) {
                best_w = w;
                best_key = c < k ? OutcomeKey{c + 1, +1} : OutcomeKey{0, 0};
                best_col = c;
            }
        }
        for (int c = 0; c < odd.cols(); ++c) {
            const double w = std::norm(odd.col(c).dot(fin));
            if (w > best_w) {
                best_w = w;
                best_key = {c + 1, -1};
                best_col = static_cast<int>(even.cols()) + c;
            }
        }
        if (best_w < 0.99)
            throw NotAdiabatic("dominant-component weight " + std::to_string(best_w) +
                               " below 0.99 for m_x index " + std::to_string(i) +
                               ": ramp too fast");
        if (claimed[best_col]) throw NotAdiabatic("two sweep endpoints claim the same sector state");
        claimed[best_col] = true;
        map.keys[i] = best_key;
        map.min_fidelity = std::min(map.min_fidelity, best_w);

        // parity of |m_x> is (-1)^{N/2 - m_x}; the image must match
        const int exponent = i;  // N/2 - m_x = i
        const int mx_parity = exponent % 2 == 0 ? +1 : -1;
        const int key_parity = best_key.parity == 0 ? +1 : best_key.parity;
        if (mx_parity != key_parity)
            throw Error("adiabatic map violates parity consistency at m_x index " + std::to_string(i));
    }
    return map;
}

ProtocolResult full_protocol(const NIConfig& config, std::uint64_t seed, std::uint64_t nu) {
    config.validate();
    const int n = config.n_particles;
    const GeneratorSpectrum spec = sz_spectrum(n);
    const AdiabaticMap map = adiabatic_map(n, config.chi, config.bx_max, config.ramp_time, config.steps);
    const Matrix sx_basis = sx_eigenbasis(n);

    // (i)-(ii) prepare |m_x = N/2> and sweep the transverse field to zero
    Vector psi = sx_basis.col(0);
    psi = evolve(std::move(psi),
                 linear_ramp(n, config.chi, 0.0, config.bx_max, 0.0, config.ramp_time, config.steps));

    const double parity = std::real(psi.dot(parity_operator(spec) * psi));
    if (parity < 0.999)
        throw NotAdiabatic("input state lost parity: <P0> = " + std::to_string(parity));
    const PureState input = from_vector(spec, psi);
    if (!is_equatorial(input, 1e-6))
        throw Error("sweep produced a non-equatorial input state");

    // (iii) encode theta = bz * dt_encode at zero transverse field
    if (config.dt_encode > 0.0) {
        std::vector<ScheduleStep> encode{{h_ni(n, config.chi, 0.0, config.bz), config.dt_encode}};
        psi = evolve(std::move(psi), encode);
        if (!is_equatorial(from_vector(spec, psi), 1e-6))
            throw Error("encoding broke the equatorial form");
    }

    // (iv) sweep back up; (v) measure S_x; (vi) translate outcomes
    psi = evolve(std::move(psi),
                 linear_ramp(n, config.chi, 0.0, 0.0, config.bx_max, config.ramp_time, config.steps));

    OutcomeDistribution dist;
    dist.entries.reserve(2 * spec.num_sectors());
    std::vector<double> probs(n + 1);
    for (int i = 0; i <= n; ++i) probs[i] = std::norm(sx_basis.col(i).dot(psi));
    // canonical entry order: sectors ascending, + before -, zero mass last
    for (int rank = 1; rank <= spec.num_sectors(); ++rank) {
        for (int parity_sign : {+1, -1}) {
            for (int i = 0; i <= n; ++i) {
                if (map.keys[i] == OutcomeKey{rank, parity_sign})
                    dist.entries.push_back({{rank, parity_sign}, probs[i]});
            }
        }
    }
    dist.zero_prob = 0.0;
    for (int i = 0; i <= n; ++i)
        if (map.keys[i] == OutcomeKey{0, 0}) dist.zero_prob += probs[i];

    ProtocolResult result{sample_outcomes(dist, nu, seed), input, parity, map.min_fidelity};
    return result;
}

Matrix parity_pulse(int n_particles) {
    const SpinOps ops = spin_ops(n_particles);
    Eigen::SelfAdjointEigenSolver<Matrix> es(ops.sx);
    Matrix exp_sx = Matrix::Zero(n_particles + 1, n_particles + 1);
    for (int i = 0; i <= n_particles; ++i)
        exp_sx += std::polar(1.0, -kPi * es.eigenvalues()(i)) * es.eigenvectors().col(i) *
                  es.eigenvectors().col(i).adjoint();
    return std::polar(1.0, kPi * n_particles / 2.0) * exp_sx;
}

}  // namespace eqmet
