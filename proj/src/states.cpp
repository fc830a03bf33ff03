#include "eqmet/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace eqmet {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_pi(double angle) {
    double a = std::fmod(angle + kPi, 2.0 * kPi);
    if (a < 0) a += 2.0 * kPi;
    return a - kPi;
}

/// Circular distance between two angles, in [0, pi].
double angle_dist(double a, double b) { return std::abs(wrap_pi(a - b)); }

}  // namespace

DensityMatrix::DensityMatrix(Matrix rho) : rho_(std::move(rho)) {
    if (rho_.rows() != rho_.cols()) throw NotDensityMatrix("density matrix must be square");
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > kHermTol)
        throw NotDensityMatrix("density matrix is not Hermitian");
    if (std::abs(rho_.trace() - Complex(1.0)) > kNormTol)
        throw NotDensityMatrix("density matrix trace differs from 1");
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kPsdTol)
        throw NotDensityMatrix("density matrix has a negative eigenvalue");
}

PureState::PureState(GeneratorSpectrum spectrum, std::vector<SectorState> sectors, Complex zero_amp)
    : spec_(std::move(spectrum)), sectors_(std::move(sectors)), zero_amp_(zero_amp) {
    if (static_cast<int>(sectors_.size()) != spec_.num_sectors())
        throw DimensionMismatch("sector list does not match the spectrum");
    if (spec_.zero_multiplicity() == 0 && std::abs(zero_amp_) > 0.0)
        throw DimensionMismatch("zero amplitude given but the spectrum has no zero eigenspace");
    double total = std::norm(zero_amp_);
    for (const auto& s : sectors_) {
        if (!(s.p >= 0.0 && s.p <= 1.0 + kNormTol)) throw Error("sector weight outside [0, 1]");
        if (!(s.alpha >= -kNormTol && s.alpha <= kPi + kNormTol))
            throw Error("polar angle outside [0, pi]");
        if (!std::isfinite(s.phi) || !std::isfinite(s.beta)) throw Error("non-finite sector angle");
        total += s.p;
    }
    if (std::abs(total - 1.0) > kNormTol)
        throw NotNormalized("sector weights sum to " + std::to_string(total));
}

MixedES::MixedES(GeneratorSpectrum spectrum, std::vector<double> p, std::vector<double> beta,
                 Matrix gamma)
    : spec_(std::move(spectrum)), p_(std::move(p)), beta_(std::move(beta)), gamma_(std::move(gamma)) {
    const int k = spec_.num_sectors();
    if (static_cast<int>(p_.size()) != k || static_cast<int>(beta_.size()) != k ||
        gamma_.rows() != k || gamma_.cols() != k)
        throw DimensionMismatch("p, beta, gamma must all match the sector count");
    double total = 0.0;
    for (int n = 0; n < k; ++n) {
        if (!(p_[n] >= 0.0 && p_[n] <= 1.0 + kNormTol)) throw Error("sector weight outside [0, 1]");
        if (std::abs(gamma_(n, n).imag()) > kHermTol || std::abs(gamma_(n, n).real() - p_[n]) > kNormTol)
            throw Error("gamma diagonal must equal the sector weights");
        total += p_[n];
    }
    if (std::abs(total - 1.0) > kNormTol) throw NotNormalized("sector weights sum to " + std::to_string(total));
    if ((gamma_ - gamma_.adjoint()).cwiseAbs().maxCoeff() > kHermTol)
        throw Error("gamma must be Hermitian");
    for (int m = 0; m < k; ++m)
        for (int n = 0; n < k; ++n)
            if (m != n && std::norm(gamma_(m, n)) > p_[m] * p_[n] + kNormTol)
                throw CoherenceBound("|gamma_mn|^2 exceeds p_m p_n at (" + std::to_string(m + 1) +
                                     "," + std::to_string(n + 1) + ")");
    // the assembled matrix is PSD iff gamma itself is
    Eigen::SelfAdjointEigenSolver<Matrix> es(gamma_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kPsdTol)
        throw NotPSD("assembled density matrix has a negative eigenvalue");
}

PureState pure_from_sectors(GeneratorSpectrum spectrum, std::vector<SectorState> sectors,
                            Complex zero_amp) {
    return PureState(std::move(spectrum), std::move(sectors), zero_amp);
}

PureState equatorial(GeneratorSpectrum spectrum, const std::vector<double>& p,
                     const std::vector<double>& beta, const std::vector<double>& phi) {
    const auto k = static_cast<std::size_t>(spectrum.num_sectors());
    if (p.size() != k || beta.size() != k || phi.size() != k)
        throw DimensionMismatch("p, beta, phi must all match the sector count");
    std::vector<SectorState> sectors(k);
    for (std::size_t n = 0; n < k; ++n) sectors[n] = {p[n], phi[n], kPi / 2.0, beta[n]};
    return PureState(std::move(spectrum), std::move(sectors), 0.0);
}

bool is_equatorial(const PureState& state, double tol) {
    for (const auto& s : state.sectors())
        if (s.p > tol && std::abs(s.alpha - kPi / 2.0) > tol) return false;
    return true;
}

bool is_path_symmetric(const PureState& state, double tol) {
    if (!is_equatorial(state, tol)) return false;
    std::optional<double> ref;
    for (int n = 1; n <= state.spectrum().num_sectors(); ++n) {
        const auto& s = state.sector(n);
        if (s.p <= tol) continue;
        // canonical phase, so stored (phi, beta) gauge cannot flip the answer
        const Complex a = std::sqrt(s.p) * std::polar(1.0, s.phi) * std::cos(s.alpha / 2.0) *
                          std::polar(1.0, -s.beta / 2.0);
        const Complex b = std::sqrt(s.p) * std::polar(1.0, s.phi) * std::sin(s.alpha / 2.0) *
                          std::polar(1.0, s.beta / 2.0);
        const double phi = canonical_sector(a, b).phi;
        if (!ref)
            ref = phi;
        else if (angle_dist(phi, *ref) > tol)
            return false;
    }
    return true;
}

MixedES mixed_es(GeneratorSpectrum spectrum, const std::vector<double>& p,
                 const std::vector<double>& beta, const Matrix& gamma) {
    return MixedES(std::move(spectrum), p, beta, gamma);
}

MixedES dephased_es(GeneratorSpectrum spectrum, const std::vector<double>& p,
                    const std::vector<double>& beta) {
    const int k = spectrum.num_sectors();
    Matrix gamma = Matrix::Zero(k, k);
    for (int n = 0; n < k; ++n) gamma(n, n) = p[n];
    return MixedES(std::move(spectrum), p, beta, gamma);
}

PureState phase_encode(const PureState& state, double theta) {
    std::vector<SectorState> sectors = state.sectors();
    for (int n = 1; n <= state.spectrum().num_sectors(); ++n)
        sectors[n - 1].beta += 2.0 * state.spectrum().g(n) * theta;
    return PureState(state.spectrum(), std::move(sectors), state.zero_amp());
}

MixedES phase_encode(const MixedES& state, double theta) {
    std::vector<double> beta = state.beta();
    for (int n = 1; n <= state.spectrum().num_sectors(); ++n)
        beta[n - 1] += 2.0 * state.spectrum().g(n) * theta;
    return MixedES(state.spectrum(), state.p(), std::move(beta), state.gamma());
}

DensityMatrix phase_encode(const DensityMatrix& rho, const GeneratorSpectrum& spec, double theta) {
    if (rho.dim() != spec.dim()) throw DimensionMismatch("density matrix does not match the spectrum");
    const int d = spec.dim();
    Vector phases(d);
    for (int i = 0; i < d; ++i) phases(i) = std::polar(1.0, -theta * generator_eigenvalue(spec, i));
    return DensityMatrix(phases.asDiagonal() * rho.matrix() * phases.conjugate().asDiagonal());
}

PureState noon(int n_particles) {
    GeneratorSpectrum spec = sz_spectrum(n_particles);
    const int k = spec.num_sectors();
    std::vector<SectorState> sectors(k);
    for (int n = 0; n < k; ++n) sectors[n] = {0.0, 0.0, kPi / 2.0, 0.0};
    sectors[k - 1].p = 1.0;
    return PureState(std::move(spec), std::move(sectors), 0.0);
}

PureState oat(int n_particles, double mu) {
    if (n_particles < 1) throw InvalidN("particle number must be >= 1");
    GeneratorSpectrum spec = sz_spectrum(n_particles);
    const int dim = spec.dim();
    // coherent state along +x: binomial amplitudes in the descending-m basis
    Vector v(dim);
    for (int i = 0; i < dim; ++i) {
        const double m = n_particles / 2.0 - i;
        const int k = static_cast<int>(std::lround(n_particles / 2.0 - m));
        double log_amp = 0.5 * (std::lgamma(n_particles + 1.0) - std::lgamma(k + 1.0) -
                                std::lgamma(n_particles - k + 1.0)) -
                         n_particles * 0.5 * std::numbers::ln2;
        v(i) = std::exp(log_amp) * std::polar(1.0, -mu * m * m);
    }
    v.normalize();
    return from_vector(spec, v);
}

Vector to_vector(const PureState& state) {
    const auto& spec = state.spectrum();
    Vector v = Vector::Zero(spec.dim());
    for (int n = 1; n <= spec.num_sectors(); ++n) {
        const auto& s = state.sector(n);
        const Complex amp = std::sqrt(s.p) * std::polar(1.0, s.phi);
        v(spec.up_index(n)) = amp * std::cos(s.alpha / 2.0) * std::polar(1.0, -s.beta / 2.0);
        v(spec.down_index(n)) = amp * std::sin(s.alpha / 2.0) * std::polar(1.0, s.beta / 2.0);
    }
    if (spec.zero_multiplicity() > 0) v(spec.zero_index()) = state.zero_amp();
    return v;
}

DensityMatrix to_density(const PureState& state) {
    const Vector v = to_vector(state);
    return DensityMatrix(v * v.adjoint());
}

DensityMatrix to_density(const MixedES& state) {
    const auto& spec = state.spectrum();
    const int k = spec.num_sectors();
    // columns are the equatorial sector kets |pi/2, beta_n>_n
    Matrix basis = Matrix::Zero(spec.dim(), k);
    for (int n = 1; n <= k; ++n) {
        basis(spec.up_index(n), n - 1) = std::polar(1.0 / std::sqrt(2.0), -state.beta()[n - 1] / 2.0);
        basis(spec.down_index(n), n - 1) = std::polar(1.0 / std::sqrt(2.0), state.beta()[n - 1] / 2.0);
    }
    return DensityMatrix(basis * state.gamma() * basis.adjoint());
}

SectorState canonical_sector(Complex up, Complex down) {
    const double p = std::norm(up) + std::norm(down);
    if (p == 0.0) return {0.0, 0.0, kPi / 2.0, 0.0};
    const double alpha = 2.0 * std::atan2(std::abs(down), std::abs(up));
    if (std::abs(up) == 0.0) return {p, std::arg(down), alpha, 0.0};
    if (std::abs(down) == 0.0) return {p, std::arg(up), alpha, 0.0};
    const double beta = wrap_pi(std::arg(down) - std::arg(up));
    const double phi = wrap_pi(std::arg(up) + beta / 2.0);
    return {p, phi, alpha, beta};
}

PureState from_vector(const GeneratorSpectrum& spectrum, const Vector& v) {
    if (v.size() != spectrum.dim()) throw DimensionMismatch("vector does not match the spectrum dimension");
    const int k = spectrum.num_sectors();
    std::vector<SectorState> sectors(k);
    for (int n = 1; n <= k; ++n)
        sectors[n - 1] = canonical_sector(v(spectrum.up_index(n)), v(spectrum.down_index(n)));
    Complex zero_amp = 0.0;
    if (spectrum.zero_multiplicity() > 0) {
        zero_amp = v(spectrum.zero_index());
        for (int j = 1; j < spectrum.zero_multiplicity(); ++j)
            if (std::abs(v(spectrum.zero_index(j))) > kNormTol)
                throw DimensionMismatch(
                    "zero-eigenspace support beyond the first basis direction cannot be "
                    "represented as a sector state");
    }
    return PureState(spectrum, std::move(sectors), zero_amp);
}

double distance_up_to_phase(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    const Complex overlap = a.dot(b);  // conjugate-linear in a
    const double phase = std::arg(overlap == Complex(0.0) ? Complex(1.0) : overlap);
    return (a * std::polar(1.0, phase) - b).norm();
}

}  // namespace eqmet
