#include "support/random_states.hpp"

#include <cmath>
#include <numbers>

namespace eqmet::testing {

namespace {
constexpr double kPi = std::numbers::pi;
}

GeneratorSpectrum random_spectrum(Rng& rng, int max_sectors, bool allow_zero) {
    std::uniform_int_distribution<int> n_sectors(1, max_sectors);
    std::uniform_real_distribution<double> gval(0.1, 4.0);
    const int k = n_sectors(rng);
    std::vector<Sector> sectors;
    double g = 0.0;
    for (int n = 1; n <= k; ++n) {
        g += gval(rng);  // strictly increasing, so never degenerate
        sectors.push_back({n, g});
    }
    int zero = 0;
    if (allow_zero) zero = std::uniform_int_distribution<int>(0, 1)(rng);
    return GeneratorSpectrum(std::move(sectors), zero);
}

std::vector<double> random_probabilities(Rng& rng, int k) {
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> p(k);
    double total = 0.0;
    for (double& v : p) {
        v = expo(rng) + 1e-3;
        total += v;
    }
    for (double& v : p) v /= total;
    return p;
}

PureState random_pure_state(Rng& rng, const GeneratorSpectrum& spec, bool with_zero_amp) {
    const int k = spec.num_sectors();
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    std::uniform_real_distribution<double> polar(0.0, kPi);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    double zero_w = 0.0;
    Complex zero_amp = 0.0;
    if (with_zero_amp && spec.zero_multiplicity() > 0) {
        zero_w = 0.3 * unit(rng);
        zero_amp = std::polar(std::sqrt(zero_w), angle(rng));
    }
    std::vector<double> p = random_probabilities(rng, k);
    std::vector<SectorState> sectors(k);
    for (int n = 0; n < k; ++n) sectors[n] = {p[n] * (1.0 - zero_w), angle(rng), polar(rng), angle(rng)};
    return PureState(spec, std::move(sectors), zero_amp);
}

PureState random_equatorial(Rng& rng, const GeneratorSpectrum& spec) {
    const int k = spec.num_sectors();
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    std::vector<double> beta(k), phi(k);
    for (int n = 0; n < k; ++n) {
        beta[n] = angle(rng);
        phi[n] = angle(rng);
    }
    return equatorial(spec, random_probabilities(rng, k), beta, phi);
}

Matrix random_hermitian(Rng& rng, int dim) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix m(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) m(r, c) = Complex(normal(rng), normal(rng));
    return 0.5 * (m + m.adjoint()).eval();
}

MixedES random_mixed_es(Rng& rng, const GeneratorSpectrum& spec) {
    const int k = spec.num_sectors();
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix a(k, k);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) a(r, c) = Complex(normal(rng), normal(rng));
    Matrix gram = a * a.adjoint();
    const std::vector<double> p = random_probabilities(rng, k);
    Vector scale(k);
    for (int n = 0; n < k; ++n) scale(n) = std::sqrt(p[n] / std::real(gram(n, n)));
    gram = scale.asDiagonal() * gram * scale.asDiagonal();
    std::vector<double> beta(k);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (double& b : beta) b = angle(rng);
    return mixed_es(spec, p, beta, gram);
}

DensityMatrix random_density(Rng& rng, int dim) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix b(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) b(r, c) = Complex(normal(rng), normal(rng));
    Matrix rho = b * b.adjoint();
    rho /= rho.trace();
    return DensityMatrix(0.5 * (rho + rho.adjoint()));
}

Vector random_state_vector(Rng& rng, int dim) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = Complex(normal(rng), normal(rng));
    v.normalize();
    return v;
}

}  // namespace eqmet::testing
