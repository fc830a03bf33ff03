#include "eqmet/measurement.hpp"

#include <cmath>
#include <numbers>

#include "eqmet/simd/kernels.hpp"

namespace eqmet {

namespace {
constexpr double kPi = std::numbers::pi;
}

double OutcomeDistribution::total() const {
    double t = zero_prob;
    for (const auto& [key, p] : entries) t += p;
    return t;
}

Matrix parity_operator(const GeneratorSpectrum& spec, const std::vector<double>& beta) {
    const int k = spec.num_sectors();
    if (!beta.empty() && static_cast<int>(beta.size()) != k)
        throw DimensionMismatch("beta length does not match the sector count");
    Matrix p = Matrix::Zero(spec.dim(), spec.dim());
    for (int n = 1; n <= k; ++n) {
        const double b = beta.empty() ? 0.0 : beta[n - 1];
        p(spec.down_index(n), spec.up_index(n)) = std::polar(1.0, b);
        p(spec.up_index(n), spec.down_index(n)) = std::polar(1.0, -b);
    }
    for (int j = 0; j < spec.zero_multiplicity(); ++j) p(spec.zero_index(j), spec.zero_index(j)) = 1.0;
    return p;
}

std::vector<SectorProjector> projectors(const GeneratorSpectrum& spec) {
    std::vector<SectorProjector> out;
    out.reserve(2 * spec.num_sectors());
    for (int n = 1; n <= spec.num_sectors(); ++n) {
        for (int parity : {+1, -1}) {
            Vector v = Vector::Zero(spec.dim());
            if (parity > 0) {
                v(spec.up_index(n)) = 1.0 / std::sqrt(2.0);
                v(spec.down_index(n)) = 1.0 / std::sqrt(2.0);
            } else {
                v(spec.up_index(n)) = Complex(0.0, -1.0) / std::sqrt(2.0);
                v(spec.down_index(n)) = Complex(0.0, 1.0) / std::sqrt(2.0);
            }
            out.push_back({n, parity, v * v.adjoint()});
        }
    }
    return out;
}

Matrix zero_projector(const GeneratorSpectrum& spec) {
    Matrix p = Matrix::Zero(spec.dim(), spec.dim());
    for (int j = 0; j < spec.zero_multiplicity(); ++j) p(spec.zero_index(j), spec.zero_index(j)) = 1.0;
    return p;
}

namespace {

OutcomeDistribution sector_form_probs(const GeneratorSpectrum& spec, const std::vector<double>& p,
                                      const std::vector<double>& sin_alpha,
                                      const std::vector<double>& beta, double zero_prob,
                                      double theta) {
    OutcomeDistribution dist;
    dist.entries.reserve(2 * spec.num_sectors());
    for (int n = 1; n <= spec.num_sectors(); ++n) {
        const double b = beta[n - 1] + 2.0 * spec.g(n) * theta;
        const double contrast = sin_alpha[n - 1] * std::cos(b);
        dist.entries.push_back({{n, +1}, p[n - 1] * 0.5 * (1.0 + contrast)});
        dist.entries.push_back({{n, -1}, p[n - 1] * 0.5 * (1.0 - contrast)});
    }
    dist.zero_prob = zero_prob;
    return dist;
}

}  // namespace

OutcomeDistribution outcome_probs(const PureState& state, double theta) {
    const int k = state.spectrum().num_sectors();
    std::vector<double> p(k), sin_alpha(k), beta(k);
    for (int n = 1; n <= k; ++n) {
        p[n - 1] = state.sector(n).p;
        sin_alpha[n - 1] = std::sin(state.sector(n).alpha);
        beta[n - 1] = state.sector(n).beta;
    }
    return sector_form_probs(state.spectrum(), p, sin_alpha, beta, std::norm(state.zero_amp()), theta);
}

OutcomeDistribution outcome_probs(const MixedES& state, double theta) {
    const std::vector<double> sin_alpha(state.p().size(), 1.0);
    return sector_form_probs(state.spectrum(), state.p(), sin_alpha, state.beta(), 0.0, theta);
}

OutcomeDistribution outcome_probs(const DensityMatrix& rho, const GeneratorSpectrum& spec,
                                  double theta) {
    if (rho.dim() != spec.dim()) throw DimensionMismatch("density matrix does not match the spectrum");
    const Matrix encoded = phase_encode(rho, spec, theta).matrix();
    OutcomeDistribution dist;
    for (const auto& pr : projectors(spec)) {
        const double p = std::max(0.0, std::real((pr.proj * encoded).trace()));
        dist.entries.push_back({{pr.sector, pr.parity}, p});
    }
    dist.zero_prob = std::max(0.0, std::real((zero_projector(spec) * encoded).trace()));
    return dist;
}

OutcomeCounts sample_outcomes(const OutcomeDistribution& dist, std::uint64_t nu,
                              std::uint64_t seed, std::uint64_t stream) {
    if (nu < 1) throw Error("repetition count must be >= 1");
    if (std::abs(dist.total() - 1.0) > kNormTol)
        throw NotNormalized("outcome distribution does not sum to 1");

    const std::size_t k = dist.entries.size() + 1;  // zero-eigenspace bin last
    std::vector<double> cdf(k);
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < k; ++i) {
        acc += dist.entries[i].second;
        cdf[i] = acc;
    }
    cdf[k - 1] = 1.0;

    const auto& kern = simd::kernels();
    std::vector<std::uint64_t> counts(k, 0);
    std::vector<double> u(4096);
    std::uint64_t drawn = 0;
    while (drawn < nu) {
        const auto batch = static_cast<std::size_t>(std::min<std::uint64_t>(u.size(), nu - drawn));
        kern.uniform_f64(seed, stream, drawn / 2, batch, u.data());
        kern.categorical_counts(cdf.data(), k, u.data(), batch, counts.data());
        drawn += batch;
    }

    OutcomeCounts out;
    out.counts.reserve(dist.entries.size());
    for (std::size_t i = 0; i + 1 < k; ++i) out.counts.push_back({dist.entries[i].first, counts[i]});
    out.zero_count = counts[k - 1];
    out.total = nu;
    return out;
}

ParityCollapse parity_collapse(const DensityMatrix& rho, const GeneratorSpectrum& spec) {
    if (rho.dim() != spec.dim()) throw DimensionMismatch("density matrix does not match the spectrum");
    Matrix pi_plus = Matrix::Zero(spec.dim(), spec.dim());
    Matrix pi_minus = Matrix::Zero(spec.dim(), spec.dim());
    for (const auto& pr : projectors(spec)) (pr.parity > 0 ? pi_plus : pi_minus) += pr.proj;
    const Matrix pi_zero = zero_projector(spec);

    ParityCollapse out;
    auto collapse = [&](const Matrix& pi, double& q, std::optional<DensityMatrix>& branch) {
        q = std::real((pi * rho.matrix()).trace());
        if (q < kBranchTol) {
            q = 0.0;
            return;
        }
        Matrix m = pi * rho.matrix() * pi / q;
        branch.emplace(0.5 * (m + m.adjoint()));
    };
    collapse(pi_plus, out.q_plus, out.rho_plus);
    collapse(pi_minus, out.q_minus, out.rho_minus);
    collapse(pi_zero, out.q_zero, out.rho_zero);
    return out;
}

double classical_fisher(const PureState& state, double theta) {
    double f = 0.0;
    for (int n = 1; n <= state.spectrum().num_sectors(); ++n) {
        const auto& s = state.sector(n);
        if (s.p <= 0.0) continue;
        const double g = state.spectrum().g(n);
        const double b = s.beta + 2.0 * g * theta;
        const double sa = std::sin(s.alpha);
        const double denom = 1.0 - sa * sa * std::cos(b) * std::cos(b);
        if (denom < 1e-15) {
            // reachable only on the equator, where the ratio tends to 1
            f += 4.0 * s.p * g * g;
            continue;
        }
        f += 4.0 * s.p * g * g * sa * sa * std::sin(b) * std::sin(b) / denom;
    }
    return f;
}

}  // namespace eqmet
