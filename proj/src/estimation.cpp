#include "eqmet/estimation.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "eqmet/fisher.hpp"

namespace eqmet {

namespace {
constexpr double kPi = std::numbers::pi;
}

void ExperimentConfig::validate() const {
    const auto k = static_cast<std::size_t>(spectrum.num_sectors());
    if (p.size() != k || beta.size() != k || (!phi.empty() && phi.size() != k))
        throw ConfigError("p, beta, phi must match the sector count");
    if (nu < 1) throw ConfigError("nu must be >= 1");
    if (trials < 1) throw ConfigError("trials must be >= 1");
    if (std::abs(theta_true - theta_prior) >= kPi / (4.0 * spectrum.g_max()))
        throw ConfigError("theta_true outside the local window around theta_prior: |dtheta| must be < pi/(4 g_max)");
}

double sector_mle(std::uint64_t nu_plus, std::uint64_t nu_minus, double g, double beta,
                  double theta_prior) {
    const std::uint64_t nu_n = nu_plus + nu_minus;
    if (nu_n == 0) throw EmptySector("sector has no outcomes");
    if (g <= 0.0) throw Error("sector eigenvalue must be positive");
    const double phi_hat = std::acos(std::sqrt(static_cast<double>(nu_plus) / static_cast<double>(nu_n)));
    const double phi_prior = g * theta_prior + beta / 2.0;
    // cos^2 is even and pi-periodic: candidates are +-phi_hat + k*pi
    double best = 0.0, best_dist = std::numeric_limits<double>::infinity();
    for (const double s : {+1.0, -1.0}) {
        const double cand = s * phi_hat + kPi * std::round((phi_prior - s * phi_hat) / kPi);
        const double dist = std::abs(cand - phi_prior);
        if (dist < best_dist) {
            best_dist = dist;
            best = cand;
        }
    }
    return (best - beta / 2.0) / g;
}

std::vector<double> optimal_weights(const std::vector<double>& p, const std::vector<double>& g) {
    if (p.size() != g.size()) throw IndexMismatch("p and g must have equal length");
    double f = 0.0;
    for (std::size_t n = 0; n < p.size(); ++n) {
        if (g[n] <= 0.0) throw Error("sector eigenvalue must be positive");
        f += p[n] * 4.0 * g[n] * g[n];
    }
    if (f <= 0.0) throw AllZero("total Fisher information is zero");
    std::vector<double> w(p.size());
    for (std::size_t n = 0; n < p.size(); ++n) w[n] = p[n] * 4.0 * g[n] * g[n] / f;
    return w;
}

double combine(const std::vector<double>& estimates, const std::vector<double>& weights) {
    if (estimates.size() != weights.size()) throw IndexMismatch("estimates and weights must have equal length");
    double sum_w = 0.0, theta = 0.0;
    for (std::size_t n = 0; n < weights.size(); ++n) {
        if (weights[n] < 0.0) throw Error("weights must be non-negative");
        sum_w += weights[n];
        theta += weights[n] * estimates[n];
    }
    if (std::abs(sum_w - 1.0) > 1e-12) throw Error("weights must sum to 1");
    return theta;
}

double crb(double fisher, std::uint64_t nu) {
    if (nu < 1) throw Error("nu must be >= 1");
    if (fisher <= 0.0) throw AllZero("Fisher information must be positive");
    return 1.0 / (static_cast<double>(nu) * fisher);
}

EstimationReport run_experiment(const ExperimentConfig& config) {
    config.validate();
    const auto& spec = config.spectrum;
    const int k = spec.num_sectors();
    const std::vector<double> phi = config.phi.empty() ? std::vector<double>(k, 0.0) : config.phi;
    const PureState state = equatorial(spec, config.p, config.beta, phi);

    for (int n = 1; n <= k; ++n) {
        if (config.p[n - 1] <= 0.0) continue;
        const double phase = spec.g(n) * config.theta_true + config.beta[n - 1] / 2.0;
        const double frac = std::abs(phase / (kPi / 2.0) - std::round(phase / (kPi / 2.0)));
        if (frac * kPi / 2.0 < 1e-6)
            throw DegenerateTheta("sector " + std::to_string(n) +
                                  " sits at a multiple of pi/2: inversion is ill-conditioned");
    }

    const OutcomeDistribution dist = outcome_probs(state, config.theta_true);
    std::vector<double> gs(k);
    for (int n = 1; n <= k; ++n) gs[n - 1] = spec.g(n);
    const double fisher = qfi_pure(state).value;
    const std::vector<double> design_w = optimal_weights(config.p, gs);

    EstimationReport report;
    report.theta_hats.reserve(config.trials);
    report.fisher = fisher;
    report.crb = crb(fisher, config.nu);

    std::vector<double> sector_mean(k, 0.0), sector_m2(k, 0.0);
    std::vector<std::uint64_t> sector_n(k, 0);

    for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
        const OutcomeCounts counts = sample_outcomes(dist, config.nu, config.seed, trial);
        std::vector<double> estimates, weights;
        for (int n = 1; n <= k; ++n) {
            const std::uint64_t plus = counts.counts[2 * (n - 1)].second;
            const std::uint64_t minus = counts.counts[2 * (n - 1) + 1].second;
            if (plus + minus == 0) continue;  // dropped, weights renormalized below
            const double est = sector_mle(plus, minus, gs[n - 1], config.beta[n - 1], config.theta_prior);
            estimates.push_back(est);
            weights.push_back(config.empirical_weights
                                  ? static_cast<double>(plus + minus) * 4.0 * gs[n - 1] * gs[n - 1]
                                  : design_w[n - 1]);
            const auto idx = static_cast<std::size_t>(n - 1);
            ++sector_n[idx];
            const double d = est - sector_mean[idx];
            sector_mean[idx] += d / static_cast<double>(sector_n[idx]);
            sector_m2[idx] += d * (est - sector_mean[idx]);
        }
        if (estimates.empty()) throw EmptySector("no sector produced outcomes in trial " + std::to_string(trial));
        double total_w = 0.0;
        for (double w : weights) total_w += w;
        for (double& w : weights) w /= total_w;
        report.theta_hats.push_back(combine(estimates, weights));
    }

    double mean = 0.0, m2 = 0.0;
    for (std::size_t t = 0; t < report.theta_hats.size(); ++t) {
        const double d = report.theta_hats[t] - mean;
        mean += d / static_cast<double>(t + 1);
        m2 += d * (report.theta_hats[t] - mean);
    }
    report.theta_mean = mean;
    report.variance = report.theta_hats.size() > 1
                          ? m2 / static_cast<double>(report.theta_hats.size() - 1)
                          : std::numeric_limits<double>::quiet_NaN();
    report.ratio = static_cast<double>(config.nu) * fisher * report.variance;

    for (int n = 1; n <= k; ++n) {
        const auto idx = static_cast<std::size_t>(n - 1);
        report.sectors.push_back({n, sector_mean[idx],
                                  sector_n[idx] > 1 ? sector_m2[idx] / static_cast<double>(sector_n[idx] - 1)
                                                    : std::numeric_limits<double>::quiet_NaN(),
                                  design_w[idx], sector_n[idx]});
    }
    return report;
}

}  // namespace eqmet
