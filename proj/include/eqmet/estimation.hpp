#pragma once

#include <cstdint>
#include <vector>

#include "eqmet/measurement.hpp"

namespace eqmet {

/// Monte Carlo experiment description: an equatorial input state, the true
/// and prior phase, repetitions per trial and trial count.
struct ExperimentConfig {
    GeneratorSpectrum spectrum;
    std::vector<double> p;
    std::vector<double> beta;
    std::vector<double> phi;  // empty means all zero
    double theta_true = 0.0;
    double theta_prior = 0.0;
    std::uint64_t nu = 1;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    bool empirical_weights = false;

    void validate() const;
};

struct SectorEstimate {
    int sector;
    double mean;
    double variance;
    double weight;        ///< design weight p_n F_n / F
    std::uint64_t valid;  ///< trials in which the sector had outcomes
};

struct EstimationReport {
    std::vector<SectorEstimate> sectors;
    std::vector<double> theta_hats;  ///< combined estimate per trial
    double theta_mean = 0.0;
    double variance = 0.0;  ///< empirical across-trial variance of theta_hat
    double fisher = 0.0;
    double crb = 0.0;
    double ratio = 0.0;  ///< nu * F * variance, 1 at CR saturation
};

/// Single-sector maximum-likelihood inversion of the binary (+,-) counts:
/// Phi_hat = arccos(sqrt(nu_plus/nu_n)) resolved to the branch (sign and
/// pi-periodic image) nearest g*theta_prior + beta/2.
double sector_mle(std::uint64_t nu_plus, std::uint64_t nu_minus, double g, double beta,
                  double theta_prior);

/// Variance-minimizing weights w_n = p_n F_n / F with F_n = 4 g_n^2.
std::vector<double> optimal_weights(const std::vector<double>& p, const std::vector<double>& g);

/// Weighted combination Theta = sum w_n Theta_n.
double combine(const std::vector<double>& estimates, const std::vector<double>& weights);

/// Cramer-Rao bound 1/(nu F).
double crb(double fisher, std::uint64_t nu);

/// Full Monte Carlo run: encode, sample, invert per sector, combine, and
/// aggregate across trials. Trials use distinct sampler streams derived from
/// (seed, trial), so any execution order reproduces the same report.
EstimationReport run_experiment(const ExperimentConfig& config);

}  // namespace eqmet
