#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eqmet/states.hpp"

namespace eqmet {

/// Branch probabilities below this are reported as zero and the branch is
/// omitted from the collapse result.
inline constexpr double kBranchTol = 1e-14;

/// One outcome class of the compound parity/number measurement.
struct OutcomeKey {
    int sector;  ///< sector rank, or 0 for the zero eigenspace
    int parity;  ///< +1 / -1, or 0 for the zero eigenspace
    auto operator<=>(const OutcomeKey&) const = default;
};

/// Born probabilities of the compound measurement, ordered by sector rank
/// with parity +1 before -1; the zero-eigenspace mass is kept separately.
struct OutcomeDistribution {
    std::vector<std::pair<OutcomeKey, double>> entries;
    double zero_prob = 0.0;
    double total() const;
};

/// Measurement tallies nu_n^(p) after nu repetitions.
struct OutcomeCounts {
    std::vector<std::pair<OutcomeKey, std::uint64_t>> counts;
    std::uint64_t zero_count = 0;
    std::uint64_t total = 0;
};

/// Parity operator P_beta. With all-zero beta this is P_0, swapping
/// |up>_n <-> |down>_n; the zero eigenspace is acted on as identity. For any
/// beta the operator is Hermitian, unitary, and inverts the generator
/// spectrum: P G P = -G.
Matrix parity_operator(const GeneratorSpectrum& spec, const std::vector<double>& beta = {});

struct SectorProjector {
    int sector;
    int parity;
    Matrix proj;
};

/// Rank-1 projectors Pi_n^(p) onto |x^(+)>_n = (|up>+|down>)/sqrt2 and
/// |x^(-)>_n = (-i|up>+i|down>)/sqrt2, ordered by sector rank, + before -.
std::vector<SectorProjector> projectors(const GeneratorSpectrum& spec);

/// Projector onto the zero eigenspace (zero matrix when the spectrum has none).
Matrix zero_projector(const GeneratorSpectrum& spec);

OutcomeDistribution outcome_probs(const PureState& state, double theta);
OutcomeDistribution outcome_probs(const MixedES& state, double theta);
OutcomeDistribution outcome_probs(const DensityMatrix& rho, const GeneratorSpectrum& spec,
                                  double theta);

/// Multinomial draw of nu outcomes. Reproducible: the result is a pure
/// function of (dist, nu, seed, stream); concurrent trials use distinct
/// stream indices, never a shared generator.
OutcomeCounts sample_outcomes(const OutcomeDistribution& dist, std::uint64_t nu,
                              std::uint64_t seed, std::uint64_t stream = 0);

struct ParityCollapse {
    double q_plus = 0.0, q_minus = 0.0, q_zero = 0.0;
    std::optional<DensityMatrix> rho_plus, rho_minus, rho_zero;
};

/// Parity measurement collapse: rho^(p) = Pi^(p) rho Pi^(p) / q^(p) with
/// Pi^(+-) = sum_n Pi_n^(+-); the zero eigenspace forms its own branch.
ParityCollapse parity_collapse(const DensityMatrix& rho, const GeneratorSpectrum& spec);

/// Classical Fisher information of the full outcome distribution at theta,
/// computed analytically from the sector closed form.
double classical_fisher(const PureState& state, double theta);

}  // namespace eqmet
