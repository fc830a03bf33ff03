#pragma once

#include <random>

#include "eqmet/states.hpp"

// Seeded generators for property-style tests. Everything routes through one
// mt19937_64 so a test's draws are reproducible from its seed.

namespace eqmet::testing {

using Rng = std::mt19937_64;

GeneratorSpectrum random_spectrum(Rng& rng, int max_sectors = 6, bool allow_zero = true);

std::vector<double> random_probabilities(Rng& rng, int k);

PureState random_pure_state(Rng& rng, const GeneratorSpectrum& spec, bool with_zero_amp = false);

PureState random_equatorial(Rng& rng, const GeneratorSpectrum& spec);

/// Admissible random mixed ES: gamma is a PSD matrix with diagonal p, which
/// is exactly the assembled-density PSD condition.
MixedES random_mixed_es(Rng& rng, const GeneratorSpectrum& spec);

Matrix random_hermitian(Rng& rng, int dim);

DensityMatrix random_density(Rng& rng, int dim);

Vector random_state_vector(Rng& rng, int dim);

}  // namespace eqmet::testing
