#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "eqmet/errors.hpp"

namespace eqmet {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Absolute tolerance for pairing eigenvalues into (g, -g) sectors; values
/// with |g| below this count as the zero eigenspace.
inline constexpr double kSpectrumTol = 1e-12;

struct Sector {
    int label;  ///< unique sector id (1-based for built-in constructors)
    double g;   ///< eigenvalue magnitude, strictly positive
};

/// Qubit-sector decomposition of a phase-shift generator with a symmetric
/// spectrum. Each sector n pairs the +g_n and -g_n eigenvectors; an optional
/// zero eigenspace is tracked separately and carries no estimation weight.
///
/// Canonical basis ordering (fixed for every matrix built downstream):
/// eigenvectors sorted by descending eigenvalue. With K sectors sorted
/// ascending in g and a zero eigenspace of multiplicity z, index i holds
///   i in [0, K)      : |up>_n with n = K - i   (eigenvalue +g_n, descending)
///   i in [K, K+z)    : the zero eigenspace
///   i in [K+z, 2K+z) : |down>_n with n = i - K - z + 1  (eigenvalue -g_n)
class GeneratorSpectrum {
  public:
    GeneratorSpectrum(std::vector<Sector> sectors, int zero_multiplicity);

    const std::vector<Sector>& sectors() const { return sectors_; }
    int num_sectors() const { return static_cast<int>(sectors_.size()); }
    int zero_multiplicity() const { return zero_; }
    int dim() const { return 2 * num_sectors() + zero_; }

    /// Sector by rank (1-based, ascending g). For the built-in constructors
    /// rank and label coincide.
    const Sector& sector(int rank) const { return sectors_.at(rank - 1); }
    double g(int rank) const { return sector(rank).g; }
    double g_max() const { return sectors_.back().g; }

    /// Canonical basis index of the +g_n eigenvector.
    int up_index(int rank) const { return num_sectors() - rank; }
    /// Canonical basis index of the -g_n eigenvector.
    int down_index(int rank) const { return num_sectors() + zero_ + rank - 1; }
    /// Canonical basis index of the k-th zero-eigenspace vector.
    int zero_index(int k = 0) const { return num_sectors() + k; }

    bool operator==(const GeneratorSpectrum&) const = default;

  private:
    std::vector<Sector> sectors_;  // sorted ascending by g
    int zero_;
};

/// Pair a raw eigenvalue list into (g, -g) sectors.
/// Throws SpectrumAsymmetric if some nonzero eigenvalue lacks a partner of
/// opposite sign within kSpectrumTol, DegenerateSpectrum if the same |g|
/// appears in more than one pair.
GeneratorSpectrum build_spectrum(const std::vector<double>& eigenvalues);

/// Spectrum of the collective spin operator S_z for N two-mode particles:
/// eigenvalues m = -N/2 ... N/2.
GeneratorSpectrum sz_spectrum(int n_particles);

/// Diagonal generator matrix in the canonical basis ordering.
Matrix generator_matrix(const GeneratorSpectrum& spec);

/// Eigenvalue at canonical basis index i (+g / 0 / -g pattern).
double generator_eigenvalue(const GeneratorSpectrum& spec, int index);

}  // namespace eqmet
