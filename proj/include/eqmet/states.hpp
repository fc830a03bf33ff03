#pragma once

#include <optional>
#include <vector>

#include "eqmet/spectrum.hpp"

namespace eqmet {

inline constexpr double kNormTol = 1e-10;
inline constexpr double kHermTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;

/// Bloch parameters of one qubit sector. The qubit wave function is
///   |alpha,beta>_n = cos(alpha/2) e^{-i beta/2} |up>_n
///                  + sin(alpha/2) e^{+i beta/2} |down>_n
/// entering the full state as sqrt(p) e^{i phi} |alpha,beta>_n.
/// beta may hold any real value; the canonical parametrization produced by
/// from_vector() reduces it to [-pi, pi).
struct SectorState {
    double p = 0.0;      ///< probability weight in [0, 1]
    double phi = 0.0;    ///< sector global phase, radians
    double alpha = 0.0;  ///< polar angle in [0, pi]
    double beta = 0.0;   ///< azimuthal angle, radians
};

/// Validated full density matrix: Hermitian, unit trace, PSD.
class DensityMatrix {
  public:
    explicit DensityMatrix(Matrix rho);
    const Matrix& matrix() const { return rho_; }
    int dim() const { return static_cast<int>(rho_.rows()); }

  private:
    Matrix rho_;
};

/// Pure state in the qubit-sector representation. Values are immutable
/// after construction.
class PureState {
  public:
    PureState(GeneratorSpectrum spectrum, std::vector<SectorState> sectors, Complex zero_amp);

    const GeneratorSpectrum& spectrum() const { return spec_; }
    const std::vector<SectorState>& sectors() const { return sectors_; }
    const SectorState& sector(int rank) const { return sectors_.at(rank - 1); }
    Complex zero_amp() const { return zero_amp_; }

  private:
    GeneratorSpectrum spec_;
    std::vector<SectorState> sectors_;  // aligned with spectrum ranks
    Complex zero_amp_;
};

/// Mixed equatorial state: per-sector weights p_n and azimuths beta_n plus
/// the Hermitian inter-sector coherence matrix gamma (diagonal equals p).
class MixedES {
  public:
    MixedES(GeneratorSpectrum spectrum, std::vector<double> p, std::vector<double> beta,
            Matrix gamma);

    const GeneratorSpectrum& spectrum() const { return spec_; }
    const std::vector<double>& p() const { return p_; }
    const std::vector<double>& beta() const { return beta_; }
    const Matrix& gamma() const { return gamma_; }

  private:
    GeneratorSpectrum spec_;
    std::vector<double> p_;
    std::vector<double> beta_;
    Matrix gamma_;
};

PureState pure_from_sectors(GeneratorSpectrum spectrum, std::vector<SectorState> sectors,
                            Complex zero_amp = 0.0);

/// Equatorial state: every sector on the equator of its Bloch sphere
/// (alpha = pi/2), no zero-sector weight.
PureState equatorial(GeneratorSpectrum spectrum, const std::vector<double>& p,
                     const std::vector<double>& beta, const std::vector<double>& phi);

/// True iff every sector carrying weight above tol sits on its Bloch
/// equator. The zero-eigenspace amplitude is inert for phase estimation and
/// does not affect the classification.
bool is_equatorial(const PureState& state, double tol = 1e-9);

/// True iff the state is equatorial and the sector phases phi_n agree
/// (mod 2pi) across all sectors with weight above tol. Classification is
/// done on the canonical parametrization, so it is gauge-independent.
bool is_path_symmetric(const PureState& state, double tol = 1e-9);

MixedES mixed_es(GeneratorSpectrum spectrum, const std::vector<double>& p,
                 const std::vector<double>& beta, const Matrix& gamma);

/// Fully dephased mixture (gamma = diag(p)).
MixedES dephased_es(GeneratorSpectrum spectrum, const std::vector<double>& p,
                    const std::vector<double>& beta);

PureState phase_encode(const PureState& state, double theta);
MixedES phase_encode(const MixedES& state, double theta);
DensityMatrix phase_encode(const DensityMatrix& rho, const GeneratorSpectrum& spec, double theta);

/// NOON state: single-sector equatorial state with g = N/2 over sz_spectrum(N).
PureState noon(int n_particles);

/// One-axis twisting: exp(-i mu Sz^2) applied to the spin-coherent state
/// along +x. Equatorial with sector phases phi_n = -mu g_n^2.
PureState oat(int n_particles, double mu);

Vector to_vector(const PureState& state);
DensityMatrix to_density(const PureState& state);
DensityMatrix to_density(const MixedES& state);

/// Decompose a normalized vector into the canonical sector parametrization.
/// With a zero eigenspace of multiplicity > 1, support must lie along the
/// first zero-basis direction (the only one PureState can represent).
PureState from_vector(const GeneratorSpectrum& spectrum, const Vector& v);

/// Vector-level equality up to one global phase: min over phase of the
/// two-norm distance.
double distance_up_to_phase(const Vector& a, const Vector& b);

/// Canonical (p, phi, alpha, beta) for one sector's (up, down) amplitude pair.
SectorState canonical_sector(Complex up, Complex down);

}  // namespace eqmet
