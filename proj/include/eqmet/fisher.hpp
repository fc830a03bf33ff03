#pragma once

#include <string>

#include "eqmet/states.hpp"

namespace eqmet {

/// Eigenvalue-sum cutoff for the SLD null space in the oracle.
inline constexpr double kOracleCutoff = 1e-12;

enum class QfiMethod { closed_form_pure, closed_form_mixed_es, oracle };

std::string to_string(QfiMethod m);

struct QfiResult {
    double value;
    QfiMethod method;
};

/// Sector closed form F = 4 sum_n p_n g_n^2 - 4 (sum_n p_n g_n cos alpha_n)^2.
/// Exact for any PureState, including zero-sector weight (which only lowers
/// the sector weights).
QfiResult qfi_pure(const PureState& state);

/// Variance form 4(<G^2> - <G>^2) evaluated directly on a vector.
double qfi_variance_form(const Vector& psi, const Matrix& g);

/// Independent oracle from the eigendecomposition of rho:
/// F = 2 sum_{k,l} (l_k - l_l)^2 / (l_k + l_l) |<k|G|l>|^2, terms with
/// l_k + l_l <= cutoff dropped.
QfiResult qfi_oracle(const DensityMatrix& rho, const Matrix& g);

/// Hermitian L solving d_theta rho = (L rho + rho L)/2, built in the
/// eigenbasis of rho.
Matrix sld_oracle(const DensityMatrix& rho, const Matrix& g);

/// Closed-form SLD of an encoded mixed equatorial state,
/// L = 2i sum_n g_n [e^{i(2 g_n theta + beta_n)} |down><up|_n - h.c.].
/// Independent of the coherence matrix gamma.
Matrix sld_es(const MixedES& state, double theta);

/// Closed form F = 4 sum_n p_n g_n^2 for mixed equatorial states.
QfiResult qfi_mixed_es(const MixedES& state);

struct ParityEnhancement {
    double f_before;  ///< QFI of the input state
    double f_bar;     ///< average post-measurement QFI, equals 4 tr(rho G^2)
    double q_plus, q_minus, q_zero;
    double f_plus, f_minus;  ///< per-branch QFI (0 when the branch is empty)
};

/// QFI bookkeeping for a parity measurement on an arbitrary input state.
ParityEnhancement parity_enhancement(const DensityMatrix& rho, const GeneratorSpectrum& spec);

}  // namespace eqmet
