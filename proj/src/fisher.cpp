#include "eqmet/fisher.hpp"

#include <cmath>

#include "eqmet/measurement.hpp"

namespace eqmet {

std::string to_string(QfiMethod m) {
    switch (m) {
        case QfiMethod::closed_form_pure: return "closed_form_pure";
        case QfiMethod::closed_form_mixed_es: return "closed_form_mixed_es";
        case QfiMethod::oracle: return "oracle";
    }
    return "unknown";
}

QfiResult qfi_pure(const PureState& state) {
    double sum_pg2 = 0.0, sum_pgcos = 0.0;
    for (int n = 1; n <= state.spectrum().num_sectors(); ++n) {
        const auto& s = state.sector(n);
        const double g = state.spectrum().g(n);
        sum_pg2 += s.p * g * g;
        sum_pgcos += s.p * g * std::cos(s.alpha);
    }
    return {4.0 * sum_pg2 - 4.0 * sum_pgcos * sum_pgcos, QfiMethod::closed_form_pure};
}

double qfi_variance_form(const Vector& psi, const Matrix& g) {
    const Vector gpsi = g * psi;
    const double g2 = std::real(Complex(gpsi.squaredNorm()));
    const double g1 = std::real(psi.dot(gpsi));
    return 4.0 * (g2 - g1 * g1);
}

QfiResult qfi_oracle(const DensityMatrix& rho, const Matrix& g) {
    if (g.rows() != rho.dim() || g.cols() != rho.dim())
        throw DimensionMismatch("generator does not match the density matrix");
    if ((g - g.adjoint()).cwiseAbs().maxCoeff() > kHermTol)
        throw Error("generator must be Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix());
    const auto& lam = es.eigenvalues();
    const Matrix g_eig = es.eigenvectors().adjoint() * g * es.eigenvectors();
    double f = 0.0;
    for (int k = 0; k < lam.size(); ++k) {
        for (int l = 0; l < lam.size(); ++l) {
            const double sum = lam(k) + lam(l);
            if (sum <= kOracleCutoff) continue;
            const double diff = lam(k) - lam(l);
            f += 2.0 * diff * diff / sum * std::norm(g_eig(k, l));
        }
    }
    return {f, QfiMethod::oracle};
}

Matrix sld_oracle(const DensityMatrix& rho, const Matrix& g) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix());
    const auto& lam = es.eigenvalues();
    const Matrix g_eig = es.eigenvectors().adjoint() * g * es.eigenvectors();
    Matrix l_eig = Matrix::Zero(rho.dim(), rho.dim());
    const Complex minus_2i(0.0, -2.0);
    for (int k = 0; k < lam.size(); ++k) {
        for (int l = 0; l < lam.size(); ++l) {
            const double sum = lam(k) + lam(l);
            if (sum <= kOracleCutoff) continue;
            l_eig(k, l) = minus_2i * (lam(l) - lam(k)) * g_eig(k, l) / sum;
        }
    }
    return es.eigenvectors() * l_eig * es.eigenvectors().adjoint();
}

Matrix sld_es(const MixedES& state, double theta) {
    const auto& spec = state.spectrum();
    Matrix l = Matrix::Zero(spec.dim(), spec.dim());
    for (int n = 1; n <= spec.num_sectors(); ++n) {
        const double g = spec.g(n);
        const Complex phase = std::polar(2.0 * g, 2.0 * g * theta + state.beta()[n - 1]);
        l(spec.down_index(n), spec.up_index(n)) = Complex(0.0, 1.0) * phase;
        l(spec.up_index(n), spec.down_index(n)) = Complex(0.0, -1.0) * std::conj(phase);
    }
    return l;
}

QfiResult qfi_mixed_es(const MixedES& state) {
    double f = 0.0;
    for (int n = 1; n <= state.spectrum().num_sectors(); ++n)
        f += state.p()[n - 1] * state.spectrum().g(n) * state.spectrum().g(n);
    return {4.0 * f, QfiMethod::closed_form_mixed_es};
}

ParityEnhancement parity_enhancement(const DensityMatrix& rho, const GeneratorSpectrum& spec) {
    const Matrix g = generator_matrix(spec);
    ParityEnhancement out{};
    out.f_before = qfi_oracle(rho, g).value;
    const ParityCollapse c = parity_collapse(rho, spec);
    out.q_plus = c.q_plus;
    out.q_minus = c.q_minus;
    out.q_zero = c.q_zero;
    out.f_plus = c.rho_plus ? qfi_oracle(*c.rho_plus, g).value : 0.0;
    out.f_minus = c.rho_minus ? qfi_oracle(*c.rho_minus, g).value : 0.0;
    // the zero branch evolves trivially and contributes no information
    out.f_bar = out.q_plus * out.f_plus + out.q_minus * out.f_minus;
    return out;
}

}  // namespace eqmet
