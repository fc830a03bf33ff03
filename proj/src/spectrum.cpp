#include "eqmet/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace eqmet {

GeneratorSpectrum::GeneratorSpectrum(std::vector<Sector> sectors, int zero_multiplicity)
    : sectors_(std::move(sectors)), zero_(zero_multiplicity) {
    if (zero_ < 0) throw Error("zero-eigenspace multiplicity must be non-negative");
    if (sectors_.empty() && zero_ == 0) throw Error("spectrum has no sectors and no zero eigenspace");
    for (const auto& s : sectors_) {
        if (!std::isfinite(s.g) || s.g <= 0.0)
            throw Error("sector eigenvalue must be finite and strictly positive");
    }
    std::sort(sectors_.begin(), sectors_.end(), [](const Sector& a, const Sector& b) { return a.g < b.g; });
    for (std::size_t i = 1; i < sectors_.size(); ++i) {
        if (sectors_[i].g - sectors_[i - 1].g <= kSpectrumTol)
            throw DegenerateSpectrum("repeated |g| across sectors: g = " + std::to_string(sectors_[i].g));
        for (std::size_t j = 0; j < i; ++j)
            if (sectors_[i].label == sectors_[j].label)
                throw Error("sector labels must be unique");
    }
}

GeneratorSpectrum build_spectrum(const std::vector<double>& eigenvalues) {
    if (eigenvalues.empty()) throw Error("eigenvalue list is empty");
    for (double v : eigenvalues)
        if (!std::isfinite(v)) throw Error("eigenvalue list contains a non-finite value");

    int zero = 0;
    std::vector<double> pos, neg;
    for (double v : eigenvalues) {
        if (std::abs(v) < kSpectrumTol)
            ++zero;
        else if (v > 0)
            pos.push_back(v);
        else
            neg.push_back(-v);
    }
    std::sort(pos.begin(), pos.end());
    std::sort(neg.begin(), neg.end());
    if (pos.size() != neg.size())
        throw SpectrumAsymmetric("spectrum is not symmetric: " + std::to_string(pos.size()) +
                                 " positive vs " + std::to_string(neg.size()) + " negative eigenvalues");
    for (std::size_t i = 0; i < pos.size(); ++i) {
        if (std::abs(pos[i] - neg[i]) > kSpectrumTol)
            throw SpectrumAsymmetric("eigenvalue " + std::to_string(pos[i]) +
                                     " has no matching partner of opposite sign");
    }

    std::vector<Sector> sectors;
    sectors.reserve(pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i)
        sectors.push_back({static_cast<int>(i) + 1, 0.5 * (pos[i] + neg[i])});
    return GeneratorSpectrum(std::move(sectors), zero);
}

GeneratorSpectrum sz_spectrum(int n_particles) {
    if (n_particles < 1) throw InvalidN("particle number must be >= 1");
    std::vector<Sector> sectors;
    if (n_particles % 2 == 0) {
        for (int n = 1; n <= n_particles / 2; ++n) sectors.push_back({n, static_cast<double>(n)});
        return GeneratorSpectrum(std::move(sectors), 1);
    }
    for (int n = 1; n <= (n_particles + 1) / 2; ++n) sectors.push_back({n, n - 0.5});
    return GeneratorSpectrum(std::move(sectors), 0);
}

double generator_eigenvalue(const GeneratorSpectrum& spec, int index) {
    const int k = spec.num_sectors();
    const int z = spec.zero_multiplicity();
    if (index < 0 || index >= spec.dim()) throw DimensionMismatch("basis index out of range");
    if (index < k) return spec.g(k - index);
    if (index < k + z) return 0.0;
    return -spec.g(index - k - z + 1);
}

Matrix generator_matrix(const GeneratorSpectrum& spec) {
    Matrix g = Matrix::Zero(spec.dim(), spec.dim());
    for (int i = 0; i < spec.dim(); ++i) g(i, i) = generator_eigenvalue(spec, i);
    return g;
}

}  // namespace eqmet
