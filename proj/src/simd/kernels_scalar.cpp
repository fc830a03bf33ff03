#include "eqmet/simd/kernels.hpp"
#include "eqmet/simd/philox.hpp"

namespace eqmet::simd {
namespace {

void uniform_f64_scalar(std::uint64_t seed, std::uint64_t stream, std::uint64_t first_block,
                        std::size_t n, double* out) {
    const PhiloxKey key = make_key(seed);
    std::size_t i = 0;
    for (std::uint64_t block = first_block; i < n; ++block) {
        const PhiloxCtr r = philox4x32(make_counter(stream, block), key);
        out[i++] = u64_to_unit_double(r.c0, r.c1);
        if (i < n) out[i++] = u64_to_unit_double(r.c2, r.c3);
    }
}

void categorical_counts_scalar(const double* cdf, std::size_t k, const double* u, std::size_t n,
                               std::uint64_t* counts) {
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t bin = 0;
        while (bin + 1 < k && u[i] >= cdf[bin]) ++bin;
        ++counts[bin];
    }
}

void cplx_hadamard_scalar(const std::complex<double>* x, const std::complex<double>* s,
                          std::size_t n, std::complex<double>* out) {
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double sr = s[i].real(), si = s[i].imag();
        out[i] = {xr * sr - xi * si, xr * si + xi * sr};
    }
}

void cplx_matvec_scalar(const std::complex<double>* a, std::size_t n,
                        const std::complex<double>* x, std::complex<double>* y) {
    for (std::size_t i = 0; i < n; ++i) y[i] = {0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
        const double xr = x[j].real(), xi = x[j].imag();
        const std::complex<double>* col = a + j * n;
        for (std::size_t i = 0; i < n; ++i) {
            const double ar = col[i].real(), ai = col[i].imag();
            y[i] += std::complex<double>(ar * xr - ai * xi, ar * xi + ai * xr);
        }
    }
}

}  // namespace

const Kernels& scalar_kernels() {
    static const Kernels k{uniform_f64_scalar, categorical_counts_scalar, cplx_hadamard_scalar,
                           cplx_matvec_scalar, "scalar"};
    return k;
}

}  // namespace eqmet::simd
