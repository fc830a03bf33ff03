#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>

namespace eqmet::simd {

// Hot numeric inner loops, exposed as a table of kernels. A scalar reference
// implementation always exists; an AVX2 variant is selected at runtime when
// the CPU supports it. The two integer-based kernels (uniform_f64,
// categorical_counts) are bit-identical across paths; the complex-arithmetic
// kernels agree to rounding (FMA contraction differs) and are
// equivalence-tested against the scalar path.
struct Kernels {
    /// Fill out[0..n) with uniforms in [0,1). Stream addressed by
    /// (seed, stream); each counter block yields two consecutive draws, and
    /// generation starts at first_block, so draw 2*first_block + i is a pure
    /// function of (seed, stream, first_block, i). Callers chunking a stream
    /// must advance first_block by n/2 with n even on all but the last chunk.
    void (*uniform_f64)(std::uint64_t seed, std::uint64_t stream, std::uint64_t first_block,
                        std::size_t n, double* out);

    /// Accumulate categorical draws into counts[0..k): draw u falls in the
    /// first bin with u < cdf[bin]. cdf must be ascending with cdf[k-1] = 1.
    void (*categorical_counts)(const double* cdf, std::size_t k, const double* u, std::size_t n,
                               std::uint64_t* counts);

    /// out[i] = x[i] * s[i], complex double arrays (aliasing with x allowed).
    void (*cplx_hadamard)(const std::complex<double>* x, const std::complex<double>* s,
                          std::size_t n, std::complex<double>* out);

    /// y = A x with A column-major n x n complex double. y must not alias.
    void (*cplx_matvec)(const std::complex<double>* a, std::size_t n,
                        const std::complex<double>* x, std::complex<double>* y);

    const char* name;
};

/// Scalar reference path, always available.
const Kernels& scalar_kernels();

/// AVX2 path, or nullptr when unsupported by the build or the CPU.
const Kernels* avx2_kernels();

/// Runtime-selected path. Honors EQMET_KERNELS=scalar|avx2 when set;
/// otherwise picks AVX2 when available.
const Kernels& kernels();

}  // namespace eqmet::simd
