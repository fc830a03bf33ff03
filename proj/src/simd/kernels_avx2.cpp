// AVX2+FMA variants of the kernel table. Compiled only on x86_64 (see
// src/CMakeLists.txt); selection against the CPU happens in dispatch.cpp.

#include "eqmet/simd/kernels.hpp"
#include "eqmet/simd/philox.hpp"

#include <immintrin.h>

namespace eqmet::simd {
namespace {

// Four Philox blocks per iteration. Each __m256i holds four lanes of one
// counter/key word, zero-extended to 64 bits so that _mm256_mul_epu32 yields
// the full 32x32->64 product per lane.

inline __m256i mask_lo32(__m256i v) {
    return _mm256_and_si256(v, _mm256_set1_epi64x(0xFFFFFFFFll));
}

void uniform_f64_avx2(std::uint64_t seed, std::uint64_t stream, std::uint64_t first_block,
                      std::size_t n, double* out) {
    const PhiloxKey key = make_key(seed);
    const __m256i m0 = _mm256_set1_epi64x(kPhiloxM0);
    const __m256i m1 = _mm256_set1_epi64x(kPhiloxM1);
    const __m256i w0 = _mm256_set1_epi64x(kPhiloxW0);
    const __m256i w1 = _mm256_set1_epi64x(kPhiloxW1);
    const __m256i c2_init = _mm256_set1_epi64x(static_cast<std::uint32_t>(stream));
    const __m256i c3_init = _mm256_set1_epi64x(static_cast<std::uint32_t>(stream >> 32));
    const __m256d two32 = _mm256_set1_pd(0x1.0p32);
    const __m256d scale = _mm256_set1_pd(0x1.0p-53);
    const __m256i exp52 = _mm256_set1_epi64x(0x4330000000000000ll);
    const __m256d bias52 = _mm256_set1_pd(0x1.0p52);

    std::size_t i = 0;
    std::uint64_t block = first_block;
    for (; i + 8 <= n; i += 8, block += 4) {
        const __m256i blk = _mm256_add_epi64(_mm256_set1_epi64x(static_cast<long long>(block)),
                                             _mm256_setr_epi64x(0, 1, 2, 3));
        __m256i c0 = mask_lo32(blk);
        __m256i c1 = _mm256_srli_epi64(blk, 32);
        __m256i c2 = c2_init, c3 = c3_init;
        __m256i k0 = _mm256_set1_epi64x(key.k0);
        __m256i k1 = _mm256_set1_epi64x(key.k1);

        for (int round = 0; round < 10; ++round) {
            const __m256i p0 = _mm256_mul_epu32(m0, c0);
            const __m256i p1 = _mm256_mul_epu32(m1, c2);
            const __m256i hi0 = _mm256_srli_epi64(p0, 32), lo0 = mask_lo32(p0);
            const __m256i hi1 = _mm256_srli_epi64(p1, 32), lo1 = mask_lo32(p1);
            c0 = _mm256_xor_si256(_mm256_xor_si256(hi1, c1), k0);
            c1 = lo1;
            c2 = _mm256_xor_si256(_mm256_xor_si256(hi0, c3), k1);
            c3 = lo0;
            k0 = mask_lo32(_mm256_add_epi64(k0, w0));
            k1 = mask_lo32(_mm256_add_epi64(k1, w1));
        }

        // (c0,c1) and (c2,c3) -> 53-bit uniforms, matching the scalar path bit
        // for bit: u = ((hi<<32 | lo) >> 11) * 2^-53, assembled through exact
        // double arithmetic (hi < 2^21 after the shift, fma result < 2^53).
        const __m256i bits_a = _mm256_srli_epi64(
            _mm256_or_si256(_mm256_slli_epi64(c1, 32), c0), 11);
        const __m256i bits_b = _mm256_srli_epi64(
            _mm256_or_si256(_mm256_slli_epi64(c3, 32), c2), 11);
        __m256d da, db;
        {
            const __m256d lo = _mm256_sub_pd(
                _mm256_castsi256_pd(_mm256_or_si256(mask_lo32(bits_a), exp52)), bias52);
            const __m256d hi = _mm256_sub_pd(
                _mm256_castsi256_pd(_mm256_or_si256(_mm256_srli_epi64(bits_a, 32), exp52)), bias52);
            da = _mm256_mul_pd(_mm256_fmadd_pd(hi, two32, lo), scale);
        }
        {
            const __m256d lo = _mm256_sub_pd(
                _mm256_castsi256_pd(_mm256_or_si256(mask_lo32(bits_b), exp52)), bias52);
            const __m256d hi = _mm256_sub_pd(
                _mm256_castsi256_pd(_mm256_or_si256(_mm256_srli_epi64(bits_b, 32), exp52)), bias52);
            db = _mm256_mul_pd(_mm256_fmadd_pd(hi, two32, lo), scale);
        }
        // interleave per-block pairs: out[2b] = da[b], out[2b+1] = db[b]
        const __m256d lo = _mm256_unpacklo_pd(da, db);
        const __m256d hi = _mm256_unpackhi_pd(da, db);
        _mm256_storeu_pd(out + i, _mm256_permute2f128_pd(lo, hi, 0x20));
        _mm256_storeu_pd(out + i + 4, _mm256_permute2f128_pd(lo, hi, 0x31));
    }
    for (; i < n; ++block) {
        const PhiloxCtr r = philox4x32(make_counter(stream, block), make_key(seed));
        out[i++] = u64_to_unit_double(r.c0, r.c1);
        if (i < n) out[i++] = u64_to_unit_double(r.c2, r.c3);
    }
}

void categorical_counts_avx2(const double* cdf, std::size_t k, const double* u, std::size_t n,
                             std::uint64_t* counts) {
    const __m256d ones = _mm256_set1_pd(1.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d uv = _mm256_loadu_pd(u + i);
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t j = 0; j + 1 < k; ++j) {
            const __m256d ge = _mm256_cmp_pd(uv, _mm256_set1_pd(cdf[j]), _CMP_GE_OQ);
            acc = _mm256_add_pd(acc, _mm256_and_pd(ge, ones));
        }
        alignas(32) double idx[4];
        _mm256_store_pd(idx, acc);
        ++counts[static_cast<std::size_t>(idx[0])];
        ++counts[static_cast<std::size_t>(idx[1])];
        ++counts[static_cast<std::size_t>(idx[2])];
        ++counts[static_cast<std::size_t>(idx[3])];
    }
    for (; i < n; ++i) {
        std::size_t bin = 0;
        while (bin + 1 < k && u[i] >= cdf[bin]) ++bin;
        ++counts[bin];
    }
}

// Counting with >= against an ascending cdf is a prefix property, so the
// per-threshold tally above lands in the same bin as the scalar early-exit
// scan, including exact-tie cases.

inline __m256d cplx_mul(__m256d a, __m256d b) {
    const __m256d br = _mm256_movedup_pd(b);
    const __m256d bi = _mm256_permute_pd(b, 0xF);
    const __m256d as = _mm256_permute_pd(a, 0x5);
    return _mm256_fmaddsub_pd(a, br, _mm256_mul_pd(as, bi));
}

void cplx_hadamard_avx2(const std::complex<double>* x, const std::complex<double>* s,
                        std::size_t n, std::complex<double>* out) {
    const auto* xp = reinterpret_cast<const double*>(x);
    const auto* sp = reinterpret_cast<const double*>(s);
    auto* op = reinterpret_cast<double*>(out);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        _mm256_storeu_pd(op + 2 * i, cplx_mul(_mm256_loadu_pd(xp + 2 * i), _mm256_loadu_pd(sp + 2 * i)));
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double sr = s[i].real(), si = s[i].imag();
        out[i] = {xr * sr - xi * si, xr * si + xi * sr};
    }
}

void cplx_matvec_avx2(const std::complex<double>* a, std::size_t n,
                      const std::complex<double>* x, std::complex<double>* y) {
    auto* yp = reinterpret_cast<double*>(y);
    for (std::size_t i = 0; i < n; ++i) y[i] = {0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
        const __m256d xr = _mm256_set1_pd(x[j].real());
        const __m256d xi = _mm256_set1_pd(x[j].imag());
        const auto* col = reinterpret_cast<const double*>(a + j * n);
        std::size_t i = 0;
        for (; i + 2 <= n; i += 2) {
            const __m256d c = _mm256_loadu_pd(col + 2 * i);
            const __m256d cs = _mm256_permute_pd(c, 0x5);
            const __m256d contrib = _mm256_fmaddsub_pd(c, xr, _mm256_mul_pd(cs, xi));
            _mm256_storeu_pd(yp + 2 * i, _mm256_add_pd(_mm256_loadu_pd(yp + 2 * i), contrib));
        }
        for (; i < n; ++i) {
            const double ar = col[2 * i], ai = col[2 * i + 1];
            y[i] += std::complex<double>(ar * x[j].real() - ai * x[j].imag(),
                                         ar * x[j].imag() + ai * x[j].real());
        }
    }
}

}  // namespace

const Kernels* avx2_kernels_impl() {
    static const Kernels k{uniform_f64_avx2, categorical_counts_avx2, cplx_hadamard_avx2,
                           cplx_matvec_avx2, "avx2"};
    return &k;
}

}  // namespace eqmet::simd
