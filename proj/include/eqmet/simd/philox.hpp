#pragma once

#include <cstdint>

namespace eqmet::simd {

// Philox-4x32-10 counter-based generator (Salmon et al. round constants).
// Pure block function: identical (counter, key) in -> identical 128 bits out,
// on every platform and every kernel path. Streams are addressed by the
// 64-bit key (master seed) plus the upper 64 counter bits (stream id), with
// the lower 64 bits enumerating blocks inside a stream.

struct PhiloxKey {
    std::uint32_t k0, k1;
};

struct PhiloxCtr {
    std::uint32_t c0, c1, c2, c3;
};

inline constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
inline constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
inline constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
inline constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline PhiloxCtr philox4x32(PhiloxCtr ctr, PhiloxKey key) {
    for (int round = 0; round < 10; ++round) {
        const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * ctr.c0;
        const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * ctr.c2;
        const auto hi0 = static_cast<std::uint32_t>(p0 >> 32), lo0 = static_cast<std::uint32_t>(p0);
        const auto hi1 = static_cast<std::uint32_t>(p1 >> 32), lo1 = static_cast<std::uint32_t>(p1);
        ctr = {hi1 ^ ctr.c1 ^ key.k0, lo1, hi0 ^ ctr.c3 ^ key.k1, lo0};
        key.k0 += kPhiloxW0;
        key.k1 += kPhiloxW1;
    }
    return ctr;
}

inline PhiloxKey make_key(std::uint64_t seed) {
    return {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
}

inline PhiloxCtr make_counter(std::uint64_t stream, std::uint64_t block) {
    return {static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32),
            static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
}

/// Map two 32-bit words to one double in [0, 1) using the top 53 bits.
inline double u64_to_unit_double(std::uint32_t lo, std::uint32_t hi) {
    const std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 32) | lo;
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace eqmet::simd
