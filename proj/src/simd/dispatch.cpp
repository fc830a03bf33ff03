#include "eqmet/simd/kernels.hpp"

#include <cstdlib>
#include <cstring>

#include "eqmet/errors.hpp"

namespace eqmet::simd {

#if defined(EQMET_HAVE_AVX2_SOURCES)
const Kernels* avx2_kernels_impl();
#endif

const Kernels* avx2_kernels() {
#if defined(EQMET_HAVE_AVX2_SOURCES) && (defined(__GNUC__) || defined(__clang__))
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return avx2_kernels_impl();
#endif
    return nullptr;
}

const Kernels& kernels() {
    static const Kernels* selected = [] {
        const char* env = std::getenv("EQMET_KERNELS");
        if (env != nullptr && std::strcmp(env, "scalar") == 0) return &scalar_kernels();
        const Kernels* avx2 = avx2_kernels();
        if (env != nullptr && std::strcmp(env, "avx2") == 0 && avx2 == nullptr)
            throw Error("EQMET_KERNELS=avx2 requested but AVX2 is unavailable");
        return avx2 != nullptr ? avx2 : &scalar_kernels();
    }();
    return *selected;
}

}  // namespace eqmet::simd
