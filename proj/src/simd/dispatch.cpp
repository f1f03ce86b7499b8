#include <cstdlib>
#include <string_view>

#include "cvq/error.hpp"
#include "cvq/simd/kernels.hpp"

namespace cvq::simd {

#if defined(CVQ_HAVE_AVX2)
namespace detail {
const Kernels& avx2_table();
}
#endif

const Kernels* avx2_kernels() {
#if defined(CVQ_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &detail::avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

namespace {

const Kernels& select() {
  if (const char* env = std::getenv("CVQ_SIMD")) {
    const std::string_view want(env);
    if (want == "scalar") return scalar_kernels();
    if (want == "avx2") {
      if (const Kernels* k = avx2_kernels()) return *k;
      throw ConfigError("CVQ_SIMD=avx2 requested but AVX2/FMA is unavailable");
    }
    if (!want.empty() && want != "auto") {
      throw ConfigError("CVQ_SIMD must be one of scalar, avx2, auto");
    }
  }
  if (const Kernels* k = avx2_kernels()) return *k;
  return scalar_kernels();
}

}  // namespace

const Kernels& active_kernels() {
  static const Kernels& chosen = select();
  return chosen;
}

}  // namespace cvq::simd
