#include <atomic>
#include <cstdlib>
#include <string_view>

#include "sgh/kernels/bitops.hpp"

namespace sgh::kernels {

#if defined(SGH_HAVE_AVX2)
namespace avx2_impl {
const BitKernels& table();
}
#endif

namespace {

#if defined(SGH_HAVE_AVX2)
bool cpu_has_avx2() {
#if defined(__GNUC__) || defined(__clang__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}
#endif

const BitKernels& default_kernels() {
  static const BitKernels& chosen = [&]() -> const BitKernels& {
    if (const char* env = std::getenv("SGH_FORCE_SCALAR"); env && std::string_view(env) == "1")
      return scalar_kernels();
    if (const BitKernels* v = avx2_kernels()) return *v;
    return scalar_kernels();
  }();
  return chosen;
}

std::atomic<const BitKernels*> g_override{nullptr};

}  // namespace

const BitKernels* avx2_kernels() {
#if defined(SGH_HAVE_AVX2)
  static const bool ok = cpu_has_avx2();
  return ok ? &avx2_impl::table() : nullptr;
#else
  return nullptr;
#endif
}

const BitKernels& active_kernels() {
  if (const BitKernels* o = g_override.load(std::memory_order_acquire)) return *o;
  return default_kernels();
}

void override_active_kernels(const BitKernels* table) { g_override.store(table, std::memory_order_release); }

}  // namespace sgh::kernels
