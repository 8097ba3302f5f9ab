#pragma once
// Word-level bitset kernels backing the cofinite set algebra.
//
// Every routine exists as a portable scalar reference and, on x86-64, as an
// AVX2 variant. The variant is chosen once at runtime from CPUID; the scalar
// table is always available for equivalence testing.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace sgh::kernels {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

struct BitKernels {
  std::string_view name;

  // dst[i] |= src[i] for i < n.
  void (*or_into)(Word* dst, const Word* src, std::size_t n);

  // dst[i] &= src[i] for i < n.
  void (*and_into)(Word* dst, const Word* src, std::size_t n);

  // Number of set bits in (a & ~b) over n words.
  std::size_t (*popcount_andnot)(const Word* a, const Word* b, std::size_t n);

  // dst |= (src << shift), bits pushed past dst_n words are dropped.
  void (*or_shifted_left)(Word* dst, std::size_t dst_n, const Word* src, std::size_t src_n,
                          std::size_t shift);

  // dst &= (src >> shift); bit positions at or beyond 64*src_n in src read as 1.
  void (*and_shifted_right)(Word* dst, std::size_t dst_n, const Word* src, std::size_t src_n,
                            std::size_t shift);
};

const BitKernels& scalar_kernels();

// nullptr when the AVX2 backend was not compiled in or the CPU lacks AVX2.
const BitKernels* avx2_kernels();

// The table used by the library. Defaults to the best supported backend;
// SGH_FORCE_SCALAR=1 in the environment pins the scalar one.
const BitKernels& active_kernels();

// Test hook; passing nullptr restores the default selection.
void override_active_kernels(const BitKernels* table);

}  // namespace sgh::kernels
