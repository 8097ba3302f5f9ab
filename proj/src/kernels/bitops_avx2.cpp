// AVX2 variants of the bitset kernels. This translation unit is compiled with
// -mavx2 and must only be entered after a successful CPUID check.

#include <immintrin.h>

#include <algorithm>
#include <bit>

#include "sgh/kernels/bitops.hpp"

namespace sgh::kernels::avx2_impl {
namespace {

constexpr std::size_t kLanes = 4;

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

void or_into(Word* dst, const Word* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) store(dst + i, _mm256_or_si256(load(dst + i), load(src + i)));
  for (; i < n; ++i) dst[i] |= src[i];
}

void and_into(Word* dst, const Word* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) store(dst + i, _mm256_and_si256(load(dst + i), load(src + i)));
  for (; i < n; ++i) dst[i] &= src[i];
}

// Nibble lookup popcount (Mula): per-byte counts via pshufb, summed with psadbw.
inline __m256i popcount_bytes(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
}

std::size_t popcount_andnot(const Word* a, const Word* b, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i x = _mm256_andnot_si256(load(b + i), load(a + i));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(x), _mm256_setzero_si256()));
  }
  alignas(32) Word lanes[kLanes];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::size_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & ~b[i]));
  return total;
}

inline Word word_at(const Word* src, std::size_t src_n, std::ptrdiff_t i, Word outside) {
  if (i < 0 || static_cast<std::size_t>(i) >= src_n) return outside;
  return src[i];
}

void or_shifted_left(Word* dst, std::size_t dst_n, const Word* src, std::size_t src_n,
                     std::size_t shift) {
  const auto q = static_cast<std::ptrdiff_t>(shift / kWordBits);
  const unsigned b = shift % kWordBits;
  const __m128i left = _mm_cvtsi32_si128(static_cast<int>(b));
  // A count of 64 zeroes the lane, which covers b == 0 without a branch.
  const __m128i right = _mm_cvtsi32_si128(static_cast<int>(kWordBits - b));

  auto scalar_word = [&](std::size_t i) {
    const auto j = static_cast<std::ptrdiff_t>(i) - q;
    Word w = word_at(src, src_n, j, 0) << b;
    if (b != 0) w |= word_at(src, src_n, j - 1, 0) >> (kWordBits - b);
    dst[i] |= w;
  };

  // Vector body needs src[i-q-1 .. i-q+3] in range.
  const std::ptrdiff_t lo = q + 1;
  const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(dst_n),
                                                     static_cast<std::ptrdiff_t>(src_n) + q);
  std::size_t i = 0;
  for (; static_cast<std::ptrdiff_t>(i) < std::min<std::ptrdiff_t>(lo, static_cast<std::ptrdiff_t>(dst_n)); ++i)
    scalar_word(i);
  for (; static_cast<std::ptrdiff_t>(i) + static_cast<std::ptrdiff_t>(kLanes) <= hi; i += kLanes) {
    const Word* p = src + (static_cast<std::ptrdiff_t>(i) - q);
    const __m256i w = _mm256_or_si256(_mm256_sll_epi64(load(p), left), _mm256_srl_epi64(load(p - 1), right));
    store(dst + i, _mm256_or_si256(load(dst + i), w));
  }
  for (; i < dst_n; ++i) scalar_word(i);
}

void and_shifted_right(Word* dst, std::size_t dst_n, const Word* src, std::size_t src_n,
                       std::size_t shift) {
  const auto q = static_cast<std::ptrdiff_t>(shift / kWordBits);
  const unsigned b = shift % kWordBits;
  constexpr Word ones = ~Word{0};
  const __m128i right = _mm_cvtsi32_si128(static_cast<int>(b));
  const __m128i left = _mm_cvtsi32_si128(static_cast<int>(kWordBits - b));

  auto scalar_word = [&](std::size_t i) {
    const auto j = static_cast<std::ptrdiff_t>(i) + q;
    Word w = word_at(src, src_n, j, ones) >> b;
    if (b != 0) w |= word_at(src, src_n, j + 1, ones) << (kWordBits - b);
    dst[i] &= w;
  };

  // Vector body needs src[i+q .. i+q+4] in range.
  const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(dst_n),
                                                     static_cast<std::ptrdiff_t>(src_n) - q - 1);
  std::size_t i = 0;
  for (; static_cast<std::ptrdiff_t>(i) + static_cast<std::ptrdiff_t>(kLanes) <= hi; i += kLanes) {
    const Word* p = src + (static_cast<std::ptrdiff_t>(i) + q);
    const __m256i w = _mm256_or_si256(_mm256_srl_epi64(load(p), right), _mm256_sll_epi64(load(p + 1), left));
    store(dst + i, _mm256_and_si256(load(dst + i), w));
  }
  for (; i < dst_n; ++i) scalar_word(i);
}

}  // namespace

constexpr BitKernels kAvx2{
    "avx2", or_into, and_into, popcount_andnot, or_shifted_left, and_shifted_right,
};

const BitKernels& table() { return kAvx2; }

}  // namespace sgh::kernels::avx2_impl
