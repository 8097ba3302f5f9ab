#include "sgh/kernels/bitops.hpp"

#include <bit>

namespace sgh::kernels {
namespace {

void or_into(Word* dst, const Word* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] |= src[i];
}

void and_into(Word* dst, const Word* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] &= src[i];
}

std::size_t popcount_andnot(const Word* a, const Word* b, std::size_t n) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & ~b[i]));
  return total;
}

Word src_word(const Word* src, std::size_t src_n, std::ptrdiff_t i, Word outside) {
  if (i < 0 || static_cast<std::size_t>(i) >= src_n) return outside;
  return src[i];
}

void or_shifted_left(Word* dst, std::size_t dst_n, const Word* src, std::size_t src_n,
                     std::size_t shift) {
  const auto q = static_cast<std::ptrdiff_t>(shift / kWordBits);
  const unsigned b = shift % kWordBits;
  for (std::size_t i = 0; i < dst_n; ++i) {
    const auto j = static_cast<std::ptrdiff_t>(i) - q;
    Word w = src_word(src, src_n, j, 0) << b;
    if (b != 0) w |= src_word(src, src_n, j - 1, 0) >> (kWordBits - b);
    dst[i] |= w;
  }
}

void and_shifted_right(Word* dst, std::size_t dst_n, const Word* src, std::size_t src_n,
                       std::size_t shift) {
  const auto q = static_cast<std::ptrdiff_t>(shift / kWordBits);
  const unsigned b = shift % kWordBits;
  constexpr Word ones = ~Word{0};
  for (std::size_t i = 0; i < dst_n; ++i) {
    const auto j = static_cast<std::ptrdiff_t>(i) + q;
    Word w = src_word(src, src_n, j, ones) >> b;
    if (b != 0) w |= src_word(src, src_n, j + 1, ones) << (kWordBits - b);
    dst[i] &= w;
  }
}

constexpr BitKernels kScalar{
    "scalar", or_into, and_into, popcount_andnot, or_shifted_left, and_shifted_right,
};

}  // namespace

const BitKernels& scalar_kernels() { return kScalar; }

}  // namespace sgh::kernels
