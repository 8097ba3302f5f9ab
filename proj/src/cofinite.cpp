#include "sgh/cofinite.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "sgh/errors.hpp"

namespace sgh {

using kernels::active_kernels;
using kernels::kWordBits;
using kernels::Word;
using kernels::words_for;

namespace {

void set_bit(std::vector<Word>& w, std::size_t i) { w[i / kWordBits] |= Word{1} << (i % kWordBits); }
bool test_bit(std::span<const Word> w, std::size_t i) { return (w[i / kWordBits] >> (i % kWordBits)) & 1U; }

// Zero every bit at or above `bits`.
void clear_from(std::vector<Word>& w, std::size_t bits) {
  const std::size_t n = words_for(bits);
  for (std::size_t i = n; i < w.size(); ++i) w[i] = 0;
  if (n > 0 && bits % kWordBits != 0) w[n - 1] &= (Word{1} << (bits % kWordBits)) - 1;
}

std::size_t as_size(Value v) { return static_cast<std::size_t>(v); }

}  // namespace

CofiniteSet CofiniteSet::from_members(Value threshold, std::span<const Value> members) {
  if (threshold < 0) throw InvalidArgument("cofinite threshold must be non-negative");
  std::vector<Word> w(words_for(as_size(threshold)), 0);
  for (Value m : members) {
    if (m < 0) throw InvalidArgument("cofinite member must be non-negative, got " + std::to_string(m));
    if (m < threshold) set_bit(w, as_size(m));
  }
  return canonicalize(as_size(threshold), std::move(w));
}

CofiniteSet CofiniteSet::tail(Value from) {
  if (from < 0) throw InvalidArgument("tail start must be non-negative");
  CofiniteSet s;
  s.threshold_ = from;
  s.words_.assign(words_for(as_size(from)), 0);
  return s;
}

CofiniteSet CofiniteSet::canonicalize(std::size_t bits, std::vector<Word> words) {
  words.resize(std::max(words.size(), words_for(bits)), 0);
  clear_from(words, bits);
  // Highest non-member below `bits` decides the threshold.
  std::size_t t = 0;
  for (std::size_t wi = words_for(bits); wi-- > 0;) {
    Word missing = ~words[wi];
    const std::size_t base = wi * kWordBits;
    if (base + kWordBits > bits) missing &= (Word{1} << (bits - base)) - 1;
    if (missing != 0) {
      t = base + (kWordBits - static_cast<std::size_t>(std::countl_zero(missing)));
      break;
    }
  }
  CofiniteSet s;
  s.threshold_ = static_cast<Value>(t);
  words.resize(words_for(t));
  clear_from(words, t);
  s.words_ = std::move(words);
  return s;
}

bool CofiniteSet::contains(Value n) const {
  if (n < 0) return false;
  if (n >= threshold_) return true;
  return test_bit(words_, as_size(n));
}

Value CofiniteSet::min() const {
  for (std::size_t wi = 0; wi < words_.size(); ++wi)
    if (words_[wi] != 0) return static_cast<Value>(wi * kWordBits + std::countr_zero(words_[wi]));
  return threshold_;
}

std::vector<Value> CofiniteSet::members_below() const {
  std::vector<Value> out;
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    for (Word w = words_[wi]; w != 0; w &= w - 1)
      out.push_back(static_cast<Value>(wi * kWordBits + std::countr_zero(w)));
  }
  return out;
}

std::vector<Word> CofiniteSet::expand(std::size_t bits) const {
  std::vector<Word> w(words_for(bits), 0);
  const std::size_t t = as_size(threshold_);
  std::copy_n(words_.begin(), std::min(words_.size(), w.size()), w.begin());
  for (std::size_t i = t; i < bits; ++i) {
    if (i % kWordBits == 0 && i + kWordBits <= bits) {
      w[i / kWordBits] = ~Word{0};
      i += kWordBits - 1;
    } else {
      set_bit(w, i);
    }
  }
  clear_from(w, bits);
  return w;
}

bool CofiniteSet::is_canonical() const {
  if (words_.size() != words_for(as_size(threshold_))) return false;
  auto copy = words_;
  clear_from(copy, as_size(threshold_));
  if (copy != words_) return false;
  return threshold_ == 0 || !test_bit(words_, as_size(threshold_ - 1));
}

CofiniteSet unite(const CofiniteSet& a, const CofiniteSet& b) {
  const std::size_t n = as_size(std::max(a.threshold(), b.threshold()));
  auto wa = a.expand(n);
  const auto wb = b.expand(n);
  active_kernels().or_into(wa.data(), wb.data(), wa.size());
  return CofiniteSet::canonicalize(n, std::move(wa));
}

CofiniteSet intersect(const CofiniteSet& a, const CofiniteSet& b) {
  const std::size_t n = as_size(std::max(a.threshold(), b.threshold()));
  auto wa = a.expand(n);
  const auto wb = b.expand(n);
  active_kernels().and_into(wa.data(), wb.data(), wa.size());
  return CofiniteSet::canonicalize(n, std::move(wa));
}

CofiniteSet minkowski_sum(const CofiniteSet& a, const CofiniteSet& b) {
  // Every x >= T(a) + T(b) splits as T(a) + (x - T(a)), so only sums below
  // that bound need enumeration, and both summands of such a sum lie below it.
  const std::size_t n = as_size(a.threshold() + b.threshold());
  if (n == 0) return CofiniteSet{};
  const auto wa = a.expand(n);
  const auto wb = b.expand(n);
  std::vector<Word> out(words_for(n), 0);
  const auto& k = active_kernels();
  for (std::size_t wi = 0; wi < wa.size(); ++wi) {
    for (Word w = wa[wi]; w != 0; w &= w - 1) {
      const std::size_t x = wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      k.or_shifted_left(out.data(), out.size(), wb.data(), wb.size(), x);
    }
  }
  return CofiniteSet::canonicalize(n, std::move(out));
}

CofiniteSet shift(const CofiniteSet& a, Value n) {
  if (n < 0) throw InvalidArgument("shift amount must be non-negative");
  const std::size_t bits = as_size(a.threshold() + n);
  std::vector<Word> out(words_for(bits), 0);
  active_kernels().or_shifted_left(out.data(), out.size(), a.words().data(), a.words().size(), as_size(n));
  return CofiniteSet::canonicalize(bits, std::move(out));
}

bool is_subset(const CofiniteSet& sub, const CofiniteSet& super) {
  const std::size_t n = as_size(std::max(sub.threshold(), super.threshold()));
  const auto ws = sub.expand(n);
  const auto wp = super.expand(n);
  return active_kernels().popcount_andnot(ws.data(), wp.data(), ws.size()) == 0;
}

std::int64_t difference_count(const CofiniteSet& super, const CofiniteSet& sub) {
  const std::size_t n = as_size(std::max(sub.threshold(), super.threshold()));
  const auto ws = sub.expand(n);
  const auto wp = super.expand(n);
  const auto& k = active_kernels();
  if (k.popcount_andnot(ws.data(), wp.data(), ws.size()) != 0)
    throw NotSubset("difference_count: second set is not contained in the first");
  return static_cast<std::int64_t>(k.popcount_andnot(wp.data(), ws.data(), wp.size()));
}

CofiniteSet colon(const CofiniteSet& s, std::span<const Value> offsets) {
  if (offsets.empty()) throw InvalidArgument("colon needs a nonempty offset set");
  const std::size_t n = as_size(s.threshold());
  std::vector<Word> out(words_for(n), ~Word{0});
  // Expanded to a whole number of words so the tail reads as members.
  const auto src = s.expand(words_for(n) * kWordBits);
  const auto& k = active_kernels();
  for (Value f : offsets) {
    if (f < 0) throw InvalidArgument("colon offset must be non-negative");
    k.and_shifted_right(out.data(), out.size(), src.data(), src.size(), as_size(f));
  }
  return CofiniteSet::canonicalize(n, std::move(out));
}

}  // namespace sgh
