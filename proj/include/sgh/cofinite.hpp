#pragma once
// Exact subsets of the naturals that contain every integer past a threshold.
//
// A CofiniteSet stores a threshold T and a bitmap of its members in [0, T);
// everything >= T is a member implicitly. The representation is kept
// canonical (T minimal, so T-1 is not a member unless T == 0), which makes
// structural equality the same as set equality.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sgh/kernels/bitops.hpp"

namespace sgh {

using Value = std::int64_t;

class CofiniteSet {
 public:
  // The full set of naturals (threshold 0).
  CofiniteSet() = default;

  // {members} ∪ [threshold, ∞). Members at or above threshold are ignored;
  // negative members are rejected.
  static CofiniteSet from_members(Value threshold, std::span<const Value> members);
  static CofiniteSet from_members(Value threshold, std::initializer_list<Value> members) {
    return from_members(threshold, std::span<const Value>(members.begin(), members.size()));
  }

  // [from, ∞).
  static CofiniteSet tail(Value from);

  // Canonicalizes an arbitrary bitmap over [0, bits) with tail [bits, ∞).
  static CofiniteSet canonicalize(std::size_t bits, std::vector<kernels::Word> words);

  Value threshold() const { return threshold_; }
  bool contains(Value n) const;
  Value min() const;
  std::vector<Value> members_below() const;

  // Bitmap over [0, bits) with [threshold, bits) filled in; bits >= `bits` are zero.
  std::vector<kernels::Word> expand(std::size_t bits) const;

  std::span<const kernels::Word> words() const { return words_; }

  bool is_canonical() const;

  friend bool operator==(const CofiniteSet&, const CofiniteSet&) = default;

 private:
  Value threshold_ = 0;
  std::vector<kernels::Word> words_;
};

CofiniteSet unite(const CofiniteSet& a, const CofiniteSet& b);
CofiniteSet intersect(const CofiniteSet& a, const CofiniteSet& b);

// {x + y : x ∈ a, y ∈ b}; the result threshold is at most T(a) + T(b).
CofiniteSet minkowski_sum(const CofiniteSet& a, const CofiniteSet& b);

// {n + s : s ∈ a}, n >= 0.
CofiniteSet shift(const CofiniteSet& a, Value n);

// True iff sub ⊆ super.
bool is_subset(const CofiniteSet& sub, const CofiniteSet& super);

// #(super \ sub). Throws NotSubset unless sub ⊆ super.
std::int64_t difference_count(const CofiniteSet& super, const CofiniteSet& sub);

// {x ∈ ℕ : x + f ∈ s for every f in offsets}. Throws InvalidArgument when
// offsets is empty or holds a negative entry.
CofiniteSet colon(const CofiniteSet& s, std::span<const Value> offsets);

}  // namespace sgh
