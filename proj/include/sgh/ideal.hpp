#pragma once
// Monomial ideals of the semigroup ring B = k[[t^H]].
//
// An ideal is determined by its value set val(I) = {h : u^h ∈ I}, an
// H-stable cofinite subset of H. Every nonzero monomial ideal is primary to
// the maximal ideal, so all quotient lengths below are finite and are
// computed exactly as counts of value-set differences.

#include <span>
#include <vector>

#include "sgh/cofinite.hpp"
#include "sgh/semigroup.hpp"

namespace sgh {

class MonomialIdeal {
 public:
  // make_ideal: validates every exponent against H (NotInSemigroup otherwise)
  // and keeps only the H-minimal ones.
  MonomialIdeal(SemigroupPtr semigroup, std::span<const Value> exponents);
  MonomialIdeal(SemigroupPtr semigroup, std::initializer_list<Value> exponents)
      : MonomialIdeal(std::move(semigroup), std::span<const Value>(exponents.begin(), exponents.size())) {}

  // The ideal with the given value set. The set must lie inside H and be
  // H-stable; violations throw InvalidArgument.
  static MonomialIdeal from_value_set(SemigroupPtr semigroup, CofiniteSet values);

  static MonomialIdeal unit(SemigroupPtr semigroup);
  static MonomialIdeal principal(SemigroupPtr semigroup, Value a);

  const SemigroupPtr& semigroup() const { return semigroup_; }
  const std::vector<Value>& generators() const { return generators_; }
  const CofiniteSet& value_set() const { return values_; }
  Value min_value() const { return generators_.front(); }
  bool is_unit() const { return generators_.front() == 0; }

  // Same ring and same value set.
  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

 private:
  MonomialIdeal() = default;

  SemigroupPtr semigroup_;
  std::vector<Value> generators_;
  CofiniteSet values_;
};

// H-minimal elements of an H-stable value set.
std::vector<Value> minimal_generators(const NumericalSemigroup& h, const CofiniteSet& values);

// Operations below throw SemigroupMismatch when the operands live over
// different semigroups.
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, int k);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b);  // a :_B b
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

// True iff inner ⊆ outer.
bool contains_ideal(const MonomialIdeal& outer, const MonomialIdeal& inner);
bool equal(const MonomialIdeal& a, const MonomialIdeal& b);

// ℓ(outer / inner); throws NotContained unless inner ⊆ outer.
std::int64_t length_quotient(const MonomialIdeal& outer, const MonomialIdeal& inner);

// ℓ(B / I).
std::int64_t colength(const MonomialIdeal& ideal);

}  // namespace sgh
