#include "sgh/ideal.hpp"

#include <algorithm>
#include <string>

#include "sgh/errors.hpp"

namespace sgh {

namespace {

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.semigroup() == b.semigroup()) return;
  if (*a.semigroup() == *b.semigroup()) return;
  throw SemigroupMismatch("ideals live over different semigroups");
}

CofiniteSet value_set_of(const NumericalSemigroup& h, std::span<const Value> gens) {
  CofiniteSet acc = shift(h.members(), gens.front());
  for (std::size_t i = 1; i < gens.size(); ++i) acc = unite(acc, shift(h.members(), gens[i]));
  return acc;
}

// Sorted, deduplicated, with every x lying in y + H for some other y dropped.
std::vector<Value> minimalize(const NumericalSemigroup& h, std::vector<Value> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Value> kept;
  for (Value x : xs) {
    const bool absorbed = std::any_of(kept.begin(), kept.end(), [&](Value y) { return h.contains(x - y); });
    if (!absorbed) kept.push_back(x);
  }
  return kept;
}

}  // namespace

std::vector<Value> minimal_generators(const NumericalSemigroup& h, const CofiniteSet& values) {
  // x = y + s with s ∈ H \ {0} factors through some generator g of H, so it is
  // enough to test x - g for the generators; beyond T + multiplicity nothing
  // is minimal.
  std::vector<Value> out;
  const Value limit = values.threshold() + h.multiplicity();
  for (Value x = values.min(); x < limit; ++x) {
    if (!values.contains(x)) continue;
    const bool reducible = std::any_of(h.generators().begin(), h.generators().end(),
                                       [&](Value g) { return x - g >= 0 && values.contains(x - g); });
    if (!reducible) out.push_back(x);
  }
  return out;
}

MonomialIdeal::MonomialIdeal(SemigroupPtr semigroup, std::span<const Value> exponents)
    : semigroup_(std::move(semigroup)) {
  if (!semigroup_) throw InvalidArgument("ideal needs a semigroup");
  if (exponents.empty()) throw InvalidArgument("ideal needs at least one generator");
  for (Value e : exponents)
    if (!semigroup_->contains(e)) throw NotInSemigroup("u^" + std::to_string(e) + " is not in the semigroup ring");
  generators_ = minimalize(*semigroup_, {exponents.begin(), exponents.end()});
  values_ = value_set_of(*semigroup_, generators_);
}

MonomialIdeal MonomialIdeal::from_value_set(SemigroupPtr semigroup, CofiniteSet values) {
  if (!semigroup) throw InvalidArgument("ideal needs a semigroup");
  if (!is_subset(values, semigroup->members())) throw InvalidArgument("value set is not contained in H");
  for (Value g : semigroup->generators())
    if (!is_subset(shift(values, g), values)) throw InvalidArgument("value set is not H-stable");
  MonomialIdeal out;
  out.generators_ = minimal_generators(*semigroup, values);
  out.values_ = std::move(values);
  out.semigroup_ = std::move(semigroup);
  return out;
}

MonomialIdeal MonomialIdeal::unit(SemigroupPtr semigroup) { return MonomialIdeal(std::move(semigroup), {Value{0}}); }

MonomialIdeal MonomialIdeal::principal(SemigroupPtr semigroup, Value a) { return MonomialIdeal(std::move(semigroup), {a}); }

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
  return *a.semigroup_ == *b.semigroup_ && a.values_ == b.values_;
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Value> sums;
  sums.reserve(a.generators().size() * b.generators().size());
  for (Value x : a.generators())
    for (Value y : b.generators()) sums.push_back(x + y);
  MonomialIdeal out(a.semigroup(), sums);
  // Generator route and value-set route must give the same ideal.
  if (!(out.value_set() == minkowski_sum(a.value_set(), b.value_set())))
    throw InternalInconsistency("product: generator sums and Minkowski sum of value sets disagree");
  return out;
}

MonomialIdeal power(const MonomialIdeal& a, int k) {
  if (k < 0) throw InvalidArgument("power exponent must be non-negative");
  MonomialIdeal acc = MonomialIdeal::unit(a.semigroup());
  for (int i = 0; i < k; ++i) acc = product(acc, a);
  return acc;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Value> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.semigroup(), gens);
}

MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  // x + val(b) ⊆ val(a) iff x + g ∈ val(a) for each generator g of b, since
  // val(a) is H-stable. Only x ∈ H give elements of B.
  CofiniteSet values = intersect(colon(a.value_set(), b.generators()), a.semigroup()->members());
  return MonomialIdeal::from_value_set(a.semigroup(), std::move(values));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  return MonomialIdeal::from_value_set(a.semigroup(), intersect(a.value_set(), b.value_set()));
}

bool contains_ideal(const MonomialIdeal& outer, const MonomialIdeal& inner) {
  require_same_ring(outer, inner);
  return is_subset(inner.value_set(), outer.value_set());
}

bool equal(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  return a.value_set() == b.value_set();
}

std::int64_t length_quotient(const MonomialIdeal& outer, const MonomialIdeal& inner) {
  require_same_ring(outer, inner);
  if (!is_subset(inner.value_set(), outer.value_set()))
    throw NotContained("length_quotient: second ideal is not contained in the first");
  return difference_count(outer.value_set(), inner.value_set());
}

std::int64_t colength(const MonomialIdeal& ideal) {
  return difference_count(ideal.semigroup()->members(), ideal.value_set());
}

}  // namespace sgh
