#pragma once

#include <memory>
#include <vector>

#include "sgh/cofinite.hpp"

namespace sgh {

// A numerical semigroup H = <g1, ..., gn> ⊆ ℕ with gcd(gi) = 1.
//
// The generator list is deduplicated and reduced to the minimal generating
// system on construction, so two semigroups are equal iff their generator
// lists are. Immutable after construction.
class NumericalSemigroup {
 public:
  // Throws InvalidArgument for an empty list or a non-positive entry and
  // GcdError when the entries share a common factor.
  explicit NumericalSemigroup(std::vector<Value> generators);

  const std::vector<Value>& generators() const { return generators_; }
  Value frobenius() const { return conductor_ - 1; }
  Value conductor() const { return conductor_; }
  Value multiplicity() const { return generators_.front(); }

  bool contains(Value n) const { return members_.contains(n); }

  // H itself as a cofinite set (threshold = conductor).
  const CofiniteSet& members() const { return members_; }

  std::vector<Value> gaps() const;

  // Least member in each residue class mod m, sorted; throws NotMember
  // unless m is a positive member.
  std::vector<Value> apery_set(Value m) const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.generators_ == b.generators_;
  }

 private:
  std::vector<Value> generators_;
  Value conductor_ = 0;
  CofiniteSet members_;
};

using SemigroupPtr = std::shared_ptr<const NumericalSemigroup>;

inline SemigroupPtr make_semigroup(std::vector<Value> generators) {
  return std::make_shared<const NumericalSemigroup>(std::move(generators));
}

}  // namespace sgh
