#include "sgh/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sgh/errors.hpp"

namespace sgh {

namespace {

// reach[x] is true iff x is a non-negative combination of gens, for x <= bound.
std::vector<char> reachable(const std::vector<Value>& gens, Value bound) {
  std::vector<char> reach(static_cast<std::size_t>(bound) + 1, 0);
  reach[0] = 1;
  for (Value x = 1; x <= bound; ++x) {
    for (Value g : gens) {
      if (g > x) break;
      if (reach[static_cast<std::size_t>(x - g)]) {
        reach[static_cast<std::size_t>(x)] = 1;
        break;
      }
    }
  }
  return reach;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<Value> generators) {
  if (generators.empty()) throw InvalidArgument("semigroup needs at least one generator");
  for (Value g : generators)
    if (g < 1) throw InvalidArgument("semigroup generators must be positive, got " + std::to_string(g));
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  Value d = 0;
  for (Value g : generators) d = std::gcd(d, g);
  if (d != 1) throw GcdError("generators have gcd " + std::to_string(d) + ", expected 1");

  // Keep g only when it is not generated by the smaller kept generators.
  for (Value g : generators) {
    if (generators_.empty() || !reachable(generators_, g)[static_cast<std::size_t>(g)]) generators_.push_back(g);
  }

  // By Schur's bound the Frobenius number is below min * max.
  const Value bound = generators_.front() * generators_.back();
  const auto reach = reachable(generators_, bound);
  Value frob = -1;
  for (Value x = bound; x >= 0; --x) {
    if (!reach[static_cast<std::size_t>(x)]) {
      frob = x;
      break;
    }
  }
  conductor_ = frob + 1;

  std::vector<Value> below;
  for (Value x = 0; x < conductor_; ++x)
    if (reach[static_cast<std::size_t>(x)]) below.push_back(x);
  members_ = CofiniteSet::from_members(conductor_, below);
}

std::vector<Value> NumericalSemigroup::gaps() const {
  std::vector<Value> out;
  for (Value x = 0; x < conductor_; ++x)
    if (!contains(x)) out.push_back(x);
  return out;
}

std::vector<Value> NumericalSemigroup::apery_set(Value m) const {
  if (m <= 0 || !contains(m)) throw NotMember(std::to_string(m) + " is not a positive member of the semigroup");
  std::vector<Value> least(static_cast<std::size_t>(m), -1);
  std::size_t found = 0;
  for (Value x = 0; found < least.size(); ++x) {
    auto& slot = least[static_cast<std::size_t>(x % m)];
    if (slot < 0 && contains(x)) {
      slot = x;
      ++found;
    }
  }
  std::sort(least.begin(), least.end());
  return least;
}

}  // namespace sgh
