#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "sgh/errors.hpp"
#include "sgh/semigroup.hpp"

using namespace sgh;

TEST_CASE("basic invariants of small semigroups") {
  const NumericalSemigroup h({6, 7, 8, 9, 10, 11});
  CHECK(h.frobenius() == 5);
  CHECK(h.conductor() == 6);
  CHECK(h.multiplicity() == 6);
  CHECK(h.gaps() == std::vector<Value>{1, 2, 3, 4, 5});

  const NumericalSemigroup n({1});
  CHECK(n.frobenius() == -1);
  CHECK(n.conductor() == 0);
  CHECK(n.gaps().empty());

  const NumericalSemigroup h5({5, 6, 7, 8, 9});
  CHECK(h5.frobenius() == 4);
  CHECK(h5.conductor() == 5);
  CHECK(h5.apery_set(5) == std::vector<Value>{0, 6, 7, 8, 9});

  const NumericalSemigroup h35({3, 5});
  CHECK(h35.frobenius() == 7);
  CHECK(h35.gaps() == std::vector<Value>{1, 2, 4, 7});
  CHECK(h35.contains(0));
  CHECK(h35.contains(8));
  CHECK_FALSE(h35.contains(7));
  CHECK_FALSE(h35.contains(-1));
}

TEST_CASE("generators are minimalized and order does not matter") {
  const NumericalSemigroup a({10, 3, 5, 6, 5});
  CHECK(a.generators() == std::vector<Value>{3, 5});
  CHECK(a == NumericalSemigroup({5, 3}));
}

TEST_CASE("invalid generator lists") {
  CHECK_THROWS_AS(NumericalSemigroup({4, 6}), GcdError);
  CHECK_THROWS_AS(NumericalSemigroup({}), InvalidArgument);
  CHECK_THROWS_AS(NumericalSemigroup({0, 3}), InvalidArgument);
  CHECK_THROWS_AS(NumericalSemigroup({-2, 3}), InvalidArgument);
  CHECK_THROWS_AS(NumericalSemigroup({3, 5}).apery_set(4), NotMember);
  CHECK_THROWS_AS(NumericalSemigroup({3, 5}).apery_set(0), NotMember);
}

TEST_CASE("random semigroups agree with reachability") {
  std::mt19937_64 rng(11);
  int built = 0;
  while (built < 200) {
    std::vector<Value> gens;
    const int n = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < n; ++i) gens.push_back(2 + static_cast<Value>(rng() % 18));
    std::optional<NumericalSemigroup> h;
    try {
      h.emplace(gens);
    } catch (const GcdError&) {
      continue;
    }
    ++built;
    std::vector<long long> lg(gens.begin(), gens.end());
    const int bound = 400;
    const auto ref = oracle::semigroup(lg, bound);
    for (int x = 0; x < bound; ++x) REQUIRE(h->contains(x) == static_cast<bool>(ref[x]));
    CHECK_FALSE(h->contains(h->frobenius()));
    // Closed under addition past the gaps.
    for (Value x : h->members().members_below())
      for (Value y : h->members().members_below()) CHECK(h->contains(x + y));
    // Apery set: one element per residue class, each minimal in its class.
    const Value m = h->multiplicity();
    const auto ap = h->apery_set(m);
    CHECK(static_cast<Value>(ap.size()) == m);
    for (Value w : ap) {
      CHECK(h->contains(w));
      CHECK_FALSE(h->contains(w - m));
    }
    // Selmer: the number of gaps is Σ w / m - (m - 1) / 2.
    Value sum = 0;
    for (Value w : ap) sum += w;
    CHECK(2 * static_cast<Value>(h->gaps().size()) == (2 * sum) / m - (m - 1));
  }
}
