#include <doctest.h>

#include <random>

#include "sgh/closure.hpp"
#include "sgh/errors.hpp"

using namespace sgh;

TEST_CASE("Ratliff-Rush closure of J = (6, 8)") {
  const auto h = make_semigroup({6, 7, 8, 9, 10, 11});
  const ReductionSetup s(MonomialIdeal(h, {6, 8}), 6, 2);
  const auto rr = ratliff_rush(s);
  CHECK_FALSE(rr.is_closed);
  CHECK(rr.closure.value_set() == CofiniteSet::from_members(12, {6, 8, 10}));
  CHECK(rr.stabilized_at == 1);

  const ReductionSetup k(rr.closure, 6, 2);
  const auto rk = ratliff_rush(k);
  CHECK(rk.is_closed);
  CHECK(rk.closure == rr.closure);
  const auto dk = depth_report(k);
  CHECK(dk.gr_cm_dim1);
  CHECK(dk.vv_failures.empty());
  CHECK(dk.extended_depth_at_d == 2);

  CHECK_FALSE(valabrega_valla(s, 1));
  CHECK(valabrega_valla(s, 2));
  CHECK_THROWS_AS(valabrega_valla(s, 0), InvalidArgument);
  const auto ds = depth_report(s);
  CHECK(ds.vv_failures == std::vector<Length>{1});
  CHECK_FALSE(ds.gr_cm_dim1);
  CHECK(ds.extended_depth_at_d == 1);
  CHECK(depth_report(s.with_dimension(4)).extended_depth_at_d == 3);
}

TEST_CASE("principal ideals are closed with CM associated graded ring") {
  const auto h = make_semigroup({3, 5});
  const ReductionSetup s(MonomialIdeal::principal(h, 3), 3, 2);
  const auto rr = ratliff_rush(s);
  CHECK(rr.is_closed);
  CHECK(rr.closure == s.ideal());
  CHECK(depth_report(s).gr_cm_dim1);
}

TEST_CASE("closure and depth properties on random ideals") {
  std::mt19937_64 rng(2718);
  const std::vector<std::vector<Value>> semigroups = {{4, 5, 6, 7}, {5, 6, 7, 8, 9}, {3, 7, 8}, {6, 7, 8, 9, 10, 11}};
  for (int trial = 0; trial < 200; ++trial) {
    const auto h = make_semigroup(semigroups[trial % semigroups.size()]);
    std::vector<Value> gens;
    while (gens.size() < 1 + rng() % 4) {
      const Value x = 3 + static_cast<Value>(rng() % 20);
      if (h->contains(x)) gens.push_back(x);
    }
    const MonomialIdeal ideal(h, gens);
    const ReductionSetup s(ideal, ideal.min_value(), 2);
    const auto rr = ratliff_rush(s);
    const auto dep = depth_report(s);
    const auto inv = hilbert_coefficients(s);
    CAPTURE(trial);

    CHECK(contains_ideal(rr.closure, ideal));
    CHECK(rr.is_closed == (rr.closure == ideal));
    CHECK(rr.stabilized_at <= inv.r);
    // The closure is idempotent and keeps the same reduction.
    CHECK(rr.closure.min_value() == ideal.min_value());
    const ReductionSetup cs(rr.closure, ideal.min_value(), 2);
    CHECK(ratliff_rush(cs).is_closed);
    // The closure multiplies I^r into I^{r+1}.
    CHECK(product(rr.closure, s.power(static_cast<int>(inv.r))) == s.power(static_cast<int>(inv.r) + 1));
    // gr CM forces every power, hence I itself, to be closed.
    if (dep.gr_cm_dim1) CHECK(rr.is_closed);
    // Superficial index 0 exactly when gr is CM.
    CHECK((inv.m == 0) == dep.gr_cm_dim1);
    if (inv.r <= 1) CHECK(dep.gr_cm_dim1);
    CHECK(dep.extended_depth_at_d == 1 + (dep.gr_cm_dim1 ? 1 : 0));
  }
}
