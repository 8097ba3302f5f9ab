#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "sgh/closure.hpp"
#include "sgh/errors.hpp"
#include "sgh/invariants.hpp"

using namespace sgh;

namespace {

std::vector<long long> as_ll(const std::vector<Value>& v) { return {v.begin(), v.end()}; }

void compare_with_oracle(const std::vector<Value>& hg, const std::vector<Value>& ig, int d) {
  const auto h = make_semigroup(hg);
  const MonomialIdeal ideal(h, ig);
  const ReductionSetup s(ideal, ideal.min_value(), d);
  const auto rep = hilbert_coefficients(s);
  const auto ref = oracle::analyze(as_ll(hg), as_ll(ig), ideal.min_value(), d,
                                   std::max<int>(12, static_cast<int>(rep.r) + d + 4));
  CAPTURE(d);
  CHECK(rep.r == ref.r);
  CHECK(rep.v == std::vector<Length>(ref.v.begin(), ref.v.end()));
  CHECK(rep.e == std::vector<Length>(ref.e.begin(), ref.e.end()));
  CHECK(rep.g_s == ref.g_s);
  CHECK(rep.colength == ref.colength);
  for (std::size_t n = 0; n < rep.hilbert_samples.size(); ++n) CHECK(rep.hilbert_samples[n] == ref.hilbert[n]);
}

}  // namespace

TEST_CASE("J = (6, 8) over <6..11> golden values") {
  const auto h = make_semigroup({6, 7, 8, 9, 10, 11});
  const ReductionSetup s(MonomialIdeal(h, {6, 8, 13}), 6, 2);
  CHECK(reduction_number(s) == 2);
  CHECK(reduction_number_by_chain(s) == 2);
  CHECK(v_sequence(s) == std::vector<Length>{1, 1});
  CHECK(h_vector(s) == std::vector<Length>{5, 0, 1});
  CHECK(h_vector_from_graded_pieces(s, 4) == std::vector<Length>{5, 0, 1, 0, 0});
  CHECK(hilbert_function(s, 0) == 5);
  CHECK(hilbert_function(s, 1) == 10);
  CHECK(hilbert_function(s, 2) == 16);
  const auto rep = hilbert_coefficients(s);
  CHECK(rep.e == std::vector<Length>{6, 2, 1});
  CHECK(rep.g_s == 1);
  CHECK(rep.hilbert_samples == std::vector<Length>{5, 10, 16, 22, 28});
  CHECK(rep.m == 2);

  const auto ref = oracle::analyze({6, 7, 8, 9, 10, 11}, {6, 8, 13}, 6, 2);
  CHECK(ref.e == std::vector<long long>{6, 2, 1});
  CHECK(ref.r == 2);

  for (int d = 1; d <= 5; ++d) compare_with_oracle({6, 7, 8, 9, 10, 11}, {6, 8}, d);
  const auto d5 = hilbert_coefficients(s.with_dimension(5));
  CHECK(d5.e == std::vector<Length>{6, 2, 1, 0, 0, 0});
}

TEST_CASE("second-border golden values") {
  {
    const auto h = make_semigroup({5, 6, 7, 8, 9});
    const ReductionSetup s(MonomialIdeal(h, {5, 6, 8}), 5, 3);
    const auto rep = hilbert_coefficients(s);
    CHECK(rep.v == std::vector<Length>{2, 2});
    CHECK(rep.h == std::vector<Length>{3, 0, 2});
    CHECK(rep.e == std::vector<Length>{5, 4, 2, 0});
    CHECK(rep.g_s == 2);
    compare_with_oracle({5, 6, 7, 8, 9}, {5, 6, 8}, 3);
  }
  {
    const auto h = make_semigroup({6, 7, 8, 9, 10, 11});
    const ReductionSetup s(MonomialIdeal(h, {6, 7, 10}), 6, 3);
    const auto rep = hilbert_coefficients(s);
    CHECK(rep.r == 3);
    CHECK(rep.v == std::vector<Length>{2, 2, 1});
    CHECK(rep.g_s == 3);
    CHECK(rep.e[2] == 4);
    compare_with_oracle({6, 7, 8, 9, 10, 11}, {6, 7, 10}, 3);
  }
}

TEST_CASE("principal ideals are their own reduction") {
  const auto h = make_semigroup({3, 5});
  const ReductionSetup s(MonomialIdeal::principal(h, 5), 5, 2);
  const auto rep = hilbert_coefficients(s);
  CHECK(rep.r == 0);
  CHECK(rep.v.empty());
  CHECK(rep.h == std::vector<Length>{5});
  CHECK(rep.e == std::vector<Length>{5, 0, 0});
  CHECK(rep.g_s == 0);
  CHECK(rep.m == 0);
}

TEST_CASE("reduction setup preconditions") {
  const auto h = make_semigroup({6, 7, 8, 9, 10, 11});
  const MonomialIdeal j(h, {6, 8});
  CHECK(is_reduction(j, 6));
  CHECK_FALSE(is_reduction(j, 8));
  CHECK_FALSE(is_reduction(j, 7));
  CHECK_THROWS_AS(ReductionSetup(j, 8, 2), NotReduction);
  CHECK_THROWS_AS(ReductionSetup(j, 6, 0), InvalidArgument);
  CHECK_THROWS_AS(hilbert_function(ReductionSetup(j, 6, 2), -1), InvalidArgument);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(2, 5) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(0, 0) == 1);
}

TEST_CASE("random ideals match the brute-force oracle") {
  std::mt19937_64 rng(31337);
  const std::vector<std::vector<Value>> semigroups = {
      {3, 5}, {4, 5, 6, 7}, {5, 6, 7, 8, 9}, {4, 6, 9}, {3, 7, 8}, {5, 7, 9}};
  for (int trial = 0; trial < 36; ++trial) {
    const auto& hg = semigroups[trial % semigroups.size()];
    const auto h = make_semigroup(hg);
    std::vector<Value> gens;
    while (gens.size() < 1 + rng() % 3) {
      const Value x = 1 + static_cast<Value>(rng() % 16);
      if (h->contains(x)) gens.push_back(x);
    }
    CAPTURE(trial);
    compare_with_oracle(hg, gens, 1 + static_cast<int>(rng() % 4));
  }
}

TEST_CASE("Northcott and the sectional genus in dimension one") {
  std::mt19937_64 rng(8);
  const auto h = make_semigroup({4, 5, 6, 7});
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Value> gens;
    while (gens.size() < 1 + rng() % 4) {
      const Value x = 4 + static_cast<Value>(rng() % 14);
      if (h->contains(x)) gens.push_back(x);
    }
    const MonomialIdeal ideal(h, gens);
    const ReductionSetup s(ideal, ideal.min_value(), 1);
    const auto rep = hilbert_coefficients(s);
    CHECK(rep.e.size() == 2);
    CHECK(rep.e[1] >= rep.e[0] - rep.colength);
    CHECK(rep.g_s >= 0);
    CHECK(reduction_number_by_chain(s) == rep.r);
    // I^2 = QI exactly when e1 = e0 - ℓ(B/I).
    CHECK((rep.r <= 1) == (rep.e[1] == rep.e[0] - rep.colength));
  }
}
