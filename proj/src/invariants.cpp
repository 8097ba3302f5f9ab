#include "sgh/invariants.hpp"

#include <numeric>
#include <string>

#include "sgh/errors.hpp"

namespace sgh {

Length binomial(Length n, Length k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Length out = 1;
  for (Length i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

PowerTower::PowerTower(MonomialIdeal base) : base_(std::move(base)) {
  powers_.push_back(MonomialIdeal::unit(base_.semigroup()));
  powers_.push_back(base_);
}

MonomialIdeal PowerTower::power(int k) const {
  if (k < 0) throw InvalidArgument("power exponent must be non-negative");
  std::lock_guard lock(mu_);
  while (powers_.size() <= static_cast<std::size_t>(k)) powers_.push_back(product(powers_.back(), base_));
  return powers_[static_cast<std::size_t>(k)];
}

bool is_reduction(const MonomialIdeal& ideal, Value a) {
  return ideal.value_set().contains(a) && ideal.value_set().min() == a;
}

ReductionSetup::ReductionSetup(MonomialIdeal ideal, Value q_exponent, int dimension)
    : q_(MonomialIdeal::principal(ideal.semigroup(), q_exponent)), a_(q_exponent), d_(dimension) {
  if (dimension < 1) throw InvalidArgument("dimension must be at least 1");
  if (!is_reduction(ideal, q_exponent))
    throw NotReduction("(u^" + std::to_string(q_exponent) + ") is not a reduction: min val(I) = " +
                       std::to_string(ideal.value_set().min()));
  tower_ = std::make_shared<const PowerTower>(std::move(ideal));
}

MonomialIdeal ReductionSetup::q_times_power(int k) const { return product(q_, power(k)); }

ReductionSetup ReductionSetup::with_dimension(int d) const {
  if (d < 1) throw InvalidArgument("dimension must be at least 1");
  ReductionSetup out = *this;
  out.d_ = d;
  return out;
}

namespace {

// Upper bound on the reduction number: past E_0 = H -> E_1, each strict step
// of the chain E_n adds at least one element of ℕ \ E_1, and
// #(ℕ \ E_1) = #([a,∞) \ val(I)).
Length reduction_bound(const ReductionSetup& s) {
  return 1 + difference_count(CofiniteSet::tail(s.q_exponent()), s.ideal().value_set());
}

}  // namespace

Length reduction_number(const ReductionSetup& s) {
  const Length bound = reduction_bound(s);
  for (Length n = 0; n <= bound; ++n) {
    const int k = static_cast<int>(n);
    if (s.power(k + 1) == s.q_times_power(k)) return n;
  }
  throw InternalInconsistency("reduction number exceeds its certified bound " + std::to_string(bound));
}

Length reduction_number_by_chain(const ReductionSetup& s) {
  // E_n is stored shifted back by n*a: val(I^n) = n*a + E_n. Comparing
  // E_{n+1} with E_n is comparing val(I^{n+1}) with shift(val(I^n), a).
  const Value a = s.q_exponent();
  CofiniteSet e1_shifted = s.ideal().value_set();  // a + E_1
  CofiniteSet prev = s.ideal().semigroup()->members();  // E_0 = H
  CofiniteSet cur_shift = e1_shifted;                    // val(I^1) = a + E_1
  const Length bound = reduction_bound(s);
  for (Length n = 0; n <= bound; ++n) {
    // cur_shift = val(I^{n+1}); prev = val(I^n).
    if (cur_shift == shift(prev, a)) return n;
    prev = cur_shift;
    cur_shift = minkowski_sum(cur_shift, e1_shifted);
  }
  throw InternalInconsistency("normalized chain failed to stabilize within its bound");
}

std::vector<Length> v_sequence(const ReductionSetup& s) {
  const Length r = reduction_number(s);
  std::vector<Length> v;
  for (int k = 0; k < r; ++k) v.push_back(length_quotient(s.power(k + 1), s.q_times_power(k)));
  return v;
}

std::vector<Length> h_vector(const ReductionSetup& s) {
  const Length r = reduction_number(s);
  std::vector<Length> h{colength(s.ideal())};
  // ℓ(I^{k+1}/QI^k), taken as 0 once k >= r.
  auto quotient = [&](int k) -> Length {
    if (k >= r) return 0;
    return length_quotient(s.power(k + 1), s.q_times_power(k));
  };
  for (int k = 1; k <= r; ++k) h.push_back(quotient(k - 1) - quotient(k));
  return h;
}

std::vector<Length> h_vector_from_graded_pieces(const ReductionSetup& s, Length up_to) {
  std::vector<Length> h;
  Length previous = 0;  // ℓ(I^{-1}/I^0) := 0
  for (int k = 0; k <= up_to; ++k) {
    const Length piece = length_quotient(s.power(k), s.power(k + 1));
    h.push_back(piece - previous);
    previous = piece;
  }
  return h;
}

Length hilbert_function(const ReductionSetup& s, Length n) {
  if (n < 0) throw InvalidArgument("hilbert_function needs n >= 0");
  return colength(s.power(static_cast<int>(n) + 1));
}

Length superficial_check(const ReductionSetup& s) {
  const Length r = reduction_number(s);
  Length m = 0;
  for (int n = 0; n <= r + 2; ++n)
    if (!(colon(s.power(n + 1), s.q()) == s.power(n))) m = n + 1;
  return m;
}

InvariantReport hilbert_coefficients(const ReductionSetup& s) {
  InvariantReport rep;
  rep.d = s.dimension();
  rep.r = reduction_number(s);
  rep.v = v_sequence(s);
  rep.h = h_vector(s);
  rep.colength = colength(s.ideal());
  rep.m = superficial_check(s);
  const Length d = rep.d;
  const Length a = s.q_exponent();

  auto fail = [](const std::string& what) { throw InternalInconsistency(what); };

  if (reduction_number_by_chain(s) != rep.r) fail("reduction number: direct loop and normalized chain disagree");
  for (Length vk : rep.v)
    if (vk <= 0) fail("v-sequence has a non-positive entry before the reduction number");

  // Graded pieces past r must give h_k = 0.
  const auto h_def = h_vector_from_graded_pieces(s, rep.r + 2);
  for (std::size_t k = 0; k < h_def.size(); ++k) {
    const Length expected = k < rep.h.size() ? rep.h[k] : 0;
    if (h_def[k] != expected) fail("h-vector: graded pieces and reduction lengths disagree at k=" + std::to_string(k));
  }

  // e_0 and e_1 from the h-vector: h(1) and h'(1).
  Length e0_h = 0, e1_h = 0;
  for (std::size_t k = 0; k < rep.h.size(); ++k) {
    e0_h += rep.h[k];
    e1_h += static_cast<Length>(k) * rep.h[k];
  }
  const Length e0 = colength(s.q());
  if (e0 != a) fail("colength of (u^a) differs from a");
  if (e0_h != e0) fail("e_0: h(1) differs from the multiplicity a");
  const Length e1_v = std::accumulate(rep.v.begin(), rep.v.end(), Length{0});
  if (e1_v != e1_h) fail("e_1: sum of v_k and h'(1) disagree");

  rep.e = {e0};
  if (d >= 1) rep.e.push_back(e1_v);
  for (Length i = 2; i <= d; ++i) {
    Length via_v = 0, via_h = 0;
    for (std::size_t k = 0; k < rep.v.size(); ++k) via_v += binomial(static_cast<Length>(k), i - 1) * rep.v[k];
    for (std::size_t k = 0; k < rep.h.size(); ++k) via_h += binomial(static_cast<Length>(k), i) * rep.h[k];
    if (via_v != via_h) fail("e_" + std::to_string(i) + ": v-sequence and h-vector routes disagree");
    rep.e.push_back(via_v);
  }

  rep.g_s = rep.colength - e0 + rep.e[1];
  const Length tail_sum = rep.v.empty() ? 0 : e1_v - rep.v.front();
  if (rep.g_s != tail_sum) fail("sectional genus differs from sum of v_k over k >= 1");

  for (Length n = 0; n <= rep.r + 2; ++n) {
    rep.hilbert_samples.push_back(hilbert_function(s, n));
    if (n >= rep.r && rep.hilbert_samples.back() != e0 * (n + 1) - rep.e[1])
      fail("Hilbert function at n=" + std::to_string(n) + " differs from e0(n+1) - e1");
  }
  return rep;
}

}  // namespace sgh
