#pragma once
// Hilbert-Samuel invariants of a monomial ideal I with a principal reduction
// Q = (u^a) in B = k[[t^H]], and of its lift to dimension d obtained by
// adjoining d-1 power-series variables X_i to both B and I.
//
// The lift has gr(I) = gr(J)[Y_1, ..., Y_{d-1}], so its Hilbert series is
// h(t) / (1-t)^d with the one-dimensional h-vector, and depth gr >= d-1, so
// the Huckaba-Marley sums over v_k = ℓ(I^{k+1}/QI^k) hold unconditionally.
// Coefficients e_2 ... e_d in an InvariantReport refer to that lift.

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "sgh/ideal.hpp"

namespace sgh {

using Length = std::int64_t;

// C(n, k) for n >= 0; zero when k < 0 or k > n.
Length binomial(Length n, Length k);

// Memoized powers I^0, I^1, ... of one ideal, built by repeated product so
// every intermediate power stays available. Safe for concurrent readers.
class PowerTower {
 public:
  explicit PowerTower(MonomialIdeal base);

  const MonomialIdeal& base() const { return base_; }
  MonomialIdeal power(int k) const;

 private:
  MonomialIdeal base_;
  mutable std::mutex mu_;
  mutable std::vector<MonomialIdeal> powers_;
};

// A pair (I, Q = (u^a)) with Q a reduction of I, lifted to dimension d.
//
// In this one-dimensional monomial setting (u^a) is a reduction of I iff
// a = min val(I): the normalized sets E_n = val(I^n) - n*a then form an
// increasing chain inside ℕ with E_{n+1} = E_n + E_1, which stabilizes,
// while a > min val(I) would give ℓ(B/Q) = a > e_0(I).
class ReductionSetup {
 public:
  // Throws NotReduction unless a = min val(I), InvalidArgument unless d >= 1.
  ReductionSetup(MonomialIdeal ideal, Value q_exponent, int dimension = 2);

  const MonomialIdeal& ideal() const { return tower_->base(); }
  const MonomialIdeal& q() const { return q_; }
  Value q_exponent() const { return a_; }
  int dimension() const { return d_; }

  MonomialIdeal power(int k) const { return tower_->power(k); }
  // Q * I^k.
  MonomialIdeal q_times_power(int k) const;

  // Same ideal and Q, different target dimension; shares the power cache.
  ReductionSetup with_dimension(int d) const;

 private:
  std::shared_ptr<const PowerTower> tower_;
  MonomialIdeal q_;
  Value a_;
  int d_;
};

bool is_reduction(const MonomialIdeal& ideal, Value a);

// Least n with I^{n+1} = Q I^n.
Length reduction_number(const ReductionSetup& s);

// Same number from the normalized chain E_n = val(I^n) - n*a, used as an
// independent cross-check of the direct loop.
Length reduction_number_by_chain(const ReductionSetup& s);

// v_k = ℓ(I^{k+1}/QI^k) for 0 <= k < r.
std::vector<Length> v_sequence(const ReductionSetup& s);

// h_0 = ℓ(B/I), h_k = ℓ(I^k/QI^{k-1}) - ℓ(I^{k+1}/QI^k) for 1 <= k <= r.
std::vector<Length> h_vector(const ReductionSetup& s);

// Numerator of the Hilbert series of gr(I) straight from its graded pieces:
// h_k = ℓ(I^k/I^{k+1}) - ℓ(I^{k-1}/I^k), for 0 <= k <= up_to.
std::vector<Length> h_vector_from_graded_pieces(const ReductionSetup& s, Length up_to);

// ℓ(B / I^{n+1}).
Length hilbert_function(const ReductionSetup& s, Length n);

// Least m >= 0 with (I^{n+1} :_B u^a) = I^n for every n in [m, r+2]. For
// n >= r the equality is automatic since I^{n+1} = u^a I^n.
Length superficial_check(const ReductionSetup& s);

struct InvariantReport {
  int d = 0;
  std::vector<Length> e;  // e_0 .. e_d of the dimension-d lift
  Length g_s = 0;
  Length r = 0;
  std::vector<Length> v;  // v_0 .. v_{r-1}
  std::vector<Length> h;  // h_0 .. h_r
  std::vector<Length> hilbert_samples;  // ℓ(B/I^{n+1}), n = 0 .. r+2
  Length m = 0;
  Length colength = 0;  // ℓ(B/I)
};

// Full report; every quantity with two routes is computed both ways and any
// disagreement raises InternalInconsistency.
InvariantReport hilbert_coefficients(const ReductionSetup& s);

}  // namespace sgh
