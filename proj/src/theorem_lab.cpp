#include "sgh/theorem_lab.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "sgh/errors.hpp"

namespace sgh {

namespace {

void require_dim2(const ReductionSetup& s) {
  if (s.dimension() < 2) throw PreconditionError("e_2 statements need dimension d >= 2");
}

// ℓ(I^{k+1}/QI^k), straight from the value sets.
Length quotient_length(const ReductionSetup& s, Length k) {
  const int n = static_cast<int>(k);
  return length_quotient(s.power(n + 1), s.q_times_power(n));
}

// I^{k+1} = QI^k.
bool reduces_at(const ReductionSetup& s, Length k) {
  const int n = static_cast<int>(k);
  return s.power(n + 1) == s.q_times_power(n);
}

bool implies(bool p, bool q) { return !p || q; }

}  // namespace

std::vector<std::string> BoundsReport::failures() const {
  std::vector<std::string> out;
  auto add = [&](bool ok, const char* name) {
    if (!ok) out.emplace_back(name);
  };
  add(northcott, "northcott");
  add(narita, "narita");
  add(kirby_mehran_e1, "kirby_mehran_e1");
  add(kirby_mehran_e2, "kirby_mehran_e2");
  add(prop_3_2, "prop_3_2");
  add(huneke_ooishi_equiv, "huneke_ooishi_equiv");
  add(cor_3_3_equality, "cor_3_3_equality");
  add(cor_3_5_equiv, "cor_3_5_equiv");
  add(cor_3_5_consequences, "cor_3_5_consequences");
  add(cor_3_6, "cor_3_6");
  add(cor_4_4, "cor_4_4");
  return out;
}

std::vector<std::string> BorderClassification::failures() const {
  std::vector<std::string> out;
  if (!thm34.equivalent()) out.emplace_back("thm34_equivalence");
  if (!thm41.equivalent()) out.emplace_back("thm41_equivalence");
  if (!gap_cor42) out.emplace_back("cor42_gap");
  if (!cor42) out.emplace_back("cor42_dichotomy");
  if (!cm_criterion) out.emplace_back("cm_criterion");
  if (!higher_e) out.emplace_back("higher_e");
  return out;
}

const char* to_string(BorderCase c) {
  switch (c) {
    case BorderCase::ZeroGenus: return "ZeroGenus";
    case BorderCase::FirstBorder: return "FirstBorder";
    case BorderCase::SecondBorder: return "SecondBorder";
    case BorderCase::Interior: return "Interior";
  }
  return "?";
}

std::optional<BorderCase> border_case_from_string(std::string_view s) {
  for (BorderCase c : {BorderCase::ZeroGenus, BorderCase::FirstBorder, BorderCase::SecondBorder, BorderCase::Interior})
    if (s == to_string(c)) return c;
  return std::nullopt;
}

BoundsReport bounds_report(const ReductionSetup& s) {
  require_dim2(s);
  return bounds_report(s, hilbert_coefficients(s), depth_report(s));
}

BoundsReport bounds_report(const ReductionSetup& s, const InvariantReport& inv, const DepthReport& depth) {
  require_dim2(s);
  const Length e0 = inv.e[0], e1 = inv.e[1], e2 = inv.e[2];
  const Length colen = inv.colength;
  const Length g = inv.g_s;
  const Length d = s.dimension();
  const Length i_over_q = length_quotient(s.ideal(), s.q());
  const bool squares_reduce = reduces_at(s, 1);

  auto higher_match = [&](Length top) {
    for (Length i = 3; i <= d; ++i)
      if (inv.e[static_cast<std::size_t>(i)] != binomial(top, i)) return false;
    return true;
  };
  auto higher_zero = [&] {
    for (Length i = 3; i <= d; ++i)
      if (inv.e[static_cast<std::size_t>(i)] != 0) return false;
    return true;
  };

  BoundsReport b;
  b.northcott = e1 >= e0 - colen && e0 - colen >= 0;
  b.narita = e2 >= 0;
  b.kirby_mehran_e1 = e1 <= binomial(e0, 2);
  b.kirby_mehran_e2 = e2 <= binomial(e1 + 1, 2);
  b.prop_3_2 = e2 <= binomial(g + 1, 2);
  b.huneke_ooishi_equiv = (e1 == e0 - colen) == squares_reduce;
  b.cor_3_3_equality = implies(e2 == binomial(e1 + 1, 2), s.ideal() == s.q());
  const bool c35 = e2 == binomial(e1, 2);
  b.cor_3_5_equiv = c35 == (i_over_q <= 1);
  b.cor_3_5_consequences = implies(c35, higher_match(e1) && depth.gr_cm_dim1 == squares_reduce &&
                                            depth.extended_depth_at_d >= d - 1);
  b.cor_3_6 = implies(g == 1 && e2 != 0,
                      e2 == 1 && higher_zero() && quotient_length(s, 1) == 1 && reduces_at(s, 2));
  b.cor_4_4 = implies(g == 2 && e2 == 2, higher_zero() && quotient_length(s, 1) == 2 && reduces_at(s, 2));
  return b;
}

BorderClassification classify_border(const ReductionSetup& s) {
  require_dim2(s);
  return classify_border(s, hilbert_coefficients(s), depth_report(s));
}

BorderClassification classify_border(const ReductionSetup& s, const InvariantReport& inv, const DepthReport& depth) {
  require_dim2(s);
  BorderClassification c;
  const Length g = inv.g_s;
  const Length e2 = inv.e[2];
  const Length d = s.dimension();
  c.g = g;
  c.e2 = e2;

  const Length first = binomial(g + 1, 2);
  const Length second = binomial(g, 2) + 1;
  const Length l2 = quotient_length(s, 1);

  c.thm34.c1 = e2 == first;
  c.thm34.c2 = l2 <= 1;
  {
    bool ok = reduces_at(s, g + 1);
    for (Length k = 1; ok && k <= g; ++k) ok = quotient_length(s, k) == 1;
    c.thm34.c3 = ok;
  }

  c.thm41.applicable = g >= 2;
  if (c.thm41.applicable) {
    c.thm41.c1 = e2 == second;
    c.thm41.c2 = second <= e2 && e2 < first;
    bool ok = l2 == 2 && reduces_at(s, g);
    for (Length k = 2; ok && k <= g - 1; ++k) ok = quotient_length(s, k) == 1;
    c.thm41.c3 = ok;
  }

  if (g == 0) {
    c.border = BorderCase::ZeroGenus;
  } else if (c.thm34.c1) {
    c.border = BorderCase::FirstBorder;
  } else if (g >= 2 && c.thm41.c1) {
    c.border = BorderCase::SecondBorder;
  } else {
    c.border = BorderCase::Interior;
  }

  c.gap_cor42 = !(second < e2 && e2 < first);
  c.cor42 = implies(e2 >= second, (e2 == second || e2 == first) && depth.extended_depth_at_d >= d - 1);

  const bool on_first = c.thm34.c1;
  const bool on_second = c.thm41.applicable && c.thm41.c1;
  if (on_first) {
    c.cm_criterion = depth.gr_cm_dim1 == (valabrega_valla(s, 1) && reduces_at(s, 2));
  } else if (on_second) {
    c.cm_criterion = depth.gr_cm_dim1 == (valabrega_valla(s, 1) && valabrega_valla(s, 2) && reduces_at(s, 3));
  } else {
    c.cm_criterion = true;
  }

  c.higher_e = true;
  if (on_first || on_second) {
    const Length top = on_first ? g + 1 : g;
    for (Length i = 3; i <= d; ++i)
      if (inv.e[static_cast<std::size_t>(i)] != binomial(top, i)) c.higher_e = false;
  }
  return c;
}

Lemma31Result lemma_3_1_max(Length ell, std::span<const Length> v) {
  if (ell < 0) throw InvalidSequence("ℓ must be non-negative");
  Length total = 0, weighted = 0;
  bool seen_zero = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) throw InvalidSequence("sequence entries must be non-negative");
    if (seen_zero && v[i] != 0) throw InvalidSequence("nonzero entry after a zero");
    seen_zero = seen_zero || v[i] == 0;
    total += v[i];
    weighted += static_cast<Length>(i + 1) * v[i];
  }
  if (total > ell) throw InvalidSequence("sequence sum exceeds ℓ");
  const Length bound = binomial(ell + 1, 2);
  return {bound, weighted, weighted == bound};
}

std::vector<Claim> FamilyCase::discrepancies() const {
  std::vector<Claim> out;
  for (const auto& c : claims)
    if (!c.matches()) out.push_back(c);
  return out;
}

namespace {

std::vector<Value> interval(Value lo, Value hi) {
  std::vector<Value> out;
  for (Value x = lo; x <= hi; ++x) out.push_back(x);
  return out;
}

// 1 when ℓ(I^{k+1}/QI^k) = 1 for every k in [lo, hi].
Length all_ones(const ReductionSetup& s, Length lo, Length hi) {
  for (Length k = lo; k <= hi; ++k)
    if (quotient_length(s, k) != 1) return 0;
  return 1;
}

}  // namespace

FamilyCase example_family_52(Length e, int d) {
  if (e < 3) throw PreconditionError("example 5.2 needs e >= 3");
  if (d < 2) throw PreconditionError("example families need d >= 2");
  auto h = make_semigroup(interval(2 * e, 4 * e - 1));
  std::vector<Value> stated{2 * e, 2 * e + 2, 4 * e + 1};
  MonomialIdeal j(h, stated);
  ReductionSetup s(j, 2 * e, d);
  const auto inv = hilbert_coefficients(s);
  const auto depth = depth_report(s);

  FamilyCase fc{"5.2", e, stated, s, {}, {}};
  auto& cl = fc.claims;
  cl.push_back({"g_s(J) = e - 2", e - 2, inv.g_s});
  cl.push_back({"l(J^{k+1}/qJ^k) = 1 for 1 <= k <= e-2", 1, all_ones(s, 1, e - 2)});
  cl.push_back({"J^e = qJ^{e-1}", 1, reduces_at(s, e - 1) ? 1 : 0});
  cl.push_back({"depth gr(J) = 0", 0, depth.gr_cm_dim1 ? 1 : 0});
  cl.push_back({"g_s(I) = e - 2", e - 2, inv.g_s});
  cl.push_back({"e_0(I) = e", e, inv.e[0]});
  cl.push_back({"e_1(I) = e", e, inv.e[1]});
  for (Length i = 2; i <= d; ++i)
    cl.push_back({"e_" + std::to_string(i) + "(I) = C(e-1," + std::to_string(i) + ")", binomial(e - 1, i),
                  inv.e[static_cast<std::size_t>(i)]});
  cl.push_back({"depth gr(I) = d - 1", d - 1, depth.extended_depth_at_d});

  if (j.generators().size() != stated.size())
    fc.notes.push_back("stated generator u^" + std::to_string(4 * e + 1) +
                       " lies in u^" + std::to_string(2 * e) + "B; the ideal is minimally generated by " +
                       std::to_string(j.generators().size()) + " monomials");
  return fc;
}

FamilyCase example_family_53(Length e, int d) {
  if (e < 5) throw PreconditionError("example 5.3 needs e >= 5");
  if (d < 2) throw PreconditionError("example families need d >= 2");
  auto h = make_semigroup(interval(e, 2 * e - 1));
  std::vector<Value> stated{e, e + 1, 2 * e - 2};
  MonomialIdeal i_ideal(h, stated);
  ReductionSetup s(i_ideal, e, d);
  const auto inv = hilbert_coefficients(s);
  const auto depth = depth_report(s);

  FamilyCase fc{"5.3", e, stated, s, {}, {}};
  auto& cl = fc.claims;
  cl.push_back({"g_s(J) = e - 3", e - 3, inv.g_s});
  cl.push_back({"l(J^2/qJ) = 2", 2, quotient_length(s, 1)});
  cl.push_back({"l(J^{k+1}/qJ^k) = 1 for 2 <= k <= e-4", 1, all_ones(s, 2, e - 4)});
  cl.push_back({"J^{e-2} = qJ^{e-3}", 1, reduces_at(s, e - 3) ? 1 : 0});
  cl.push_back({"depth gr(J) = 0", 0, depth.gr_cm_dim1 ? 1 : 0});
  cl.push_back({"g_s(I) = e - 3", e - 3, inv.g_s});
  cl.push_back({"e_0(I) = e", e, inv.e[0]});
  cl.push_back({"e_1(I) = e - 1", e - 1, inv.e[1]});
  for (Length i = 2; i <= d; ++i)
    cl.push_back({"e_" + std::to_string(i) + "(I) = C(e-3," + std::to_string(i) + ")", binomial(e - 3, i),
                  inv.e[static_cast<std::size_t>(i)]});
  cl.push_back({"depth gr(I) = d - 1", d - 1, depth.extended_depth_at_d});
  return fc;
}

std::vector<std::vector<Value>> enumerate_generator_sets(const NumericalSemigroup& h, int max_generators,
                                                         Value exponent_bound) {
  std::vector<std::vector<Value>> out;
  if (max_generators < 1) return out;
  std::vector<Value> members;
  for (Value x = 1; x <= exponent_bound; ++x)
    if (h.contains(x)) members.push_back(x);

  std::vector<Value> current;
  // Extend `current` with members past index `from`, keeping an H-antichain.
  auto extend = [&](auto&& self, std::size_t from) -> void {
    out.push_back(current);
    if (current.size() == static_cast<std::size_t>(max_generators)) return;
    for (std::size_t i = from; i < members.size(); ++i) {
      const Value x = members[i];
      const bool absorbed = std::any_of(current.begin(), current.end(), [&](Value y) { return h.contains(x - y); });
      if (absorbed) continue;
      current.push_back(x);
      self(self, i + 1);
      current.pop_back();
    }
  };
  for (std::size_t i = 0; i < members.size(); ++i) {
    current = {members[i]};
    extend(extend, i + 1);
  }
  return out;
}

std::vector<Violation> audit_setup(const ReductionSetup& s, CensusEntry& entry) {
  std::vector<Violation> out;
  entry.exponents = s.ideal().generators();
  entry.q = s.q_exponent();
  auto flag = [&](std::string check, std::string detail = {}) {
    out.push_back({entry.exponents, entry.q, std::move(check), std::move(detail)});
  };

  InvariantReport inv;
  DepthReport depth;
  try {
    inv = hilbert_coefficients(s);
    depth = depth_report(s);
  } catch (const InternalInconsistency& ex) {
    flag("dual_route", ex.what());
    return out;
  }
  entry.r = inv.r;
  entry.g = inv.g_s;
  entry.e2 = s.dimension() >= 2 ? inv.e[2] : 0;
  entry.gr_cm_dim1 = depth.gr_cm_dim1;

  if (s.dimension() >= 2) {
    for (const auto& f : bounds_report(s, inv, depth).failures()) flag(f);
    const auto cls = classify_border(s, inv, depth);
    entry.border = cls.border;
    for (const auto& f : cls.failures()) flag(f);

    // The v_k for k >= 1 are admissible for the combinatorial lemma with ℓ = g,
    // and its maximizer is exactly the first border.
    std::vector<Length> tail(inv.v.begin() + (inv.v.empty() ? 0 : 1), inv.v.end());
    try {
      const auto lem = lemma_3_1_max(inv.g_s, tail);
      if (lem.weighted_sum != inv.e[2]) flag("lemma_3_1_sum", "Σ k v_k differs from e_2");
      if (lem.is_max != cls.thm34.c1) flag("lemma_3_1_max");
    } catch (const InvalidSequence& ex) {
      flag("lemma_3_1_admissible", ex.what());
    }
  }

  if ((inv.m == 0) != depth.gr_cm_dim1) flag("superficial_vs_depth", "colon stabilization disagrees with VV");
  if (depth.extended_depth_at_d < s.dimension() - 1 || depth.extended_depth_at_d > s.dimension())
    flag("extended_depth_range");

  try {
    const auto rr = ratliff_rush(s);
    entry.ratliff_rush_closed = rr.is_closed;
    if (!contains_ideal(rr.closure, s.ideal())) flag("ratliff_rush_extensive");
    ReductionSetup closed(rr.closure, s.q_exponent(), s.dimension());
    const auto again = ratliff_rush(closed);
    if (!(again.closure == rr.closure)) flag("ratliff_rush_idempotent");
    const auto inv_closed = hilbert_coefficients(closed);
    if (inv_closed.e[0] != inv.e[0] || inv_closed.e[1] != inv.e[1]) flag("ratliff_rush_e0_e1");
    if (inv_closed.g_s != inv.g_s - length_quotient(rr.closure, s.ideal())) flag("ratliff_rush_genus_drop");
    if (!rr.is_closed && depth.gr_cm_dim1) flag("ratliff_rush_vs_depth");
  } catch (const NotReduction& ex) {
    flag("ratliff_rush_reduction", ex.what());
  } catch (const InternalInconsistency& ex) {
    flag("ratliff_rush_dual_route", ex.what());
  }
  return out;
}

CensusReport scan(SemigroupPtr h, ScanOptions options) {
  if (!h) throw InvalidArgument("scan needs a semigroup");
  if (options.exponent_bound < 0) options.exponent_bound = 2 * h->conductor();
  CensusReport rep;
  rep.semigroup = h;

  auto sets = enumerate_generator_sets(*h, options.max_generators, options.exponent_bound);
  if (sets.size() > options.limit) {
    sets.resize(options.limit);
    rep.truncated = true;
  }

  struct Slot {
    CensusEntry entry;
    std::vector<Violation> violations;
  };
  std::vector<Slot> slots(sets.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < sets.size(); i = next++) {
      const auto& gens = sets[i];
      try {
        ReductionSetup s(MonomialIdeal(h, gens), gens.front(), options.dimension);
        slots[i].violations = audit_setup(s, slots[i].entry);
      } catch (const Error& ex) {
        slots[i].entry.exponents = gens;
        slots[i].entry.q = gens.front();
        slots[i].violations.push_back({gens, gens.front(), "setup", ex.what()});
      }
    }
  };
  unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, sets.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  // Merge in enumeration order, which is lexicographic, so the result does
  // not depend on scheduling.
  for (BorderCase c : {BorderCase::ZeroGenus, BorderCase::FirstBorder, BorderCase::SecondBorder, BorderCase::Interior}) {
    rep.cases[c] = 0;
    rep.witnesses[c] = {};
  }
  for (auto& slot : slots) {
    ++rep.total;
    ++rep.cases[slot.entry.border];
    rep.closed += slot.entry.ratliff_rush_closed ? 1 : 0;
    rep.gr_cm += slot.entry.gr_cm_dim1 ? 1 : 0;
    auto& w = rep.witnesses[slot.entry.border];
    if (w.size() < options.witnesses_per_case) w.push_back(slot.entry.exponents);
    for (auto& v : slot.violations) rep.violations.push_back(std::move(v));
    rep.entries.push_back(std::move(slot.entry));
  }
  rep.options = options;
  return rep;
}

}  // namespace sgh
