#pragma once
// Mechanical checks of the inequalities and border equivalences relating
// e_2 to the sectional genus g = g_s(I), example-family generators, and an
// exhaustive scanner over small semigroups.
//
// Every condition is evaluated from raw lengths and value sets. No condition
// is derived from another, so the equivalence flags are real tests.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgh/closure.hpp"
#include "sgh/invariants.hpp"

namespace sgh {

struct BoundsReport {
  bool northcott = false;             // e1 >= e0 - ℓ(A/I)
  bool narita = false;                // e2 >= 0
  bool kirby_mehran_e1 = false;       // e1 <= C(e0, 2)
  bool kirby_mehran_e2 = false;       // e2 <= C(e1 + 1, 2)
  bool prop_3_2 = false;              // e2 <= C(g + 1, 2)
  bool huneke_ooishi_equiv = false;   // e1 = e0 - ℓ(A/I)  <=>  I^2 = QI
  bool cor_3_3_equality = false;      // e2 = C(e1 + 1, 2)  =>  I = Q
  bool cor_3_5_equiv = false;         // e2 = C(e1, 2)  <=>  ℓ(I/Q) <= 1
  bool cor_3_5_consequences = false;  // then e_i = C(e1, i), and gr CM <=> I^2 = QI
  bool cor_3_6 = false;               // g = 1, e2 != 0  =>  e2 = 1, e_{i>=3} = 0, ℓ(I^2/QI) = 1, I^3 = QI^2
  bool cor_4_4 = false;               // g = e2 = 2  =>  e_{i>=3} = 0, ℓ(I^2/QI) = 2, I^3 = QI^2

  std::vector<std::string> failures() const;
  bool all() const { return failures().empty(); }
};

enum class BorderCase { ZeroGenus, FirstBorder, SecondBorder, Interior };

const char* to_string(BorderCase c);
std::optional<BorderCase> border_case_from_string(std::string_view s);

struct FirstBorderConditions {
  bool c1 = false;  // e2 = C(g+1, 2)
  bool c2 = false;  // ℓ(I^2/QI) <= 1
  bool c3 = false;  // ℓ(I^{k+1}/QI^k) = 1 for 1 <= k <= g, and I^{g+2} = QI^{g+1}
  bool equivalent() const { return c1 == c2 && c2 == c3; }
};

struct SecondBorderConditions {
  bool applicable = false;  // g >= 2
  bool c1 = false;          // e2 = C(g, 2) + 1
  bool c2 = false;          // C(g, 2) + 1 <= e2 < C(g+1, 2)
  bool c3 = false;          // ℓ(I^2/QI) = 2, ℓ(I^{k+1}/QI^k) = 1 for 2 <= k <= g-1, I^{g+1} = QI^g
  bool equivalent() const { return !applicable || (c1 == c2 && c2 == c3); }
};

struct BorderClassification {
  Length g = 0;
  Length e2 = 0;
  BorderCase border = BorderCase::Interior;
  FirstBorderConditions thm34;
  SecondBorderConditions thm41;
  bool gap_cor42 = false;     // no e2 strictly between C(g,2)+1 and C(g+1,2)
  bool cor42 = false;         // e2 >= C(g,2)+1  =>  e2 on a border and depth gr >= d-1
  bool cm_criterion = false;  // on a border: gr CM <=> the border's containment conditions
  bool higher_e = false;      // e_i = C(g+1,i) / C(g,i) for 3 <= i <= d on the first / second border

  std::vector<std::string> failures() const;
  bool consistent() const { return failures().empty(); }
};

// Both require d >= 2 (PreconditionError otherwise).
BoundsReport bounds_report(const ReductionSetup& s);
BoundsReport bounds_report(const ReductionSetup& s, const InvariantReport& inv, const DepthReport& depth);
BorderClassification classify_border(const ReductionSetup& s);
BorderClassification classify_border(const ReductionSetup& s, const InvariantReport& inv, const DepthReport& depth);

struct Lemma31Result {
  Length bound = 0;         // C(ℓ+1, 2)
  Length weighted_sum = 0;  // Σ k v_k
  bool is_max = false;
};

// v[0] is v_1. Throws InvalidSequence when some entry is negative, the sum
// exceeds ℓ, or a nonzero entry follows a zero.
Lemma31Result lemma_3_1_max(Length ell, std::span<const Length> v);

// A value printed in the example next to what the toolkit computes for it.
// Yes/no claims are encoded as 1/0.
struct Claim {
  std::string label;
  Length claimed = 0;
  Length computed = 0;
  bool matches() const { return claimed == computed; }
};

struct FamilyCase {
  std::string example;  // "5.2" or "5.3"
  Length e = 0;
  std::vector<Value> stated_generators;
  ReductionSetup setup;
  std::vector<Claim> claims;
  std::vector<std::string> notes;

  std::vector<Claim> discrepancies() const;
};

// J = (u^{2e}, u^{2e+2}, u^{4e+1}) over <2e, ..., 4e-1>, q = (u^{2e}); e >= 3.
FamilyCase example_family_52(Length e, int d);
// I = (u^e, u^{e+1}, u^{2e-2}) over <e, ..., 2e-1>, Q = (u^e); e >= 5.
FamilyCase example_family_53(Length e, int d);

struct ScanOptions {
  int max_generators = 3;
  Value exponent_bound = -1;  // -1: 2 * conductor
  int dimension = 3;
  unsigned threads = 0;       // 0: hardware concurrency
  std::size_t limit = 2'000'000;
  std::size_t witnesses_per_case = 8;
};

struct Violation {
  std::vector<Value> exponents;
  Value q = 0;
  std::string check;
  std::string detail;
};

struct CensusEntry {
  std::vector<Value> exponents;
  Value q = 0;
  BorderCase border = BorderCase::Interior;
  Length g = 0;
  Length e2 = 0;
  Length r = 0;
  bool ratliff_rush_closed = false;
  bool gr_cm_dim1 = false;
};

struct CensusReport {
  SemigroupPtr semigroup;
  ScanOptions options;
  std::size_t total = 0;
  bool truncated = false;
  std::map<BorderCase, std::size_t> cases;
  std::size_t closed = 0;
  std::size_t gr_cm = 0;
  std::vector<Violation> violations;
  std::map<BorderCase, std::vector<std::vector<Value>>> witnesses;
  std::vector<CensusEntry> entries;  // enumeration order
};

// All checks the scanner runs on one setup; returns the names of failed
// checks (empty when everything holds) and fills `entry`.
std::vector<Violation> audit_setup(const ReductionSetup& s, CensusEntry& entry);

// Every H-minimal generator set {a < x_2 < ...} with at most max_generators
// elements, a ∈ H positive, all exponents <= exponent_bound; Q = (u^a).
std::vector<std::vector<Value>> enumerate_generator_sets(const NumericalSemigroup& h, int max_generators,
                                                         Value exponent_bound);

CensusReport scan(SemigroupPtr h, ScanOptions options);

}  // namespace sgh
