#pragma once

#include <vector>

#include "sgh/invariants.hpp"

namespace sgh {

struct ClosureReport {
  MonomialIdeal closure;  // Ratliff-Rush closure of I
  Length stabilized_at = 0;  // least n from which (I^{n+1} : I^n) is constant
  bool is_closed = false;    // closure == I
};

// Union of the increasing chain C_n = (I^{n+1} : I^n). For n >= r we have
// I^{n+1} = u^a I^n, and x I^{n+1} ⊆ I^{n+2} reduces to x I^n ⊆ I^{n+1}, so
// C_{n+1} = C_n from n = r on; C_r is returned after checking C_{r+1} = C_r.
ClosureReport ratliff_rush(const ReductionSetup& s);

// Q ∩ I^{n+1} = Q I^n, for n >= 1.
bool valabrega_valla(const ReductionSetup& s, Length n);

struct DepthReport {
  std::vector<Length> vv_failures;  // n in [1, r] with Q ∩ I^{n+1} != Q I^n
  bool gr_cm_dim1 = false;          // gr(I) Cohen-Macaulay, i.e. depth 1
  Length extended_depth_at_d = 0;   // depth gr of the dimension-d lift
};

// For n > r the containment is automatic (I^{n+1} = QI^n ⊆ Q), so [1, r]
// is checked exhaustively.
DepthReport depth_report(const ReductionSetup& s);

}  // namespace sgh
