#include "sgh/closure.hpp"

#include "sgh/errors.hpp"

namespace sgh {

ClosureReport ratliff_rush(const ReductionSetup& s) {
  const Length r = reduction_number(s);
  std::vector<MonomialIdeal> chain;
  for (int n = 0; n <= r + 1; ++n) {
    chain.push_back(colon(s.power(n + 1), s.power(n)));
    if (n > 0 && !contains_ideal(chain.back(), chain[chain.size() - 2]))
      throw InternalInconsistency("Ratliff-Rush chain is not increasing");
  }
  const MonomialIdeal& stable = chain[static_cast<std::size_t>(r)];
  if (!(chain.back() == stable)) throw InternalInconsistency("Ratliff-Rush chain moved past the reduction number");

  Length first = r;
  while (first > 0 && chain[static_cast<std::size_t>(first - 1)] == stable) --first;
  return ClosureReport{stable, first, stable == s.ideal()};
}

bool valabrega_valla(const ReductionSetup& s, Length n) {
  if (n < 1) throw InvalidArgument("valabrega_valla needs n >= 1");
  const int k = static_cast<int>(n);
  return intersect(s.q(), s.power(k + 1)) == s.q_times_power(k);
}

DepthReport depth_report(const ReductionSetup& s) {
  DepthReport rep;
  const Length r = reduction_number(s);
  for (Length n = 1; n <= r; ++n)
    if (!valabrega_valla(s, n)) rep.vv_failures.push_back(n);
  rep.gr_cm_dim1 = rep.vv_failures.empty();
  rep.extended_depth_at_d = (rep.gr_cm_dim1 ? 1 : 0) + s.dimension() - 1;
  return rep;
}

}  // namespace sgh
