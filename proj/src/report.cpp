#include "sgh/report.hpp"

#include <sstream>

namespace sgh {

Json to_json(const NumericalSemigroup& h) {
  return {{"generators", h.generators()}, {"frobenius", h.frobenius()}, {"conductor", h.conductor()}};
}

Json to_json(const CofiniteSet& s) { return {{"threshold", s.threshold()}, {"members_below", s.members_below()}}; }

Json to_json(const MonomialIdeal& ideal) {
  return {{"exponents", ideal.generators()}, {"value_set", to_json(ideal.value_set())}};
}

Json to_json(const InvariantReport& r) {
  return {{"e", r.e}, {"g_s", r.g_s}, {"r", r.r}, {"v", r.v}, {"h", r.h}, {"hilbert_samples", r.hilbert_samples},
          {"m", r.m}, {"d", r.d}};
}

Json to_json(const ClosureReport& r) {
  return {{"closure", to_json(r.closure)}, {"stabilized_at", r.stabilized_at}, {"is_closed", r.is_closed}};
}

Json to_json(const DepthReport& r) {
  return {{"vv_failures", r.vv_failures}, {"gr_cm_dim1", r.gr_cm_dim1}, {"extended_depth_at_d", r.extended_depth_at_d}};
}

Json to_json(const BoundsReport& r) {
  return {{"northcott", r.northcott},
          {"narita", r.narita},
          {"kirby_mehran_e1", r.kirby_mehran_e1},
          {"kirby_mehran_e2", r.kirby_mehran_e2},
          {"prop_3_2", r.prop_3_2},
          {"huneke_ooishi_equiv", r.huneke_ooishi_equiv},
          {"cor_3_3_equality", r.cor_3_3_equality},
          {"cor_3_5_equiv", r.cor_3_5_equiv},
          {"cor_3_5_consequences", r.cor_3_5_consequences},
          {"cor_3_6", r.cor_3_6},
          {"cor_4_4", r.cor_4_4}};
}

Json to_json(const BorderClassification& c) {
  Json thm41 = nullptr;
  if (c.thm41.applicable)
    thm41 = {{"c1", c.thm41.c1}, {"c2", c.thm41.c2}, {"c3", c.thm41.c3}, {"equivalent", c.thm41.equivalent()}};
  return {{"g", c.g},
          {"e2", c.e2},
          {"case", to_string(c.border)},
          {"thm34",
           {{"c1", c.thm34.c1}, {"c2", c.thm34.c2}, {"c3", c.thm34.c3}, {"equivalent", c.thm34.equivalent()}}},
          {"thm41", thm41},
          {"gap_cor42", c.gap_cor42},
          {"cor42", c.cor42},
          {"cm_criterion", c.cm_criterion},
          {"higher_e", c.higher_e}};
}

Json to_json(const Claim& c) {
  return {{"claim", c.label}, {"claimed", c.claimed}, {"computed", c.computed}, {"matches", c.matches()}};
}

Json to_json(const Violation& v) {
  return {{"exponents", v.exponents}, {"q", v.q}, {"check", v.check}, {"detail", v.detail}};
}

Json to_json(const CensusReport& r) {
  Json cases = Json::object();
  Json witnesses = Json::object();
  for (const auto& [c, n] : r.cases) cases[to_string(c)] = n;
  for (const auto& [c, w] : r.witnesses) {
    Json list = Json::array();
    for (const auto& gens : w) list.push_back({{"exponents", gens}});
    witnesses[to_string(c)] = std::move(list);
  }
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back(to_json(v));
  return {{"semigroup", to_json(*r.semigroup)},
          {"max_generators", r.options.max_generators},
          {"exponent_bound", r.options.exponent_bound},
          {"d", r.options.dimension},
          {"total", r.total},
          {"truncated", r.truncated},
          {"cases", cases},
          {"ratliff_rush_closed", r.closed},
          {"gr_cm_dim1", r.gr_cm},
          {"violations", violations},
          {"witnesses", witnesses}};
}

AnalysisReport analyze(const ReductionSetup& s, const std::vector<Claim>& discrepancies,
                       const std::vector<std::string>& notes) {
  AnalysisReport out;
  const auto inv = hilbert_coefficients(s);
  const auto depth = depth_report(s);
  const auto closure = ratliff_rush(s);

  Json spec = {{"semigroup", to_json(*s.ideal().semigroup())},
               {"ideal", to_json(s.ideal())},
               {"q", s.q_exponent()},
               {"d", s.dimension()}};
  Json bounds = nullptr;
  Json classification = nullptr;
  if (s.dimension() >= 2) {
    const auto b = bounds_report(s, inv, depth);
    const auto c = classify_border(s, inv, depth);
    out.finding = !b.all() || !c.consistent();
    bounds = to_json(b);
    classification = to_json(c);
  }
  Json disc = Json::array();
  for (const auto& c : discrepancies) disc.push_back(to_json(c));

  out.json = {{"spec", spec},
              {"invariants", to_json(inv)},
              {"closure", to_json(closure)},
              {"depth", to_json(depth)},
              {"bounds", bounds},
              {"classification", classification},
              {"discrepancies", disc}};
  if (!notes.empty()) out.json["notes"] = notes;
  return out;
}

namespace {

void render(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, val] : j.items()) {
      if (val.is_object() || (val.is_array() && !val.empty() && val.front().is_structured())) {
        os << pad << key << ":\n";
        render(os, val, indent + 1);
      } else {
        os << pad << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump()) << '\n';
      }
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << pad << "[" << i << "]\n";
      render(os, j[i], indent + 1);
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  render(os, j, 0);
  return os.str();
}

}  // namespace sgh
