#include "sgh/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <ostream>

#include "sgh/errors.hpp"
#include "sgh/kernels/bitops.hpp"
#include "sgh/report.hpp"

namespace sgh::cli {

namespace {

struct Options {
  std::vector<Value> semigroup;
  std::vector<Value> ideal;
  Value q = -1;
  int dim = 0;
  bool json = false;
  bool text = false;
  int max_gens = 3;
  Value max_exp = -1;
  unsigned threads = 0;
  std::string example;
  std::string e_range;
};

void emit(std::ostream& out, const Options& o, const Json& j, const std::string& header) {
  if (o.text && !o.json) {
    out << header << render_text(j);
  } else {
    out << j.dump(2) << '\n';
  }
}

const char* kExtendedNote =
    "# e_2 .. e_d are extended coefficients: Hilbert coefficients of the lift to dimension d\n";

int cmd_analyze(const Options& o, std::ostream& out) {
  const int d = o.dim == 0 ? 2 : o.dim;
  if (d < 2) throw InvalidArgument("--dim must be at least 2");
  if (o.ideal.empty()) throw InvalidArgument("--ideal is required");
  auto h = make_semigroup(o.semigroup);
  MonomialIdeal ideal(h, o.ideal);
  const Value q = o.q < 0 ? ideal.min_value() : o.q;
  if (!h->contains(q)) throw NotInSemigroup("--q " + std::to_string(q) + " is not in the semigroup");
  ReductionSetup s(ideal, q, d);
  const auto rep = analyze(s);
  emit(out, o, rep.json, kExtendedNote);
  return rep.finding ? kExitFinding : kExitOk;
}

int cmd_family(const Options& o, std::ostream& out) {
  const int d = o.dim == 0 ? 2 : o.dim;
  if (d < 2) throw InvalidArgument("--dim must be at least 2");
  if (o.example != "5.2" && o.example != "5.3") throw InvalidArgument("--example must be 5.2 or 5.3");
  const auto [lo, hi] = parse_range(o.e_range.empty() ? (o.example == "5.2" ? "3" : "5") : o.e_range);
  Json list = Json::array();
  bool finding = false;
  for (long long e = lo; e <= hi; ++e) {
    const FamilyCase fc = o.example == "5.2" ? example_family_52(e, d) : example_family_53(e, d);
    auto rep = analyze(fc.setup, fc.discrepancies(), fc.notes);
    rep.json["family"] = {{"example", fc.example}, {"e", fc.e}, {"stated_generators", fc.stated_generators}};
    Json claims = Json::array();
    for (const auto& c : fc.claims) claims.push_back(to_json(c));
    rep.json["claims"] = std::move(claims);
    finding = finding || rep.finding;
    list.push_back(std::move(rep.json));
  }
  emit(out, o, list, kExtendedNote);
  return finding ? kExitFinding : kExitOk;
}

int cmd_scan(const Options& o, std::ostream& out) {
  auto h = make_semigroup(o.semigroup);
  ScanOptions so;
  so.max_generators = o.max_gens;
  so.exponent_bound = o.max_exp;
  so.dimension = o.dim == 0 ? 3 : o.dim;
  so.threads = o.threads;
  if (so.dimension < 2) throw InvalidArgument("--dim must be at least 2");
  if (so.max_generators < 1) throw InvalidArgument("--max-gens must be at least 1");
  const auto census = scan(h, so);
  emit(out, o, to_json(census), "");
  return census.violations.empty() ? kExitOk : kExitFinding;
}

int cmd_selftest(std::ostream& out) {
  using Check = std::pair<std::string, std::function<bool()>>;
  const std::vector<Check> checks = {
      {"example 5.2 e=3 golden values",
       [] {
         const auto fc = example_family_52(3, 2);
         const auto inv = hilbert_coefficients(fc.setup);
         const auto cls = classify_border(fc.setup);
         return inv.e == std::vector<Length>{6, 2, 1} && inv.g_s == 1 && inv.r == 2 &&
                inv.v == std::vector<Length>{1, 1} && inv.h == std::vector<Length>{5, 0, 1} &&
                cls.border == BorderCase::FirstBorder && !depth_report(fc.setup).gr_cm_dim1;
       }},
      {"example 5.3 e=6 second border",
       [] {
         const auto fc = example_family_53(6, 3);
         const auto inv = hilbert_coefficients(fc.setup);
         return inv.g_s == 3 && inv.e[2] == 4 && inv.v == std::vector<Length>{2, 2, 1} &&
                classify_border(fc.setup).border == BorderCase::SecondBorder;
       }},
      {"ratliff-rush closure of example 5.2 e=3",
       [] {
         const auto rr = ratliff_rush(example_family_52(3, 2).setup);
         return !rr.is_closed && rr.closure.value_set() == CofiniteSet::from_members(12, {6, 8, 10});
       }},
      {"scan <5,...,9> has no violations",
       [] {
         ScanOptions so;
         so.max_generators = 3;
         so.exponent_bound = 15;
         return scan(make_semigroup({5, 6, 7, 8, 9}), so).violations.empty();
       }},
      {"weighted-sum all-ones maximizer",
       [] {
         const std::vector<Length> ones{1, 1, 1};
         return lemma_3_1_max(3, ones).is_max && !lemma_3_1_max(3, std::vector<Length>{3}).is_max;
       }},
  };
  bool ok = true;
  out << "bitset kernels: " << kernels::active_kernels().name << '\n';
  for (const auto& [name, fn] : checks) {
    bool pass = false;
    try {
      pass = fn();
    } catch (const std::exception& ex) {
      out << "  error: " << ex.what() << '\n';
    }
    out << (pass ? "PASS " : "FAIL ") << name << '\n';
    ok = ok && pass;
  }
  out << (ok ? "selftest passed" : "selftest FAILED") << '\n';
  return ok ? kExitOk : kExitFinding;
}

void add_output_flags(CLI::App* app, Options& o) {
  app->add_flag("--json", o.json, "JSON output (default)");
  app->add_flag("--text", o.text, "plain text output");
}

}  // namespace

std::pair<long long, long long> parse_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size()) throw InvalidArgument("malformed range '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const long long v = to_int(text);
    return {v, v};
  }
  const long long lo = to_int(text.substr(0, dots));
  const long long hi = to_int(text.substr(dots + 2));
  if (lo > hi) throw InvalidArgument("empty range '" + text + "'");
  return {lo, hi};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert coefficients, sectional genera and Ratliff-Rush closures of monomial ideals "
               "in numerical semigroup rings"};
  app.require_subcommand(1);
  Options o;

  auto* analyze_cmd = app.add_subcommand("analyze", "analyze one ideal I with reduction Q = (u^q)");
  analyze_cmd->add_option("--semigroup", o.semigroup, "semigroup generators, e.g. 6,7,8")->delimiter(',')->required();
  analyze_cmd->add_option("--ideal", o.ideal, "ideal exponents, e.g. 6,8,13")->delimiter(',')->required();
  analyze_cmd->add_option("--q", o.q, "exponent a of the reduction (u^a); default min exponent");
  analyze_cmd->add_option("--dim", o.dim, "target dimension d >= 2 (default 2)");
  add_output_flags(analyze_cmd, o);

  auto* family_cmd = app.add_subcommand("family", "run an example family over a range of e");
  family_cmd->add_option("--example", o.example, "5.2 or 5.3")->required();
  family_cmd->add_option("--e", o.e_range, "e or lo..hi");
  family_cmd->add_option("--dim", o.dim, "target dimension d >= 2 (default 2)");
  add_output_flags(family_cmd, o);

  auto* scan_cmd = app.add_subcommand("scan", "exhaustively check every small monomial ideal over a semigroup");
  scan_cmd->add_option("--semigroup", o.semigroup, "semigroup generators")->delimiter(',')->required();
  scan_cmd->add_option("--max-gens", o.max_gens, "maximum number of ideal generators (default 3)");
  scan_cmd->add_option("--max-exp", o.max_exp, "largest exponent (default 2 * conductor)");
  scan_cmd->add_option("--dim", o.dim, "target dimension d >= 2 (default 3)");
  scan_cmd->add_option("--threads", o.threads, "worker threads (default: hardware concurrency)");
  add_output_flags(scan_cmd, o);

  auto* selftest_cmd = app.add_subcommand("selftest", "run built-in golden checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << "input error: " << ex.what() << '\n';
    return kExitInputError;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(o, out);
    if (family_cmd->parsed()) return cmd_family(o, out);
    if (scan_cmd->parsed()) return cmd_scan(o, out);
    if (selftest_cmd->parsed()) return cmd_selftest(out);
  } catch (const InternalInconsistency& ex) {
    err << "finding: " << ex.what() << '\n';
    return kExitFinding;
  } catch (const Error& ex) {
    err << "input error (" << ex.kind() << "): " << ex.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace sgh::cli
