#include <doctest.h>

#include <cctype>
#include <sstream>

#include "sgh/cli.hpp"
#include "sgh/errors.hpp"
#include "sgh/report.hpp"

using namespace sgh;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Standalone integer tokens, skipping digits that are part of identifiers
// such as e2 or cor_3_3.
std::vector<long long> numbers(const std::string& s) {
  auto word = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  std::vector<long long> out;
  for (std::size_t i = 0; i < s.size();) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])) || (i > 0 && word(s[i - 1]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == s.size() || !word(s[j])) {
      long long v = std::stoll(s.substr(i, j - i));
      if (i > 0 && s[i - 1] == '-') v = -v;
      out.push_back(v);
    }
    i = j;
  }
  return out;
}

const std::vector<std::string> kGolden = {"analyze", "--semigroup", "6,7,8,9,10,11", "--ideal", "6,8,13",
                                          "--q", "6", "--dim", "2"};

}  // namespace

TEST_CASE("analyze reports the golden invariants as JSON") {
  const auto r = run(kGolden);
  REQUIRE(r.code == cli::kExitOk);
  const auto j = Json::parse(r.out);
  CHECK(j["invariants"]["e"] == Json::array({6, 2, 1}));
  CHECK(j["invariants"]["g_s"] == 1);
  CHECK(j["invariants"]["r"] == 2);
  CHECK(j["invariants"]["v"] == Json::array({1, 1}));
  CHECK(j["invariants"]["h"] == Json::array({5, 0, 1}));
  CHECK(j["classification"]["case"] == "FirstBorder");
  CHECK(j["depth"]["gr_cm_dim1"] == false);
  CHECK(j["closure"]["is_closed"] == false);
  CHECK(j["spec"]["ideal"]["exponents"] == Json::array({6, 8}));
  for (const char* key : {"spec", "invariants", "closure", "depth", "bounds", "classification", "discrepancies"})
    CHECK(j.contains(key));
  // Byte-identical round trip.
  CHECK(j.dump(2) + "\n" == r.out);
  CHECK(Json::parse(j.dump()).dump() == j.dump());
}

TEST_CASE("text output carries the same numbers as JSON") {
  auto args = kGolden;
  const auto js = run(args);
  args.push_back("--text");
  const auto tx = run(args);
  REQUIRE(tx.code == cli::kExitOk);
  const auto body = tx.out.substr(tx.out.find('\n') + 1);
  CHECK(tx.out.rfind("# e_2 .. e_d are extended coefficients", 0) == 0);
  CHECK(numbers(body) == numbers(js.out));
  CHECK_FALSE(numbers(js.out).empty());
}

TEST_CASE("input errors exit with code 2") {
  CHECK(run({"analyze", "--semigroup", "4,6", "--ideal", "4", "--q", "4"}).code == cli::kExitInputError);
  CHECK(run({"analyze", "--semigroup", "6,7,8,9,10,11", "--ideal", "5"}).code == cli::kExitInputError);
  CHECK(run({"analyze", "--semigroup", "6,7,8,9,10,11", "--ideal", "6,8", "--q", "8"}).code ==
        cli::kExitInputError);
  CHECK(run({"analyze", "--semigroup", "6,7,8,9,10,11", "--ideal", "6,8", "--dim", "1"}).code ==
        cli::kExitInputError);
  CHECK(run({"analyze", "--semigroup", "x,7", "--ideal", "6"}).code == cli::kExitInputError);
  CHECK(run({"analyze", "--ideal", "6"}).code == cli::kExitInputError);
  CHECK(run({"family", "--example", "5.4"}).code == cli::kExitInputError);
  CHECK(run({"family", "--example", "5.3", "--e", "4"}).code == cli::kExitInputError);
  CHECK(run({"family", "--example", "5.2", "--e", "5..3"}).code == cli::kExitInputError);
  CHECK(run({"bogus"}).code == cli::kExitInputError);
  CHECK(run({}).code == cli::kExitInputError);
  const auto gcd = run({"analyze", "--semigroup", "4,6", "--ideal", "4"});
  CHECK(gcd.err.find("gcd") != std::string::npos);
}

TEST_CASE("range parsing") {
  CHECK(cli::parse_range("3..8") == std::pair<long long, long long>{3, 8});
  CHECK(cli::parse_range("5") == std::pair<long long, long long>{5, 5});
  CHECK_THROWS_AS(cli::parse_range("3..x"), InvalidArgument);
  CHECK_THROWS_AS(cli::parse_range(""), InvalidArgument);
  CHECK_THROWS_AS(cli::parse_range("9..2"), InvalidArgument);
}

TEST_CASE("family subcommand") {
  const auto r = run({"family", "--example", "5.2", "--e", "3..8", "--dim", "3"});
  CHECK(r.code == cli::kExitOk);
  const auto j = Json::parse(r.out);
  REQUIRE(j.size() == 6);
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto& rep = j[k];
    CHECK(rep["family"]["e"] == 3 + static_cast<int>(k));
    CHECK(rep["classification"]["case"] == "FirstBorder");
    CHECK(rep["spec"]["d"] == 3);
    REQUIRE(rep["discrepancies"].size() == 2);
    CHECK(rep["discrepancies"][0]["claim"] == "e_0(I) = e");
    CHECK(rep["discrepancies"][1]["claim"] == "e_1(I) = e");
    CHECK(rep.contains("notes"));
  }
  const auto s = Json::parse(run({"family", "--example", "5.3", "--e", "6", "--dim", "3"}).out);
  CHECK(s[0]["classification"]["case"] == "SecondBorder");
  CHECK(s[0]["discrepancies"][0]["claim"] == "e_2(I) = C(e-3,2)");
}

TEST_CASE("scan and selftest subcommands") {
  const auto r = run({"scan", "--semigroup", "5,6,7,8,9", "--max-gens", "2", "--max-exp", "15", "--threads", "2"});
  CHECK(r.code == cli::kExitOk);
  const auto j = Json::parse(r.out);
  CHECK(j["violations"].empty());
  CHECK(j["d"] == 3);
  CHECK(j["semigroup"]["generators"] == Json::array({5, 6, 7, 8, 9}));
  CHECK(j["total"].get<long long>() > 0);

  const auto st = run({"selftest"});
  CHECK(st.code == cli::kExitOk);
  CHECK(st.out.find("selftest passed") != std::string::npos);
}
