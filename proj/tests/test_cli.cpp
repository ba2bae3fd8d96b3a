#include "amal/cli.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

using namespace amal;

namespace {
struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run_cli(std::move(args), out, err);
  return {status, out.str(), err.str()};
}
}  // namespace

TEST_CASE("cli series") {
  const CliResult r = run({"series", "--p", "2,2,2"});
  CHECK(r.status == 0);
  CHECK(r.out == growth_series(Presentation({2, 2, 2})).str() + "\n");
  // byte-stable across runs
  CHECK(run({"series", "--p", "2,2,2"}).out == r.out);

  const CliResult f = run({"series", "--p", "2,2,2", "--format", "factored"});
  CHECK(f.status == 0);
  CHECK(f.out == "(1 + t)*(-1 + 2*t^2) / ((-1 + t)*(-1 + 2*t)^2)\n");

  const CliResult l = run({"series", "--p", "2,2,2", "--format", "latex"});
  CHECK(l.out.substr(0, 6) == "\\frac{");
}

TEST_CASE("cli coeffs with json envelope") {
  const CliResult r = run({"coeffs", "--p", "2,3,3", "--upto", "6", "--json"});
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["p"] == std::vector<int>{2, 3, 3});
  const auto expect = growth_series(Presentation({2, 3, 3})).taylor_int(6);
  REQUIRE(j["coefficients"].size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i)
    CHECK(j["coefficients"][i].get<std::string>() == expect[i].str());
  CHECK(j.contains("numerator_coeffs"));
  CHECK(j.contains("denominator_coeffs"));
}

TEST_CASE("cli verify") {
  const CliResult ok = run({"verify", "--p", "2,3,3", "--depth", "8"});
  CHECK(ok.status == 0);
  CHECK(ok.out.find("VERIFIED") != std::string::npos);
}

TEST_CASE("cli normalform reproduces the worked example") {
  const CliResult r = run({"normalform", "--p", "3,6,7", "--word",
                           "x2^2 x3^-3 x1^-2 x3^4 x2^5 x3^-2 x2^4 x3^2 x1^2 x2^4 x3^4 x2^2 D^-3"});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("x2^2 x3^4 x1 x3^4 x2^5 x3^5 x2^4 x3^2 x1^2 x2^4 x3^4 x2^2 D^-6") !=
        std::string::npos);
  CHECK(r.out.find("x2^2 x3^4 x1 x3^4 x2^-1 x3^-2 x2^4 x3^2 x1^2 x2^4 x3^4 x2^2 D^-4") !=
        std::string::npos);
  CHECK(r.out.find("{1,2,3,4,7,9,10,11,12}") != std::string::npos);
  CHECK(r.out.find("r_nu:     9") != std::string::npos);
  CHECK(r.out.find("type:     3.0") != std::string::npos);
}

TEST_CASE("cli geodesics") {
  const CliResult r = run({"geodesics", "--p", "3,6,7", "--word",
                           "x2^2 x3^4 x1 x3^4 x2^-1 x3^-2 x2^4 x3^2 x1^2 x2^4 x3^4 x2^2 D^-4"});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("count: 6") != std::string::npos);
  CHECK(r.out.find("length: 26") != std::string::npos);

  const CliResult capped = run({"geodesics", "--p", "3,6,7", "--cap", "3", "--word",
                                "x2^2 x3^4 x1 x3^4 x2^-1 x3^-2 x2^4 x3^2 x1^2 x2^4 x3^4 x2^2 D^-4"});
  CHECK(capped.out.find("count: 6 (above cap, not listed)") != std::string::npos);
}

TEST_CASE("cli canonical") {
  const CliResult r = run({"canonical", "--p", "3,6,7", "--word",
                           "x2^2 x3^4 x1 x3^4 x2^-1 x3^-2 x2^4 x3^2 x1^2 x2^4 x3^4 x2^2 D^-1"});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("x2^2 x3^4 x1 x3^4 x2^-1 x3^-2 x2^-2 x3^2 x1^2 x2^4 x3^4 x2^2") !=
        std::string::npos);
  CHECK(r.out.find("case(N=0,slot=1)") != std::string::npos);
}

TEST_CASE("cli error paths exit 2") {
  CHECK(run({"series"}).status == 2);                                   // missing --p
  CHECK(run({"series", "--p", "3,2"}).status == 2);                     // unsorted
  CHECK(run({"normalform", "--p", "2,3", "--word", "x7"}).status == 2); // bad generator
  CHECK(run({"bogus"}).status == 2);
  CHECK(run({}).status == 2);
}

TEST_CASE("cli help exits 0") {
  CHECK(run({"--help"}).status == 0);
}
