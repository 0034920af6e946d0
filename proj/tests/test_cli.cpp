#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "bestworst/cli.hpp"
#include "helpers.hpp"

using namespace bestworst;
using namespace bestworst::testing;
using nlohmann::json;

namespace {

json parsed(const cli::CommandResult& r) { return json::parse(r.out); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream in(text);
  while (std::getline(in, item)) out.push_back(item);
  return out;
}

cli::ConstructRequest request(const char* c, int m, const char* family) {
  return {q(c), m, family, std::nullopt, std::nullopt};
}

}  // namespace

TEST_CASE("check examples") {
  auto r = cli::cmd_check(R"({"c":"1/2","m":4,"positions":["3/8","3/8","5/8","5/8"]})");
  CHECK(r.exit_code == cli::kExitOk);
  CHECK(parsed(r)["verdict"] == "NCNE");
  CHECK(parsed(r)["conditions"]["Ip"] == "1/8");

  r = cli::cmd_check(R"({"c":"2/1","m":3,"positions":["1/2","1/2","1/2"]})");
  CHECK(r.exit_code == cli::kExitOk);
  CHECK(parsed(r)["verdict"] == "CNE");
  CHECK(parsed(r)["cne"]["interval"] == json::array({"4/9", "5/9"}));

  r = cli::cmd_check(R"({"c":"1/2","m":4,"positions":["1/4","1/4","3/4","3/4"]})");
  CHECK(r.exit_code == cli::kExitRejected);
  const json cert = parsed(r);
  CHECK(cert["verdict"] == "NotEquilibrium");
  CHECK(cert["violated_by"].is_string());
  CHECK(cert["candidates"].size() == 4);
  CHECK(cert["candidates"][0]["score"] == "1/8");
}

TEST_CASE("integer rationals are accepted") {
  auto r = cli::cmd_check(R"({"c":2,"m":3,"positions":["1/2","1/2","1/2"]})");
  CHECK(r.exit_code == cli::kExitOk);
  CHECK(parsed(r)["c"] == "2/1");
}

TEST_CASE("malformed input exits with 2") {
  const char* bad[] = {
      "not json",
      R"({"c":"1/2","m":4})",
      R"({"c":0.5,"m":4,"positions":["3/8","3/8","5/8","5/8"]})",
      R"({"c":"1/2","m":4,"positions":["3/8","3/8","5/8"]})",
      R"({"c":"-1/2","m":4,"positions":["3/8","3/8","5/8","5/8"]})",
      R"({"c":"1/2","m":1,"positions":["3/8"]})",
      R"({"c":"1/2","m":2,"positions":["3/8","5/4"]})",
      R"({"c":"1/0","m":2,"positions":["3/8","5/8"]})",
      R"({"c":"1/2","m":"4","positions":["3/8","3/8","5/8","5/8"]})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    const auto r = cli::cmd_check(text);
    CHECK(r.exit_code == cli::kExitError);
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("construct examples") {
  auto r = cli::cmd_construct(request("0", 6, "max_dispersed"));
  REQUIRE(r.exit_code == cli::kExitOk);
  json out = parsed(r);
  CHECK(out["positions"] == json::array({"1/8", "1/8", "3/8", "5/8", "7/8", "7/8"}));
  CHECK(out["certificate"]["verdict"] == "NCNE");
  CHECK(out["status"] == "equilibrium");

  r = cli::cmd_construct(request("3/4", 6, "min_dispersed"));
  CHECK(parsed(r)["x1"] == "5/12");

  r = cli::cmd_construct(request("1", 6, "max_dispersed"));
  out = parsed(r);
  CHECK(out["status"] == "limit, not NCNE");
  CHECK(out["positions"] == json::array({"1/2", "1/2", "1/2", "1/2", "1/2", "1/2"}));
  CHECK(out["certificate"]["verdict"] != "NCNE");

  auto counts = request("1/2", 6, "max_dispersed");
  counts.counts = std::vector<int>{2, 2, 2};
  CHECK(parsed(cli::cmd_construct(counts))["certificate"]["verdict"] == "NCNE");

  r = cli::cmd_construct(request("2", 3, "cne"));
  out = parsed(r);
  CHECK(out["interval"] == json::array({"4/9", "5/9"}));
  CHECK(out["certificate"]["verdict"] == "CNE");
}

TEST_CASE("construct errors surface the feasible range") {
  auto req = request("0", 6, "family");
  req.epsilon = q("1/16");
  auto r = cli::cmd_construct(req);
  CHECK(r.exit_code == cli::kExitError);
  json out = parsed(r);
  CHECK(out["error"] == "EpsilonOutOfRange");
  CHECK(out["epsilon_range"] == json::array({"0/1", "1/24"}));

  r = cli::cmd_construct(request("3/2", 6, "max_dispersed"));
  CHECK(r.exit_code == cli::kExitError);
  CHECK(parsed(r)["error"] == "WrongRegime");

  r = cli::cmd_construct(request("0", 6, "bogus"));
  CHECK(r.exit_code == cli::kExitError);
}

TEST_CASE("construct output round-trips through check") {
  const char* families[] = {"max_dispersed", "min_dispersed", "family"};
  for (const char* fam : families) {
    for (const char* c : {"0", "1/4", "3/4"}) {
      for (int m = 6; m <= 9; ++m) {
        auto req = request(c, m, fam);
        const json built = parsed(cli::cmd_construct(req));
        const json input = {{"c", built["c"]}, {"m", built["m"]}, {"positions", built["positions"]}};
        const auto checked = cli::cmd_check(input.dump());
        CHECK(checked.exit_code == cli::kExitOk);
        CHECK(parsed(checked)["verdict"] == built["certificate"]["verdict"]);
      }
    }
  }
}

TEST_CASE("sweep CSV") {
  const std::vector<Rational> cs = {q("0"), q("1/4"), q("1/2"), q("3/4")};
  SUBCASE("max dispersed, six candidates") {
    const auto r = cli::cmd_sweep(6, "max_dispersed", cs);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == cli::kSweepHeader);
    const char* x1[] = {"1/8", "7/32", "5/16", "13/32"};
    for (std::size_t k = 0; k < 4; ++k) {
      const auto cells = split(lines[k + 1], ',');
      REQUIRE(cells.size() == 7);
      CHECK(cells[2] == "max_dispersed");
      CHECK(cells[3] == "NCNE");
      CHECK(cells[4] == x1[k]);
    }
  }
  SUBCASE("min dispersed, six candidates") {
    const auto lines = lines_of(cli::cmd_sweep(6, "min_dispersed", cs).out);
    const char* x1[] = {"1/6", "1/4", "1/3", "5/12"};
    for (std::size_t k = 0; k < 4; ++k) CHECK(split(lines[k + 1], ',')[4] == x1[k]);
  }
  SUBCASE("four candidates at plurality") {
    const auto lines = lines_of(cli::cmd_sweep(4, "max_dispersed", {q("0")}).out);
    CHECK(split(lines[1], ',')[4] == "1/4");
  }
  SUBCASE("errors stay in their row") {
    const auto lines = lines_of(cli::cmd_sweep(6, "max_dispersed", {q("1/2"), q("3/2"), q("0")}).out);
    REQUIRE(lines.size() == 4);
    CHECK(split(lines[2], ',')[3] == "Error:WrongRegime");
    CHECK(split(lines[3], ',')[3] == "NCNE");
  }
  SUBCASE("rows re-parse and re-certify identically") {
    for (const char* fam : {"max_dispersed", "min_dispersed"}) {
      const auto lines = lines_of(cli::cmd_sweep(7, fam, cs).out);
      for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto cells = split(lines[k], ',');
        json positions = json::array();
        for (const auto& p : split(cells[6], ';')) positions.push_back(p);
        const json input = {{"c", cells[0]}, {"m", std::stoi(cells[1])}, {"positions", positions}};
        CHECK(parsed(cli::cmd_check(input.dump()))["verdict"] == cells[3]);
      }
    }
  }
}

TEST_CASE("mc command") {
  auto r = cli::cmd_mc(R"({"c":"1/2","m":4,"positions":["3/8","3/8","5/8","5/8"]})", 1000000, 3);
  CHECK(r.exit_code == cli::kExitOk);
  CHECK(parsed(r)["consistent"] == true);

  r = cli::cmd_mc(R"({"c":"1","m":3,"positions":["1/2","1/2","1/2"]})", 100000, 4);
  CHECK(r.exit_code == cli::kExitOk);
  for (const auto& row : parsed(r)["candidates"]) CHECK(std::abs(row["mean"].get<double>()) < 0.01);

  r = cli::cmd_mc(R"({"c":"1/2","m":2,"positions":["0","1"]})", 10000, 5);
  CHECK(r.exit_code == cli::kExitOk);
  for (const auto& row : parsed(r)["candidates"]) {
    CHECK(std::abs(row["mean"].get<double>() - 0.25) < 0.02);
  }

  CHECK(cli::cmd_mc("[]", 10, 1).exit_code == cli::kExitError);
  CHECK(cli::cmd_mc(R"({"c":"1/2","m":2,"positions":["0","1"]})", 0, 1).exit_code == cli::kExitError);
}

TEST_CASE("grid command") {
  auto r = cli::cmd_grid(R"({"c":"1/2","m":4,"positions":["1/4","1/4","3/4","3/4"]})", q("1/100"));
  CHECK(r.exit_code == cli::kExitRejected);
  CHECK(parsed(r)["grid_profitable_deviation"] == true);
  r = cli::cmd_grid(R"({"c":"0","m":4,"positions":["1/4","1/4","3/4","3/4"]})", q("1/100"));
  CHECK(r.exit_code == cli::kExitOk);
  CHECK(parsed(r)["candidates"][0]["grid_max"] == "1/4");
}
