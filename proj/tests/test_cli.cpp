// test_cli.cpp -- drives the CLI in-process: exit codes, formats, schema
// round trips.

#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "abcv/cli.hpp"

using namespace abcv;
using nlohmann::json;

namespace {
struct Run {
  int code;
  std::string out, err;
};
Run cli(std::vector<std::string> args) {
  std::ostringstream o, e;
  int code = run_cli(args, o, e);
  return {code, o.str(), e.str()};
}
}  // namespace

TEST_CASE("epsilon 3/4 prints the published row and exits 0") {
  Run r = cli({"epsilon", "--eps", "3/4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("omega_eps") != std::string::npos);
  CHECK(r.out.find("14") != std::string::npos);
  CHECK(r.out.find("37.110") != std::string::npos);
}

TEST_CASE("abc check rejects non-coprime input with exit 2") {
  Run r = cli({"abc", "check", "2", "4", "6"});
  CHECK(r.code == 2);
  CHECK(r.err.find("not pairwise coprime") != std::string::npos);
}

TEST_CASE("abc check accepts a known triple") {
  Run r = cli({"abc", "check", "1", "8", "9"});
  CHECK(r.code == 0);
  CHECK(r.out.find("quality") != std::string::npos);
  // the boundary triple reports its flag but is not an empirical violation
  Run b = cli({"abc", "check", "1", "1", "2"});
  CHECK(b.code == 0);
  CHECK(b.out.find("boundary") != std::string::npos);
}

TEST_CASE("goor search json emits the two witnesses") {
  Run r = cli({"search", "goor", "--ymax", "2", "--nmax", "13", "--format",
               "json"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["value"] == "31");
  CHECK(j[1]["value"] == "8191");
}

TEST_CASE("unknown subcommands and flags exit 2") {
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"verify", "nonsense"}).code == 2);
  CHECK(cli({"epsilon", "--eps", "0.75"}).code == 2);  // decimals rejected
  CHECK(cli({"epsilon"}).code == 2);
  CHECK(cli({"abc", "ingest", "/nonexistent/file"}).code == 2);
}

TEST_CASE("verify nalu-arith passes") {
  Run r = cli({"verify", "nalu-arith"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("json reports are schema-stable and round-trip") {
  Run r = cli({"verify", "omep65", "--format", "json"});
  CHECK(r.code == 0);
  json arr = json::parse(r.out);
  REQUIRE(arr.is_array());
  REQUIRE(!arr.empty());
  for (const auto& rep : arr) {
    CHECK(rep.contains("check_name"));
    CHECK(rep.contains("status"));
    CHECK(rep.contains("assertions"));
    CHECK(rep.contains("provenance"));
    for (const auto& a : rep["assertions"]) {
      CHECK(a.contains("label"));
      CHECK(a.contains("status"));
    }
  }
  // round trip: parse -> dump -> parse is identity
  CHECK(json::parse(arr.dump()) == arr);
}

TEST_CASE("text, csv and json renderings agree on statuses") {
  Run t = cli({"verify", "goormaghtigh-arith", "--eps", "3/4"});
  Run c = cli({"verify", "goormaghtigh-arith", "--eps", "3/4", "--format", "csv"});
  Run j = cli({"verify", "goormaghtigh-arith", "--eps", "3/4", "--format",
               "json"});
  CHECK(t.code == 0);
  CHECK(c.code == 0);
  CHECK(j.code == 0);
  auto count = [](const std::string& s, const std::string& needle) {
    std::size_t n = 0, pos = 0;
    while ((pos = s.find(needle, pos)) != std::string::npos) {
      ++n;
      pos += needle.size();
    }
    return n;
  };
  // every rendering carries zero failures
  CHECK(count(t.out, "FAIL") == 0);
  CHECK(count(c.out, "FAIL") == 0);
  CHECK(count(j.out, "FAIL") == 0);
  // and the same number of PASS assertion rows in csv and json
  json arr = json::parse(j.out);
  std::size_t json_pass = 0;
  for (const auto& rep : arr)
    for (const auto& a : rep["assertions"])
      if (a["status"] == "PASS") ++json_pass;
  CHECK(count(c.out, ",PASS,") == json_pass);
}

TEST_CASE("scan cli with output file") {
  Run r = cli({"abc", "scan", "--cmax", "100", "--top", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("top 5 by quality") != std::string::npos);
}

TEST_CASE("search nl cli") {
  Run r = cli({"search", "nl", "--xmax", "10", "--nmax", "10", "--qmax", "10",
               "--format", "json"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j.size() == 2);  // the two square solutions live in this box
}
