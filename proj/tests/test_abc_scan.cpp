// test_abc_scan.cpp -- triple enumeration against a brute-force oracle,
// determinism across thread counts, and ingestion.

#include <doctest.h>

#include <numeric>
#include <sstream>

#include "abcv/abc_scan.hpp"
#include "abcv/factorization.hpp"

using namespace abcv;

namespace {
// independent double-loop oracle; radical by plain trial division per
// component (the components are pairwise coprime, so radicals multiply)
uint64_t brute_rad(uint64_t n) {
  uint64_t r = 1;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      r *= d;
      while (n % d == 0) n /= d;
    }
  return n > 1 ? r * n : r;
}

struct BruteTriple {
  uint64_t a, b, c, N;
};
std::vector<BruteTriple> brute_triples(uint64_t c_max) {
  std::vector<BruteTriple> out;
  for (uint64_t c = 2; c <= c_max; ++c)
    for (uint64_t a = 1; 2 * a <= c; ++a) {
      uint64_t b = c - a;
      if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1)
        continue;
      out.push_back({a, b, c, brute_rad(a) * brute_rad(b) * brute_rad(c)});
    }
  return out;
}
}  // namespace

TEST_CASE("tiny scans match the oracle") {
  ScanSummary s2 = enumerate_and_check(2, 5, 120, 1);
  CHECK(s2.triple_count == 1);
  REQUIRE(s2.boundary.size() == 1);
  CHECK(s2.boundary[0].a == 1);
  CHECK(s2.boundary[0].c == 2);
  CHECK(s2.baker_violations == 0);
  CHECK(s2.n74_violations == 0);
  REQUIRE(!s2.top.empty());
  CHECK(s2.top[0].quality_d == doctest::Approx(1.0));

  ScanSummary s10 = enumerate_and_check(10, 32, 120, 1);
  auto brute = brute_triples(10);
  CHECK(s10.triple_count == brute.size());
  // (1,8,9) present with quality ~ 1.2263
  bool found = false;
  for (const auto& t : s10.top)
    if (t.a == 1 && t.b == 8 && t.c == 9) {
      found = true;
      CHECK(t.quality_d == doctest::Approx(1.226294).epsilon(1e-5));
      CHECK(t.radical == 6);
    }
  CHECK(found);
}

TEST_CASE("enumeration completeness at c_max = 1000") {
  auto brute = brute_triples(1000);
  ScanSummary s = enumerate_and_check(1000, 2000000, 120, 2);
  CHECK(s.triple_count == brute.size());
  // the top list with a huge cutoff contains every triple; compare the sets
  REQUIRE(s.top.size() == brute.size());
  std::vector<std::tuple<uint64_t, uint64_t, uint64_t>> a_set, b_set;
  for (const auto& t : s.top) a_set.emplace_back(t.a, t.b, t.c);
  for (const auto& t : brute) b_set.emplace_back(t.a, t.b, t.c);
  std::sort(a_set.begin(), a_set.end());
  std::sort(b_set.begin(), b_set.end());
  CHECK(a_set == b_set);
  CHECK(s.baker_violations == 0);
  CHECK(s.n74_violations == 0);
}

TEST_CASE("scan output is deterministic across thread counts") {
  ScanSummary one = enumerate_and_check(3000, 12, 120, 1);
  ScanSummary four = enumerate_and_check(3000, 12, 120, 4);
  CHECK(one.triple_count == four.triple_count);
  REQUIRE(one.top.size() == four.top.size());
  for (std::size_t i = 0; i < one.top.size(); ++i) {
    CHECK(one.top[i].a == four.top[i].a);
    CHECK(one.top[i].b == four.top[i].b);
    CHECK(one.top[i].c == four.top[i].c);
    CHECK(one.top[i].quality->midpoint == four.top[i].quality->midpoint);
  }
  REQUIRE(one.min_baker_margin.has_value());
  REQUIRE(four.min_baker_margin.has_value());
  CHECK(one.min_baker_margin->midpoint == four.min_baker_margin->midpoint);
  CHECK(one.min_margin_a == four.min_margin_a);
  CHECK(one.min_margin_c == four.min_margin_c);
}

TEST_CASE("well-known high-quality triples surface in ranking order") {
  ScanSummary s = enumerate_and_check(5000, 3, 120, 2);
  REQUIRE(s.top.size() == 3);
  // 1 + 2*3^7 = 5^4*7, the classic quality ~1.5679 triple
  CHECK(s.top[0].a == 1);
  CHECK(s.top[0].b == 4374);
  CHECK(s.top[0].c == 4375);
  CHECK(s.top[0].radical == 210);
  CHECK(s.top[0].quality_d == doctest::Approx(1.567887).epsilon(1e-5));
  // 1 + 2^5*3*5^2 = 7^4
  CHECK(s.top[1].a == 1);
  CHECK(s.top[1].b == 2400);
  CHECK(s.top[1].c == 2401);
  CHECK(s.top[1].radical == 210);
  // 3 + 5^3 = 2^7
  CHECK(s.top[2].a == 3);
  CHECK(s.top[2].b == 125);
  CHECK(s.top[2].c == 128);
}

TEST_CASE("scan reports and boundary bookkeeping") {
  ScanSummary s = enumerate_and_check(500, 8, 120, 2);
  CHECK(s.report.status == Status::PASS);
  CHECK(s.report.find("baker_bound_all_triples")->status == Status::PASS);
  CHECK(s.report.find("n74_bound_all_triples")->status == Status::PASS);
  REQUIRE(s.boundary.size() == 1);
  CHECK(s.boundary[0].baker_margin->midpoint_d < 0);  // 1.6636 - 2
  CHECK(s.boundary[0].baker_margin->midpoint_d ==
        doctest::Approx(-0.336).epsilon(0.01));
  // quality ranking is strictly ordered
  for (std::size_t i = 1; i < s.top.size(); ++i) {
    CHECK(s.top[i - 1].quality_d >= s.top[i].quality_d);
  }
}

TEST_CASE("ingestion accepts valid lines and rejects bad ones") {
  std::istringstream good("# comment\n1 8 9\n\n8 1 9\n3 125 128\n");
  auto ts = ingest_triples(good, 120);
  REQUIRE(ts.size() == 3);
  CHECK(ts[0].a == 1);
  CHECK(ts[0].b == 8);
  CHECK(ts[1].a == 1);  // normalized to a <= b
  CHECK(ts[1].b == 8);
  CHECK(ts[2].radical == 30);
  CHECK(ts[2].quality->midpoint_d == doctest::Approx(1.42656).epsilon(1e-4));

  std::istringstream bad1("2 4 6\n");
  CHECK_THROWS_WITH_AS(ingest_triples(bad1, 120),
                       "line 1: not pairwise coprime", TripleParseError);
  std::istringstream bad2("1 2 4\n");
  CHECK_THROWS_WITH_AS(ingest_triples(bad2, 120), "line 1: a + b != c",
                       TripleParseError);
  std::istringstream bad3("1 8\n");
  CHECK_THROWS_AS(ingest_triples(bad3, 120), TripleParseError);
  std::istringstream bad4("0 2 2\n");
  CHECK_THROWS_AS(ingest_triples(bad4, 120), TripleParseError);
  std::istringstream bad5("1 8 x\n");
  CHECK_THROWS_AS(ingest_triples(bad5, 120), TripleParseError);
}

TEST_CASE("csv and json renderings carry the same rows") {
  std::istringstream in("1 8 9\n3 125 128\n");
  auto ts = ingest_triples(in, 120);
  std::string csv = triples_to_csv(ts);
  CHECK(csv.find("1,8,9,6,2,") != std::string::npos);
  CHECK(csv.find("3,125,128,30,3,") != std::string::npos);
  std::string json = triples_to_json(ts);
  CHECK(json.find("\"c\": 128") != std::string::npos);
}
