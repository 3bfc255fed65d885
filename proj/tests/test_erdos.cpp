// test_erdos.cpp -- thresholds, exact contradictions, r_k, the interval
// budget, and the case machinery.

#include <doctest.h>

#include <sstream>

#include "abcv/erdos.hpp"

using namespace abcv;

namespace {
const mpfr_prec_t P = 120;

bool brackets(const VReal& v, const char* lo, const char* hi) {
  return vgt_q(v, parse_rational(lo)) == Tri::yes &&
         vlt_q(v, parse_rational(hi)) == Tri::yes;
}
}  // namespace

TEST_CASE("s1 threshold values") {
  // alpha=4, beta=1/4: RHS ~ 698.8 < 700 (threshold met), ~113.1 at k=100
  VReal r700 = s1_threshold_rhs(4, mpq_class(1, 4), 700, P);
  CHECK(vlt_q(r700, 700) == Tri::yes);
  CHECK(brackets(r700, "698", "700"));
  VReal r100 = s1_threshold_rhs(4, mpq_class(1, 4), 100, P);
  CHECK(vgt_q(r100, 100) == Tri::yes);
  CHECK(brackets(r100, "113", "114"));
  CHECK_THROWS_AS(s1_threshold_rhs(mpq_class(1, 2), mpq_class(1, 8), 100, P),
                  std::domain_error);
}

TEST_CASE("normalized s1 threshold decreases in k beyond the threshold") {
  // the per-k form RHS(k)/k is the decreasing quantity: once k >= RHS(k)
  // holds it stays held
  auto ratio = [](uint64_t k) {
    return vdiv(s1_threshold_rhs(4, mpq_class(1, 4), k, P),
                VReal::point((long)k, P), P);
  };
  CHECK(vgt(ratio(700), ratio(1000)) == Tri::yes);
  CHECK(vgt(ratio(1000), ratio(10000)) == Tri::yes);
  CHECK(vgt(ratio(10000), ratio(100000)) == Tri::yes);
}

TEST_CASE("log-space threshold for enormous k") {
  // alpha=3, beta=13/45 at log k = 13006.2
  mpq_class beta = mpq_class(1, 15) + mpq_class(2, 9);
  CHECK(beta == mpq_class(13, 45));
  CHECK(s1_threshold_holds_at_log(3, beta, mpq_class("65031/5"), P) == Tri::yes);
  // far below the threshold the inequality fails: log k = 3 means k ~ 20
  CHECK(s1_threshold_holds_at_log(3, beta, mpq_class(3), P) == Tri::no);
}

TEST_CASE("exact factorial-product contradictions") {
  PrimeTable t(1000, P);
  // k = 127, s1 = 2(floor(127/9)+1) = 30
  CHECK(factorial_product_contradiction(t, 127, 4, 30));
  // the smallest case, alpha = 1, s1 = 0: 0! * 5*6 = 30 > 3! = 6, so the
  // product inequality fails and the contradiction is reported
  CHECK(factorial_product_contradiction(t, 4, 1, 0));
  // no contradiction when s1 = k - pi(k): the product is empty and
  // (k - pi(k))! <= (k-1)!
  CHECK_FALSE(factorial_product_contradiction(t, 29, 4, 19));
  CHECK_THROWS_AS(factorial_product_contradiction(t, 10, 4, 200),
                  std::domain_error);
}

TEST_CASE("k9 sweep covers all primes in (113, 700)") {
  PrimeTable t(1000, P);
  VerificationReport rep = verify_k9_sweep(t);
  CHECK(rep.status == Status::PASS);
  // number of primes checked: pi(699) - pi(113) = 125 - 30 = 95
  const Assertion* a = rep.find("contradiction_all_primes");
  REQUIRE(a);
  CHECK(a->witness == std::vector<std::string>{"95"});
}

TEST_CASE("r_k reproduces the published pairs and small cases") {
  PrimeTable t(1000, P);
  const std::pair<uint64_t, long> table[] = {{7, 3},   {11, 6},  {13, 7},
                                             {17, 10}, {18, 10}, {28, 18},
                                             {30, 18}, {36, 23}};
  for (auto [k, want] : table) {
    RkResult r = r_k(k, t, P);
    CHECK(r.status == Status::PASS);
    CHECK(r.value == want);
  }
  // r_2 by the same formula: floor(2 + 1 - 1 - log 2/(15 log 10)) = 1
  RkResult r2 = r_k(2, t, P);
  CHECK(r2.value == 1);
  // raising the d floor strengthens the count: r_k is nondecreasing in d_min
  for (uint64_t k : {7ull, 17ull, 36ull, 100ull}) {
    long a = r_k(k, t, P, mpz_class("1000000000000000")).value;
    long b = r_k(k, t, P, mpz_class("10000000000000000")).value;
    long c = r_k(k, t, P, mpz_class("1000000000000000000000000000000")).value;
    CHECK(a <= b);
    CHECK(b <= c);
  }
}

TEST_CASE("interval prime budget") {
  PrimeTable t(1000, P);
  CHECK(interval_prime_budget(t, 53, 17, 3) == 22);  // 16 + 15 + 9 - 18
  CHECK(interval_prime_budget(t, 53, 17, 3) / 3 == 7);
  CHECK(interval_prime_budget(t, 89, 28, 3) == 33);
  CHECK(interval_prime_budget(t, 89, 28, 3) / 3 == 11);
  // q = 1: empty sum, T = pi(k) - pi(m-1)
  CHECK(interval_prime_budget(t, 29, 17, 1) ==
        t.prime_count(29) - t.prime_count(16));
  CHECK_THROWS_AS(interval_prime_budget(t, 50, 17, 3), std::domain_error);
}

TEST_CASE("case contradictions") {
  PrimeTable t(1000, P);
  // k = 11, a0 = b0 = 11: (37/7) log 13 vs theta(11) = log 2310
  CHECK(case_I_contradicted(t, 11, 11, 11, P) == Tri::yes);
  // k = 13, z1 = 7, a = b = 11: p_12 = 37
  CHECK(case_II_contradicted(t, 13, 7, 11, 11, P) == Tri::yes);
  // degenerate z1 = 1: index pi(k), smallest legal case
  CHECK(case_II_contradicted(t, 11, 1, 11, 11, P) == Tri::yes);
  // a case that does not contradict: tiny prime power vs a big primorial
  CHECK(case_I_contradicted(t, 4, 31, 31, P) == Tri::no);
}

TEST_CASE("schedule rows parse and validate") {
  std::istringstream in("# rows\n53 89 17 3\n89 181 28 3\n\n181 239 36 5\n");
  auto rows = parse_schedule(in);
  REQUIRE(rows.size() == 3);
  CHECK(rows[1].m == 28);
  std::istringstream bad("100 200 25 4\n");  // m*q = 100 >= k_lo
  CHECK_THROWS_AS(parse_schedule(bad), std::invalid_argument);
  std::istringstream trunc("53 89 17\n");
  CHECK_THROWS_AS(parse_schedule(trunc), std::invalid_argument);
}

TEST_CASE("full schedule verification") {
  PrimeTable t(1000, P);
  VerificationReport rep = verify_schedule(t, default_schedule(), P, 2);
  CHECK(rep.status == Status::PASS);
  // branch (c) at k = 47: z0 = 23 - pi(47) = 8
  const Assertion* z47 = rep.find("k47_z0_chain");
  REQUIRE(z47);
  CHECK(z47->witness == std::vector<std::string>{"8"});
  // row examples: k = 53 under (17,3), k = 367 under (36,10)
  CHECK(rep.find("k53_budget_lt_rm") != nullptr);
  CHECK(rep.find("k367_budget_lt_rm") != nullptr);
  CHECK(rep.find("k431_caseII") != nullptr);
  // every assertion passes
  CHECK(rep.count(Status::FAIL) == 0);
  CHECK(rep.count(Status::UNDECIDED) == 0);
}

TEST_CASE("count and product bounds for even d") {
  PrimeTable t(20000, P);
  VerificationReport rep = verify_corollary8(10000, t);
  CHECK(rep.status == Status::PASS);
  const Assertion* c = rep.find("count_inequality_min_k");
  REQUIRE(c);
  CHECK(c->witness == std::vector<std::string>{"14"});
  // oracle check of the boundary: k = 13 fails, k = 14 holds
  CHECK_FALSE(2 * (13 - 1 - t.prime_count(13)) > 12);
  CHECK(2 * (14 - 1 - t.prime_count(14)) > 13);
}

TEST_CASE("k < 400 elimination margins") {
  VerificationReport rep = verify_k400_bound(P);
  CHECK(rep.status == Status::PASS);
  // small branch margin 11 log 400 - 64.96 ~ 0.95
  const Assertion* a = rep.find("small_N_branch");
  REQUIRE(a);
  CHECK(a->margin->midpoint_d == doctest::Approx(0.947).epsilon(0.01));
}

TEST_CASE("ell7 chain") {
  PrimeTable t(1000, P);
  VerificationReport rep = ell7_chain(t, P);
  CHECK(rep.status == Status::PASS);
  const Assertion* b = rep.find("lhs_below_e35");
  REQUIRE(b);
  CHECK(b->status == Status::PASS);
  const Assertion* e = rep.find("uvw_radical_max");
  REQUIRE(e);
  CHECK(e->witness ==
        std::vector<std::string>{"70", "2", "5", "7"});
  CHECK(rep.find("constant_64266_reproduces_claim")->status == Status::PASS);
  CHECK(rep.find("constant_63727_variant")->status == Status::PASS);
}
