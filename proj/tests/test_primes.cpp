// test_primes.cpp -- PrimeTable and the estimate sweeps, against an
// independent sieve written here.

#include <doctest.h>

#include <cstdint>
#include <vector>

#include "abcv/primes.hpp"

using namespace abcv;

namespace {
// independent sieve oracle
std::vector<uint32_t> oracle_sieve(uint32_t limit) {
  std::vector<bool> comp(limit + 1, false);
  std::vector<uint32_t> ps;
  for (uint32_t i = 2; i <= limit; ++i) {
    if (!comp[i]) {
      ps.push_back(i);
      for (uint64_t j = (uint64_t)i * i; j <= limit; j += i) comp[j] = true;
    }
  }
  return ps;
}
}  // namespace

TEST_CASE("sieve agrees with the oracle and the known pi values") {
  PrimeTable t10(10);
  CHECK(t10.primes() == std::vector<uint32_t>{2, 3, 5, 7});
  PrimeTable t50(50);
  CHECK(t50.nth_prime(14) == 43);
  CHECK(t50.prime_count(50) == 15);
  PrimeTable t(100000);
  CHECK(t.primes() == oracle_sieve(100000));
  CHECK(t.prime_count(100000) == 9592);
  CHECK(t.nth_prime(127) == 709);
  CHECK(t.nth_prime(1) == 2);
  CHECK(t.prime_count(10) == 4);
  CHECK_THROWS_AS(t.nth_prime(0), std::out_of_range);
  CHECK_THROWS_AS(t.nth_prime(t.size() + 1), std::out_of_range);
  CHECK_THROWS_AS(t.prime_count(100001), std::out_of_range);
  CHECK_THROWS_AS(PrimeTable(1), std::invalid_argument);
  CHECK_THROWS_AS(PrimeTable(PrimeTable::kMaxLimit + 1), std::length_error);
}

TEST_CASE("theta prefix sums reproduce the published logarithms") {
  PrimeTable t(1000);
  // theta(2) encloses log 2
  VReal th2 = t.theta(2);
  CHECK(vgt_q(th2, mpq_class("6931/10000")) == Tri::yes);
  CHECK(vlt_q(th2, mpq_class("6932/10000")) == Tri::yes);
  // theta(p_14) = 37.1101 +- 5e-5 and theta(p_127) = 679.585 +- 5e-4
  VReal t14 = t.log_primorial(14);
  CHECK(vgt_q(t14, mpq_class("371101/10000") - mpq_class(1, 20000)) == Tri::yes);
  CHECK(vlt_q(t14, mpq_class("371101/10000") + mpq_class(1, 20000)) == Tri::yes);
  VReal t127 = t.log_primorial(127);
  CHECK(vgt_q(t127, mpq_class("679585/1000") - mpq_class(1, 2000)) == Tri::yes);
  CHECK(vlt_q(t127, mpq_class("679585/1000") + mpq_class(1, 2000)) == Tri::yes);
  CHECK(t.log_primorial(0).contains_q(0));
}

TEST_CASE("exact primorials and the log cross-check") {
  PrimeTable t(1000);
  CHECK(t.primorial_exact(0) == 1);
  CHECK(t.primorial_exact(4) == 210);
  CHECK(t.primorial_exact(14) == mpz_class("13082761331670030"));
  for (std::size_t i = 1; i <= 20; ++i) {
    VReal exact_log = vlog_z(t.primorial_exact(i), t.prec());
    CHECK(exact_log.inside(t.log_primorial(i)));
  }
  CHECK_THROWS_AS(t.primorial_exact(500), std::out_of_range);
}

TEST_CASE("theta is monotone and prefixes nest under higher precision") {
  PrimeTable t(5000);
  VReal a = t.theta(100), b = t.theta(1000), c = t.theta(5000);
  CHECK(vle(a, b) == Tri::yes);
  CHECK(vle(b, c) == Tri::yes);
  const auto& fine = t.theta_prefix(240);
  const auto& coarse = t.theta_prefix(t.prec());
  for (std::size_t i = 0; i < fine.size(); i += 97) {
    CHECK(fine[i].inside(coarse[i]));
  }
}

TEST_CASE("estimate sweeps pass at desk scale with positive slack") {
  PrimeTable t(3000);
  Lemma1Spec spec;
  spec.x_max = 3000;
  spec.factorial_cap = 300;
  VerificationReport rep = verify_lemma1(t, spec, 120, 2);
  CHECK(rep.status == Status::PASS);
  for (const char* label :
       {"pi_upper_dusart", "nth_prime_lower", "theta_nth_lower_robin",
        "theta_upper_dusart", "ord_factorial_lower", "stirling_lower",
        "stirling_upper"}) {
    const Assertion* a = rep.find(label);
    REQUIRE_MESSAGE(a != nullptr, label);
    CHECK(a->status == Status::PASS);
    REQUIRE(a->margin.has_value());
    CHECK(a->margin->midpoint_d > 0);
  }
  // i = 1 conventions recorded
  CHECK(rep.find("nth_prime_lower_i1") != nullptr);
  CHECK(rep.find("theta_nth_lower_i1") != nullptr);
}

TEST_CASE("ord_p(k!) sample point from the estimate (v)") {
  // ord_2(10!) = 8 and the bound value (10-2)/1 - log 9/log 2 ~ 4.83
  const mpfr_prec_t p = 120;
  uint64_t ord = 0;
  for (uint64_t q = 2; q <= 10; q *= 2) ord += 10 / q;
  CHECK(ord == 8);
  VReal rhs = vsub(VReal::point(8, p), vdiv(vlog_ui(9, p), vlog_ui(2, p), p), p);
  CHECK(vgt_q(rhs, mpq_class("48/10")) == Tri::yes);
  CHECK(vlt_q(rhs, mpq_class("49/10")) == Tri::yes);
  CHECK((double)ord > rhs.hi_d());
}

TEST_CASE("lemma sweep rejects x_max beyond the table") {
  PrimeTable t(100);
  Lemma1Spec spec;
  spec.x_max = 1000;
  CHECK_THROWS_AS(verify_lemma1(t, spec, 120, 1), std::out_of_range);
}
