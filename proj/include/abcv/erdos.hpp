// erdos.hpp -- numeric verifications supporting the arithmetic-progression
// equation n(n+d)...(n+(k-1)d) = b y^l: the |S1| > beta*k threshold, the
// exact factorial-product contradictions, the r_k lower bound on indices
// with a large prime factor, the T(k,m,q) interval budget, the Case I/II
// prime-power contradictions, the full case schedule for l >= 11, and the
// l = 7 constant chain.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "abcv/primes.hpp"
#include "abcv/report.hpp"
#include "abcv/vreal.hpp"

namespace abcv {

// RHS of the threshold inequality: k >= RHS guarantees more than beta*k of
// the A_i are <= alpha*k.  Requires alpha >= 1, e*beta < alpha, k >= 3.
// Throws std::domain_error when the denominator encloses zero.
VReal s1_threshold_rhs(const mpq_class& alpha, const mpq_class& beta, uint64_t k,
                       mpfr_prec_t prec);

// Same threshold with k given in log space (k = e^{log_k}), for k values far
// beyond anything materializable.  Decides k >= RHS via the rearrangement
// k*(D - A) >= 1 - (1/2)log beta - log k with
//   D = log(e alpha) + beta log(beta/(e alpha)),
//   A = (1 + log alpha/log k)(1 + 1.2762/log k).
Tri s1_threshold_holds_at_log(const mpq_class& alpha, const mpq_class& beta,
                              const mpq_class& log_k, mpfr_prec_t prec);

// Exact integer test of  s1! * prod_{i=1..k-pi(k)-s1} (alpha*k + i) <= (k-1)!.
// Returns true iff the inequality FAILS, i.e. the contradiction needed by
// the counting argument is achieved.  Pure bigint arithmetic.
bool factorial_product_contradiction(const PrimeTable& table, uint64_t k,
                                     const mpq_class& alpha, uint64_t s1);

struct RkResult {
  long value = 0;
  VReal pre_floor;
  Status status = Status::PASS;  // UNDECIDED when the floor straddles
};

// r_k = floor(k + 1 - pi(k) - (sum_{i<=k} log i)/log(d_min)); d_min defaults
// to the cited 10^15 lower bound on the common difference.
RkResult r_k(uint64_t k, const PrimeTable& table, mpfr_prec_t prec,
             const mpz_class& d_min = mpz_class("1000000000000000"));

// T(k, m, q) = pi(k) + sum_{j=1..q-1} pi((mq-1)/j) - q*pi(m-1), exact.
uint64_t interval_prime_budget(const PrimeTable& table, uint64_t k, uint64_t m,
                               uint64_t q);

// Case I contradiction:  p_{pi(k)+1}^{37/7} >= primorial(max(a0, b0-1)).
Tri case_I_contradicted(const PrimeTable& table, uint64_t k, uint64_t a0,
                        uint64_t b0, mpfr_prec_t prec);
// Case II contradiction: p_{pi(k)+z1-1}^{23/7} >= primorial(max(a1, b1-1)).
Tri case_II_contradicted(const PrimeTable& table, uint64_t k, uint64_t z1,
                         uint64_t a1, uint64_t b1, mpfr_prec_t prec);

struct ScheduleRow {
  uint64_t k_lo = 0, k_hi = 0;  // [k_lo, k_hi)
  uint64_t m = 0, q = 0;
};

// The built-in (m, q) schedule for 53 <= k < 433.  The printed table starts
// the (36,5) row at k = 179, where m*q = 180 >= k breaks the scheme's own
// m*q < k precondition; here 179 rides with the (28,3) row, which verifies.
std::vector<ScheduleRow> default_schedule();
// plain-text rows "k_lo k_hi m q"; '#' comments; validates m*q < k_lo
std::vector<ScheduleRow> parse_schedule(std::istream& in);

// Replays the complete case schedule for l >= 11 over k in {4} union primes
// in [5, 433): the four fixed-parameter branches and the (m,q) rows, with
// the Case I / Case II contradictions at every k.
VerificationReport verify_schedule(const PrimeTable& table,
                                   const std::vector<ScheduleRow>& rows,
                                   mpfr_prec_t prec, unsigned threads);

// 2(k-1-pi(k)) > k-1 for 14 <= k <= k_max, plus the exact odd-product
// comparison prod (2i-1) > prod_{2i+1<=k-1} (2i+1); reports the actual
// minimal k for each (the product comparison is an equality at k = 14 and
// strict from k = 15 on).
VerificationReport verify_corollary8(uint64_t k_max, const PrimeTable& table);

// check_k9-style exact contradictions for all primes 113 < k < 700 at
// alpha = 4, s1 = 2(floor(k/9)+1)
VerificationReport verify_k9_sweep(const PrimeTable& table);

// r_k against the eight published pairs
VerificationReport verify_rk_table(const PrimeTable& table, mpfr_prec_t prec);

// the two numeric branches eliminating k >= 400 for l >= 11
VerificationReport verify_k400_bound(mpfr_prec_t prec);

// the |S1(4)| threshold at k = 700 (alpha 4, beta 1/4)
VerificationReport verify_s1_threshold_700(mpfr_prec_t prec);

// l = 7 chain: (a) threshold at log k = 13006.2 with alpha 3, beta 13/45;
// (b) 15 exp(45 (350/(6 sqrt(12920 pi)))^{1/3}) < e^{35} <= e^{13006.2};
// (c) the 7 log k < (7/4) 3895 reduction; (d) the final (17/12) exponent
// step under both candidate constants 63727 and 64266, with the diff
// surfaced; (e) brute-force max of rad(uvw) over coprime u+v=w <= 8.
VerificationReport ell7_chain(const PrimeTable& table, mpfr_prec_t prec);

}  // namespace abcv
