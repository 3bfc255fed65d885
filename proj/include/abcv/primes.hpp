// primes.hpp -- prime sieve with verified Chebyshev theta prefix sums, plus
// desk-scale verification of the classical prime/factorial estimates the
// rest of the toolkit leans on (Dusart's pi and theta bounds, the nth-prime
// lower bound, Robin's theta(p_i) bound, Legendre's ord_p(k!) bound, and the
// two-sided Stirling inequality).

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "abcv/report.hpp"
#include "abcv/vreal.hpp"

namespace abcv {

class PrimeTable {
 public:
  // Sieves all primes <= limit and computes verified theta prefix sums at
  // `prec` bits.  Throws std::length_error when `limit` exceeds the memory
  // budget and std::invalid_argument for limit < 2.
  explicit PrimeTable(uint64_t limit, mpfr_prec_t prec = default_prec());

  static constexpr uint64_t kMaxLimit = 1ull << 24;
  static constexpr std::size_t kPrimorialExactCap = 200;

  uint64_t limit() const { return limit_; }
  mpfr_prec_t prec() const { return prec_; }
  std::size_t size() const { return primes_.size(); }
  const std::vector<uint32_t>& primes() const { return primes_; }

  // 1-based: nth_prime(1) = 2.  Out-of-table requests throw
  // std::out_of_range (callers rebuild a larger table).
  uint64_t nth_prime(std::size_t i) const;
  std::size_t prime_count(uint64_t x) const;  // pi(x), x <= limit

  // enclosure of theta(x) = sum of log p over primes p <= x
  VReal theta(uint64_t x) const;
  // enclosure of theta(p_i); log_primorial(0) = [0,0]
  VReal log_primorial(std::size_t i) const;
  VReal log_primorial_at(std::size_t i, mpfr_prec_t prec) const;
  // exact primorial of the first i primes, i <= kPrimorialExactCap
  mpz_class primorial_exact(std::size_t i) const;

  // prefix at an arbitrary precision (lazily built, cached, immutable once
  // built); entry j encloses theta(p_{j+1})
  const std::vector<VReal>& theta_prefix(mpfr_prec_t prec) const;

 private:
  uint64_t limit_;
  mpfr_prec_t prec_;
  std::vector<uint32_t> primes_;
  mutable std::unique_ptr<std::mutex> cache_mu_ = std::make_unique<std::mutex>();
  mutable std::map<mpfr_prec_t, std::unique_ptr<std::vector<VReal>>> prefix_cache_;
};

struct Lemma1Spec {
  uint64_t x_max = 1000000;      // integer sweep bound for the pi/theta estimates
  uint64_t factorial_cap = 10000;  // k cap for the ord_p(k!) and Stirling checks
};

// Verifies, over the stated finite domains:
//   (i)   pi(x)      <= x/log x * (1 + 1.2762/log x)          2 <= x <= x_max
//   (ii)  p_i        >= i (log i + loglog i - 1)              p_i <= x_max
//   (iii) theta(p_i) >= i (log i + loglog i - 1.076869)       p_i <= x_max
//   (iv)  theta(x)   <  1.000081 x                            2 <= x <= x_max
//   (v)   ord_p(k!)  >= (k-p)/(p-1) - log(k-1)/log p          p < k <= cap
//   (vi)  sqrt(2 pi k)(k/e)^k e^{1/(12k+1)} <= k! <= ... e^{1/(12k)}, k <= cap
// Reports the minimum slack per estimate together with its witness point.
VerificationReport verify_lemma1(const PrimeTable& table, const Lemma1Spec& spec,
                                 mpfr_prec_t prec, unsigned threads);

}  // namespace abcv
