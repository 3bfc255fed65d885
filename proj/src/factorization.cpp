// factorization.cpp

#include "abcv/factorization.hpp"

#include <memory>
#include <mutex>

namespace abcv {

namespace {

// process-wide small-prime list for trial division, grown on demand; shared
// snapshots keep concurrent factorize calls cheap
std::shared_ptr<const std::vector<uint32_t>> g_primes;
std::mutex g_primes_mu;

std::shared_ptr<const std::vector<uint32_t>> primes_snapshot(uint32_t need_limit) {
  std::lock_guard<std::mutex> lk(g_primes_mu);
  if (!g_primes || g_primes->empty() || g_primes->back() < need_limit) {
    std::vector<bool> comp(need_limit + 1, false);
    auto ps = std::make_shared<std::vector<uint32_t>>();
    for (uint32_t i = 2; i <= need_limit; ++i) {
      if (!comp[i]) {
        ps->push_back(i);
        for (uint64_t j = (uint64_t)i * i; j <= need_limit; j += i)
          comp[j] = true;
      }
    }
    g_primes = std::move(ps);
  }
  return g_primes;
}

}  // namespace

mpz_class Factorization::radical() const {
  mpz_class r = 1;
  for (const auto& [p, e] : factors) r *= p;
  return r;
}

mpz_class Factorization::greatest_prime_factor() const {
  if (factors.empty()) return 1;
  return factors.back().first;
}

mpz_class Factorization::reconstruct() const {
  mpz_class r = 1;
  for (const auto& [p, e] : factors) {
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    r *= pe;
  }
  return r;
}

bool Factorization::check_invariants() const {
  if (value < 1) return false;
  mpz_class prev = 1;
  for (const auto& [p, e] : factors) {
    if (p <= prev || e < 1 || !is_prime_z(p)) return false;
    prev = p;
  }
  if (reconstruct() != value) return false;
  if ((value == 1) != factors.empty()) return false;
  return true;
}

bool is_prime_z(const mpz_class& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

Factorization factorize_with(const mpz_class& n, const std::vector<uint32_t>& primes) {
  if (n == 0) throw std::domain_error("factorize: n must be >= 1");
  if (n < 0) throw std::domain_error("factorize: n must be positive");
  Factorization f;
  f.value = n;
  mpz_class m = n;
  for (uint32_t p : primes) {
    if (mpz_class(p) * p > m) break;
    if (m % p == 0) {
      unsigned e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      f.factors.emplace_back(mpz_class(p), e);
    }
  }
  if (m > 1) {
    mpz_class plimit = primes.empty() ? mpz_class(1) : mpz_class(primes.back());
    if (m <= plimit * plimit || is_prime_z(m)) {
      f.factors.emplace_back(m, 1);
    } else {
      throw NotFactoredError("composite residual " + m.get_str() +
                             " beyond trial-division range");
    }
  }
  return f;
}

Factorization factorize(const mpz_class& n) {
  if (n == 0) throw std::domain_error("factorize: n must be >= 1");
  // size the trial-division range to sqrt(n), capped at desk scale
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  uint32_t need = 1 << 16;
  if (root > need) {
    need = root.fits_uint_p() && root.get_ui() < (1u << 26) ? (uint32_t)root.get_ui()
                                                            : (1u << 26);
  }
  return factorize_with(n, *primes_snapshot(need));
}

mpz_class radical_of(const mpz_class& n) { return factorize(n).radical(); }

unsigned omega_of(const mpz_class& n) { return factorize(n).omega(); }

mpz_class greatest_prime_factor_of(const mpz_class& n) {
  return factorize(n).greatest_prime_factor();
}

unsigned ord_p(const mpz_class& n, const mpz_class& p) {
  if (n == 0) throw std::domain_error("ord_p: n must be >= 1");
  if (!is_prime_z(p)) throw std::domain_error("ord_p: p is not prime");
  unsigned e = 0;
  mpz_class m = n;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  return e;
}

mpz_class gcd_z(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

bool coprime3(const mpz_class& a, const mpz_class& b, const mpz_class& c) {
  return gcd_z(a, b) == 1 && gcd_z(a, c) == 1 && gcd_z(b, c) == 1;
}

}  // namespace abcv
