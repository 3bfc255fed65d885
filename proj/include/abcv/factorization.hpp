// factorization.hpp -- exact integer multiplicative functions: prime
// factorization, radical N(n), omega(n), greatest prime factor P(n), ord_p.
// All arithmetic here is exact (GMP integers); nothing in this module
// touches floating point.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace abcv {

struct Factorization {
  mpz_class value;
  // (prime, exponent), primes strictly increasing, exponents >= 1
  std::vector<std::pair<mpz_class, unsigned>> factors;

  mpz_class radical() const;
  unsigned omega() const { return (unsigned)factors.size(); }
  mpz_class greatest_prime_factor() const;  // P(1) = 1
  // product of prime^exponent; identity with `value` is an invariant
  mpz_class reconstruct() const;
  bool check_invariants() const;
};

class NotFactoredError : public std::runtime_error {
 public:
  explicit NotFactoredError(const std::string& m) : std::runtime_error(m) {}
};

// Trial division against an internal (lazily grown) prime list, then a
// strong probable-prime check on the residual.  Throws std::domain_error for
// n = 0 and NotFactoredError when a composite residual resists desk-scale
// trial division.  The prime source is swappable: pass a custom list.
Factorization factorize(const mpz_class& n);
Factorization factorize_with(const mpz_class& n, const std::vector<uint32_t>& primes);

mpz_class radical_of(const mpz_class& n);
unsigned omega_of(const mpz_class& n);
mpz_class greatest_prime_factor_of(const mpz_class& n);
// exact exponent of the prime p in n; throws if p is not prime or n = 0
unsigned ord_p(const mpz_class& n, const mpz_class& p);

mpz_class gcd_z(const mpz_class& a, const mpz_class& b);
bool coprime3(const mpz_class& a, const mpz_class& b, const mpz_class& c);

// strong probable-prime check (BPSW via GMP); exact for word-size inputs
bool is_prime_z(const mpz_class& n);

}  // namespace abcv
