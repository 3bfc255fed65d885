// baker.hpp -- the explicit abc-conjecture apparatus: the X0 threshold
// function, the omega_1 / omega_eps indices, N_eps and kappa_eps, the
// conjectured bound (6/5) N (log N)^omega / omega!, and the certification of
// (log N)^omega / omega! < (5/6) N^{3/4} for all N >= 1.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abcv/factorization.hpp"
#include "abcv/primes.hpp"
#include "abcv/report.hpp"
#include "abcv/vreal.hpp"

namespace abcv {

// X0(i) = log i + loglog i - 1.076869, with X0(1) = -inf by the
// loglog 1 = -inf convention.  i = 0 is a domain error.
VReal baker_X0(uint64_t i, mpfr_prec_t prec);

struct Omega1Result {
  uint64_t omega1 = 0;
  // eps*X0 - log X0 is increasing once X0 >= 1/eps; this flag certifies the
  // "for all omega >= omega1" quantifier
  bool monotone_certified = false;
  VReal condition_margin;       // eps*X0(w1) - log X0(w1) - 1 >= 0
  VReal x0_minus_inv_eps;       // X0(w1) - 1/eps >= 0
  Tri condition_fails_before = Tri::unknown;  // at omega1 - 1
};

// Smallest omega1 >= 5 with eps*X0(omega) - log X0(omega) >= 1 for all
// omega >= omega1.  Throws on eps outside (0, 3/4] or when the scan exceeds
// `cap` (resource error).
Omega1Result compute_omega1(const mpq_class& eps, mpfr_prec_t prec,
                            uint64_t cap = 1000000);

struct OmegaCondMargins {
  uint64_t omega = 0;
  // theta(p_w) - w/eps and the log of cond2:
  // log w! + eps*theta(p_w) - w*log theta(p_w) - log sqrt(2 pi w)
  VReal theta_margin;
  VReal cond2_margin;
  Status status = Status::PASS;
};

struct EpsilonEntry {
  mpq_class epsilon;
  bool fallback = false;  // eps >= 3/4 trivial entry: N_eps = kappa_eps = 1
  uint64_t omega1 = 0;
  uint64_t omega_eps = 0;
  VReal log_N_eps;  // theta(p_{omega_eps})
  Status status = Status::PASS;
  std::vector<OmegaCondMargins> range;            // every omega in [w_eps, w1]
  std::optional<OmegaCondMargins> below_minimal;  // failure at w_eps - 1
  std::vector<std::string> reference_diffs;       // vs published table values

  // kappa_eps(omega) = 6 / (5 sqrt(2 pi max(omega, omega_eps)));   1 for the
  // fallback entry
  VReal kappa_at(uint64_t omega_of_N, mpfr_prec_t prec) const;
};

EpsilonEntry make_fallback_entry(const mpq_class& eps);

// The full entry computation: omega1 scan, then the downward sweep locating
// the smallest omega_eps <= omega1 such that both exact conditions hold on
// all of [omega_eps, omega1].  Requires the table to cover p_{omega1}.
EpsilonEntry compute_epsilon_entry(const mpq_class& eps, const PrimeTable& table,
                                   mpfr_prec_t prec);

// published reference row, when one exists for this epsilon
struct ReferenceRow {
  const char* eps;
  long omega_eps_printed;
  long omega_eps_alt;     // second printed value when the sources disagree
  const char* log_N_printed;
  const char* tol;        // half-ulp of the printed log N
};
const ReferenceRow* reference_row(const mpq_class& eps);

// log-factorial enclosure; exact integer factorial for w <= 200, verified
// prefix sums of log j above
VReal log_factorial(uint64_t w, mpfr_prec_t prec);

// (6/5) N (log N)^omega / omega!  for N >= 2 (domain error at N = 1)
VReal baker_bound(const Factorization& N, mpfr_prec_t prec);

// certifies (log N)^omega / omega! < (5/6) N^{3/4} for all N >= 1 by the
// finite case split (omega in [4,14) conditions; omega in {1,2,3} boundary
// checks plus exact enumerations {2,3}, {6,10,12,14}, {30,42}; N = 1)
VerificationReport verify_three_quarter_inequality(const PrimeTable& table,
                                                   mpfr_prec_t prec);

struct AbcCheckResult {
  mpz_class a, b, c, N;
  unsigned omega = 0;
  VReal baker;    // (6/5) N (log N)^w / w!
  VReal n_7_4;    // N^{7/4}
  VReal quality;  // log c / log N
  Tri c_lt_baker = Tri::unknown;
  bool c_lt_n74 = false;  // decided exactly: c^4 < N^7
};

// preconditions: a,b,c >= 1 pairwise coprime with a + b = c; violations
// raise std::domain_error naming the failed condition
AbcCheckResult explicit_abc_check(const mpz_class& a, const mpz_class& b,
                                  const mpz_class& c, mpfr_prec_t prec);

}  // namespace abcv
