// diophantine.hpp -- exhaustive exact-integer searches and exponent
// arithmetic for the base-change repunit equation, the generalized Fermat
// equation, and the two-repunit (Goormaghtigh) equation.  Every accept or
// reject decision in this module is made with exact integer or rational
// arithmetic; no search outcome depends on floating point.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "abcv/primes.hpp"
#include "abcv/report.hpp"
#include "abcv/vreal.hpp"

namespace abcv {

// ---- y^q = (x^n - 1)/(x - 1) ----------------------------------------------

struct RepunitPowerSolution {
  uint64_t x = 0;
  mpz_class y;
  unsigned n = 0, q = 0;
};

// exhaustive over 2 <= x <= x_max, 2 < n <= n_max, 1 < q <= q_max, y > 1;
// perfect powers detected by exact integer root extraction
std::vector<RepunitPowerSolution> nagell_ljunggren_search(uint64_t x_max,
                                                          unsigned n_max,
                                                          unsigned q_max);

// exact-rational replay of the exponent chain that caps n at 8 (against the
// n >= 11 hypothesis): (7/4)(2 + n/3) = 7/2 + 7n/12 and n < 7/2 + 7n/12
// iff n < 42/5
VerificationReport nalu_exponent_check();

// ---- x^p + y^q = z^r -------------------------------------------------------

// exponent entries are 4 or an odd prime; stored sorted ascending
struct Signature {
  std::array<int, 3> e{0, 0, 0};
  mpq_class chi() const;  // 1/p + 1/q + 1/r - 1
  std::string str() const;
  auto operator<=>(const Signature&) const = default;
};

Signature make_signature(int p, int q, int r);
bool valid_entry(int v);  // 4 or an odd prime >= 3

struct FermatCatalanWitness {
  Signature sig;
  mpz_class x, y, z;
  bool operator<(const FermatCatalanWitness& o) const {
    if (sig != o.sig) return sig < o.sig;
    if (x != o.x) return x < o.x;
    if (y != o.y) return y < o.y;
    return z < o.z;
  }
  bool operator==(const FermatCatalanWitness& o) const {
    return sig == o.sig && x == o.x && y == o.y && z == o.z;
  }
};

// exhaustive search for nontrivial primitive solutions with
// max(x^p, y^q, z^r) <= power_max over the given signatures (ordered
// triples; x and y swap freely when p = q)
std::vector<FermatCatalanWitness> fermat_catalan_search(
    uint64_t power_max, const std::vector<Signature>& signatures);

// every signature with entries in {4} u odd primes, min entry >= 3, that can
// fit a solution below power_max (exponents capped by 2^e <= power_max)
std::vector<Signature> all_min3_signatures(uint64_t power_max);

struct ResidualResult {
  // finite survivors of the 4/7 filter minus the solved families,
  // partitioned by the 71/105 comparison
  std::vector<Signature> bounded;        // sum <= 71/105: max power < e^{1758.3353}
  std::vector<Signature> inconclusive;   // sum > 71/105: filter gives nothing
  std::string parametric_34;             // the surviving [3,4,p] tail
  std::string family_33_large;           // [3,3,p] for p beyond the solved cap
  std::vector<Signature> survivors_not_in_q;  // structured diff vs printed Q
  std::vector<Signature> q_solved_members;    // printed Q entries already solved
  VReal bound_log;                       // (7/4) log N_{34/71}
  VerificationReport report;
};

ResidualResult fermat_catalan_residual(const PrimeTable& table, mpfr_prec_t prec);

// ---- (x^m - 1)/(x - 1) = (y^n - 1)/(y - 1) ---------------------------------

struct RepunitPairWitness {
  mpz_class x, y;
  unsigned m = 0, n = 0;
  mpz_class value;
  bool n_gt_3 = false;  // which witnesses meet the stricter n > 3 bound
};

// exhaustive over 2 <= y <= y_max, 3 <= m < n <= n_max with x > y recovered
// by exact (m-1)-th root bracketing
std::vector<RepunitPairWitness> goormaghtigh_search(uint64_t y_max, unsigned n_max);

struct GoormaghtighExponentTable {
  mpq_class epsilon;
  unsigned m_max = 0;  // from m < 4 + 5 eps
  struct NRange {
    unsigned m = 0;
    bool bounded = false;  // the chain bounds n only when m > 3 + 3 eps
    unsigned n_min = 0, n_max = 0;
  };
  std::vector<NRange> ranges;
  VerificationReport report;  // includes the fixed eliminations and branches
};

// exact-rational replay: m < 4 + 5 eps; per-m bound on n; the two m = 7
// eliminations at eps = 3/4; the eps = 1/18 branch (m in {3,4}, n < 5 at
// m = 4); the eps = 1/12, m = 3, n >= 6 branch (n < 6)
GoormaghtighExponentTable goormaghtigh_exponent_table(const mpq_class& eps);

// m = 6, n in {11, 16}: exhaustive refutation for y up to the cited caps
// (y <= 8 resp. y <= 15) and all y < x <= floor(v^{1/5})
VerificationReport goormaghtigh_finite_elimination();

// m = 3 checks: (a) gcd(f, f') = 1 for f = 4(y^3+y^2+y)+1 over Q;
// (b) the quartic identity linking the m = 3 equation to its Pell-like
// form, sampled exactly; (c) the G = gcd(4y^n, (y-1)(2x+1)^2, 3y+1) formula
// by residue class of y, sampled exactly
VerificationReport goormaghtigh_m3_checks(uint64_t samples, uint64_t seed);

// shared helper: (b^n - 1)/(b - 1)
mpz_class repunit(const mpz_class& base, unsigned n);

}  // namespace abcv
