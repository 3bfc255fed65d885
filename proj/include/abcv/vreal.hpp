// vreal.hpp -- verified real enclosures with outward (directed) rounding.
//
// A VReal is a closed interval [lo, hi] guaranteed to contain the exact real
// value it stands for.  Every operation rounds the lower endpoint toward
// -inf and the upper endpoint toward +inf, so enclosures are preserved under
// composition.  Endpoints are MPFR numbers; MPFR's correct rounding makes
// each endpoint operation exact-then-rounded in the stated direction.

#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace abcv {

inline constexpr mpfr_prec_t kDefaultPrec = 120;
inline constexpr int kMaxPrecisionRetries = 4;

mpfr_prec_t default_prec();
void set_default_prec(mpfr_prec_t p);

// Three-valued comparison outcome. `unknown` means the enclosures overlap
// the threshold; callers retry at higher precision or report UNDECIDED.
enum class Tri { yes, no, unknown };

class VReal {
 public:
  VReal();
  explicit VReal(mpfr_prec_t prec);
  VReal(const VReal& o);
  VReal(VReal&& o) noexcept;
  VReal& operator=(const VReal& o);
  VReal& operator=(VReal&& o) noexcept;
  ~VReal();

  static VReal point(long v, mpfr_prec_t prec);
  static VReal of_z(const mpz_class& z, mpfr_prec_t prec);
  static VReal of_q(const mpq_class& q, mpfr_prec_t prec);
  static VReal neg_infinity(mpfr_prec_t prec);

  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  mpfr_ptr lo_mut() { return lo_; }
  mpfr_ptr hi_mut() { return hi_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }

  bool valid() const;
  bool is_neg_inf() const;
  double mid_d() const;
  double rad_d() const;
  double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  std::string mid_str(int digits = 12) const;
  std::string rad_str(int digits = 3) const;
  std::string str(int digits = 12) const;
  bool contains_zero() const;
  bool contains_q(const mpq_class& q) const;
  // true when *this is a subset of `outer` (used by the soundness suite)
  bool inside(const VReal& outer) const;
  // intersection with another valid enclosure of the same quantity
  VReal meet(const VReal& o, mpfr_prec_t prec) const;

 private:
  mpfr_t lo_, hi_;
};

VReal vadd(const VReal& a, const VReal& b, mpfr_prec_t prec);
VReal vsub(const VReal& a, const VReal& b, mpfr_prec_t prec);
VReal vmul(const VReal& a, const VReal& b, mpfr_prec_t prec);
VReal vdiv(const VReal& a, const VReal& b, mpfr_prec_t prec);
VReal vneg(const VReal& a, mpfr_prec_t prec);
VReal vsqrt(const VReal& a, mpfr_prec_t prec);
VReal vlog(const VReal& a, mpfr_prec_t prec);
VReal vexp(const VReal& a, mpfr_prec_t prec);
VReal vpow_ui(const VReal& a, unsigned long e, mpfr_prec_t prec);  // a >= 0
VReal vpow_q(const VReal& a, const mpq_class& e, mpfr_prec_t prec);  // a > 0
VReal vlog_z(const mpz_class& z, mpfr_prec_t prec);  // z >= 1
VReal vlog_ui(unsigned long n, mpfr_prec_t prec);
VReal vpi(mpfr_prec_t prec);
VReal vmul_q(const VReal& a, const mpq_class& q, mpfr_prec_t prec);
VReal vadd_q(const VReal& a, const mpq_class& q, mpfr_prec_t prec);
VReal vsub_q(const VReal& a, const mpq_class& q, mpfr_prec_t prec);

// set-semantics comparisons: `yes`/`no` are certain, `unknown` is overlap
Tri vgt(const VReal& a, const VReal& b);
Tri vge(const VReal& a, const VReal& b);
Tri vlt(const VReal& a, const VReal& b);
Tri vle(const VReal& a, const VReal& b);
Tri vgt_q(const VReal& a, const mpq_class& q);
Tri vge_q(const VReal& a, const mpq_class& q);
Tri vlt_q(const VReal& a, const mpq_class& q);
Tri vle_q(const VReal& a, const mpq_class& q);

// floor decision; `yes` stores the unique floor of every point of `a`
Tri vfloor(const VReal& a, mpz_class* out);

// "p/q" or plain integer; decimals are rejected so inputs stay exact
mpq_class parse_rational(const std::string& s);

// Evaluates `f` at prec, 2*prec, ... (kMaxPrecisionRetries doublings) until
// the comparison is decided.
template <class F>
Tri decide_with_retry(F&& f, mpfr_prec_t base_prec,
                      int retries = kMaxPrecisionRetries) {
  mpfr_prec_t p = base_prec;
  for (int i = 0; i <= retries; ++i, p *= 2) {
    Tri t = f(p);
    if (t != Tri::unknown) return t;
  }
  return Tri::unknown;
}

}  // namespace abcv
