// vreal.cpp -- interval endpoint arithmetic on MPFR.

#include "abcv/vreal.hpp"

#include <atomic>
#include <cctype>
#include <cstdio>
#include <cstring>

namespace abcv {

namespace {
std::atomic<long> g_default_prec{kDefaultPrec};
}

mpfr_prec_t default_prec() { return (mpfr_prec_t)g_default_prec.load(); }
void set_default_prec(mpfr_prec_t p) {
  if (p < 24 || p > (1 << 24)) throw std::invalid_argument("precision out of range");
  g_default_prec.store((long)p);
}

VReal::VReal() : VReal(default_prec()) {}

VReal::VReal(mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_nan(lo_);
  mpfr_set_nan(hi_);
}

VReal::VReal(const VReal& o) {
  mpfr_init2(lo_, mpfr_get_prec(o.lo_));
  mpfr_init2(hi_, mpfr_get_prec(o.hi_));
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

VReal::VReal(VReal&& o) noexcept {
  mpfr_init2(lo_, 24);
  mpfr_init2(hi_, 24);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

VReal& VReal::operator=(const VReal& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, mpfr_get_prec(o.lo_));
    mpfr_set_prec(hi_, mpfr_get_prec(o.hi_));
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

VReal& VReal::operator=(VReal&& o) noexcept {
  if (this != &o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }
  return *this;
}

VReal::~VReal() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

VReal VReal::point(long v, mpfr_prec_t prec) {
  VReal r(prec);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

VReal VReal::of_z(const mpz_class& z, mpfr_prec_t prec) {
  VReal r(prec);
  mpfr_set_z(r.lo_, z.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, z.get_mpz_t(), MPFR_RNDU);
  return r;
}

VReal VReal::of_q(const mpq_class& q, mpfr_prec_t prec) {
  VReal r(prec);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

VReal VReal::neg_infinity(mpfr_prec_t prec) {
  VReal r(prec);
  mpfr_set_inf(r.lo_, -1);
  mpfr_set_inf(r.hi_, -1);
  return r;
}

bool VReal::valid() const {
  if (mpfr_nan_p(lo_) || mpfr_nan_p(hi_)) return false;
  return mpfr_cmp(lo_, hi_) <= 0;
}

bool VReal::is_neg_inf() const {
  return mpfr_inf_p(hi_) && mpfr_sgn(hi_) < 0;
}

double VReal::mid_d() const {
  return (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)) / 2.0;
}

double VReal::rad_d() const {
  mpfr_t t;
  mpfr_init2(t, 64);
  mpfr_sub(t, hi_, lo_, MPFR_RNDU);
  mpfr_div_2ui(t, t, 1, MPFR_RNDU);
  double r = mpfr_get_d(t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

namespace {
std::string fmt_mpfr(mpfr_srcptr v, int digits) {
  char* s = nullptr;
  if (mpfr_asprintf(&s, "%.*Rg", digits, v) < 0) return "?";
  std::string out(s);
  mpfr_free_str(s);
  return out;
}
}  // namespace

std::string VReal::mid_str(int digits) const {
  mpfr_t m;
  mpfr_init2(m, mpfr_get_prec(lo_) + 8);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  std::string out = fmt_mpfr(m, digits);
  mpfr_clear(m);
  return out;
}

std::string VReal::rad_str(int digits) const {
  mpfr_t t;
  mpfr_init2(t, 64);
  mpfr_sub(t, hi_, lo_, MPFR_RNDU);
  mpfr_div_2ui(t, t, 1, MPFR_RNDU);
  std::string out = fmt_mpfr(t, digits);
  mpfr_clear(t);
  return out;
}

std::string VReal::str(int digits) const {
  return mid_str(digits) + " +- " + rad_str(3);
}

bool VReal::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool VReal::contains_q(const mpq_class& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool VReal::inside(const VReal& outer) const {
  return mpfr_cmp(outer.lo(), lo_) <= 0 && mpfr_cmp(hi_, outer.hi()) <= 0;
}

VReal VReal::meet(const VReal& o, mpfr_prec_t prec) const {
  VReal r(prec);
  mpfr_max(r.lo_mut(), lo_, o.lo(), MPFR_RNDD);
  mpfr_min(r.hi_mut(), hi_, o.hi(), MPFR_RNDU);
  if (!r.valid()) throw std::logic_error("meet of disjoint enclosures");
  return r;
}

VReal vadd(const VReal& a, const VReal& b, mpfr_prec_t prec) {
  VReal r(prec);
  mpfr_add(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_add(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

VReal vsub(const VReal& a, const VReal& b, mpfr_prec_t prec) {
  VReal r(prec);
  mpfr_sub(r.lo_mut(), a.lo(), b.hi(), MPFR_RNDD);
  mpfr_sub(r.hi_mut(), a.hi(), b.lo(), MPFR_RNDU);
  return r;
}

VReal vneg(const VReal& a, mpfr_prec_t prec) {
  VReal r(prec);
  mpfr_neg(r.lo_mut(), a.hi(), MPFR_RNDD);
  mpfr_neg(r.hi_mut(), a.lo(), MPFR_RNDU);
  return r;
}

VReal vmul(const VReal& a, const VReal& b, mpfr_prec_t prec) {
  VReal r(prec);
  // fast path: both intervals nonnegative (the overwhelmingly common case)
  if (mpfr_sgn(a.lo()) >= 0 && mpfr_sgn(b.lo()) >= 0) {
    mpfr_mul(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_mul(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
    return r;
  }
  mpfr_t c, best_lo, best_hi;
  mpfr_init2(c, prec);
  mpfr_init2(best_lo, prec);
  mpfr_init2(best_hi, prec);
  mpfr_srcptr xs[2] = {a.lo(), a.hi()};
  mpfr_srcptr ys[2] = {b.lo(), b.hi()};
  bool first = true;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      mpfr_mul(c, xs[i], ys[j], MPFR_RNDD);
      if (first || mpfr_cmp(c, best_lo) < 0) mpfr_set(best_lo, c, MPFR_RNDD);
      mpfr_mul(c, xs[i], ys[j], MPFR_RNDU);
      if (first || mpfr_cmp(c, best_hi) > 0) mpfr_set(best_hi, c, MPFR_RNDU);
      first = false;
    }
  mpfr_set(r.lo_mut(), best_lo, MPFR_RNDD);
  mpfr_set(r.hi_mut(), best_hi, MPFR_RNDU);
  mpfr_clear(c);
  mpfr_clear(best_lo);
  mpfr_clear(best_hi);
  return r;
}

VReal vdiv(const VReal& a, const VReal& b, mpfr_prec_t prec) {
  if (b.contains_zero()) throw std::domain_error("vdiv: divisor encloses zero");
  VReal r(prec);
  if (mpfr_sgn(a.lo()) >= 0 && mpfr_sgn(b.lo()) > 0) {
    mpfr_div(r.lo_mut(), a.lo(), b.hi(), MPFR_RNDD);
    mpfr_div(r.hi_mut(), a.hi(), b.lo(), MPFR_RNDU);
    return r;
  }
  mpfr_t c, best_lo, best_hi;
  mpfr_init2(c, prec);
  mpfr_init2(best_lo, prec);
  mpfr_init2(best_hi, prec);
  mpfr_srcptr xs[2] = {a.lo(), a.hi()};
  mpfr_srcptr ys[2] = {b.lo(), b.hi()};
  bool first = true;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      mpfr_div(c, xs[i], ys[j], MPFR_RNDD);
      if (first || mpfr_cmp(c, best_lo) < 0) mpfr_set(best_lo, c, MPFR_RNDD);
      mpfr_div(c, xs[i], ys[j], MPFR_RNDU);
      if (first || mpfr_cmp(c, best_hi) > 0) mpfr_set(best_hi, c, MPFR_RNDU);
      first = false;
    }
  mpfr_set(r.lo_mut(), best_lo, MPFR_RNDD);
  mpfr_set(r.hi_mut(), best_hi, MPFR_RNDU);
  mpfr_clear(c);
  mpfr_clear(best_lo);
  mpfr_clear(best_hi);
  return r;
}

VReal vsqrt(const VReal& a, mpfr_prec_t prec) {
  if (mpfr_sgn(a.lo()) < 0) throw std::domain_error("vsqrt: negative operand");
  VReal r(prec);
  mpfr_sqrt(r.lo_mut(), a.lo(), MPFR_RNDD);
  mpfr_sqrt(r.hi_mut(), a.hi(), MPFR_RNDU);
  return r;
}

VReal vlog(const VReal& a, mpfr_prec_t prec) {
  if (mpfr_sgn(a.lo()) <= 0) throw std::domain_error("vlog: operand not positive");
  VReal r(prec);
  mpfr_log(r.lo_mut(), a.lo(), MPFR_RNDD);
  mpfr_log(r.hi_mut(), a.hi(), MPFR_RNDU);
  return r;
}

VReal vexp(const VReal& a, mpfr_prec_t prec) {
  VReal r(prec);
  mpfr_exp(r.lo_mut(), a.lo(), MPFR_RNDD);
  mpfr_exp(r.hi_mut(), a.hi(), MPFR_RNDU);
  return r;
}

VReal vpow_ui(const VReal& a, unsigned long e, mpfr_prec_t prec) {
  if (mpfr_sgn(a.lo()) < 0) throw std::domain_error("vpow_ui: negative base");
  VReal r(prec);
  mpfr_pow_ui(r.lo_mut(), a.lo(), e, MPFR_RNDD);
  mpfr_pow_ui(r.hi_mut(), a.hi(), e, MPFR_RNDU);
  return r;
}

VReal vpow_q(const VReal& a, const mpq_class& e, mpfr_prec_t prec) {
  return vexp(vmul_q(vlog(a, prec), e, prec), prec);
}

VReal vlog_z(const mpz_class& z, mpfr_prec_t prec) {
  if (z < 1) throw std::domain_error("vlog_z: operand < 1");
  VReal r(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_set_z(t, z.get_mpz_t(), MPFR_RNDD);
  mpfr_log(r.lo_mut(), t, MPFR_RNDD);
  mpfr_set_z(t, z.get_mpz_t(), MPFR_RNDU);
  mpfr_log(r.hi_mut(), t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

VReal vlog_ui(unsigned long n, mpfr_prec_t prec) {
  if (n < 1) throw std::domain_error("vlog_ui: operand < 1");
  VReal r(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_set_ui(t, n, MPFR_RNDN);  // exact for n < 2^prec
  mpfr_log(r.lo_mut(), t, MPFR_RNDD);
  mpfr_log(r.hi_mut(), t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

VReal vpi(mpfr_prec_t prec) {
  VReal r(prec);
  mpfr_const_pi(r.lo_mut(), MPFR_RNDD);
  mpfr_const_pi(r.hi_mut(), MPFR_RNDU);
  return r;
}

VReal vmul_q(const VReal& a, const mpq_class& q, mpfr_prec_t prec) {
  return vmul(a, VReal::of_q(q, prec), prec);
}

VReal vadd_q(const VReal& a, const mpq_class& q, mpfr_prec_t prec) {
  return vadd(a, VReal::of_q(q, prec), prec);
}

VReal vsub_q(const VReal& a, const mpq_class& q, mpfr_prec_t prec) {
  return vsub(a, VReal::of_q(q, prec), prec);
}

Tri vgt(const VReal& a, const VReal& b) {
  if (mpfr_cmp(a.lo(), b.hi()) > 0) return Tri::yes;
  if (mpfr_cmp(a.hi(), b.lo()) <= 0) return Tri::no;
  return Tri::unknown;
}

Tri vge(const VReal& a, const VReal& b) {
  if (mpfr_cmp(a.lo(), b.hi()) >= 0) return Tri::yes;
  if (mpfr_cmp(a.hi(), b.lo()) < 0) return Tri::no;
  return Tri::unknown;
}

Tri vlt(const VReal& a, const VReal& b) { return vgt(b, a); }
Tri vle(const VReal& a, const VReal& b) { return vge(b, a); }

Tri vgt_q(const VReal& a, const mpq_class& q) {
  if (mpfr_cmp_q(a.lo(), q.get_mpq_t()) > 0) return Tri::yes;
  if (mpfr_cmp_q(a.hi(), q.get_mpq_t()) <= 0) return Tri::no;
  return Tri::unknown;
}

Tri vge_q(const VReal& a, const mpq_class& q) {
  if (mpfr_cmp_q(a.lo(), q.get_mpq_t()) >= 0) return Tri::yes;
  if (mpfr_cmp_q(a.hi(), q.get_mpq_t()) < 0) return Tri::no;
  return Tri::unknown;
}

Tri vlt_q(const VReal& a, const mpq_class& q) {
  if (mpfr_cmp_q(a.hi(), q.get_mpq_t()) < 0) return Tri::yes;
  if (mpfr_cmp_q(a.lo(), q.get_mpq_t()) >= 0) return Tri::no;
  return Tri::unknown;
}

Tri vle_q(const VReal& a, const mpq_class& q) {
  if (mpfr_cmp_q(a.hi(), q.get_mpq_t()) <= 0) return Tri::yes;
  if (mpfr_cmp_q(a.lo(), q.get_mpq_t()) > 0) return Tri::no;
  return Tri::unknown;
}

Tri vfloor(const VReal& a, mpz_class* out) {
  if (!a.valid() || mpfr_inf_p(a.lo()) || mpfr_inf_p(a.hi())) return Tri::unknown;
  mpz_class flo, fhi;
  mpfr_get_z(flo.get_mpz_t(), a.lo(), MPFR_RNDD);
  mpfr_get_z(fhi.get_mpz_t(), a.hi(), MPFR_RNDD);
  if (flo == fhi) {
    if (out) *out = flo;
    return Tri::yes;
  }
  return Tri::unknown;
}

mpq_class parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  for (char ch : s) {
    if (!(std::isdigit((unsigned char)ch) || ch == '/' || ch == '-' || ch == '+'))
      throw std::invalid_argument("rational must be p/q or integer, got: " + s);
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

}  // namespace abcv
