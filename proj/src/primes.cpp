// primes.cpp

#include "abcv/primes.hpp"

#include <algorithm>
#include <chrono>

#include "abcv/parallel.hpp"

namespace abcv {

PrimeTable::PrimeTable(uint64_t limit, mpfr_prec_t prec)
    : limit_(limit), prec_(prec) {
  if (limit < 2) throw std::invalid_argument("PrimeTable: limit must be >= 2");
  if (limit > kMaxLimit)
    throw std::length_error("PrimeTable: limit exceeds memory budget");
  std::vector<uint8_t> comp(limit + 1, 0);
  for (uint64_t i = 2; i * i <= limit; ++i)
    if (!comp[i])
      for (uint64_t j = i * i; j <= limit; j += i) comp[j] = 1;
  for (uint64_t i = 2; i <= limit; ++i)
    if (!comp[i]) primes_.push_back((uint32_t)i);
  theta_prefix(prec_);
}

uint64_t PrimeTable::nth_prime(std::size_t i) const {
  if (i < 1 || i > primes_.size())
    throw std::out_of_range("nth_prime: index beyond table; rebuild larger");
  return primes_[i - 1];
}

std::size_t PrimeTable::prime_count(uint64_t x) const {
  if (x > limit_)
    throw std::out_of_range("prime_count: x beyond table; rebuild larger");
  auto it = std::upper_bound(primes_.begin(), primes_.end(), x);
  return (std::size_t)(it - primes_.begin());
}

VReal PrimeTable::theta(uint64_t x) const {
  std::size_t k = prime_count(x);
  return log_primorial(k);
}

VReal PrimeTable::log_primorial(std::size_t i) const {
  return log_primorial_at(i, prec_);
}

VReal PrimeTable::log_primorial_at(std::size_t i, mpfr_prec_t prec) const {
  if (i > primes_.size())
    throw std::out_of_range("log_primorial: index beyond table; rebuild larger");
  if (i == 0) return VReal::point(0, prec);
  return theta_prefix(prec)[i - 1];
}

mpz_class PrimeTable::primorial_exact(std::size_t i) const {
  if (i > kPrimorialExactCap)
    throw std::out_of_range("primorial_exact: exact products kept to small indices");
  if (i > primes_.size()) throw std::out_of_range("primorial_exact: beyond table");
  mpz_class r = 1;
  for (std::size_t j = 0; j < i; ++j) r *= primes_[j];
  return r;
}

const std::vector<VReal>& PrimeTable::theta_prefix(mpfr_prec_t prec) const {
  std::lock_guard<std::mutex> lk(*cache_mu_);
  auto it = prefix_cache_.find(prec);
  if (it != prefix_cache_.end()) return *it->second;
  auto vec = std::make_unique<std::vector<VReal>>();
  vec->reserve(primes_.size());
  VReal acc = VReal::point(0, prec);
  for (uint32_t p : primes_) {
    acc = vadd(acc, vlog_ui(p, prec), prec);
    vec->push_back(acc);
  }
  auto& slot = prefix_cache_[prec];
  slot = std::move(vec);
  return *slot;
}

// ---------------------------------------------------------------------------
// Lemma-1-style estimate sweeps

namespace {

struct SweepMin {
  bool has = false;
  VReal slack;       // enclosure of the smallest slack seen
  uint64_t arg = 0;  // witness point
  uint64_t arg2 = 0;

  void update(const VReal& s, uint64_t a, uint64_t a2, mpfr_prec_t prec) {
    if (!has) {
      slack = s;
      arg = a;
      arg2 = a2;
      has = true;
      return;
    }
    // track the pointwise min of both endpoints so the final interval
    // encloses min over the sweep of the true slack
    VReal m(prec);
    mpfr_min(m.lo_mut(), slack.lo(), s.lo(), MPFR_RNDD);
    mpfr_min(m.hi_mut(), slack.hi(), s.hi(), MPFR_RNDU);
    if (mpfr_cmp(s.lo(), slack.lo()) < 0) {
      arg = a;
      arg2 = a2;
    }
    slack = m;
  }

  void merge(const SweepMin& o, mpfr_prec_t prec) {
    if (!o.has) return;
    update(o.slack, o.arg, o.arg2, prec);
  }
};

struct SweepResult {
  SweepMin min;
  Status status = Status::PASS;
  uint64_t bad = 0, bad2 = 0;  // first violating / undecided point
};

void merge_sweep(SweepResult& into, const SweepResult& part, mpfr_prec_t prec) {
  into.min.merge(part.min, prec);
  if (part.status == Status::FAIL && into.status != Status::FAIL) {
    into.status = Status::FAIL;
    into.bad = part.bad;
    into.bad2 = part.bad2;
  } else if (part.status == Status::UNDECIDED && into.status == Status::PASS) {
    into.status = Status::UNDECIDED;
    into.bad = part.bad;
    into.bad2 = part.bad2;
  }
}

const mpq_class kDusartPiC{"6381/5000"};          // 1.2762
const mpq_class kRobinC{"1076869/1000000"};       // 1.076869
const mpq_class kDusartThetaC{"1000081/1000000"}; // 1.000081

// slack of (i) at integer x: x/log x (1 + 1.2762/log x) - pi(x)
VReal slack_pi_upper(uint64_t x, uint64_t pi_x, mpfr_prec_t prec) {
  VReal L = vlog_ui(x, prec);
  VReal f = vmul(vdiv(VReal::point((long)x, prec), L, prec),
                 vadd_q(vdiv(VReal::of_q(kDusartPiC, prec), L, prec), 1, prec), prec);
  return vsub(f, VReal::point((long)pi_x, prec), prec);
}

// slack of (ii)/(iii) at index i with the given subtracted constant and
// left-hand side (p_i resp. theta(p_i))
VReal slack_nth_lower(uint64_t i, const VReal& lhs, const mpq_class& c,
                      mpfr_prec_t prec) {
  VReal X = vlog_ui(i, prec);
  VReal rhs = vmul(VReal::point((long)i, prec),
                   vsub_q(vadd(X, vlog(X, prec), prec), c, prec), prec);
  return vsub(lhs, rhs, prec);
}

uint64_t legendre_ord(uint64_t k, uint64_t p) {
  uint64_t s = 0;
  for (uint64_t q = p; q <= k; q *= p) {
    s += k / q;
    if (q > k / p) break;  // avoid overflow on q *= p
  }
  return s;
}

}  // namespace

VerificationReport verify_lemma1(const PrimeTable& table, const Lemma1Spec& spec,
                                 mpfr_prec_t prec, unsigned threads) {
  auto t0 = std::chrono::steady_clock::now();
  if (spec.x_max > table.limit())
    throw std::out_of_range("verify_lemma1: x_max beyond table");
  VerificationReport rep;
  rep.check_name = "prime_estimates";
  rep.provenance =
      "pi/theta/nth-prime/factorial estimates (Dusart; Robin; Legendre; Robbins)";

  const auto& primes = table.primes();
  const std::size_t n_primes = table.prime_count(spec.x_max);
  const auto& prefix = table.theta_prefix(prec);

  // ---- (i): integer sweep, pi carried along per chunk -----------------
  {
    const uint64_t lo = 2, hi = spec.x_max;
    const uint64_t chunk = 65536;
    const std::size_t n_chunks = (hi - lo) / chunk + 1;
    auto parts = parallel_map<SweepResult>(n_chunks, threads, [&](std::size_t ci) {
      SweepResult r;
      uint64_t a = lo + ci * chunk;
      uint64_t b = std::min(hi, a + chunk - 1);
      uint64_t pi_x = table.prime_count(a - 1);
      std::size_t next_p = pi_x;  // index into primes of next prime >= a
      for (uint64_t x = a; x <= b; ++x) {
        if (next_p < primes.size() && primes[next_p] == x) {
          ++pi_x;
          ++next_p;
        }
        VReal s = slack_pi_upper(x, pi_x, prec);
        Tri pos = vgt_q(s, 0);
        if (pos == Tri::unknown) {
          uint64_t px = pi_x;
          pos = decide_with_retry(
              [&](mpfr_prec_t p2) { return vgt_q(slack_pi_upper(x, px, p2), 0); },
              prec * 2);
        }
        if (pos != Tri::yes) {
          r.status = pos == Tri::no ? Status::FAIL : Status::UNDECIDED;
          r.bad = x;
          return r;
        }
        r.min.update(s, x, 0, prec);
      }
      return r;
    });
    SweepResult total;
    for (const auto& p : parts) merge_sweep(total, p, prec);
    Assertion a;
    a.label = "pi_upper_dusart";
    a.status = total.status;
    if (total.status == Status::PASS) {
      a.margin = Margin::of(total.min.slack);
      a.witness = witness_strings({mpz_class((unsigned long)total.min.arg)});
      a.note = "min slack over integers in [2," + std::to_string(spec.x_max) + "]";
    } else {
      a.witness = witness_strings({mpz_class((unsigned long)total.bad)});
    }
    rep.add(a);
  }

  // ---- (ii) and (iii): per prime index --------------------------------
  {
    rep.add_note("nth_prime_lower_i1", Status::PASS,
                 "i=1 holds by the loglog 1 = -inf convention");
    rep.add_note("theta_nth_lower_i1", Status::PASS,
                 "i=1 holds by the loglog 1 = -inf convention");
    const uint64_t chunk = 8192;
    const std::size_t n_chunks = (n_primes - 1) / chunk + 1;
    struct Pair {
      SweepResult ii, iii;
    };
    auto parts = parallel_map<Pair>(n_chunks, threads, [&](std::size_t ci) {
      Pair r;
      std::size_t a = 2 + ci * chunk;  // start at i = 2
      std::size_t b = std::min<std::size_t>(n_primes, a + chunk - 1);
      for (std::size_t i = a; i <= b; ++i) {
        uint64_t p_i = primes[i - 1];
        VReal s2 = slack_nth_lower(i, VReal::point((long)p_i, prec), 1, prec);
        Tri ok2 = vge_q(s2, 0);
        if (ok2 == Tri::unknown)
          ok2 = decide_with_retry(
              [&](mpfr_prec_t p2) {
                return vge_q(
                    slack_nth_lower(i, VReal::point((long)p_i, p2), 1, p2), 0);
              },
              prec * 2);
        if (ok2 != Tri::yes) {
          r.ii.status = ok2 == Tri::no ? Status::FAIL : Status::UNDECIDED;
          r.ii.bad = i;
        } else {
          r.ii.min.update(s2, i, 0, prec);
        }
        VReal s3 = slack_nth_lower(i, prefix[i - 1], kRobinC, prec);
        Tri ok3 = vge_q(s3, 0);
        if (ok3 == Tri::unknown)
          ok3 = decide_with_retry(
              [&](mpfr_prec_t p2) {
                return vge_q(slack_nth_lower(
                                 i, table.log_primorial_at(i, p2), kRobinC, p2),
                             0);
              },
              prec * 2);
        if (ok3 != Tri::yes) {
          r.iii.status = ok3 == Tri::no ? Status::FAIL : Status::UNDECIDED;
          r.iii.bad = i;
        } else {
          r.iii.min.update(s3, i, 0, prec);
        }
        if (r.ii.status == Status::FAIL || r.iii.status == Status::FAIL) break;
      }
      return r;
    });
    SweepResult t2, t3;
    for (const auto& p : parts) {
      merge_sweep(t2, p.ii, prec);
      merge_sweep(t3, p.iii, prec);
    }
    for (auto [name, tot] : {std::pair<const char*, SweepResult*>{"nth_prime_lower", &t2},
                             {"theta_nth_lower_robin", &t3}}) {
      Assertion a;
      a.label = name;
      a.status = tot->status;
      if (tot->status == Status::PASS) {
        a.margin = Margin::of(tot->min.slack);
        a.witness = witness_strings({mpz_class((unsigned long)tot->min.arg)});
        a.note = "min slack over 2 <= i <= " + std::to_string(n_primes);
      } else {
        a.witness = witness_strings({mpz_class((unsigned long)tot->bad)});
      }
      rep.add(a);
    }
  }

  // ---- (iv): theta(x) < 1.000081 x over all integers -------------------
  {
    const uint64_t chunk = 131072;
    const std::size_t n_chunks = (spec.x_max - 2) / chunk + 1;
    auto parts = parallel_map<SweepResult>(n_chunks, threads, [&](std::size_t ci) {
      SweepResult r;
      uint64_t a = 2 + ci * chunk;
      uint64_t b = std::min(spec.x_max, a + chunk - 1);
      std::size_t pi_x = table.prime_count(a - 1);
      std::size_t next_p = pi_x;
      VReal zero = VReal::point(0, prec);
      for (uint64_t x = a; x <= b; ++x) {
        if (next_p < primes.size() && primes[next_p] == x) {
          ++pi_x;
          ++next_p;
        }
        // theta jumps only at primes and the bound is increasing in x, so
        // the slack over [p_j, p_{j+1}) is smallest at the left end; still,
        // the comparison below is evaluated at every integer x.
        const VReal& th = pi_x == 0 ? zero : prefix[pi_x - 1];
        mpq_class bound = kDusartThetaC * (unsigned long)x;
        Tri ok = vlt_q(th, bound);
        if (ok != Tri::yes) {
          r.status = ok == Tri::no ? Status::FAIL : Status::UNDECIDED;
          r.bad = x;
          return r;
        }
        if (primes[next_p - 1] == x || x == b || x == a) {
          VReal s = vsub(VReal::of_q(bound, prec), th, prec);
          r.min.update(s, x, 0, prec);
        }
      }
      return r;
    });
    SweepResult total;
    for (const auto& p : parts) merge_sweep(total, p, prec);
    Assertion a;
    a.label = "theta_upper_dusart";
    a.status = total.status;
    if (total.status == Status::PASS) {
      a.margin = Margin::of(total.min.slack);
      a.witness = witness_strings({mpz_class((unsigned long)total.min.arg)});
      a.note = "min slack over integers in [2," + std::to_string(spec.x_max) +
               "] (slack minima occur where theta jumps)";
    } else {
      a.witness = witness_strings({mpz_class((unsigned long)total.bad)});
    }
    rep.add(a);
  }

  // ---- (v): ord_p(k!) lower bound over all primes p < k <= cap ---------
  {
    const uint64_t cap = spec.factorial_cap;
    std::vector<VReal> logs(cap + 1, VReal(prec));
    for (uint64_t n = 1; n <= cap; ++n) logs[n] = vlog_ui(n, prec);
    const uint64_t chunk = 512;
    const std::size_t n_chunks = (cap - 2) / chunk + 1;
    auto parts = parallel_map<SweepResult>(n_chunks, threads, [&](std::size_t ci) {
      SweepResult r;
      uint64_t a = std::max<uint64_t>(3, 2 + ci * chunk);
      uint64_t b = std::min(cap, 2 + (ci + 1) * chunk - 1);
      for (uint64_t k = a; k <= b; ++k) {
        for (std::size_t pi = 0; pi < primes.size() && primes[pi] < k; ++pi) {
          uint64_t p = primes[pi];
          uint64_t ord = legendre_ord(k, p);
          // slack = ord - (k-p)/(p-1) + log(k-1)/log p  >= 0
          mpq_class frac((unsigned long)(k - p), (unsigned long)(p - 1));
          frac.canonicalize();
          mpq_class base = mpq_class((unsigned long)ord) - frac;
          VReal D = vdiv(logs[k - 1], logs[p], prec);
          VReal s = vadd_q(D, base, prec);
          Tri ok = vge_q(s, 0);
          if (ok == Tri::unknown)
            ok = decide_with_retry(
                [&](mpfr_prec_t p2) {
                  VReal d2 = vdiv(vlog_ui(k - 1, p2), vlog_ui(p, p2), p2);
                  return vge_q(vadd_q(d2, base, p2), 0);
                },
                prec * 2);
          if (ok != Tri::yes) {
            r.status = ok == Tri::no ? Status::FAIL : Status::UNDECIDED;
            r.bad = k;
            r.bad2 = p;
            return r;
          }
          r.min.update(s, k, p, prec);
        }
      }
      return r;
    });
    SweepResult total;
    for (const auto& p : parts) merge_sweep(total, p, prec);
    Assertion a;
    a.label = "ord_factorial_lower";
    a.status = total.status;
    if (total.status == Status::PASS) {
      a.margin = Margin::of(total.min.slack);
      a.witness = witness_strings({mpz_class((unsigned long)total.min.arg),
                                   mpz_class((unsigned long)total.min.arg2)});
      a.note = "min slack over primes p < k <= " + std::to_string(cap) +
               ", witness (k, p); exact ord via Legendre";
    } else {
      a.witness = witness_strings({mpz_class((unsigned long)total.bad),
                                   mpz_class((unsigned long)total.bad2)});
    }
    rep.add(a);
  }

  // ---- (vi): two-sided Stirling bounds, sequential log-factorial prefix
  {
    const uint64_t cap = spec.factorial_cap;
    VReal log2pi = vlog(vmul_q(vpi(prec), 2, prec), prec);
    VReal F = VReal::point(0, prec);  // log k!
    SweepResult lo_side, hi_side;
    for (uint64_t k = 1; k <= cap; ++k) {
      F = vadd(F, vlog_ui(k, prec), prec);
      VReal logk = vlog_ui(k, prec);
      // S = log(sqrt(2 pi k) (k/e)^k) = (log 2pi + log k)/2 + k (log k - 1)
      VReal S = vadd(vmul_q(vadd(log2pi, logk, prec), mpq_class(1, 2), prec),
                     vmul_q(vsub_q(logk, 1, prec), mpq_class((unsigned long)k), prec),
                     prec);
      VReal T = vsub(F, S, prec);
      mpq_class lo_q(1, 12 * (unsigned long)k + 1), hi_q(1, 12 * (unsigned long)k);
      Tri ok_lo = vge_q(T, lo_q);
      Tri ok_hi = vle_q(T, hi_q);
      if (ok_lo != Tri::yes) {
        lo_side.status = ok_lo == Tri::no ? Status::FAIL : Status::UNDECIDED;
        lo_side.bad = k;
        break;
      }
      if (ok_hi != Tri::yes) {
        hi_side.status = ok_hi == Tri::no ? Status::FAIL : Status::UNDECIDED;
        hi_side.bad = k;
        break;
      }
      lo_side.min.update(vsub_q(T, lo_q, prec), k, 0, prec);
      hi_side.min.update(vneg(vsub_q(T, hi_q, prec), prec), k, 0, prec);
    }
    for (auto [name, tot] :
         {std::pair<const char*, SweepResult*>{"stirling_lower", &lo_side},
          {"stirling_upper", &hi_side}}) {
      Assertion a;
      a.label = name;
      a.status = tot->status;
      if (tot->status == Status::PASS) {
        a.margin = Margin::of(tot->min.slack, 6);
        a.witness = witness_strings({mpz_class((unsigned long)tot->min.arg)});
        a.note = "min slack (log scale) over 1 <= k <= " + std::to_string(cap);
      } else {
        a.witness = witness_strings({mpz_class((unsigned long)tot->bad)});
      }
      rep.add(a);
    }
  }

  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace abcv
