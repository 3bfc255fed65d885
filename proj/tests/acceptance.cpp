// acceptance.cpp -- the integration gate.  Runs each acceptance criterion at
// its stated tolerance and prints one PASS/FAIL line per criterion.  Exit
// status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "abcv/abc_scan.hpp"
#include "abcv/baker.hpp"
#include "abcv/cli.hpp"
#include "abcv/diophantine.hpp"
#include "abcv/erdos.hpp"
#include "abcv/factorization.hpp"
#include "abcv/primes.hpp"

using namespace abcv;

namespace {

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

void outcome(int criterion, bool pass, const std::string& detail) {
  if (!pass) ++g_failures;
  std::printf("criterion %2d: %s  %s\n", criterion, pass ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
}

const mpfr_prec_t P = 120;
const unsigned kThreads = 2;

// ---- criterion 1: the published epsilon table ------------------------------
void criterion1() {
  Timer timer;
  struct Row {
    const char* eps;
    long omega_want;
    const char* logn;
    const char* tol;
  };
  // tolerance: 5 units in the last printed digit
  const Row rows[] = {
      {"3/4", 14, "371101/10000", "1/2000"},
      {"7/12", 49, "20475/100", "1/20"},
      {"6/11", 72, "33571/100", "1/20"},
      {"1/2", 127, "679585/1000", "1/200"},
      {"34/71", 175, "1004763/1000", "1/200"},
      {"5/12", 548, "389457/100", "1/20"},
  };
  bool pass = true;
  std::ostringstream detail;
  // one table large enough for every row (omega1(5/12) ~ 570 -> p ~ 4200)
  PrimeTable table(8000, P);
  for (const Row& r : rows) {
    EpsilonEntry e = compute_epsilon_entry(mpq_class(r.eps), table, P);
    bool omega_ok = (long)e.omega_eps == r.omega_want;
    mpq_class want(r.logn), tol(r.tol);
    VReal diff = vsub_q(e.log_N_eps, want, P);
    bool logn_ok =
        vle_q(diff, tol) == Tri::yes && vge_q(diff, -tol) == Tri::yes;
    if (!omega_ok || !logn_ok) {
      pass = false;
      detail << "[eps=" << r.eps << ": omega_eps=" << e.omega_eps << " want "
             << r.omega_want << ", log N_eps=" << e.log_N_eps.mid_str(10)
             << " want " << mpq_class(r.logn).get_d() << "] ";
    }
  }
  // eps = 1/3: the computed value is reported with an explicit diff against
  // both printed values, and log N_eps is compared against 63727 +- 1
  {
    Omega1Result w1 = compute_omega1(mpq_class(1, 3), P);
    PrimeTable big(80000, P);
    EpsilonEntry e = compute_epsilon_entry(mpq_class(1, 3), big, P);
    // the two printed values disagree with each other, so at least one diff
    // line is always present
    bool diff_reported = !e.reference_diffs.empty();
    detail << "[eps=1/3: computed omega_eps=" << e.omega_eps << " (omega1="
           << w1.omega1 << "), printed 6458/6460; log N_eps="
           << e.log_N_eps.mid_str(10) << "] ";
    VReal d = vsub_q(e.log_N_eps, 63727, P);
    bool logn13_ok = vle_q(d, 1) == Tri::yes && vge_q(d, -1) == Tri::yes;
    if (!diff_reported || !logn13_ok) {
      pass = false;
      if (!logn13_ok)
        detail << "[eps=1/3 log N_eps differs from 63727 by more than 1; the "
                  "printed 63727 equals omega1*X0(omega1)="
               << vmul_q(baker_X0(w1.omega1, P),
                         mpq_class((unsigned long)w1.omega1), P)
                      .mid_str(8)
               << " (a lower bound, not an exact theta), and theta(p_6460)="
               << big.log_primorial(6460).mid_str(8)
               << ", whose ceiling reproduces the later 64266 constant] ";
    }
  }
  double el = timer.seconds();
  if (el > 120.0) {
    pass = false;
    detail << "[runtime " << el << "s exceeds 120s]";
  }
  std::ostringstream d2;
  d2 << "epsilon table at 120-bit precision, " << el << "s. " << detail.str();
  outcome(1, pass, d2.str());
}

// ---- criterion 2: the (5/6) N^{3/4} certificate ----------------------------
void criterion2() {
  PrimeTable table(100, P);
  VerificationReport rep = verify_three_quarter_inequality(table, P);
  bool pass = rep.status == Status::PASS;
  auto wit = [&](const char* label) {
    const Assertion* a = rep.find(label);
    return a ? a->witness : std::vector<std::string>{};
  };
  pass = pass && wit("enumeration_w1") == std::vector<std::string>{"2", "3"};
  pass = pass &&
         wit("enumeration_w2") == std::vector<std::string>{"6", "10", "12", "14"};
  pass = pass && wit("enumeration_w3") == std::vector<std::string>{"30", "42"};
  outcome(2, pass,
          "status " + std::string(status_name(rep.status)) +
              ", enumerations {2,3} {6,10,12,14} {30,42} reproduced exactly");
}

// ---- criterion 3: prime estimates at 10^6 ----------------------------------
void criterion3() {
  Timer timer;
  PrimeTable table(1000000, P);
  Lemma1Spec spec;
  spec.x_max = 1000000;
  spec.factorial_cap = 10000;
  VerificationReport rep = verify_lemma1(table, spec, P, kThreads);
  bool pass = rep.status == Status::PASS;
  std::ostringstream detail;
  for (const char* label :
       {"pi_upper_dusart", "nth_prime_lower", "theta_nth_lower_robin",
        "theta_upper_dusart", "ord_factorial_lower", "stirling_lower",
        "stirling_upper"}) {
    const Assertion* a = rep.find(label);
    if (!a || a->status != Status::PASS || !a->margin ||
        !(a->margin->midpoint_d > 0)) {
      pass = false;
      detail << "[" << label << " not strictly positive] ";
    }
  }
  detail << "limit 10^6, factorial cap 10^4, " << timer.seconds() << "s";
  outcome(3, pass, detail.str());
}

// ---- criterion 4: the r_k table ---------------------------------------------
void criterion4() {
  PrimeTable table(1000, P);
  VerificationReport rep = verify_rk_table(table, P);
  outcome(4, rep.status == Status::PASS,
          "eight published (k, r_k) pairs reproduced");
}

// ---- criterion 5: the case schedule -----------------------------------------
void criterion5() {
  Timer timer;
  PrimeTable table(1000, P);
  VerificationReport sched = verify_schedule(table, default_schedule(), P, kThreads);
  VerificationReport k9 = verify_k9_sweep(table);
  bool pass = sched.status == Status::PASS && k9.status == Status::PASS;
  double el = timer.seconds();
  if (el > 300.0) pass = false;
  std::ostringstream detail;
  detail << "schedule " << status_name(sched.status) << " ("
         << sched.assertions.size() << " assertions), k9 sweep "
         << status_name(k9.status) << ", " << el << "s";
  outcome(5, pass, detail.str());
}

// ---- criterion 6: the l = 7 chain -------------------------------------------
void criterion6() {
  PrimeTable table(1000, P);
  VerificationReport rep = ell7_chain(table, P);
  bool pass = rep.status == Status::PASS;
  const Assertion* b = rep.find("lhs_below_e35");
  const Assertion* e = rep.find("uvw_radical_max");
  const Assertion* d1 = rep.find("constant_64266_reproduces_claim");
  const Assertion* d2 = rep.find("constant_63727_variant");
  pass = pass && b && b->status == Status::PASS;
  pass = pass && e &&
         e->witness == std::vector<std::string>{"70", "2", "5", "7"};
  pass = pass && d1 && d1->status == Status::PASS && d2 &&
         d2->note.find("12897") != std::string::npos;
  outcome(6, pass,
          "threshold, e^{35} margin, uvw radical 70 at (2,5,7), and the "
          "63727-vs-64266 diff all reported");
}

// ---- criterion 7: the abc scan ----------------------------------------------
void criterion7() {
  Timer timer;
  ScanSummary s = enumerate_and_check(100000, 10, P, kThreads);
  double el = timer.seconds();
  bool pass = s.baker_violations == 0 && s.n74_violations == 0;
  pass = pass && s.boundary.size() == 1 && s.boundary[0].c == 2;
  // determinism across thread counts
  ScanSummary s1 = enumerate_and_check(100000, 10, P, 1);
  bool det = s1.triple_count == s.triple_count && s1.top.size() == s.top.size();
  for (std::size_t i = 0; det && i < s.top.size(); ++i)
    det = s1.top[i].a == s.top[i].a && s1.top[i].c == s.top[i].c &&
          s1.top[i].quality->midpoint == s.top[i].quality->midpoint;
  pass = pass && det;
  if (el > 60.0) pass = false;
  std::ostringstream detail;
  detail << s.triple_count << " triples, 0 violations expected (baker="
         << s.baker_violations << ", n74=" << s.n74_violations
         << "), boundary case (1,1,2) surfaced, deterministic top list, " << el
         << "s";
  outcome(7, pass, detail.str());
}

// ---- criterion 8: the searches ------------------------------------------------
void criterion8() {
  auto nl = nagell_ljunggren_search(200, 20, 20);
  bool nl_ok = nl.size() == 3 && nl[0].x == 3 && nl[0].y == 11 && nl[0].n == 5 &&
               nl[0].q == 2 && nl[1].x == 7 && nl[1].y == 20 && nl[1].n == 4 &&
               nl[1].q == 2 && nl[2].x == 18 && nl[2].y == 7 && nl[2].n == 3 &&
               nl[2].q == 3;
  auto go = goormaghtigh_search(30, 40);
  bool go_ok = go.size() == 2 && go[0].value == 31 && go[1].value == 8191;
  auto fc = fermat_catalan_search(1000000, all_min3_signatures(1000000));
  bool fc_ok = fc.empty();
  auto fix = fermat_catalan_search(1000, {Signature{{2, 3, 3}}});
  bool fix_ok = false;
  for (const auto& w : fix)
    if ((w.x == 1 && w.y == 2 && w.z == 3) || (w.x == 2 && w.y == 1 && w.z == 3))
      fix_ok = true;
  bool pass = nl_ok && go_ok && fc_ok && fix_ok;
  std::ostringstream detail;
  detail << "nl: " << nl.size() << "/3 exceptional, goor: " << go.size()
         << "/2 witnesses, fc(min>=3, 10^6): " << fc.size()
         << " (want 0), fixture 1+2^3=3^2 " << (fix_ok ? "found" : "missing");
  outcome(8, pass, detail.str());
}

// ---- criterion 9: the residual classes ----------------------------------------
void criterion9() {
  PrimeTable table(1200, P);
  ResidualResult res = fermat_catalan_residual(table, P);
  std::vector<Signature> want35;
  for (int p : {7, 11, 13, 17, 19, 23}) want35.push_back(Signature{{3, 5, p}});
  std::vector<Signature> got35;
  for (const auto& s : res.bounded)
    if (s.e[0] == 3 && s.e[1] == 5) got35.push_back(s);
  bool f35 = got35 == want35;
  bool param = !res.parametric_34.empty() &&
               res.report.find("parametric_34_present") != nullptr;
  mpq_class target("17583353/10000");
  bool bound_ok = vlt_q(res.bound_log, target + mpq_class(1, 1000)) == Tri::yes &&
                  vgt_q(res.bound_log, target - mpq_class(1, 1000)) == Tri::yes;
  bool diff_ok = res.survivors_not_in_q.empty() ||
                 res.survivors_not_in_q == std::vector<Signature>{{{4, 5, 7}}};
  const Assertion* diff_surfaced = res.report.find("diff_vs_printed_q");
  bool pass = f35 && param && bound_ok && diff_ok && diff_surfaced &&
              res.report.status == Status::PASS;
  std::ostringstream detail;
  detail << "[3,5,p] = {7,11,13,17,19,23}: " << (f35 ? "yes" : "no")
         << ", [3,4,p] tail present, (7/4) log N = " << res.bound_log.mid_str(9)
         << ", diff vs printed list = {";
  for (const auto& s : res.survivors_not_in_q) detail << s.str();
  detail << "}";
  outcome(9, pass, detail.str());
}

// ---- criterion 10: the repunit-pair arithmetic ---------------------------------
void criterion10() {
  GoormaghtighExponentTable tab = goormaghtigh_exponent_table(mpq_class(3, 4));
  bool m_ok = tab.m_max == 7 &&
              tab.report.find("m7_n8_elimination")->status == Status::PASS &&
              tab.report.find("m7_n9_elimination")->status == Status::PASS;
  bool n_ok = false;
  for (const auto& r : tab.ranges)
    if (r.m == 6 && r.bounded && r.n_min == 7 && r.n_max == 17) n_ok = true;
  VerificationReport fin = goormaghtigh_finite_elimination();
  VerificationReport m3 = goormaghtigh_m3_checks(300, 20240811);
  bool pass = m_ok && n_ok && fin.status == Status::PASS &&
              m3.status == Status::PASS &&
              m3.find("simple_roots_gcd_degree0")->status == Status::PASS &&
              tab.report.status == Status::PASS;
  outcome(10, pass,
          "m <= 7 with m = 7 eliminated, n in [7,17] at m = 6, finite "
          "elimination and the m = 3 checks " +
              std::string(status_name(fin.status)) + "/" +
              std::string(status_name(m3.status)));
}

// ---- criterion 11: soundness audit ---------------------------------------------
void criterion11() {
  bool pass = true;
  std::ostringstream detail;

  // (a) nesting under doubled precision, through the public surfaces
  {
    PrimeTable t240(5000, 240);
    PrimeTable t120(5000, 120);
    const auto& fine = t240.theta_prefix(240);
    const auto& coarse = t120.theta_prefix(120);
    for (std::size_t i = 0; i < fine.size(); i += 37)
      if (!fine[i].inside(coarse[i])) {
        pass = false;
        detail << "[theta prefix not nested at " << i << "] ";
        break;
      }
    if (!baker_X0(16, 240).inside(baker_X0(16, 120))) {
      pass = false;
      detail << "[X0 not nested] ";
    }
    VReal k240 = s1_threshold_rhs(4, mpq_class(1, 4), 700, 240);
    VReal k120 = s1_threshold_rhs(4, mpq_class(1, 4), 700, 120);
    if (!k240.inside(k120)) {
      pass = false;
      detail << "[threshold rhs not nested] ";
    }
    RkResult r120 = r_k(36, t120, 120), r240 = r_k(36, t240, 240);
    if (!(r120.value == r240.value && r240.pre_floor.inside(r120.pre_floor))) {
      pass = false;
      detail << "[r_k not nested] ";
    }
  }

  // (b) searches never depend on the working precision
  {
    auto run_all = [](mpfr_prec_t p) {
      set_default_prec(p);
      auto nl = nagell_ljunggren_search(120, 16, 16);
      auto go = goormaghtigh_search(12, 20);
      auto fc = fermat_catalan_search(50000, all_min3_signatures(50000));
      set_default_prec(kDefaultPrec);
      std::ostringstream sig;
      for (const auto& s : nl) sig << s.x << "," << s.y << "," << s.n << "," << s.q << ";";
      sig << "|";
      for (const auto& s : go) sig << s.x << "," << s.y << "," << s.m << "," << s.n << ";";
      sig << "|" << fc.size();
      return sig.str();
    };
    std::string a = run_all(64), b = run_all(120), c = run_all(240);
    if (!(a == b && b == c)) {
      pass = false;
      detail << "[witness sets changed with precision] ";
    }
  }

  // (c) the exact product contradiction has no tolerance to perturb
  {
    PrimeTable t(1000, P);
    set_default_prec(48);
    bool k1 = factorial_product_contradiction(t, 127, 4, 30);
    set_default_prec(960);
    bool k2 = factorial_product_contradiction(t, 127, 4, 30);
    set_default_prec(kDefaultPrec);
    if (!(k1 && k2)) {
      pass = false;
      detail << "[exact contradiction wobbled] ";
    }
  }

  outcome(11, pass,
          "nesting at doubled precision and precision-independent searches. " +
              detail.str());
}

}  // namespace

int main() {
  std::printf("acceptance: explicit-abc verification toolkit\n");
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  std::printf("acceptance: %d criterion failure(s)\n", g_failures);
  return g_failures;
}
