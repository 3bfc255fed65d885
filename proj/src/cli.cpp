// cli.cpp

#include "abcv/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "abcv/abc_scan.hpp"
#include "abcv/baker.hpp"
#include "abcv/diophantine.hpp"
#include "abcv/erdos.hpp"
#include "abcv/factorization.hpp"
#include "abcv/primes.hpp"
#include "abcv/report.hpp"

namespace abcv {

namespace {

struct GlobalOpts {
  std::string format = "text";
  long precision = kDefaultPrec;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::string out_path;
  uint64_t seed = 20240811ull;
};

int status_exit(const std::vector<VerificationReport>& reports) {
  bool fail = false, und = false;
  for (const auto& r : reports) {
    if (r.status == Status::FAIL) fail = true;
    if (r.status == Status::UNDECIDED) und = true;
  }
  return fail ? 1 : (und ? 3 : 0);
}

void emit_reports(const std::vector<VerificationReport>& reports,
                  const GlobalOpts& g, std::ostream& out) {
  if (g.format == "json") {
    out << reports_to_json(reports) << "\n";
  } else if (g.format == "csv") {
    for (const auto& r : reports) out << r.to_csv();
  } else {
    for (const auto& r : reports) out << r.to_text();
  }
}

// size a table that surely reaches p_n (upper bound n(log n + loglog n) for
// n >= 6, checked afterwards)
PrimeTable table_reaching_nth(std::size_t n, mpfr_prec_t prec) {
  double nn = (double)std::max<std::size_t>(n, 6);
  uint64_t limit =
      std::max<uint64_t>(100, (uint64_t)(nn * (std::log(nn) + std::log(std::log(nn))) * 1.05) + 16);
  for (int i = 0; i < 4; ++i) {
    PrimeTable t(limit, prec);
    if (t.size() >= n) return t;
    limit = limit * 3 / 2;
  }
  throw std::length_error("could not size a prime table to reach p_n");
}

VerificationReport epsilon_report(const mpq_class& eps, mpfr_prec_t prec) {
  Omega1Result w1 = compute_omega1(eps, prec);
  PrimeTable table = table_reaching_nth(w1.omega1, prec);
  EpsilonEntry e = compute_epsilon_entry(eps, table, prec);
  VerificationReport rep;
  rep.check_name = "epsilon_entry_" + mpq_class(eps).get_str();
  rep.provenance = "thresholds making c < kappa N^{1+eps} valid for N >= N_eps";
  rep.add_note("omega1", Status::PASS,
               "omega1 = " + std::to_string(e.omega1) +
                   (w1.monotone_certified ? " (monotone certificate)" : ""));
  {
    Assertion a;
    a.label = "omega_eps";
    a.status = e.status;
    a.witness = witness_strings({mpz_class((unsigned long)e.omega_eps)});
    rep.add(a);
  }
  {
    Assertion a;
    a.label = "log_N_eps";
    a.status = Status::PASS;
    a.margin = Margin::of(e.log_N_eps, 10);
    rep.add(a);
  }
  {
    Assertion a;
    a.label = "kappa_at_omega_eps";
    a.status = Status::PASS;
    a.margin = Margin::of(e.kappa_at(e.omega_eps, prec), 8);
    rep.add(a);
  }
  if (e.below_minimal) {
    Assertion a;
    a.label = "minimality_below";
    a.status = Status::PASS;
    a.witness = witness_strings({mpz_class((unsigned long)e.below_minimal->omega)});
    a.note = "conditions fail one step below omega_eps";
    rep.add(a);
  }
  if (reference_row(eps)) {
    Assertion a;
    a.label = "matches_printed_table";
    a.status = e.reference_diffs.empty() ? Status::PASS : Status::FAIL;
    std::string note;
    for (const auto& d : e.reference_diffs) note += d + "; ";
    a.note = note.empty() ? "computed values agree with the published row" : note;
    rep.add(a);
  }
  return rep;
}

mpq_class parse_eps(const std::string& s) {
  mpq_class eps = parse_rational(s);
  if (eps <= 0 || eps > mpq_class(3, 4))
    throw CLI::ValidationError("--eps", "epsilon must lie in (0, 3/4]");
  return eps;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out_stream,
            std::ostream& err) {
  GlobalOpts g;
  CLI::App app{"abcv: verified constants and finite searches for the explicit "
               "abc conjecture and its Diophantine applications"};
  app.require_subcommand(0, 1);
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--precision", g.precision, "working precision in bits")
      ->check(CLI::Range(24l, 1l << 20));
  app.add_option("--threads", g.threads, "thread budget");
  app.add_option("--out", g.out_path, "write output to a file");
  app.add_option("--seed", g.seed, "seed for sampled checks");

  // epsilon
  auto* cmd_eps = app.add_subcommand("epsilon", "compute an epsilon entry");
  std::string eps_str;
  bool all_table = false;
  cmd_eps->add_option("--eps", eps_str, "rational in (0,3/4], written p/q");
  cmd_eps->add_flag("--all-table", all_table, "compute every published row");

  // verify group
  auto* cmd_verify = app.add_subcommand("verify", "run a verification");
  cmd_verify->require_subcommand(1);
  auto* v_lemma1 = cmd_verify->add_subcommand("lemma1", "prime estimates");
  uint64_t lemma1_limit = 1000000, lemma1_cap = 10000;
  v_lemma1->add_option("--limit", lemma1_limit, "integer sweep bound");
  v_lemma1->add_option("--factorial-cap", lemma1_cap, "k cap for (v),(vi)");
  auto* v_omep65 = cmd_verify->add_subcommand(
      "omep65", "the (log N)^w/w! < (5/6) N^{3/4} inequality");
  auto* v_erdos = cmd_verify->add_subcommand("erdos", "case schedule and bounds");
  std::string schedule_path;
  uint64_t coro8_kmax = 10000;
  v_erdos->add_option("--schedule", schedule_path, "override schedule rows");
  v_erdos->add_option("--kmax", coro8_kmax, "count-inequality sweep bound");
  auto* v_ell7 = cmd_verify->add_subcommand("ell7", "l = 7 constant chain");
  auto* v_goor = cmd_verify->add_subcommand("goormaghtigh-arith",
                                            "two-repunit exponent arithmetic");
  std::string goor_eps = "3/4";
  v_goor->add_option("--eps", goor_eps, "rational in (0,3/4]");
  uint64_t m3_samples = 200;
  v_goor->add_option("--samples", m3_samples, "sample count for the m=3 checks");
  auto* v_nalu = cmd_verify->add_subcommand("nalu-arith",
                                            "repunit-power exponent cap");

  // abc group
  auto* cmd_abc = app.add_subcommand("abc", "abc triple operations");
  cmd_abc->require_subcommand(1);
  auto* a_check = cmd_abc->add_subcommand("check", "check one triple");
  std::vector<std::string> abc_vals;
  a_check->add_option("values", abc_vals, "a b c")->expected(3);
  auto* a_scan = cmd_abc->add_subcommand("scan", "enumerate triples");
  uint64_t cmax = 1000;
  unsigned topq = 10;
  a_scan->add_option("--cmax", cmax, "largest c");
  a_scan->add_option("--top", topq, "size of the quality ranking");
  auto* a_ingest = cmd_abc->add_subcommand("ingest", "check triples from a file");
  std::string ingest_path;
  a_ingest->add_option("path", ingest_path, "file of 'a b c' lines")->required();

  // search group
  auto* cmd_search = app.add_subcommand("search", "exhaustive searches");
  cmd_search->require_subcommand(1);
  auto* s_nl = cmd_search->add_subcommand("nl", "y^q = (x^n-1)/(x-1)");
  uint64_t nl_xmax = 200;
  unsigned nl_nmax = 20, nl_qmax = 20;
  s_nl->add_option("--xmax", nl_xmax);
  s_nl->add_option("--nmax", nl_nmax);
  s_nl->add_option("--qmax", nl_qmax);
  auto* s_fc = cmd_search->add_subcommand("fc", "x^p + y^q = z^r");
  uint64_t fc_pmax = 1000000;
  std::vector<std::string> fc_sigs;
  s_fc->add_option("--pmax", fc_pmax, "bound on max(x^p, y^q, z^r)");
  s_fc->add_option("--sig", fc_sigs, "signature p,q,r (repeatable)");
  auto* s_goor = cmd_search->add_subcommand("goor", "equal repunit pairs");
  uint64_t goor_ymax = 30;
  unsigned goor_nmax = 40;
  s_goor->add_option("--ymax", goor_ymax);
  s_goor->add_option("--nmax", goor_nmax);

  // residual group
  auto* cmd_res = app.add_subcommand("residual", "signature filters");
  cmd_res->require_subcommand(1);
  auto* r_fc = cmd_res->add_subcommand("fc", "surviving Fermat-Catalan signatures");

  // global flags remain usable after a subcommand name
  std::function<void(CLI::App*)> allow_parent_opts = [&](CLI::App* a) {
    a->fallthrough();
    for (auto* s : a->get_subcommands([](CLI::App*) { return true; }))
      allow_parent_opts(s);
  };
  allow_parent_opts(&app);

  std::vector<const char*> argv_c;
  argv_c.push_back("abcv");
  for (const auto& a : args) argv_c.push_back(a.c_str());
  try {
    app.parse((int)argv_c.size(), argv_c.data());
  } catch (const CLI::CallForHelp&) {
    out_stream << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::ofstream out_file;
  std::ostream* outp = &out_stream;
  if (!g.out_path.empty()) {
    out_file.open(g.out_path);
    if (!out_file) {
      err << "error: cannot open " << g.out_path << "\n";
      return 2;
    }
    outp = &out_file;
  }
  std::ostream& out = *outp;
  mpfr_prec_t prec = (mpfr_prec_t)g.precision;
  set_default_prec(prec);

  try {
    if (cmd_eps->parsed()) {
      std::vector<VerificationReport> reports;
      if (all_table) {
        for (const char* s :
             {"3/4", "7/12", "6/11", "1/2", "34/71", "5/12", "1/3"})
          reports.push_back(epsilon_report(mpq_class(s), prec));
      } else {
        if (eps_str.empty()) {
          err << "error: epsilon requires --eps or --all-table\n";
          return 2;
        }
        reports.push_back(epsilon_report(parse_eps(eps_str), prec));
      }
      emit_reports(reports, g, out);
      return status_exit(reports);
    }

    if (cmd_verify->parsed()) {
      std::vector<VerificationReport> reports;
      if (v_lemma1->parsed()) {
        PrimeTable table(lemma1_limit, prec);
        Lemma1Spec spec;
        spec.x_max = lemma1_limit;
        spec.factorial_cap = lemma1_cap;
        reports.push_back(verify_lemma1(table, spec, prec, g.threads));
      } else if (v_omep65->parsed()) {
        PrimeTable table(100, prec);
        reports.push_back(verify_three_quarter_inequality(table, prec));
      } else if (v_erdos->parsed()) {
        PrimeTable table(std::max<uint64_t>(1000, coro8_kmax), prec);
        std::vector<ScheduleRow> rows = default_schedule();
        if (!schedule_path.empty()) {
          std::ifstream f(schedule_path);
          if (!f) {
            err << "error: cannot open " << schedule_path << "\n";
            return 2;
          }
          rows = parse_schedule(f);
        }
        reports.push_back(verify_s1_threshold_700(prec));
        reports.push_back(verify_k9_sweep(table));
        reports.push_back(verify_rk_table(table, prec));
        reports.push_back(verify_schedule(table, rows, prec, g.threads));
        reports.push_back(verify_corollary8(coro8_kmax, table));
        reports.push_back(verify_k400_bound(prec));
      } else if (v_ell7->parsed()) {
        PrimeTable table(1000, prec);
        reports.push_back(ell7_chain(table, prec));
      } else if (v_goor->parsed()) {
        GoormaghtighExponentTable tab =
            goormaghtigh_exponent_table(parse_eps(goor_eps));
        reports.push_back(tab.report);
        reports.push_back(goormaghtigh_finite_elimination());
        reports.push_back(goormaghtigh_m3_checks(m3_samples, g.seed));
      } else if (v_nalu->parsed()) {
        reports.push_back(nalu_exponent_check());
      }
      emit_reports(reports, g, out);
      return status_exit(reports);
    }

    if (cmd_abc->parsed()) {
      if (a_check->parsed()) {
        mpz_class a(abc_vals.at(0)), b(abc_vals.at(1)), c(abc_vals.at(2));
        AbcCheckResult r = explicit_abc_check(a, b, c, prec);
        bool boundary = a == 1 && b == 1 && c == 2;
        if (g.format == "json") {
          nlohmann::json j;
          j["a"] = r.a.get_str();
          j["b"] = r.b.get_str();
          j["c"] = r.c.get_str();
          j["N"] = r.N.get_str();
          j["omega"] = r.omega;
          j["baker_bound"] = r.baker.mid_str(10);
          j["n_7_4"] = r.n_7_4.mid_str(10);
          j["quality"] = r.quality.mid_str(10);
          j["c_lt_baker"] = r.c_lt_baker == Tri::yes;
          j["c_lt_n74"] = r.c_lt_n74;
          if (boundary) j["known_boundary_case"] = true;
          out << j.dump(2) << "\n";
        } else {
          out << "N = " << r.N << "  omega = " << r.omega << "\n"
              << "baker bound = " << r.baker.str(10) << "  c < bound: "
              << (r.c_lt_baker == Tri::yes ? "yes"
                                           : r.c_lt_baker == Tri::no ? "no" : "undecided")
              << (boundary ? "  (known boundary triple)" : "") << "\n"
              << "N^(7/4) = " << r.n_7_4.str(10)
              << "  c < N^(7/4): " << (r.c_lt_n74 ? "yes" : "no") << "\n"
              << "quality = " << r.quality.str(10) << "\n";
        }
        bool violated =
            (r.c_lt_baker != Tri::yes || !r.c_lt_n74) && !boundary;
        bool undecided = r.c_lt_baker == Tri::unknown;
        return violated ? 1 : (undecided ? 3 : 0);
      }
      if (a_scan->parsed()) {
        ScanSummary s = enumerate_and_check(cmax, topq, prec, g.threads);
        if (g.format == "json") {
          out << scan_to_json(s) << "\n";
        } else if (g.format == "csv") {
          out << triples_to_csv(s.top);
        } else {
          out << s.report.to_text();
          out << "top " << s.top.size() << " by quality:\n";
          for (const auto& t : s.top)
            out << "  " << t.a << " " << t.b << " " << t.c << "  N=" << t.radical
                << "  q=" << (t.quality ? t.quality->midpoint : "") << "\n";
        }
        return status_exit({s.report});
      }
      if (a_ingest->parsed()) {
        std::ifstream f(ingest_path);
        if (!f) {
          err << "error: cannot open " << ingest_path << "\n";
          return 2;
        }
        std::vector<AbcTriple> ts = ingest_triples(f, prec);
        if (g.format == "json")
          out << triples_to_json(ts) << "\n";
        else
          out << triples_to_csv(ts);
        for (const auto& t : ts) {
          bool boundary = t.a == 1 && t.b == 1 && t.c == 2;
          if (!boundary && t.baker_margin && t.baker_margin->midpoint_d <= 0)
            return 1;
        }
        return 0;
      }
    }

    if (cmd_search->parsed()) {
      if (s_nl->parsed()) {
        auto sols = nagell_ljunggren_search(nl_xmax, nl_nmax, nl_qmax);
        if (g.format == "json") {
          nlohmann::json arr = nlohmann::json::array();
          for (const auto& s : sols)
            arr.push_back({{"x", s.x},
                           {"y", s.y.get_str()},
                           {"n", s.n},
                           {"q", s.q}});
          out << arr.dump(2) << "\n";
        } else {
          for (const auto& s : sols)
            out << s.y << "^" << s.q << " = (" << s.x << "^" << s.n << "-1)/("
                << s.x << "-1)\n";
          out << sols.size() << " solutions\n";
        }
        return 0;
      }
      if (s_fc->parsed()) {
        std::vector<Signature> sigs;
        if (fc_sigs.empty()) {
          sigs = all_min3_signatures(fc_pmax);
        } else {
          for (const auto& s : fc_sigs) {
            int p, q, r;
            if (sscanf(s.c_str(), "%d,%d,%d", &p, &q, &r) != 3) {
              err << "error: --sig expects p,q,r\n";
              return 2;
            }
            Signature sig{{p, q, r}};
            std::sort(sig.e.begin(), sig.e.end());
            sigs.push_back(sig);
          }
        }
        auto ws = fermat_catalan_search(fc_pmax, sigs);
        if (g.format == "json") {
          nlohmann::json arr = nlohmann::json::array();
          for (const auto& w : ws)
            arr.push_back({{"signature", w.sig.str()},
                           {"x", w.x.get_str()},
                           {"y", w.y.get_str()},
                           {"z", w.z.get_str()}});
          out << arr.dump(2) << "\n";
        } else {
          for (const auto& w : ws)
            out << w.sig.str() << ": " << w.x << ", " << w.y << ", " << w.z << "\n";
          out << ws.size() << " witnesses\n";
        }
        return 0;
      }
      if (s_goor->parsed()) {
        auto ws = goormaghtigh_search(goor_ymax, goor_nmax);
        if (g.format == "json") {
          nlohmann::json arr = nlohmann::json::array();
          for (const auto& w : ws)
            arr.push_back({{"x", w.x.get_str()},
                           {"y", w.y.get_str()},
                           {"m", w.m},
                           {"n", w.n},
                           {"value", w.value.get_str()},
                           {"n_gt_3", w.n_gt_3}});
          out << arr.dump(2) << "\n";
        } else {
          for (const auto& w : ws)
            out << w.value << " = (" << w.x << "^" << w.m << "-1)/(" << w.x
                << "-1) = (" << w.y << "^" << w.n << "-1)/(" << w.y << "-1)"
                << (w.n_gt_3 ? "" : "  [n <= 3]") << "\n";
          out << ws.size() << " witnesses\n";
        }
        return 0;
      }
    }

    if (cmd_res->parsed() && r_fc->parsed()) {
      PrimeTable table(1200, prec);
      ResidualResult res = fermat_catalan_residual(table, prec);
      if (g.format == "json") {
        nlohmann::json j;
        j["bounded"] = nlohmann::json::array();
        for (const auto& s : res.bounded) j["bounded"].push_back(s.str());
        j["inconclusive"] = nlohmann::json::array();
        for (const auto& s : res.inconclusive) j["inconclusive"].push_back(s.str());
        j["parametric_34"] = res.parametric_34;
        j["family_33_large"] = res.family_33_large;
        j["survivors_not_in_q"] = nlohmann::json::array();
        for (const auto& s : res.survivors_not_in_q)
          j["survivors_not_in_q"].push_back(s.str());
        j["bound_log"] = res.bound_log.mid_str(10);
        j["report"] = nlohmann::json::parse(res.report.to_json_string(0));
        out << j.dump(2) << "\n";
      } else {
        out << res.report.to_text();
        out << "bounded class:";
        for (const auto& s : res.bounded) out << " " << s.str();
        out << "\nparametric: " << res.parametric_34 << "\n";
      }
      return status_exit({res.report});
    }

    out << app.help();
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    err << "resource error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "range error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_cli(const std::vector<std::string>& args) {
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace abcv
