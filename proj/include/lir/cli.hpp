#ifndef LIR_CLI_HPP
#define LIR_CLI_HPP

#include <CLI11.hpp>

#include "lir/lir.hpp"

namespace lir {
namespace cli {

inline int exit_verified(std::ostream& out, bool ok) {
  out << (ok ? "OK\n" : "FAILED\n");
  return ok ? 0 : 1;
}

// Full dispatcher. Streams are injected so runs are byte-comparable.
inline int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"verification toolkit for factor-free certificates of generalized "
               "Laguerre and Schur-type polynomials"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  std::string config_path;
  app.add_option("--config", config_path, "flat key=value config file");
  app.add_option("--sieve-limit", cfg.sieve_limit, "prime sieve capacity");
  app.add_option("--smooth-bound", cfg.smooth_bound, "smooth enumeration bound B");
  app.add_option("--b-exp", cfg.b_exp, "exponent box bound");
  app.add_option("--workers", cfg.workers, "worker count (output is order-independent)");
  app.add_option("--format", cfg.format, "tsv | jsonl | folded");

  auto* sieve = app.add_subcommand("sieve", "prime counting and theta at a point");
  double sieve_x = 0;
  sieve->add_option("--x", sieve_x, "evaluation point")->required();

  auto* smooth = app.add_subcommand("smooth", "smooth-number sets");
  std::string smooth_kind = "consecutive";
  u64 smooth_p = 41;
  smooth->add_option("--kind", smooth_kind, "plain | consecutive | gap2");
  smooth->add_option("--p", smooth_p, "smoothness bound prime");

  auto* sets = app.add_subcommand("sets", "exclusion and admissible sets");
  u64 sets_k = 1, sets_p = 3;
  bool sets_admissible = false;
  std::vector<u64> sets_intersect;
  u64 sets_alo = 0, sets_ahi = 50;
  sets->add_option("--k", sets_k, "factor degree");
  sets->add_option("--p", sets_p, "prime");
  sets->add_flag("--admissible", sets_admissible, "print the interval set of p instead");
  sets->add_option("--intersect", sets_intersect, "intersect admissible sets of these primes");
  sets->add_option("--a-lo", sets_alo, "range start");
  sets->add_option("--a-hi", sets_ahi, "range end");

  auto* proc = app.add_subcommand("procedure-r", "candidate search over smooth windows");
  u64 pr_k = 2;
  u64 pr_alo = 0, pr_ahi = 0;
  bool pr_nprime = false;
  proc->add_option("--k", pr_k, "factor degree")->required();
  proc->add_option("--a-lo", pr_alo, "override a range start");
  proc->add_option("--a-hi", pr_ahi, "override a range end");
  proc->add_flag("--nprime-windows", pr_nprime,
                 "use the above-10000 recursion windows instead of the standard source");

  app.add_subcommand("verify-exceptions", "check the explicit factorizations");

  auto* lk1 = app.add_subcommand("laguerre-k1", "the linear-factor pipeline");
  u64 lk1_alo = 11, lk1_ahi = 40, lk1_nlimit = 511;
  lk1->add_option("--a-lo", lk1_alo, "a range start");
  lk1->add_option("--a-hi", lk1_ahi, "a range end");
  lk1->add_option("--n-limit", lk1_nlimit, "screen degree limit");

  auto* grimm = app.add_subcommand("grimm", "distinct-prime assignments on composite runs");
  u64 gr_start = 2, gr_end = 1'000'000;
  grimm->add_option("--start", gr_start, "range start");
  grimm->add_option("--end", gr_end, "range end");

  auto* omega = app.add_subcommand("omega", "prime-count bounds omega_0/1/2 and l(k)");
  u64 om_k = 10;
  i64 om_a = -1;
  omega->add_option("--k", om_k, "k")->required();
  omega->add_option("--a", om_a, "evaluate omega_0(k, a) only");

  auto* bounds = app.add_subcommand("bounds", "analytic inequality suites");
  std::string bd_suite;
  u64 bd_lo = 0, bd_hi = 0;
  std::vector<std::string> bd_samples;
  bounds->add_option("--suite", bd_suite, "suite label, or 'list'")->required();
  bounds->add_option("--lo", bd_lo, "range start");
  bounds->add_option("--hi", bd_hi, "range end");
  bounds->add_option("--samples", bd_samples, "m:k evaluation points (binomial suite)");

  auto* expd = app.add_subcommand("expdioph", "bounded exponential-Diophantine search");
  std::vector<u64> ed_lhs, ed_rhs;
  u64 ed_coeff = 1;
  i64 ed_const = 1;
  u32 ed_alpha_min = 3;
  std::string ed_catalogue;
  expd->add_option("--lhs", ed_lhs, "left side primes");
  expd->add_option("--rhs-primes", ed_rhs, "right side primes (default 2)");
  expd->add_option("--rhs-coeff", ed_coeff, "right side coefficient");
  expd->add_option("--const", ed_const, "right-hand constant");
  expd->add_option("--alpha-min", ed_alpha_min, "minimum exponent on 2");
  expd->add_option("--catalogue", ed_catalogue, "run a stored family: k3-endgame | k1-degrees");

  auto* sylv = app.add_subcommand("sylvester", "few-prime-factor window bound L(k,l)");
  u64 sy_k = 12, sy_t = 6, sy_l = 1;
  sylv->add_option("--k", sy_k, "window length")->required();
  sylv->add_option("--t", sy_t, "prime budget")->required();
  sylv->add_option("--l", sy_l, "number of primes in the correction")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (!config_path.empty()) load_config_file(config_path, cfg);
    PrimeTable table = prime_sieve(cfg.sieve_limit);

    if (sieve->parsed()) {
      report_header(out, "sieve", cfg, "x=" + std::to_string(sieve_x));
      auto pt = pi_theta_exact(sieve_x, table);
      out << "pi=" << pt.pi << " theta=" << pt.theta << "\n";
      return 0;
    }
    if (smooth->parsed()) {
      report_header(out, "smooth", cfg, "kind=" + smooth_kind + " p=" + std::to_string(smooth_p));
      SmoothSet s;
      if (smooth_kind == "plain")
        s = SmoothSet{SmoothKind::plain, smooth_p, cfg.smooth_bound,
                      smooth_numbers(smooth_p, cfg.smooth_bound, table, cfg.workers)};
      else if (smooth_kind == "consecutive")
        s = consecutive_smooth(smooth_p, cfg.smooth_bound, table, cfg.workers);
      else if (smooth_kind == "gap2")
        s = gap2_smooth(smooth_p, cfg.smooth_bound, table, cfg.workers);
      else
        throw input_error("unknown smooth kind " + smooth_kind);
      write_smooth_set(out, s);
      return 0;
    }
    if (sets->parsed()) {
      if (!sets_intersect.empty()) {
        report_header(out, "sets", cfg, "intersect");
        auto b = intersect_B(sets_intersect, sets_k, sets_alo, sets_ahi, table);
        for (u64 a : b) out << a << "\n";
        return 0;
      }
      if (sets_admissible) {
        report_header(out, "sets", cfg, "admissible p=" + std::to_string(sets_p));
        auto s = admissible_set(sets_p, sets_k, table);
        out << "r_p=" << s.r_p << " tail>" << s.tail_threshold() << "\n";
        for (auto& [lo, hi] : s.intervals()) out << "[" << lo << "," << hi << "]\n";
        return 0;
      }
      report_header(out, "sets", cfg,
                    "A_{k,p} k=" + std::to_string(sets_k) + " p=" + std::to_string(sets_p));
      for (u64 a : compute_A_kp(sets_k, sets_p, table, sets_ahi)) out << a << "\n";
      return 0;
    }
    if (proc->parsed()) {
      auto [def_lo, def_hi] = published_a_range(pr_k);
      u64 alo = pr_alo ? pr_alo : def_lo;
      u64 ahi = pr_ahi ? pr_ahi : def_hi;
      std::vector<u64> ms;
      if (pr_nprime) {
        auto R = N_recursion(std::max<u64>(pr_k, 4), cfg.smooth_bound, table);
        for (u64 j = 1; j < pr_k; ++j)
          for (u64 N : R.above(j, pr_k)) ms.push_back(N - j);
      } else if (pr_k == 2) {
        ms = m_source_k2(cfg.smooth_bound, table);
      } else {
        ms = m_source_small_k(pr_k, table);
      }
      report_header(out, "procedure-r", cfg,
                    "k=" + std::to_string(pr_k) + " a=(" + std::to_string(alo - 1) + "," +
                        std::to_string(ahi) + "] windows=" + std::to_string(ms.size()));
      auto res = procedure_r(pr_k, alo, ahi, ms, table, {}, cfg.workers);
      if (cfg.format == "jsonl")
        write_triplets_jsonl(out, res);
      else if (cfg.format == "folded")
        write_triplets_folded(out, res);
      else
        write_triplets_tsv(out, res);
      return 0;
    }
    if (app.get_subcommand("verify-exceptions")->parsed()) {
      report_header(out, "verify-exceptions", cfg);
      auto rep = lir::verify_exceptions();
      for (auto& it : rep.items)
        out << "n=" << it.n << " alpha=" << it.alpha << " " << (it.match ? "match" : "MISMATCH")
            << "\n";
      return exit_verified(out, rep.all_match());
    }
    if (lk1->parsed()) {
      report_header(out, "laguerre-k1", cfg,
                    "a=(" + std::to_string(lk1_alo - 1) + "," + std::to_string(lk1_ahi) +
                        "] n_limit=" + std::to_string(lk1_nlimit));
      auto sv = k1::screen(lk1_alo, lk1_ahi, lk1_nlimit, table);
      out << "screen survivors (n <= " << lk1_nlimit << "):\n";
      for (auto& s : sv) out << "  n=" << s.n << " a=" << s.a << "\n";
      std::vector<u64> avals;
      for (u64 a = lk1_alo; a <= lk1_ahi; ++a) avals.push_back(a);
      auto eqc = k1::equation_stage(avals, cfg.b_exp, table);
      out << "equation-stage candidates (n >= 512, exponents <= " << cfg.b_exp << "):\n";
      bool all_final = true;
      for (auto& c : eqc) {
        bool fin = k1::final_check(c.n, c.a);
        all_final = all_final && fin;
        out << "  n=" << c.n << " a=" << c.a << " via " << c.label << " final-check "
            << (fin ? "excluded" : "OPEN") << "\n";
      }
      return exit_verified(out, all_final);
    }
    if (grimm->parsed()) {
      report_header(out, "grimm", cfg,
                    "start=" + std::to_string(gr_start) + " end=" + std::to_string(gr_end));
      auto rep = grimm_range(gr_start, gr_end, table, cfg.workers);
      out << "runs=" << rep.runs << " failures=" << rep.failures.size() << "\n";
      for (u64 m : rep.failures) out << "  no certificate after " << m << "\n";
      return rep.failures.empty() ? 0 : 1;
    }
    if (omega->parsed()) {
      report_header(out, "omega", cfg, "k=" + std::to_string(om_k));
      if (om_a >= 0) {
        out << "omega0(" << om_k << "," << om_a << ")=" << omega0(om_k, u64(om_a), table) << "\n";
        return 0;
      }
      out << "omega1=" << omega1(om_k, table);
      if (om_k >= 100) out << " omega2=" << omega2(om_k, table);
      if (om_k >= 10 && om_k <= 17) out << " ell=" << small_k_ell(om_k, table);
      out << "\n";
      return 0;
    }
    if (bounds->parsed()) {
      if (bd_suite == "list") {
        for (auto& s : bound_suite_names()) out << s << "\n";
        return 0;
      }
      report_header(out, "bounds", cfg, "suite=" + bd_suite);
      BoundOptions bopt;
      if (!bd_samples.empty()) {
        bopt.k32_samples.clear();
        for (auto& s : bd_samples) {
          auto colon = s.find(':');
          if (colon == std::string::npos) throw input_error("sample must be m:k, got " + s);
          bopt.k32_samples.emplace_back(std::stoull(s.substr(0, colon)),
                                        std::stoull(s.substr(colon + 1)));
        }
      }
      auto rep = verify_analytic_bounds(bd_suite, bd_lo, bd_hi, table, bopt);
      write_bound_report(out, rep);
      return rep.success() ? 0 : 1;
    }
    if (expd->parsed()) {
      if (!ed_catalogue.empty()) {
        report_header(out, "expdioph", cfg, "catalogue=" + ed_catalogue);
        if (ed_catalogue == "k3-endgame") {
          bool none = true;
          for (auto& sys : k3_endgame_systems()) {
            out << sys.label << ":";
            bool refuted = false;
            for (auto& eq : sys.components) {
              if (!mod_filter_possible(eq, 8)) {
                out << " [" << eq.label << " impossible mod 8]";
                refuted = true;
                break;
              }
              auto sols = exp_dioph_search(eq, cfg.b_exp);
              out << " [" << eq.label << " solutions " << sols.size() << "]";
              if (sols.empty()) {
                refuted = true;
                break;
              }
            }
            out << (refuted ? " refuted" : " UNRESOLVED") << " within exponents <= "
                << cfg.b_exp << "\n";
            none = none && refuted;
          }
          return exit_verified(out, none);
        }
        if (ed_catalogue == "k1-degrees") {
          std::vector<u64> avals;
          for (u64 a = 11; a <= 40; ++a) avals.push_back(a);
          avals.push_back(48);
          auto cands = k1::equation_stage(avals, cfg.b_exp, table);
          for (auto& c : cands) out << "a=" << c.a << " n=" << c.n << " " << c.label << "\n";
          return 0;
        }
        throw input_error("unknown catalogue " + ed_catalogue);
      }
      if (ed_lhs.empty()) throw input_error("expdioph: need --lhs or --catalogue");
      ExpDiophEquation eq;
      eq.lhs_primes = ed_lhs;
      eq.rhs_primes = ed_rhs.empty() ? std::vector<u64>{2} : ed_rhs;
      eq.rhs_coeff = ed_coeff;
      eq.rhs_const = ed_const;
      eq.alpha_min = ed_alpha_min;
      report_header(out, "expdioph", cfg, "B=" + std::to_string(cfg.b_exp));
      if (!mod_filter_possible(eq, 8)) {
        out << "impossible mod 8\n";
        return 0;
      }
      for (auto& s : exp_dioph_search(eq, cfg.b_exp)) {
        out << "lhs:";
        for (auto e : s.lhs_exps) out << " " << e;
        out << " rhs:";
        for (auto e : s.rhs_exps) out << " " << e;
        out << "\n";
      }
      out << "search complete for exponents <= " << cfg.b_exp << "\n";
      return 0;
    }
    if (sylv->parsed()) {
      report_header(out, "sylvester", cfg);
      auto s = sylvester_bound(sy_k, sy_t, sy_l, table);
      out << "t0=" << s.t0 << " L=" << s.value << "\n";
      for (auto& term : s.terms)
        out << "  p=" << term.p << " h_p=" << term.h_p << " L0=" << term.L0 << "\n";
      return 0;
    }
  } catch (const input_error& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const capacity_error& e) {
    err << "capacity error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace cli
}  // namespace lir

#endif  // LIR_CLI_HPP
