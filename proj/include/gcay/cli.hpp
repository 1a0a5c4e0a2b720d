#pragma once

// Command-line dispatcher.  Exit codes: 0 success, 1 a well-formed run whose
// mathematical check failed (diameter not 2, audit violations, failed
// verification, exhausted search), 2 malformed input or precondition errors.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "gcay/json_io.hpp"
#include "gcay/search.hpp"

namespace gcay::cli {

namespace detail {

inline std::string fixed6(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << v;
  return os.str();
}

inline io::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  io::json j;
  in >> j;
  return j;
}

inline void emit(std::ostream& out, const io::json& j) { out << j.dump(2) << "\n"; }

inline void write_json_file(const std::string& path, const io::json& j) {
  cayley::detail::atomic_write(path, [&](std::ostream& out) { emit(out, j); });
}

inline groups::GroupContext context_for(u64 n, i64 alpha) {
  if (n == 1) return groups::GroupContext::make(1);
  if (alpha >= 0) return groups::GroupContext::with_alpha(n, u64(alpha));
  return groups::GroupContext::make(n);
}

}  // namespace detail

inline int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cayley graphs of diameter two from Gamma(n, alpha)"};
  app.require_subcommand(1);

  bool json = false;
  u64 seed = 0;
  unsigned threads = 0;
  std::string out_path;
  app.add_flag("--json", json, "machine-readable output");
  app.add_option("--seed", seed, "search seed");
  app.add_option("--threads", threads, "worker threads (0 = auto)");
  app.add_option("--out", out_path, "write payload to this file (atomic)");

  // alpha P
  u64 alpha_p = 0;
  CLI::App* cmd_alpha = app.add_subcommand("alpha", "derive the order-10 residue for a prime p = 1 mod 10");
  cmd_alpha->fallthrough();
  cmd_alpha->add_option("p", alpha_p, "prime = 1 mod 10")->required();

  // scheme search / scheme verify
  CLI::App* cmd_scheme = app.add_subcommand("scheme", "generator scheme tools");
  cmd_scheme->require_subcommand(1);
  cmd_scheme->fallthrough();
  u64 budget = 64;
  std::string alphabet = "basic";
  std::string cert_path;
  CLI::App* cmd_search = cmd_scheme->add_subcommand("search", "search for a scheme with full transversal coverage");
  cmd_search->fallthrough();
  cmd_search->add_option("--budget", budget, "max attempts");
  cmd_search->add_option("--alphabet", alphabet, "basic | extended | zero-only")
      ->check(CLI::IsMember({"basic", "extended", "zero-only"}));
  cmd_search->add_option("--cert", cert_path, "also write the certificate to this file");
  std::string scheme_path;
  CLI::App* cmd_verify = cmd_scheme->add_subcommand("verify", "verify a scheme against its certificate");
  cmd_verify->fallthrough();
  cmd_verify->add_option("--scheme", scheme_path, "scheme JSON file")->required();
  cmd_verify->add_option("--cert", cert_path, "certificate JSON file (rebuilt if omitted)");

  // graph build / graph diameter
  CLI::App* cmd_graph = app.add_subcommand("graph", "Cayley graph tools");
  cmd_graph->require_subcommand(1);
  cmd_graph->fallthrough();
  u64 graph_n = 11;
  i64 graph_alpha = -1;
  u64 pad = 0;
  std::string format = "edges";
  std::string method = "bfs";
  CLI::App* cmd_build = cmd_graph->add_subcommand("build", "expand a scheme and export the graph");
  cmd_build->fallthrough();
  cmd_build->add_option("--scheme", scheme_path, "scheme JSON file")->required();
  cmd_build->add_option("--n", graph_n, "modulus (1 or a prime = 1 mod 10)")->required();
  cmd_build->add_option("--alpha", graph_alpha, "override alpha (default: derived)");
  cmd_build->add_option("--pad", pad, "pad the connection set to this degree");
  cmd_build->add_option("--format", format, "edges | dot")->check(CLI::IsMember({"edges", "dot"}));
  CLI::App* cmd_diam = cmd_graph->add_subcommand("diameter", "verify the graph has diameter 2");
  cmd_diam->fallthrough();
  cmd_diam->add_option("--scheme", scheme_path, "scheme JSON file")->required();
  cmd_diam->add_option("--n", graph_n, "modulus (1 or a prime = 1 mod 10)")->required();
  cmd_diam->add_option("--alpha", graph_alpha, "override alpha (default: derived)");
  cmd_diam->add_option("--method", method, "bfs | certificate | both")
      ->check(CLI::IsMember({"bfs", "certificate", "both"}));
  cmd_diam->add_option("--cert", cert_path, "certificate JSON file (rebuilt if omitted)");

  // prime next / prime audit
  CLI::App* cmd_prime = app.add_subcommand("prime", "class-prime tools");
  cmd_prime->require_subcommand(1);
  cmd_prime->fallthrough();
  double prime_x = 0.0;
  CLI::App* cmd_next = cmd_prime->add_subcommand("next", "smallest prime p > x with p = 1 mod 10");
  cmd_next->fallthrough();
  cmd_next->add_option("x", prime_x, "lower bound")->required();
  u64 audit_lo = 0, audit_hi = 0;
  double audit_delta = primes::EstimateConstants{}.delta;
  CLI::App* cmd_audit = cmd_prime->add_subcommand("audit", "audit consecutive class-prime ratios");
  cmd_audit->fallthrough();
  cmd_audit->add_option("lo", audit_lo, "range start (>= 11)")->required();
  cmd_audit->add_option("hi", audit_hi, "range end (<= 1e9)")->required();
  cmd_audit->add_option("--delta", audit_delta, "relative gap bound");

  // theta X K L
  double theta_x = 0.0;
  u64 theta_k = 1, theta_l = 0;
  CLI::App* cmd_theta = app.add_subcommand("theta", "Chebyshev theta(x; k, l)");
  cmd_theta->fallthrough();
  cmd_theta->add_option("x", theta_x, "upper limit (<= 1e8)")->required();
  cmd_theta->add_option("k", theta_k, "modulus");
  cmd_theta->add_option("l", theta_l, "residue class");

  // bound D
  u64 bound_d = 0;
  CLI::App* cmd_bound = app.add_subcommand("bound", "construction order report for a degree");
  cmd_bound->fallthrough();
  cmd_bound->add_option("d", bound_d, "degree (>= 16)")->required();

  // constants
  CLI::App* cmd_constants = app.add_subcommand("constants", "derived stepping constants");
  cmd_constants->fallthrough();

  // ratio-limits [C]
  double ratio_c = 200.0 / 289.0;
  CLI::App* cmd_ratio = app.add_subcommand("ratio-limits", "order/Moore ratio limits for constant c");
  cmd_ratio->fallthrough();
  cmd_ratio->add_option("c", ratio_c, "constant in (0, 1]");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  // --out always carries the json payload, never the text rendering
  if (!out_path.empty()) json = true;

  auto deliver = [&](const io::json& payload) {
    if (!out_path.empty()) detail::write_json_file(out_path, payload);
    else detail::emit(out, payload);
  };

  try {
    if (*cmd_alpha) {
      auto cert = modmath::find_alpha(alpha_p);
      if (json) {
        deliver(io::alpha_to_json(cert));
      } else {
        out << "p=" << cert.p << " a=" << cert.a << " s=" << cert.s << " alpha=" << cert.alpha
            << " checks[i]=" << cert.checks.order10 << " checks[ii]=" << cert.checks.units_minus
            << " checks[iii]=" << cert.checks.units_plus << " checks[iv]=" << cert.checks.half_negates
            << "\n";
      }
      return cert.checks.all() ? 0 : 1;
    }

    if (*cmd_search) {
      scheme::SearchAlphabet alpha_mode = scheme::SearchAlphabet::basic;
      if (alphabet == "extended") alpha_mode = scheme::SearchAlphabet::extended;
      if (alphabet == "zero-only") alpha_mode = scheme::SearchAlphabet::zero_only;
      scheme::SearchResult res;
      try {
        res = scheme::search(budget, seed, alpha_mode);
      } catch (const scheme::SearchExhausted& e) {
        err << "search failed: " << e.what() << "\n";
        return 1;
      }
      if (!cert_path.empty()) detail::write_json_file(cert_path, io::certificate_to_json(res.certificate));
      deliver(io::scheme_to_json(res.scheme));
      return 0;
    }

    if (*cmd_verify) {
      auto sch = io::scheme_from_json(detail::load_json_file(scheme_path));
      scheme::DiameterCertificate cert;
      if (!cert_path.empty()) cert = io::certificate_from_json(detail::load_json_file(cert_path));
      else cert = scheme::certificate_build(sch);
      std::vector<std::string> diag;
      bool ok = scheme::certificate_verify(cert, sch, &diag);
      if (json) {
        io::json j{{"verified", ok}, {"entries", cert.entries.size()}, {"diagnostics", diag}};
        deliver(j);
      } else {
        out << "verified=" << (ok ? "true" : "false") << " entries=" << cert.entries.size() << "\n";
        for (const auto& d : diag) err << d << "\n";
      }
      return ok ? 0 : 1;
    }

    if (*cmd_build) {
      auto sch = io::scheme_from_json(detail::load_json_file(scheme_path));
      auto ctx = detail::context_for(graph_n, graph_alpha);
      auto X = scheme::expand_x(sch, ctx);
      if (pad > 0) X = scheme::pad_to_degree(std::move(X), pad, ctx);
      auto gr = cayley::build_graph(std::move(X), ctx);
      if (out_path.empty()) {
        if (format == "edges") cayley::export_edges(gr, out);
        else cayley::export_dot(gr, out);
      } else {
        if (format == "edges") cayley::export_edges(gr, out_path);
        else cayley::export_dot(gr, out_path);
      }
      return 0;
    }

    if (*cmd_diam) {
      auto sch = io::scheme_from_json(detail::load_json_file(scheme_path));
      auto ctx = detail::context_for(graph_n, graph_alpha);
      auto gr = cayley::build_graph(sch, ctx);
      cayley::VerifyMethod m = cayley::VerifyMethod::bfs;
      if (method == "certificate") m = cayley::VerifyMethod::certificate;
      if (method == "both") m = cayley::VerifyMethod::both;
      scheme::DiameterCertificate cert;
      const scheme::DiameterCertificate* cert_ptr = nullptr;
      if (!cert_path.empty()) {
        cert = io::certificate_from_json(detail::load_json_file(cert_path));
        cert_ptr = &cert;
      }
      unsigned nthreads = threads == 0 ? std::thread::hardware_concurrency() : threads;
      auto verdict = cayley::diameter2_verify(gr, m, &sch, cert_ptr, nthreads);
      if (json) {
        deliver(io::verdict_to_json(verdict));
      } else {
        out << "order=" << verdict.order << " degree=" << verdict.degree
            << " diameter2=" << (verdict.diameter2 ? "true" : "false")
            << " method=" << cayley::method_name(verdict.method);
        if (!verdict.levels.empty()) {
          out << " levels=";
          for (size_t i = 0; i < verdict.levels.size(); ++i)
            out << (i ? "," : "") << verdict.levels[i];
        }
        if (verdict.witness) out << " witness=" << *verdict.witness;
        out << "\n";
      }
      return verdict.diameter2 ? 0 : 1;
    }

    if (*cmd_next) {
      u64 p = primes::next_prime_in_class(prime_x);
      if (json) deliver(io::json{{"x", prime_x}, {"next", p}});
      else out << "next=" << p << "\n";
      return 0;
    }

    if (*cmd_audit) {
      auto rep = primes::gap_audit(audit_lo, audit_hi, audit_delta);
      if (json) {
        deliver(io::audit_to_json(rep));
      } else {
        out << "lo=" << rep.lo << " hi=" << rep.hi << " checked_pairs=" << rep.checked_pairs;
        if (rep.worst_pair)
          out << " worst=" << rep.worst_pair->first << "," << rep.worst_pair->second;
        out << " violations=" << rep.violations.size() << "\n";
        for (const auto& v : rep.violations) out << "violation " << v.first << " " << v.second << "\n";
      }
      return rep.violations.empty() ? 0 : 1;
    }

    if (*cmd_theta) {
      double v = primes::theta(theta_x, theta_k, theta_l);
      if (json) deliver(io::json{{"x", theta_x}, {"k", theta_k}, {"l", theta_l}, {"theta", v}});
      else out << "theta=" << detail::fixed6(v) << "\n";
      return 0;
    }

    if (*cmd_bound) {
      auto rep = bounds::construction_bound(bound_d);
      if (json) {
        deliver(io::bound_to_json(rep));
      } else {
        out << "d=" << rep.d << " n=" << rep.n << " r=" << rep.r << " p=" << rep.p
            << " d_prime=" << rep.d_prime << " order=" << to_string_u128(rep.order)
            << " ratio=" << to_string_u128(rep.ratio_num) << "/" << to_string_u128(rep.ratio_den)
            << " ratio_dec=" << rep.ratio_decimal(6)
            << " guaranteed=" << (rep.guaranteed ? "true" : "false") << "\n";
      }
      return 0;
    }

    if (*cmd_constants) {
      auto rep = primes::derive_constants();
      if (json) {
        deliver(io::constants_to_json(rep));
      } else {
        out << "k=" << rep.input.k << " phi_k=" << rep.input.phi_k
            << " epsilon=" << rep.input.epsilon << " delta=" << rep.input.delta
            << " gamma=" << rep.input.gamma << " delta_min=" << detail::fixed6(rep.delta_min)
            << " regime2_threshold=" << detail::fixed6(rep.regime2_threshold)
            << " margin_at_effective=" << detail::fixed6(rep.margin_at_effective)
            << " delta_ok=" << rep.delta_ok << " threshold_ok=" << rep.threshold_ok << "\n";
      }
      return rep.delta_ok && rep.threshold_ok ? 0 : 1;
    }

    if (*cmd_ratio) {
      auto lims = bounds::ratio_limits(ratio_c);
      if (json) deliver(io::json{{"c", ratio_c}, {"lower", lims.lower}, {"upper", lims.upper}});
      else out << "c=" << ratio_c << " lower=" << detail::fixed6(lims.lower)
               << " upper=" << detail::fixed6(lims.upper) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  err << "error: no subcommand\n" << app.help();
  return 2;
}

}  // namespace gcay::cli
