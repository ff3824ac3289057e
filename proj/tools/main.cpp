// Command line front end: generation, evaluation, congruence checks, sweeps,
// differential residuals, rook tables, irreducibility certificates.
//
// Exit codes: 0 success or check holds, 1 check ran and found a violation,
// 2 usage error (report on standard error).

#include <bilaguerre/congruence.hpp>
#include <bilaguerre/laguerre.hpp>
#include <bilaguerre/pde.hpp>
#include <bilaguerre/poly.hpp>
#include <bilaguerre/rook.hpp>
#include <bilaguerre/structure.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace bilag;
using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Missing or out-of-range parameters for the chosen statement are usage
// errors, not checker verdicts.
unsigned req_unsigned(const std::optional<long long>& v, const char* name) {
  if (!v) throw UsageError(std::string("missing required --") + name);
  if (*v < 0)
    throw UsageError(std::string("--") + name + " must be nonnegative");
  return static_cast<unsigned>(*v);
}

long long req_signed(const std::optional<long long>& v, const char* name) {
  if (!v) throw UsageError(std::string("missing required --") + name);
  return *v;
}

unsigned default_jobs() {
  const char* env = std::getenv("BILAGUERRE_JOBS");
  if (env == nullptr || *env == '\0') return 1;
  unsigned parsed = 0;
  auto [ptr, ec] = std::from_chars(env, env + std::string_view(env).size(), parsed);
  if (ec != std::errc{} || *ptr != '\0' || parsed == 0)
    throw UsageError("BILAGUERRE_JOBS must be a positive integer");
  return parsed;
}

void emit_report(const CongruenceReport& rep, const std::string& format) {
  if (format == "json") {
    std::cout << report_to_json(rep) << '\n';
    return;
  }
  std::cout << statement_name(rep.statement) << " mod " << rep.modulus.get_str();
  if (rep.holds) {
    std::cout << ": holds\n";
    return;
  }
  std::cout << ": FAILS";
  if (rep.witness) {
    if (rep.witness->monomial)
      std::cout << " at x^" << rep.witness->monomial->x << " y^"
                << rep.witness->monomial->y;
    std::cout << " (lhs residue " << rep.witness->lhs_residue.get_str()
              << ", rhs residue " << rep.witness->rhs_residue.get_str() << ")";
  }
  std::cout << '\n';
}

int cmd_gen(unsigned n, unsigned m, const std::string& route,
            const std::string& format) {
  BiPoly p;
  if (route == "explicit")
    p = bilaguerre(n, m);
  else if (route == "rodrigues")
    p = bilaguerre_rodrigues(n, m);
  else if (route == "x-exp")
    p = bilaguerre_via_x(n, m);
  else
    p = bilaguerre_via_y(n, m);
  if (format == "json")
    std::cout << serialize(p) << '\n';
  else
    std::cout << to_pretty_string(p) << '\n';
  return 0;
}

int cmd_eval(unsigned n, unsigned m, const std::string& xs,
             const std::string& ys, const std::string& format) {
  Rational x = Rational::from_string(xs);
  Rational y = Rational::from_string(ys);
  Rational v = bilaguerre(n, m).eval(x, y);
  if (format == "json") {
    ordered_json j;
    j["n"] = n;
    j["m"] = m;
    j["x"] = x.to_string();
    j["y"] = y.to_string();
    j["value"] = v.to_string();
    std::cout << j.dump() << '\n';
  } else {
    std::cout << v.to_string() << '\n';
  }
  return 0;
}

struct CheckParams {
  std::optional<long long> n, m, p, q, t, l, i, s, alpha;
  bool no_factorial = false;
};

int cmd_check(const std::string& statement, const CheckParams& a,
              const std::string& format) {
  std::optional<Statement> st = statement_from_name(statement);
  if (!st) throw UsageError("unknown statement: " + statement);
  CongruenceReport rep;
  switch (*st) {
    case Statement::carlitz:
      rep = check_carlitz(req_unsigned(a.n, "n"), req_unsigned(a.m, "m"),
                          req_unsigned(a.alpha, "alpha"));
      break;
    case Statement::pochhammer:
      rep = check_pochhammer_congruence(
          req_unsigned(a.n, "n"), req_unsigned(a.m, "m"),
          req_unsigned(a.t, "t"), req_unsigned(a.l, "l"), req_signed(a.p, "p"),
          req_signed(a.q, "q"));
      break;
    case Statement::parameter_shift:
      rep = check_parameter_shift(req_unsigned(a.n, "n"),
                                  req_unsigned(a.m, "m"),
                                  req_unsigned(a.q, "q"),
                                  req_unsigned(a.i, "i"), req_signed(a.p, "p"));
      break;
    case Statement::alpha_periodicity:
      rep = check_alpha_periodicity(req_unsigned(a.n, "n"),
                                    req_unsigned(a.m, "m"),
                                    req_unsigned(a.q, "q"));
      break;
    case Statement::binomial_pochhammer:
      rep = check_binomial_pochhammer(
          req_unsigned(a.m, "m"), req_unsigned(a.n, "n"),
          req_unsigned(a.q, "q"), req_unsigned(a.i, "i"), req_signed(a.p, "p"));
      break;
    case Statement::binomial_product:
      rep = check_binomial_product(req_unsigned(a.m, "m"),
                                   req_unsigned(a.s, "s"),
                                   req_unsigned(a.q, "q"),
                                   req_unsigned(a.i, "i"), !a.no_factorial);
      break;
    case Statement::main_theorem:
      rep = check_main_theorem(req_unsigned(a.n, "n"), req_unsigned(a.m, "m"),
                               req_unsigned(a.p, "p"), req_unsigned(a.q, "q"));
      break;
  }
  emit_report(rep, format);
  return rep.holds ? 0 : 1;
}

int cmd_sweep(const std::string& statement, const SweepBounds& bounds,
              unsigned jobs, const std::string& format) {
  std::optional<Statement> st = statement_from_name(statement);
  if (!st) throw UsageError("unknown statement: " + statement);
  SweepSummary summary = sweep(*st, bounds, jobs);
  if (format == "json") {
    std::cout << summary_to_json(summary) << '\n';
  } else {
    std::cout << statement_name(summary.statement) << ": checked "
              << summary.checked << ", failed " << summary.failed << " ("
              << summary.elapsed_ms << " ms)\n";
    const auto names = tuple_names(summary.statement);
    for (const auto& f : summary.failures) {
      std::cout << " ";
      for (std::size_t j = 0; j < f.tuple.size(); ++j)
        std::cout << ' ' << names[j] << '=' << f.tuple[j];
      std::cout << '\n';
    }
  }
  return summary.failed == 0 ? 0 : 1;
}

int cmd_pde(unsigned n, unsigned m, const std::string& format) {
  ResidualPair r = pde_residuals(n, m);
  bool zero = r.row1.is_zero() && r.row2.is_zero();
  if (format == "json") {
    ordered_json j;
    j["n"] = n;
    j["m"] = m;
    j["row1"] = ordered_json::parse(serialize(r.row1));
    j["row2"] = ordered_json::parse(serialize(r.row2));
    j["zero"] = zero;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "row1 = " << to_pretty_string(r.row1) << '\n'
              << "row2 = " << to_pretty_string(r.row2) << '\n';
  }
  return zero ? 0 : 1;
}

RookVector rook_from_polynomial(unsigned n) {
  UniPoly r = rook_polynomial_from_laguerre(n);
  RookVector rv;
  rv.n = n;
  rv.counts.assign(n + 1, Integer(0));
  for (unsigned k = 0; k <= n; ++k) rv.counts[k] = r.coeff(k).num();
  return rv;
}

int cmd_rook(unsigned n, bool brute, const std::string& format) {
  RookVector rv = rook_from_polynomial(n);
  if (brute) {
    RookVector direct = rook_numbers_bruteforce(n);
    if (direct.counts != rv.counts) {
      std::cerr << "rook: placement counts disagree with the polynomial route\n";
      return 1;
    }
  }
  if (format == "csv") {
    write_rook_csv(std::cout, rv);
  } else if (format == "json") {
    ordered_json j;
    j["n"] = n;
    j["counts"] = ordered_json::array();
    for (const auto& c : rv.counts) j["counts"].push_back(c.get_str());
    std::cout << j.dump() << '\n';
  } else {
    for (unsigned k = 0; k <= n; ++k)
      std::cout << "k=" << k << ": " << rv.counts[k].get_str() << '\n';
  }
  return 0;
}

int cmd_cert(unsigned n, unsigned m, const std::string& format) {
  Certificate c = irreducibility_certificate(n, m);
  if (format == "json") {
    std::cout << certificate_to_json(c) << '\n';
  } else {
    std::cout << "n=" << c.n << " m=" << c.m << ": diagonal "
              << (c.diagonal_ok ? "ok" : "BROKEN") << ", core degree "
              << c.core_degree << " "
              << core_irreducibility_name(c.core_irreducible) << " -> "
              << conclusion_name(c.conclusion) << '\n';
  }
  return c.conclusion == Conclusion::irreducible ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-variable Laguerre polynomial toolkit"};
  app.require_subcommand(1);

  auto add_format = [](CLI::App* cmd, std::string& slot,
                       const char* dflt = "json") {
    slot = dflt;
    cmd->add_option("--format", slot, "output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
  };

  unsigned gen_n = 0, gen_m = 0;
  std::string gen_route = "explicit", gen_format;
  CLI::App* gen = app.add_subcommand("gen", "print l_{n,m}(x, y)");
  gen->add_option("--n", gen_n)->required();
  gen->add_option("--m", gen_m)->required();
  gen->add_option("--route", gen_route)
      ->check(CLI::IsMember({"explicit", "rodrigues", "x-exp", "y-exp"}));
  add_format(gen, gen_format);

  unsigned eval_n = 0, eval_m = 0;
  std::string eval_x, eval_y, eval_format;
  CLI::App* eval = app.add_subcommand("eval", "evaluate at a rational point");
  eval->add_option("--n", eval_n)->required();
  eval->add_option("--m", eval_m)->required();
  eval->add_option("--x", eval_x, "x value, \"num/den\"")->required();
  eval->add_option("--y", eval_y, "y value, \"num/den\"")->required();
  add_format(eval, eval_format);

  std::string check_statement, check_format;
  CheckParams cp;
  CLI::App* check = app.add_subcommand("check", "decide one congruence");
  check->add_option("--statement", check_statement)->required();
  check->add_option("--n", cp.n);
  check->add_option("--m", cp.m);
  check->add_option("--p", cp.p);
  check->add_option("--q", cp.q);
  check->add_option("--t", cp.t);
  check->add_option("--l", cp.l);
  check->add_option("--i", cp.i);
  check->add_option("--s", cp.s);
  check->add_option("--alpha", cp.alpha);
  check->add_flag("--no-factorial", cp.no_factorial,
                  "drop the factorial factor from the right side");
  add_format(check, check_format);

  std::string sweep_statement, sweep_format;
  SweepBounds bounds;
  std::optional<unsigned> sweep_jobs;
  CLI::App* sw = app.add_subcommand("sweep", "decide a whole parameter grid");
  sw->add_option("--statement", sweep_statement)->required();
  sw->add_option("--max-n", bounds.max_n);
  sw->add_option("--max-m", bounds.max_m);
  sw->add_option("--max-p", bounds.max_p);
  sw->add_option("--max-q", bounds.max_q);
  sw->add_option("--max-alpha", bounds.max_alpha);
  sw->add_option("--jobs", sweep_jobs, "worker threads");
  add_format(sw, sweep_format);

  unsigned pde_n = 0, pde_m = 0;
  std::string pde_format;
  CLI::App* pde = app.add_subcommand("pde", "differential system residuals");
  pde->add_option("--n", pde_n)->required();
  pde->add_option("--m", pde_m)->required();
  add_format(pde, pde_format);

  unsigned rook_n = 0;
  bool rook_brute = false;
  std::string rook_format;
  CLI::App* rook = app.add_subcommand("rook", "non-attacking rook counts");
  rook->add_option("--n", rook_n)->required();
  rook->add_flag("--brute", rook_brute, "cross-check by exhaustive placement");
  add_format(rook, rook_format, "csv");

  unsigned cert_n = 0, cert_m = 0;
  std::string cert_format;
  CLI::App* cert = app.add_subcommand("cert", "irreducibility certificate");
  cert->add_option("--n", cert_n)->required();
  cert->add_option("--m", cert_m)->required();
  add_format(cert, cert_format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!rook->parsed()) {
      for (const std::string* f : {&gen_format, &eval_format, &check_format,
                                   &sweep_format, &pde_format, &cert_format})
        if (*f == "csv")
          throw UsageError("csv output is defined for rook tables only");
    }
    if (gen->parsed()) return cmd_gen(gen_n, gen_m, gen_route, gen_format);
    if (eval->parsed())
      return cmd_eval(eval_n, eval_m, eval_x, eval_y, eval_format);
    if (check->parsed()) return cmd_check(check_statement, cp, check_format);
    if (sw->parsed()) {
      unsigned jobs = sweep_jobs ? *sweep_jobs : default_jobs();
      if (jobs == 0) throw UsageError("--jobs must be positive");
      return cmd_sweep(sweep_statement, bounds, jobs, sweep_format);
    }
    if (pde->parsed()) return cmd_pde(pde_n, pde_m, pde_format);
    if (rook->parsed()) return cmd_rook(rook_n, rook_brute, rook_format);
    if (cert->parsed()) return cmd_cert(cert_n, cert_m, cert_format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
