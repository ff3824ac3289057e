#include <bilaguerre/congruence.hpp>

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <thread>

namespace bilag {

using ordered_json = nlohmann::ordered_json;

namespace {

void require_range(bool ok, const char* what) {
  if (!ok) throw std::out_of_range(what);
}

void require_arg(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

IntBiPoly scaled_int(const BiPoly& p, const Integer& s) {
  return to_integer_poly(p * Rational(s));
}

}  // namespace

const char* statement_name(Statement s) {
  switch (s) {
    case Statement::carlitz: return "carlitz";
    case Statement::pochhammer: return "pochhammer";
    case Statement::parameter_shift: return "parameter_shift";
    case Statement::alpha_periodicity: return "alpha_periodicity";
    case Statement::binomial_pochhammer: return "binomial_pochhammer";
    case Statement::binomial_product: return "binomial_product";
    case Statement::main_theorem: return "main";
  }
  return "?";
}

std::optional<Statement> statement_from_name(std::string_view name) {
  for (Statement s : {Statement::carlitz, Statement::pochhammer,
                      Statement::parameter_shift, Statement::alpha_periodicity,
                      Statement::binomial_pochhammer, Statement::binomial_product,
                      Statement::main_theorem})
    if (name == statement_name(s)) return s;
  return std::nullopt;
}

const std::vector<std::string>& tuple_names(Statement s) {
  static const std::vector<std::string> carlitz{"n", "m", "alpha"};
  static const std::vector<std::string> pochhammer{"n", "m", "t", "l", "p", "q"};
  static const std::vector<std::string> parameter_shift{"n", "m", "q", "i", "p"};
  static const std::vector<std::string> alpha_periodicity{"n", "m", "q"};
  static const std::vector<std::string> binomial_pochhammer{"m", "n", "q", "i", "p"};
  static const std::vector<std::string> binomial_product{"m", "s", "q", "i"};
  static const std::vector<std::string> main_theorem{"n", "m", "p", "q"};
  switch (s) {
    case Statement::carlitz: return carlitz;
    case Statement::pochhammer: return pochhammer;
    case Statement::parameter_shift: return parameter_shift;
    case Statement::alpha_periodicity: return alpha_periodicity;
    case Statement::binomial_pochhammer: return binomial_pochhammer;
    case Statement::binomial_product: return binomial_product;
    case Statement::main_theorem: return main_theorem;
  }
  return carlitz;
}

// ===== instance builders ===================================================

PolyCongruence carlitz_instance(unsigned n, unsigned m, unsigned alpha) {
  require_arg(m >= 1, "carlitz: modulus m must be >= 1");
  IntBiPoly lhs =
      scaled_int(embed_x(laguerre_alpha(n + m, alpha)), factorial(n + m));
  BiPoly a = embed_x(laguerre_alpha(n, alpha)) * Rational(factorial(n));
  BiPoly b = embed_x(laguerre_alpha(m, alpha)) * Rational(factorial(m));
  return {Statement::carlitz, std::move(lhs), to_integer_poly(a * b), Integer(m)};
}

ScalarCongruence pochhammer_instance(unsigned n, unsigned m, unsigned t,
                                     unsigned l, long long p, long long q) {
  require_range(t <= n, "pochhammer: requires t <= n");
  require_range(l <= m, "pochhammer: requires l <= m");
  require_arg(p != 0 && q != 0, "pochhammer: p and q must be nonzero");
  Integer P(static_cast<long>(p)), Q(static_cast<long>(q));
  Integer base = Integer(l) + 1;
  Integer lhs = pochhammer(base - P, m - l) * pochhammer(base + t + Q, n - t);
  Integer rhs = pochhammer(base, m - l) * pochhammer(base + t, n - t);
  return {Statement::pochhammer, std::move(lhs), std::move(rhs), gcd(P, Q)};
}

PolyCongruence parameter_shift_instance(unsigned n, unsigned m, unsigned q,
                                        unsigned i, long long p) {
  require_arg(q >= 1, "parameter_shift: q must be >= 1");
  require_arg(p != 0, "parameter_shift: p must be nonzero");
  require_range(i >= q && i <= m + q, "parameter_shift: requires q <= i <= m+q");
  unsigned l = i - q;
  Integer P(static_cast<long>(p));
  Integer nf = factorial(n);
  IntBiPoly lhs = scaled_int(embed_x(laguerre_alpha(n, i)),
                             nf * pochhammer(Integer(l) + 1 - P, m - l));
  IntBiPoly rhs = scaled_int(embed_x(laguerre_alpha(n, l)),
                             nf * pochhammer(Integer(l) + 1, m - l));
  return {Statement::parameter_shift, std::move(lhs), std::move(rhs),
          gcd(P, Integer(q))};
}

PolyCongruence alpha_periodicity_instance(unsigned n, unsigned m, unsigned q) {
  require_arg(q >= 1, "alpha_periodicity: q must be >= 1");
  Integer nf = factorial(n);
  IntBiPoly lhs = scaled_int(embed_x(laguerre_alpha(n, m + q)), nf);
  IntBiPoly rhs = scaled_int(embed_x(laguerre_alpha(n, m)), nf);
  return {Statement::alpha_periodicity, std::move(lhs), std::move(rhs), Integer(q)};
}

ScalarCongruence binomial_pochhammer_instance(unsigned m, unsigned n,
                                              unsigned q, unsigned i,
                                              long long p) {
  require_arg(q >= 1, "binomial_pochhammer: q must be >= 1");
  require_arg(p != 0, "binomial_pochhammer: p must be nonzero");
  require_range(i >= q && i <= m + q,
                "binomial_pochhammer: requires q <= i <= m+q");
  unsigned len = m + q - i;  // m - (i - q)
  Integer P(static_cast<long>(p));
  Integer shift = Integer(i) - q;
  Integer lhs = binomial(m, len) * pochhammer(Integer(n) + P + shift + 1, len);
  Integer rhs = binomial(m + n, len) * pochhammer(shift - P + 1, len);
  return {Statement::binomial_pochhammer, std::move(lhs), std::move(rhs),
          gcd(P, Integer(q))};
}

ScalarCongruence binomial_product_instance(unsigned m, unsigned s, unsigned q,
                                           unsigned i, bool with_factorial) {
  require_arg(q >= 1, "binomial_product: q must be >= 1");
  require_range(i >= q && i <= m + q, "binomial_product: requires q <= i <= m+q");
  unsigned len = m + q - i;
  Integer f = with_factorial ? factorial(len) : Integer(1);
  Integer lhs = f * binomial(m, len) * binomial(m + s, len);
  Integer rhs = f * binomial(m + q, len) * binomial(m + s + q, len);
  return {Statement::binomial_product, std::move(lhs), std::move(rhs), Integer(q)};
}

PolyCongruence main_theorem_instance(unsigned n, unsigned m, unsigned p,
                                     unsigned q) {
  require_arg(p >= 1 && q >= 1, "main: p and q must be >= 1");
  IntBiPoly lhs = scaled_int(bilaguerre(n + p, m + q),
                             factorial(n + p) * factorial(m + q));
  BiPoly a = bilaguerre(n, m) * Rational(factorial(n) * factorial(m));
  BiPoly b = bilaguerre(p, q) * Rational(factorial(p) * factorial(q));
  return {Statement::main_theorem, std::move(lhs), to_integer_poly(a * b),
          gcd(Integer(p), Integer(q))};
}

// ===== deciding ============================================================

// One mechanism for every statement: reduce the difference and compare with
// zero. The witness reports per-side residues at the first surviving
// monomial in graded lex order.
CongruenceReport decide(const PolyCongruence& c) {
  IntBiPoly diff = reduce_mod(c.lhs - c.rhs, c.modulus);
  CongruenceReport rep{c.statement, c.modulus, diff.is_zero(), std::nullopt};
  if (!rep.holds) {
    Monomial2 where = diff.terms().begin()->first;
    rep.witness = Witness{where,
                          canonical_residue(c.lhs.coeff(where.x, where.y), c.modulus),
                          canonical_residue(c.rhs.coeff(where.x, where.y), c.modulus)};
  }
  return rep;
}

CongruenceReport decide(const ScalarCongruence& c) {
  Integer diff = canonical_residue(c.lhs - c.rhs, c.modulus);
  CongruenceReport rep{c.statement, c.modulus, diff == 0, std::nullopt};
  if (!rep.holds)
    rep.witness = Witness{std::nullopt, canonical_residue(c.lhs, c.modulus),
                          canonical_residue(c.rhs, c.modulus)};
  return rep;
}

CongruenceReport check_carlitz(unsigned n, unsigned m, unsigned alpha) {
  return decide(carlitz_instance(n, m, alpha));
}
CongruenceReport check_pochhammer_congruence(unsigned n, unsigned m, unsigned t,
                                  unsigned l, long long p, long long q) {
  return decide(pochhammer_instance(n, m, t, l, p, q));
}
CongruenceReport check_parameter_shift(unsigned n, unsigned m, unsigned q,
                                       unsigned i, long long p) {
  return decide(parameter_shift_instance(n, m, q, i, p));
}
CongruenceReport check_alpha_periodicity(unsigned n, unsigned m, unsigned q) {
  return decide(alpha_periodicity_instance(n, m, q));
}
CongruenceReport check_binomial_pochhammer(unsigned m, unsigned n, unsigned q,
                                           unsigned i, long long p) {
  return decide(binomial_pochhammer_instance(m, n, q, i, p));
}
CongruenceReport check_binomial_product(unsigned m, unsigned s, unsigned q,
                                        unsigned i, bool with_factorial) {
  return decide(binomial_product_instance(m, s, q, i, with_factorial));
}
CongruenceReport check_main_theorem(unsigned n, unsigned m, unsigned p,
                                    unsigned q) {
  return decide(main_theorem_instance(n, m, p, q));
}

// ===== sweeping ============================================================

namespace {

std::vector<long long> signed_range(unsigned max) {
  std::vector<long long> v;
  for (long long s = -static_cast<long long>(max); s <= static_cast<long long>(max); ++s)
    if (s != 0) v.push_back(s);
  return v;
}

}  // namespace

std::vector<std::vector<long long>> sweep_grid(Statement st,
                                               const SweepBounds& b) {
  std::vector<std::vector<long long>> grid;
  auto add = [&grid](std::initializer_list<long long> t) { grid.emplace_back(t); };

  switch (st) {
    case Statement::carlitz:
      for (long long n = 0; n <= b.max_n; ++n)
        for (long long m = 1; m <= b.max_m; ++m)
          for (long long a = 0; a <= b.max_alpha; ++a) add({n, m, a});
      break;
    case Statement::pochhammer:
      for (long long n = 0; n <= b.max_n; ++n)
        for (long long m = 0; m <= b.max_m; ++m)
          for (long long t = 0; t <= n; ++t)
            for (long long l = 0; l <= m; ++l)
              for (long long p : signed_range(b.max_p))
                for (long long q : signed_range(b.max_q)) add({n, m, t, l, p, q});
      break;
    case Statement::parameter_shift:
      for (long long n = 0; n <= b.max_n; ++n)
        for (long long m = 0; m <= b.max_m; ++m)
          for (long long q = 1; q <= b.max_q; ++q)
            for (long long i = q; i <= m + q; ++i)
              for (long long p : signed_range(b.max_p)) add({n, m, q, i, p});
      break;
    case Statement::alpha_periodicity:
      for (long long n = 0; n <= b.max_n; ++n)
        for (long long m = 0; m <= b.max_m; ++m)
          for (long long q = 1; q <= b.max_q; ++q) add({n, m, q});
      break;
    case Statement::binomial_pochhammer:
      for (long long m = 0; m <= b.max_m; ++m)
        for (long long n = 0; n <= b.max_n; ++n)
          for (long long q = 1; q <= b.max_q; ++q)
            for (long long i = q; i <= m + q; ++i)
              for (long long p : signed_range(b.max_p)) add({m, n, q, i, p});
      break;
    case Statement::binomial_product:
      for (long long m = 0; m <= b.max_m; ++m)
        for (long long s = 0; s <= b.max_n; ++s)
          for (long long q = 1; q <= b.max_q; ++q)
            for (long long i = q; i <= m + q; ++i) add({m, s, q, i});
      break;
    case Statement::main_theorem:
      for (long long n = 0; n <= b.max_n; ++n)
        for (long long m = 0; m <= b.max_m; ++m)
          for (long long p = 1; p <= b.max_p; ++p)
            for (long long q = 1; q <= b.max_q; ++q) add({n, m, p, q});
      break;
  }
  return grid;
}

CongruenceReport run_tuple(Statement st, const std::vector<long long>& t) {
  auto u = [&t](std::size_t k) { return static_cast<unsigned>(t.at(k)); };
  switch (st) {
    case Statement::carlitz:
      return check_carlitz(u(0), u(1), u(2));
    case Statement::pochhammer:
      return check_pochhammer_congruence(u(0), u(1), u(2), u(3), t.at(4), t.at(5));
    case Statement::parameter_shift:
      return check_parameter_shift(u(0), u(1), u(2), u(3), t.at(4));
    case Statement::alpha_periodicity:
      return check_alpha_periodicity(u(0), u(1), u(2));
    case Statement::binomial_pochhammer:
      return check_binomial_pochhammer(u(0), u(1), u(2), u(3), t.at(4));
    case Statement::binomial_product:
      return check_binomial_product(u(0), u(1), u(2), u(3));
    case Statement::main_theorem:
      return check_main_theorem(u(0), u(1), u(2), u(3));
  }
  throw std::invalid_argument("run_tuple: unknown statement");
}

SweepSummary sweep(Statement st, const SweepBounds& bounds, unsigned jobs) {
  auto start = std::chrono::steady_clock::now();
  auto grid = sweep_grid(st, bounds);

  // Failures land in per-index slots, so aggregation order does not depend
  // on thread scheduling.
  std::vector<std::optional<CongruenceReport>> failed_at(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= grid.size()) break;
      CongruenceReport rep = run_tuple(st, grid[idx]);
      if (!rep.holds) failed_at[idx] = std::move(rep);
    }
  };

  if (jobs == 0) jobs = 1;
  jobs = static_cast<unsigned>(
      std::min<std::size_t>(jobs, std::max<std::size_t>(grid.size(), 1)));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SweepSummary sum;
  sum.statement = st;
  sum.checked = grid.size();
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (failed_at[i]) {
      sum.failures.push_back(SweepFailure{grid[i], std::move(*failed_at[i])});
      ++sum.failed;
    }
  sum.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return sum;
}

// ===== JSON ================================================================

namespace {

ordered_json witness_json(const Witness& w) {
  ordered_json j;
  if (w.monomial) {
    j["kind"] = "monomial";
    j["monomial"] = {w.monomial->x, w.monomial->y};
  } else {
    j["kind"] = "scalar";
  }
  j["lhs"] = w.lhs_residue.get_str();
  j["rhs"] = w.rhs_residue.get_str();
  return j;
}

ordered_json report_json(const CongruenceReport& r) {
  ordered_json j;
  j["statement"] = statement_name(r.statement);
  j["modulus"] = r.modulus.get_str();
  j["holds"] = r.holds;
  if (r.witness) j["witness"] = witness_json(*r.witness);
  return j;
}

}  // namespace

std::string report_to_json(const CongruenceReport& r) {
  return report_json(r).dump();
}

std::string summary_to_json(const SweepSummary& s) {
  ordered_json j;
  j["statement"] = statement_name(s.statement);
  j["checked"] = s.checked;
  j["failed"] = s.failed;
  auto failures = ordered_json::array();
  const auto& names = tuple_names(s.statement);
  for (const auto& f : s.failures) {
    ordered_json t;
    for (std::size_t k = 0; k < names.size() && k < f.tuple.size(); ++k)
      t[names[k]] = f.tuple[k];
    failures.push_back({{"tuple", std::move(t)}, {"report", report_json(f.report)}});
  }
  j["failures"] = std::move(failures);
  j["elapsed_ms"] = s.elapsed_ms;
  return j.dump();
}

}  // namespace bilag
