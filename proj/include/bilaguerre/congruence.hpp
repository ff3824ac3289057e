#pragma once

#include <bilaguerre/laguerre.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bilag {

enum class Statement {
  carlitz,
  pochhammer,
  parameter_shift,
  alpha_periodicity,
  binomial_pochhammer,
  binomial_product,
  main_theorem,
};

// Stable machine names: "carlitz", "pochhammer", "parameter_shift",
// "alpha_periodicity", "binomial_pochhammer", "binomial_product", "main".
const char* statement_name(Statement s);
std::optional<Statement> statement_from_name(std::string_view name);

// Names of the grid tuple positions for a statement, in tuple order.
const std::vector<std::string>& tuple_names(Statement s);

struct Witness {
  // Set for polynomial congruences; scalar ones leave it empty.
  std::optional<Monomial2> monomial;
  Integer lhs_residue;
  Integer rhs_residue;
};

struct CongruenceReport {
  Statement statement;
  Integer modulus;
  bool holds = false;
  std::optional<Witness> witness;  // engaged exactly when !holds
};

// A fully materialized instance: both sides as integer polynomials plus the
// modulus they are compared under.
struct PolyCongruence {
  Statement statement;
  IntBiPoly lhs, rhs;
  Integer modulus;
};

struct ScalarCongruence {
  Statement statement;
  Integer lhs, rhs, modulus;
};

// ---- instance builders ----------------------------------------------------
// Each validates its parameters: std::invalid_argument for a zero shift or
// zero modulus, std::out_of_range for an index outside its window.

// (n+m)! l_{n+m}^a  vs  n! l_n^a * m! l_m^a  (mod m), univariate in x.
PolyCongruence carlitz_instance(unsigned n, unsigned m, unsigned alpha);

// (l+1-p)_{m-l} (l+1+t+q)_{n-t}  vs  (l+1)_{m-l} (l+1+t)_{n-t}  (mod gcd(p,q)).
ScalarCongruence pochhammer_instance(unsigned n, unsigned m, unsigned t,
                                     unsigned l, long long p, long long q);

// (i-q+1-p)_{m-(i-q)} n! l_n^i  vs  (i-q+1)_{m-(i-q)} n! l_n^{i-q}
// (mod gcd(p,q)); requires q <= i <= m+q.
PolyCongruence parameter_shift_instance(unsigned n, unsigned m, unsigned q,
                                        unsigned i, long long p);

// n! l_n^{m+q}  vs  n! l_n^m  (mod q).
PolyCongruence alpha_periodicity_instance(unsigned n, unsigned m, unsigned q);

// C(m, m+q-i) (n+p+i-q+1)_{m-(i-q)}  vs  C(m+n, m+q-i) (i-q-p+1)_{m-(i-q)}
// (mod gcd(p,q)); requires q <= i <= m+q.
ScalarCongruence binomial_pochhammer_instance(unsigned m, unsigned n,
                                              unsigned q, unsigned i,
                                              long long p);

// (m+q-i)! C(m, m+q-i) C(m+s, m+q-i)  vs  (m+q-i)! C(m+q, m+q-i) C(m+s+q, m+q-i)
// (mod q); requires q <= i <= m+q. Passing with_factorial = false drops the
// (m+q-i)! guard on both sides, which breaks the statement for some inputs
// and exists as a diagnostic.
ScalarCongruence binomial_product_instance(unsigned m, unsigned s, unsigned q,
                                           unsigned i,
                                           bool with_factorial = true);

// (n+p)! (m+q)! l_{n+p,m+q}  vs  n! m! l_{n,m} * p! q! l_{p,q}
// (mod gcd(p,q)); requires p >= 1, q >= 1.
PolyCongruence main_theorem_instance(unsigned n, unsigned m, unsigned p,
                                     unsigned q);

// ---- deciding -------------------------------------------------------------
// Reduces both sides to canonical residues and compares. On failure the
// witness pins the first differing monomial in graded lex order.

CongruenceReport decide(const PolyCongruence& c);
CongruenceReport decide(const ScalarCongruence& c);

CongruenceReport check_carlitz(unsigned n, unsigned m, unsigned alpha);
CongruenceReport check_pochhammer_congruence(unsigned n, unsigned m, unsigned t,
                                             unsigned l, long long p,
                                             long long q);
CongruenceReport check_parameter_shift(unsigned n, unsigned m, unsigned q,
                                       unsigned i, long long p);
CongruenceReport check_alpha_periodicity(unsigned n, unsigned m, unsigned q);
CongruenceReport check_binomial_pochhammer(unsigned m, unsigned n, unsigned q,
                                           unsigned i, long long p);
CongruenceReport check_binomial_product(unsigned m, unsigned s, unsigned q,
                                        unsigned i, bool with_factorial = true);
CongruenceReport check_main_theorem(unsigned n, unsigned m, unsigned p,
                                    unsigned q);

// ---- sweeping -------------------------------------------------------------

struct SweepBounds {
  unsigned max_n = 4;
  unsigned max_m = 4;
  unsigned max_p = 4;
  unsigned max_q = 4;
  unsigned max_alpha = 3;
};

struct SweepFailure {
  std::vector<long long> tuple;  // values in tuple_names order
  CongruenceReport report;
};

struct SweepSummary {
  Statement statement;
  unsigned long long checked = 0;
  unsigned long long failed = 0;
  std::vector<SweepFailure> failures;  // grid order
  long long elapsed_ms = 0;
};

// Decides every instance of the statement's parameter grid up to the given
// bounds. jobs > 1 spreads the grid over that many worker threads; apart
// from elapsed_ms the summary is identical for every job count.
SweepSummary sweep(Statement st, const SweepBounds& bounds, unsigned jobs = 1);

// The grid an instance sweep walks, in order; exposed for inspection.
std::vector<std::vector<long long>> sweep_grid(Statement st,
                                               const SweepBounds& bounds);

// Decide one grid tuple, interpreting it per tuple_names(st).
CongruenceReport run_tuple(Statement st, const std::vector<long long>& tuple);

std::string report_to_json(const CongruenceReport& r);
std::string summary_to_json(const SweepSummary& s);

}  // namespace bilag
