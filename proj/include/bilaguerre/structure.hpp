#pragma once

#include <bilaguerre/poly.hpp>

#include <string>

namespace bilag {

// Degrees above this make the factor search combinatorially unreasonable.
inline constexpr unsigned kKroneckerDegreeBound = 8;

class DegreeTooLargeError : public std::domain_error {
 public:
  explicit DegreeTooLargeError(const std::string& what)
      : std::domain_error(what) {}
};

// Verifies l_{n,m}(x, x) == C(n+m, n) * l_{n+m}(x) exactly.
bool diagonal_identity_check(unsigned n, unsigned m);

// Exhaustive Kronecker factor search over Z[x] after clearing denominators.
// True means no nonconstant proper factor exists (irreducible over Q).
// Degrees above max_degree throw DegreeTooLargeError. Deterministic.
bool kronecker_irreducible(const UniPoly& p,
                           unsigned max_degree = kKroneckerDegreeBound);

enum class CoreIrreducibility {
  proven_by_factorization,  // factor search ran and found nothing
  asserted_by_schur,        // degree too large to search; classical result
  not_checked,
};

enum class Conclusion { irreducible, inconclusive };

// Evidence that l_{n,m}(x, x) is C(n+m, n) times an irreducible polynomial.
struct Certificate {
  unsigned n = 0, m = 0;
  bool diagonal_ok = false;
  unsigned core_degree = 0;
  CoreIrreducibility core_irreducible = CoreIrreducibility::not_checked;
  Conclusion conclusion = Conclusion::inconclusive;
};

// Runs the diagonal check, then settles the core factor l_{n+m} by search
// when the degree permits and by the classical irreducibility result
// otherwise. Requires n + m >= 1.
Certificate irreducibility_certificate(unsigned n, unsigned m);

const char* core_irreducibility_name(CoreIrreducibility c);
const char* conclusion_name(Conclusion c);
std::string certificate_to_json(const Certificate& c);

}  // namespace bilag
