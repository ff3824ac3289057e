#pragma once

#include <bilaguerre/poly.hpp>

#include <iosfwd>

namespace bilag {

// Exhaustive placement counting above this board size takes too long.
inline constexpr unsigned kRookBruteForceBound = 6;

class BoundExceededError : public std::domain_error {
 public:
  explicit BoundExceededError(const std::string& what)
      : std::domain_error(what) {}
};

// r_n(x) = n! x^n l_n(-1/x): coefficient of x^k counts placements of k
// non-attacking rooks on the n x n board, so it is C(n,k)^2 k!. Built from
// the alpha = 0 polynomial by coefficient manipulation; every coefficient is
// checked to be a nonnegative integer (std::logic_error otherwise).
UniPoly rook_polynomial_from_laguerre(unsigned n);

struct RookVector {
  unsigned n = 0;
  std::vector<Integer> counts;  // counts[k] = placements of k rooks
};

// Counts placements directly by exhaustive enumeration. Boards larger than
// bound throw BoundExceededError.
RookVector rook_numbers_bruteforce(unsigned n,
                                   unsigned bound = kRookBruteForceBound);

// Sign-stripped rescaling (-1)^(s+i) n! m! c_{s,i} x^(n-s) y^(m-i) of
// l_{n,m}; lands in nonnegative integers (std::logic_error otherwise).
IntBiPoly bilaguerre_rook_transform(unsigned n, unsigned m);

// "n,k,r_k" header plus one row per coefficient.
void write_rook_csv(std::ostream& os, const RookVector& rv);

}  // namespace bilag
