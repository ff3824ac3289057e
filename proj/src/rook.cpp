#include <bilaguerre/rook.hpp>

#include <bilaguerre/laguerre.hpp>

#include <ostream>

namespace bilag {

UniPoly rook_polynomial_from_laguerre(unsigned n) {
  UniPoly l = laguerre_alpha(n, 0);
  Integer nf = factorial(n);
  UniPoly r;
  for (const auto& [j, c] : l.terms()) {
    Rational v = c * Rational(nf);
    if (j % 2 == 1) v = -v;
    if (!v.is_integer() || v.sign() < 0)
      throw std::logic_error(
          "rook_polynomial_from_laguerre: coefficient " + v.to_string() +
          " at degree " + std::to_string(n - j) + " is not a rook count");
    r.set_coeff(n - j, v);
  }
  return r;
}

namespace {

void count_placements(unsigned n, unsigned row, unsigned used_mask,
                      unsigned placed, std::vector<Integer>& counts) {
  // The partial placement is tallied on entry, then each recursion level
  // picks the next occupied row and a free column, so every placement is
  // visited exactly once.
  counts[placed] += 1;
  for (unsigned r = row; r < n; ++r)
    for (unsigned col = 0; col < n; ++col)
      if (!(used_mask & (1u << col)))
        count_placements(n, r + 1, used_mask | (1u << col), placed + 1, counts);
}

}  // namespace

RookVector rook_numbers_bruteforce(unsigned n, unsigned bound) {
  if (n > bound)
    throw BoundExceededError("rook_numbers_bruteforce: board size " +
                             std::to_string(n) + " exceeds bound " +
                             std::to_string(bound));
  RookVector rv;
  rv.n = n;
  rv.counts.assign(n + 1, Integer(0));
  count_placements(n, 0, 0, 0, rv.counts);
  return rv;
}

IntBiPoly bilaguerre_rook_transform(unsigned n, unsigned m) {
  BiPoly l = bilaguerre(n, m);
  Integer scale = factorial(n) * factorial(m);
  IntBiPoly out;
  for (const auto& [mono, c] : l.terms()) {
    Rational v = c * Rational(scale);
    if ((mono.x + mono.y) % 2 == 1) v = -v;
    if (!v.is_integer() || v.sign() < 0)
      throw std::logic_error(
          "bilaguerre_rook_transform: coefficient " + v.to_string() +
          " is not a nonnegative integer");
    out.set_coeff(Monomial2{n - mono.x, m - mono.y}, v.num());
  }
  return out;
}

void write_rook_csv(std::ostream& os, const RookVector& rv) {
  os << "n,k,r_k\n";
  for (std::size_t k = 0; k < rv.counts.size(); ++k)
    os << rv.n << "," << k << "," << rv.counts[k].get_str() << "\n";
}

}  // namespace bilag
