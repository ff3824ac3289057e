#pragma once

#include <bilaguerre/arith.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bilag {

// Reported degree of the zero polynomial; stands in for minus infinity.
inline constexpr int kZeroPolyDegree = -1;

enum class Var { x, y };

struct Monomial2 {
  unsigned x = 0;
  unsigned y = 0;
  unsigned degree() const { return x + y; }
  friend bool operator==(const Monomial2&, const Monomial2&) = default;
};

// Graded lexicographic order with x before y: total degree ascending, and
// within one degree the x-heavier monomial first (1; x, y; x^2, x*y, y^2).
struct GradedLexLess {
  bool operator()(const Monomial2& a, const Monomial2& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.x > b.x;
  }
};

namespace detail {
inline bool coeff_is_zero(const Rational& c) { return c.is_zero(); }
inline bool coeff_is_zero(const Integer& c) { return c == 0; }
}  // namespace detail

// ===== univariate ==========================================================

// Sparse polynomial in x. Zero coefficients are never stored.
template <class C>
class UnivariatePoly {
 public:
  using TermMap = std::map<unsigned, C>;

  UnivariatePoly() = default;

  static UnivariatePoly constant(const C& c) { return monomial(0, c); }

  static UnivariatePoly monomial(unsigned e, const C& c) {
    UnivariatePoly p;
    if (!detail::coeff_is_zero(c)) p.terms_.emplace(e, c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  int degree() const {
    return terms_.empty() ? kZeroPolyDegree
                          : static_cast<int>(terms_.rbegin()->first);
  }

  C coeff(unsigned e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }

  void set_coeff(unsigned e, const C& c) {
    if (detail::coeff_is_zero(c))
      terms_.erase(e);
    else
      terms_[e] = c;
  }

  void add_coeff(unsigned e, const C& c) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (detail::coeff_is_zero(it->second)) terms_.erase(it);
    } else if (detail::coeff_is_zero(c)) {
      terms_.erase(it);
    }
  }

  UnivariatePoly derivative() const {
    UnivariatePoly d;
    for (const auto& [e, c] : terms_)
      if (e > 0) d.terms_.emplace(e - 1, c * C(static_cast<long>(e)));
    return d;
  }

  // Exact evaluation by sparse Horner, highest exponent first.
  C eval(const C& x0) const {
    C acc(0);
    int prev = -1;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (prev >= 0)
        for (unsigned k = it->first; k < static_cast<unsigned>(prev); ++k)
          acc = acc * x0;
      acc += it->second;
      prev = static_cast<int>(it->first);
    }
    if (prev > 0)
      for (int k = 0; k < prev; ++k) acc = acc * x0;
    return acc;
  }

  // Divides by x^k. The quotient must be exact; a remainder means the
  // caller's invariant is broken, so this throws std::logic_error.
  UnivariatePoly divided_by_x_power(unsigned k) const {
    UnivariatePoly q;
    for (const auto& [e, c] : terms_) {
      if (e < k)
        throw std::logic_error(
            "divided_by_x_power: polynomial not divisible by x^" +
            std::to_string(k));
      q.terms_.emplace(e - k, c);
    }
    return q;
  }

  UnivariatePoly operator-() const {
    UnivariatePoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  UnivariatePoly& operator+=(const UnivariatePoly& o) {
    for (const auto& [e, c] : o.terms_) add_coeff(e, c);
    return *this;
  }

  UnivariatePoly& operator-=(const UnivariatePoly& o) {
    for (const auto& [e, c] : o.terms_) add_coeff(e, -c);
    return *this;
  }

  friend UnivariatePoly operator+(UnivariatePoly a, const UnivariatePoly& b) {
    return a += b;
  }
  friend UnivariatePoly operator-(UnivariatePoly a, const UnivariatePoly& b) {
    return a -= b;
  }

  friend UnivariatePoly operator*(const UnivariatePoly& a,
                                  const UnivariatePoly& b) {
    UnivariatePoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_coeff(ea + eb, ca * cb);
    return r;
  }

  friend UnivariatePoly operator*(UnivariatePoly p, const C& s) {
    if (detail::coeff_is_zero(s)) return UnivariatePoly();
    for (auto& [e, c] : p.terms_) c *= s;
    return p;
  }
  friend UnivariatePoly operator*(const C& s, UnivariatePoly p) {
    return std::move(p) * s;
  }

  friend bool operator==(const UnivariatePoly& a,
                         const UnivariatePoly& b) = default;

 private:
  TermMap terms_;
};

// ===== bivariate ===========================================================

// Sparse polynomial in x and y. Terms live in graded lex order, so
// iteration, serialization, and printing all share one canonical order.
template <class C>
class BivariatePoly {
 public:
  using TermMap = std::map<Monomial2, C, GradedLexLess>;

  BivariatePoly() = default;

  static BivariatePoly constant(const C& c) { return monomial({0, 0}, c); }

  static BivariatePoly monomial(Monomial2 m, const C& c) {
    BivariatePoly p;
    if (!detail::coeff_is_zero(c)) p.terms_.emplace(m, c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  int total_degree() const {
    return terms_.empty() ? kZeroPolyDegree
                          : static_cast<int>(terms_.rbegin()->first.degree());
  }

  int degree_in(Var v) const {
    int d = kZeroPolyDegree;
    for (const auto& [m, c] : terms_) {
      int e = static_cast<int>(v == Var::x ? m.x : m.y);
      if (e > d) d = e;
    }
    return d;
  }

  C coeff(unsigned ex, unsigned ey) const {
    auto it = terms_.find(Monomial2{ex, ey});
    return it == terms_.end() ? C(0) : it->second;
  }

  void set_coeff(Monomial2 m, const C& c) {
    if (detail::coeff_is_zero(c))
      terms_.erase(m);
    else
      terms_[m] = c;
  }

  void add_coeff(Monomial2 m, const C& c) {
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (detail::coeff_is_zero(it->second)) terms_.erase(it);
    } else if (detail::coeff_is_zero(c)) {
      terms_.erase(it);
    }
  }

  BivariatePoly partial_derivative(Var v) const {
    BivariatePoly d;
    for (const auto& [m, c] : terms_) {
      unsigned e = (v == Var::x) ? m.x : m.y;
      if (e == 0) continue;
      Monomial2 shifted = (v == Var::x) ? Monomial2{m.x - 1, m.y}
                                        : Monomial2{m.x, m.y - 1};
      d.terms_.emplace(shifted, c * C(static_cast<long>(e)));
    }
    return d;
  }

  // Exact evaluation via cached power tables for both variables.
  C eval(const C& x0, const C& y0) const {
    if (terms_.empty()) return C(0);
    unsigned dx = 0, dy = 0;
    for (const auto& [m, c] : terms_) {
      dx = std::max(dx, m.x);
      dy = std::max(dy, m.y);
    }
    std::vector<C> px(dx + 1, C(1)), py(dy + 1, C(1));
    for (unsigned i = 1; i <= dx; ++i) px[i] = px[i - 1] * x0;
    for (unsigned i = 1; i <= dy; ++i) py[i] = py[i - 1] * y0;
    C acc(0);
    for (const auto& [m, c] : terms_) acc += c * px[m.x] * py[m.y];
    return acc;
  }

  BivariatePoly swap_variables() const {
    BivariatePoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial2{m.y, m.x}, c);
    return r;
  }

  BivariatePoly operator-() const {
    BivariatePoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  BivariatePoly& operator+=(const BivariatePoly& o) {
    for (const auto& [m, c] : o.terms_) add_coeff(m, c);
    return *this;
  }

  BivariatePoly& operator-=(const BivariatePoly& o) {
    for (const auto& [m, c] : o.terms_) add_coeff(m, -c);
    return *this;
  }

  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) {
    return a += b;
  }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) {
    return a -= b;
  }

  friend BivariatePoly operator*(const BivariatePoly& a,
                                 const BivariatePoly& b) {
    BivariatePoly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        r.add_coeff(Monomial2{ma.x + mb.x, ma.y + mb.y}, ca * cb);
    return r;
  }

  friend BivariatePoly operator*(BivariatePoly p, const C& s) {
    if (detail::coeff_is_zero(s)) return BivariatePoly();
    for (auto& [m, c] : p.terms_) c *= s;
    return p;
  }
  friend BivariatePoly operator*(const C& s, BivariatePoly p) {
    return std::move(p) * s;
  }

  friend bool operator==(const BivariatePoly& a,
                         const BivariatePoly& b) = default;

 private:
  TermMap terms_;
};

using UniPoly = UnivariatePoly<Rational>;
using IntUniPoly = UnivariatePoly<Integer>;
using BiPoly = BivariatePoly<Rational>;
using IntBiPoly = BivariatePoly<Integer>;

// ===== conversions =========================================================

// Ring map y -> x: collapses (s, i) onto x^(s+i).
template <class C>
UnivariatePoly<C> substitute_diagonal(const BivariatePoly<C>& p) {
  UnivariatePoly<C> r;
  for (const auto& [m, c] : p.terms()) r.add_coeff(m.degree(), c);
  return r;
}

template <class C>
BivariatePoly<C> embed_x(const UnivariatePoly<C>& p) {
  BivariatePoly<C> r;
  for (const auto& [e, c] : p.terms()) r.add_coeff(Monomial2{e, 0}, c);
  return r;
}

template <class C>
BivariatePoly<C> embed_y(const UnivariatePoly<C>& p) {
  BivariatePoly<C> r;
  for (const auto& [e, c] : p.terms()) r.add_coeff(Monomial2{0, e}, c);
  return r;
}

// Thrown when a rational polynomial expected to have integer coefficients
// does not; carries the offending monomial.
class NonIntegralError : public std::domain_error {
 public:
  NonIntegralError(Monomial2 m, const std::string& what)
      : std::domain_error(what), monomial(m) {}
  Monomial2 monomial;
};

IntBiPoly to_integer_poly(const BiPoly& p);

// Residue of a modulo m in [0, m). Requires m >= 1.
Integer canonical_residue(const Integer& a, const Integer& m);

// Coefficient-wise canonical residues; zero residues are dropped.
IntBiPoly reduce_mod(const IntBiPoly& p, const Integer& modulus);

// ===== serialization =======================================================

class PolyParseError : public std::runtime_error {
 public:
  explicit PolyParseError(const std::string& what) : std::runtime_error(what) {}
};

// One-line JSON: {"vars":["x","y"],"terms":[{"e":[s,i],"num":"..","den":".."}]}
// with terms in graded lex order. Byte-identical for equal polynomials.
std::string serialize(const BiPoly& p);
BiPoly parse_bipoly(std::string_view text);

std::string to_pretty_string(const UniPoly& p);
std::string to_pretty_string(const BiPoly& p);

}  // namespace bilag
