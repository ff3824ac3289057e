#include <bilaguerre/structure.hpp>

#include <bilaguerre/laguerre.hpp>

#include <json.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <vector>

namespace bilag {

namespace {

// Dense integer coefficients (ascending), primitive, positive leading
// coefficient. Input must be nonzero.
std::vector<Integer> dense_primitive(const UniPoly& p) {
  Integer lcm_den = 1;
  for (const auto& [e, c] : p.terms()) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
    lcm_den = l;
  }
  std::vector<Integer> out(static_cast<std::size_t>(p.degree()) + 1, Integer(0));
  for (const auto& [e, c] : p.terms()) {
    Rational scaled = c * Rational(lcm_den);
    out[e] = scaled.num();  // exact by choice of lcm
  }
  Integer content = 0;
  for (const auto& c : out)
    if (c != 0) content = (content == 0) ? abs(c) : gcd(content, c);
  for (auto& c : out) c /= content;
  if (out.back() < 0)
    for (auto& c : out) c = -c;
  return out;
}

Integer eval_dense(const std::vector<Integer>& c, const Integer& x) {
  Integer acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Positive divisors of |v|, ascending. v must be nonzero.
std::vector<Integer> positive_divisors(const Integer& v) {
  Integer a = abs(v);
  std::vector<Integer> small, large;
  for (Integer i = 1; i * i <= a; ++i) {
    if (a % i == 0) {
      small.push_back(i);
      Integer j = a / i;
      if (j != i) large.push_back(j);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// True when s divides t exactly (s nonzero).
bool divides_int(const Integer& s, const Integer& t) {
  return mpz_divisible_p(t.get_mpz_t(), s.get_mpz_t()) != 0;
}

// Rational-root screen: any root r/s with r | a_0 and s | a_lead makes the
// polynomial reducible (degree >= 2 assumed).
bool has_rational_root(const std::vector<Integer>& c) {
  if (c.front() == 0) return true;  // x itself divides
  unsigned deg = static_cast<unsigned>(c.size()) - 1;
  for (const Integer& r : positive_divisors(c.front()))
    for (const Integer& s : positive_divisors(c.back())) {
      if (gcd(r, s) != 1) continue;
      // p(r/s) * s^deg = sum c_j r^j s^(deg-j), evaluated for both signs of r
      Integer pos = 0, neg = 0, rp = 1;
      std::vector<Integer> spow(deg + 1, Integer(1));
      for (unsigned j = 1; j <= deg; ++j) spow[j] = spow[j - 1] * s;
      for (unsigned j = 0; j <= deg; ++j) {
        Integer t = c[j] * rp * spow[deg - j];
        pos += t;
        neg += (j % 2 == 0) ? t : -t;
        rp *= r;
      }
      if (pos == 0 || neg == 0) return true;
    }
  return false;
}

// Long division over Q; true when g divides p exactly.
bool divides_poly(const std::vector<Integer>& p, const std::vector<Rational>& g) {
  std::vector<Rational> r(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) r[j] = Rational(p[j]);
  std::size_t dg = g.size() - 1;
  while (r.size() >= g.size()) {
    Rational t = r.back() / g[dg];
    std::size_t off = r.size() - g.size();
    for (std::size_t j = 0; j <= dg; ++j) r[off + j] -= t * g[j];
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    if (r.empty()) return true;
  }
  return r.empty();
}

struct FactorSearch {
  std::vector<Integer> coeffs;          // primitive target
  std::vector<Integer> points;          // 0, 1, -1, 2, -2, ... (reordered)
  std::vector<Integer> values;          // p at each point
  std::vector<std::vector<Integer>> candidates;  // divisor lists per point
  std::vector<Integer> chosen;          // d_j on the current path
  std::vector<Integer> cofactor;        // values[j] / d_j on the current path
  std::vector<Integer> lead_divisors;   // positive divisors of lc(p)
  bool symmetric = false;               // factor and cofactor degrees equal

  // Branching shrinks fastest when points with few divisors come first; the
  // point set itself is unchanged, and interpolation is order-agnostic.
  void sort_points_by_branching() {
    std::vector<std::size_t> order(points.size());
    for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return candidates[a].size() < candidates[b].size();
                     });
    auto permute = [&](auto& v) {
      auto old = v;
      for (std::size_t j = 0; j < order.size(); ++j) v[j] = old[order[j]];
    };
    permute(points);
    permute(values);
    permute(candidates);
  }

  // Admissible d at level j: integer polynomials satisfy
  // (x_j - x_r) | (g(x_j) - g(x_r)), and the same for the cofactor values.
  bool admissible(std::size_t j, const Integer& d, const Integer& e) const {
    for (std::size_t r = 0; r < j; ++r) {
      Integer gap = points[j] - points[r];
      if (!divides_int(gap, d - chosen[r])) return false;
      if (!divides_int(gap, e - cofactor[r])) return false;
    }
    return true;
  }

  // Newton interpolation through (points[j], chosen[j]), j = 0..k.
  std::vector<Rational> interpolate(std::size_t k) const {
    std::vector<Rational> dd(k + 1);
    for (std::size_t j = 0; j <= k; ++j) dd[j] = Rational(chosen[j]);
    for (std::size_t level = 1; level <= k; ++level)
      for (std::size_t j = k; j >= level; --j)
        dd[j] = (dd[j] - dd[j - 1]) /
                Rational(points[j] - points[j - level]);
    std::vector<Rational> g{dd[k]};
    for (std::size_t j = k; j-- > 0;) {
      // g = g * (x - points[j]) + dd[j]
      g.insert(g.begin(), Rational(0));
      Rational shift(points[j]);
      for (std::size_t t = 0; t + 1 < g.size(); ++t) g[t] -= shift * g[t + 1];
      g[0] += dd[j];
    }
    return g;
  }

  // DFS over divisor choices for levels j..k. True when a proper factor of
  // degree exactly <= k exists on some completion of the current path.
  bool search(std::size_t j, std::size_t k) {
    if (j > k) {
      std::vector<Rational> g = interpolate(k);
      while (!g.empty() && g.back().is_zero()) g.pop_back();
      if (g.size() < 2) return false;  // constant, not a proper factor
      for (const auto& c : g)
        if (!c.is_integer()) return false;
      std::vector<Integer> gi(g.size());
      for (std::size_t t = 0; t < g.size(); ++t) gi[t] = g[t].num();
      // Any factor value must divide p at the remaining points too.
      for (std::size_t extra = k + 1; extra < points.size(); ++extra) {
        Integer ge = eval_dense(gi, points[extra]);
        if (ge == 0 || !divides_int(ge, values[extra])) return false;
      }
      return divides_poly(coeffs, g);
    }
    if (j == k && k > 0) return solve_last_level(k);
    for (const Integer& base : candidates[j]) {
      // Equal-degree splits appear twice, once per ordering of the pair, so
      // keeping the smaller first value at the root loses no factorization.
      if (j == 0 && symmetric && base * base > abs(values[0])) break;
      for (int sign = 0; sign < ((j == 0) ? 1 : 2); ++sign) {
        Integer d = (sign == 0) ? base : -base;
        Integer e = values[j] / d;
        if (!admissible(j, d, e)) continue;
        chosen[j] = d;
        cofactor[j] = e;
        if (search(j + 1, k)) return true;
      }
    }
    return false;
  }

  // Degrees below k are covered by earlier runs, so here the factor has
  // degree exactly k and its top divided difference equals its leading
  // coefficient, a divisor of lc(p). Solving that equation for the final
  // value replaces enumeration of the widest divisor list.
  bool solve_last_level(std::size_t k) {
    Rational partial(0);
    for (std::size_t r = 0; r < k; ++r) {
      Rational w(1);
      for (std::size_t i = 0; i <= k; ++i)
        if (i != r) w = w * Rational(points[r] - points[i]);
      partial += Rational(chosen[r]) / w;
    }
    Integer wk = 1;
    for (std::size_t i = 0; i < k; ++i) wk *= points[k] - points[i];
    for (const Integer& lead : lead_divisors) {
      for (int sign = 0; sign < 2; ++sign) {
        Rational target(sign == 0 ? lead : Integer(-lead));
        Rational cand = (target - partial) * Rational(wk);
        if (!cand.is_integer()) continue;
        Integer d = cand.num();
        if (d == 0 || !divides_int(d, values[k])) continue;
        Integer e = values[k] / d;
        if (!admissible(k, d, e)) continue;
        chosen[k] = d;
        cofactor[k] = e;
        if (search(k + 1, k)) return true;
      }
    }
    return false;
  }
};

}  // namespace

bool kronecker_irreducible(const UniPoly& p, unsigned max_degree) {
  int deg = p.degree();
  if (deg < 1)
    throw std::invalid_argument(
        "kronecker_irreducible: need a nonconstant polynomial");
  if (static_cast<unsigned>(deg) > max_degree)
    throw DegreeTooLargeError("kronecker_irreducible: degree " +
                              std::to_string(deg) + " exceeds bound " +
                              std::to_string(max_degree));
  if (deg == 1) return true;

  FactorSearch fs;
  fs.coeffs = dense_primitive(p);
  if (has_rational_root(fs.coeffs)) return false;

  unsigned half = static_cast<unsigned>(deg) / 2;
  // Points 0, 1, -1, 2, -2, ...; half+1 of them suffice for any factor degree.
  for (unsigned j = 0; j <= half; ++j) {
    Integer x = (j == 0) ? Integer(0)
                         : ((j % 2 == 1) ? Integer((j + 1) / 2)
                                         : -Integer(j / 2));
    Integer v = eval_dense(fs.coeffs, x);
    if (v == 0) return false;  // integer root; the screen should have caught it
    fs.points.push_back(x);
    fs.values.push_back(v);
    fs.candidates.push_back(positive_divisors(v));
  }
  fs.sort_points_by_branching();
  fs.lead_divisors = positive_divisors(fs.coeffs.back());

  for (unsigned k = 1; k <= half; ++k) {
    fs.symmetric = 2 * k == static_cast<unsigned>(deg);
    fs.chosen.assign(k + 1, Integer(0));
    fs.cofactor.assign(k + 1, Integer(0));
    if (fs.search(0, k)) return false;
  }
  return true;
}

bool diagonal_identity_check(unsigned n, unsigned m) {
  UniPoly diag = substitute_diagonal(bilaguerre(n, m));
  UniPoly expect =
      laguerre_alpha(n + m, 0) * Rational(binomial(n + m, static_cast<long long>(n)));
  return diag == expect;
}

Certificate irreducibility_certificate(unsigned n, unsigned m) {
  if (n + m < 1)
    throw std::invalid_argument(
        "irreducibility_certificate: requires n + m >= 1");
  Certificate cert;
  cert.n = n;
  cert.m = m;
  cert.core_degree = n + m;
  cert.diagonal_ok = diagonal_identity_check(n, m);

  if (n + m <= kKroneckerDegreeBound) {
    // The core depends only on n + m; cache the search result per degree.
    static std::mutex memo_mutex;
    static std::map<unsigned, bool> memo;
    bool irred;
    {
      std::lock_guard<std::mutex> lock(memo_mutex);
      auto it = memo.find(n + m);
      if (it != memo.end()) {
        irred = it->second;
      } else {
        irred = kronecker_irreducible(laguerre_alpha(n + m, 0));
        memo.emplace(n + m, irred);
      }
    }
    cert.core_irreducible = irred ? CoreIrreducibility::proven_by_factorization
                                  : CoreIrreducibility::not_checked;
  } else {
    cert.core_irreducible = CoreIrreducibility::asserted_by_schur;
  }

  cert.conclusion =
      (cert.diagonal_ok &&
       cert.core_irreducible != CoreIrreducibility::not_checked)
          ? Conclusion::irreducible
          : Conclusion::inconclusive;
  return cert;
}

const char* core_irreducibility_name(CoreIrreducibility c) {
  switch (c) {
    case CoreIrreducibility::proven_by_factorization:
      return "proven-by-factorization";
    case CoreIrreducibility::asserted_by_schur:
      return "asserted-by-schur";
    case CoreIrreducibility::not_checked:
      return "not-checked";
  }
  return "?";
}

const char* conclusion_name(Conclusion c) {
  return c == Conclusion::irreducible ? "irreducible" : "inconclusive";
}

std::string certificate_to_json(const Certificate& c) {
  nlohmann::ordered_json j;
  j["n"] = c.n;
  j["m"] = c.m;
  j["diagonal_ok"] = c.diagonal_ok;
  j["core_degree"] = c.core_degree;
  j["core_irreducible"] = core_irreducibility_name(c.core_irreducible);
  j["conclusion"] = conclusion_name(c.conclusion);
  return j.dump();
}

}  // namespace bilag
