#pragma once

// Hilbert series of standard graded quotients K[vars]/I.  The numerator is
// kept over (1-t)^nvars without cancellation.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "rees/groebner.hpp"

namespace rees {

struct HilbertSeries {
  std::vector<long long> numerator;  // coefficient of t^k at index k, trailing zeros trimmed
  int nvars = 0;

  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < numerator.size(); ++k) {
      const long long v = numerator[k];
      if (v == 0) continue;
      const long long mag = v < 0 ? -v : v;
      s += s.empty() ? (v < 0 ? "-" : "") : (v < 0 ? " - " : " + ");
      if (k == 0 || mag != 1) s += std::to_string(mag);
      if (k > 0) s += (k == 1 ? "t" : "t^" + std::to_string(k));
    }
    return (s.empty() ? "0" : s) + " / (1-t)^" + std::to_string(nvars);
  }

  /// dim_K of the degree-k piece, for k = 0..upto.
  std::vector<long long> dimensions(int upto) const {
    // coefficients of 1/(1-t)^n are binom(n-1+k, k)
    std::vector<long long> inv(static_cast<std::size_t>(upto + 1), 0);
    for (int k = 0; k <= upto; ++k) {
      long long b = 1;
      for (int i = 1; i <= k; ++i) b = b * (nvars - 1 + i) / i;
      inv[static_cast<std::size_t>(k)] = nvars == 0 ? (k == 0 ? 1 : 0) : b;
    }
    std::vector<long long> out(static_cast<std::size_t>(upto + 1), 0);
    for (int k = 0; k <= upto; ++k)
      for (std::size_t i = 0; i < numerator.size() && static_cast<int>(i) <= k; ++i)
        out[static_cast<std::size_t>(k)] += numerator[i] * inv[static_cast<std::size_t>(k) - i];
    return out;
  }
};

inline bool hs_equal(const HilbertSeries& a, const HilbertSeries& b) {
  if (a.nvars != b.nvars)
    throw Error(Errc::AmbientMismatch, "ambient rings have " + std::to_string(a.nvars) + " and " + std::to_string(b.nvars) + " variables");
  return a.numerator == b.numerator;
}

namespace detail {

using Poly1 = std::vector<long long>;

inline void trim(Poly1& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly1 add(Poly1 a, const Poly1& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

inline Poly1 shift(const Poly1& p, int by) {
  if (p.empty()) return p;
  Poly1 r(static_cast<std::size_t>(by), 0);
  r.insert(r.end(), p.begin(), p.end());
  return r;
}

/// p * (1 - t^k)
inline Poly1 times_one_minus(const Poly1& p, int k) {
  Poly1 r = p;
  r.resize(p.size() + static_cast<std::size_t>(k), 0);
  for (std::size_t i = 0; i < p.size(); ++i) r[i + static_cast<std::size_t>(k)] -= p[i];
  trim(r);
  return r;
}

inline std::vector<Monomial> minimalize(std::vector<Monomial> g) {
  std::sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
  });
  g.erase(std::unique(g.begin(), g.end()), g.end());
  std::vector<Monomial> out;
  for (const auto& m : g)
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& o) { return divides(o, m); })) out.push_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

class MonomialHs {
 public:
  Poly1 numerator(const std::vector<Monomial>& gens) { return rec(minimalize(gens)); }

 private:
  Poly1 rec(const std::vector<Monomial>& g) {
    if (g.empty()) return {1};
    if (auto it = memo_.find(g); it != memo_.end()) return it->second;

    // variable occurring in the most generators
    std::map<VarId, int> freq;
    for (const auto& m : g)
      for (const Factor& f : m.factors()) ++freq[f.var];
    VarId pivot = 0;
    int best = 0;
    for (const auto& [v, n] : freq)
      if (n > best) {
        best = n;
        pivot = v;
      }

    Poly1 res;
    if (best <= 1) {
      res = {1};
      for (const auto& m : g) res = times_one_minus(res, m.degree());
    } else {
      bool pair = false;
      for (const auto& m : g)
        for (const Factor& f : m.factors())
          if (f.var == pivot) pair = f.pair;
      const Monomial x = Monomial::from_factor({pivot, 1, pair});
      std::vector<Monomial> plus{x}, colon;
      for (const auto& m : g) {
        if (!divides(x, m)) plus.push_back(m);
        colon.push_back(divides(x, m) ? m / x : m);
      }
      res = add(rec(minimalize(std::move(plus))), shift(rec(minimalize(std::move(colon))), 1));
    }
    memo_.emplace(g, res);
    return res;
  }

  std::map<std::vector<Monomial>, Poly1> memo_;
};

}  // namespace detail

inline HilbertSeries hs_monomial(const std::vector<Monomial>& gens, int nvars) {
  detail::MonomialHs engine;
  return {engine.numerator(gens), nvars};
}

template <TermOrder O, CoefficientField C>
HilbertSeries hs_of_ideal(const O& order, const std::vector<Polynomial<C>>& gens, int nvars,
                          std::size_t budget = 1000000) {
  const auto basis = buchberger_complete(order, gens, budget);
  return hs_monomial(leading_monomials(order, basis), nvars);
}

}  // namespace rees
