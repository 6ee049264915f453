#pragma once

// The initial complex of the special fiber: vertices are open intervals
// (a,b) with 1 <= a < b <= c, minimal non-faces are crossing pairs and the
// barred pairs coming from Q.  Facets are enumerated two ways: as maximal
// cliques of the compatibility graph, and as binary trees over a coloring of
// the unitary intervals.

#include <gmpxx.h>

#include <algorithm>
#include <bitset>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rees/polynomial.hpp"

namespace rees {

struct Interval {
  int a = 0;
  int b = 0;
  int length() const noexcept { return b - a; }
  bool contains(const Interval& o) const noexcept { return a <= o.a && o.b <= b; }
  bool disjoint(const Interval& o) const noexcept { return b <= o.a || o.b <= a; }
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

inline Interval make_interval(int a, int b) {
  if (a >= b) throw Error(Errc::BadIndices, "interval needs a < b");
  return {a, b};
}

inline bool crossing(const Interval& x, const Interval& y) noexcept {
  return !(x.disjoint(y) || x.contains(y) || y.contains(x));
}

using Face = std::vector<Interval>;  // sorted, no duplicates
using IntervalPair = std::pair<Interval, Interval>;

inline Face canonical_face(Face f) {
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

struct NonFaces {
  std::vector<IntervalPair> dagger;   // {(a,g),(b,d)}, a<b<g<d
  std::vector<IntervalPair> ddagger;  // {(a,b), (bar g, bar d) normalized}
};

/// Pairs are stored with first < second; each list is sorted and duplicate
/// free.
inline NonFaces minimal_nonfaces(const ScrollRing& r) {
  NonFaces nf;
  auto ordered = [](Interval x, Interval y) { return x < y ? IntervalPair{x, y} : IntervalPair{y, x}; };
  const int c = r.c();
  for (int a = 1; a <= c; ++a)
    for (int b = a + 1; b <= c; ++b)
      for (int g = b + 1; g <= c; ++g)
        for (int d = g + 1; d <= c; ++d) nf.dagger.push_back(ordered({a, g}, {b, d}));
  const int k = r.c_minus_d();
  for (int a = 1; a <= k; ++a)
    for (int b = a + 1; b <= k; ++b)
      for (int g = b + 1; g <= k; ++g)
        for (int d = g + 1; d <= k; ++d) {
          const int x = r.bar(g), y = r.bar(d);
          nf.ddagger.push_back(ordered({a, b}, {std::min(x, y), std::max(x, y)}));
        }
  for (auto* v : {&nf.dagger, &nf.ddagger}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  return nf;
}

/// Vertex numbering and the compatibility graph (edge = pair is a face).
class ComplexGraph {
 public:
  static constexpr std::size_t kMaxVertices = 256;
  using Bits = std::bitset<kMaxVertices>;

  explicit ComplexGraph(const ScrollRing& r) : c_(r.c()) {
    for (int a = 1; a <= c_; ++a)
      for (int b = a + 1; b <= c_; ++b) verts_.push_back({a, b});
    if (verts_.size() > kMaxVertices) throw Error(Errc::BoundExceeded, "too many vertices for the bitset graph");
    adj_.assign(verts_.size(), Bits{});
    for (std::size_t i = 0; i < verts_.size(); ++i)
      for (std::size_t j = 0; j < verts_.size(); ++j)
        if (i != j && !crossing(verts_[i], verts_[j])) adj_[i].set(j);
    for (const auto& [x, y] : minimal_nonfaces(r).ddagger) {
      adj_[index(x)].reset(index(y));
      adj_[index(y)].reset(index(x));
    }
  }

  std::size_t size() const noexcept { return verts_.size(); }
  const Interval& vertex(std::size_t i) const { return verts_.at(i); }
  const Bits& neighbors(std::size_t i) const { return adj_.at(i); }

  std::size_t index(const Interval& v) const {
    if (v.a < 1 || v.b > c_ || v.a >= v.b) throw Error(Errc::IndexOutOfRange, "interval outside [1,c]");
    // lex position of (a,b)
    const std::size_t a = static_cast<std::size_t>(v.a), b = static_cast<std::size_t>(v.b), c = static_cast<std::size_t>(c_);
    return (a - 1) * c - (a - 1) * a / 2 + (b - a - 1);
  }

  bool edge(const Interval& x, const Interval& y) const { return adj_[index(x)].test(index(y)); }

 private:
  int c_;
  std::vector<Interval> verts_;
  std::vector<Bits> adj_;
};

inline bool is_face(const ScrollRing& r, const Face& f) {
  const NonFaces nf = minimal_nonfaces(r);
  std::set<IntervalPair> dd(nf.ddagger.begin(), nf.ddagger.end());
  for (const auto& v : f)
    if (v.a < 1 || v.b > r.c() || v.a >= v.b) throw Error(Errc::IndexOutOfRange, "interval outside [1,c]");
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (crossing(f[i], f[j])) return false;
      const IntervalPair p = f[i] < f[j] ? IntervalPair{f[i], f[j]} : IntervalPair{f[j], f[i]};
      if (dd.count(p)) return false;
    }
  return true;
}

/// A face that admits no further vertex.
inline bool is_facet(const ScrollRing& r, const Face& f) {
  if (!is_face(r, f)) return false;
  const Face cf = canonical_face(f);
  for (int a = 1; a <= r.c(); ++a)
    for (int b = a + 1; b <= r.c(); ++b) {
      if (std::binary_search(cf.begin(), cf.end(), Interval{a, b})) continue;
      Face g = cf;
      g.push_back({a, b});
      if (is_face(r, g)) return false;
    }
  return true;
}

struct FacetOptions {
  int max_c = 12;
  std::size_t budget = 0;  // 0 = unlimited number of facets
};

/// Bron-Kerbosch with pivoting on the compatibility graph.
inline std::vector<Face> facets_clique(const ScrollRing& r, const FacetOptions& opt = {}) {
  if (r.c() > opt.max_c)
    throw Error(Errc::BoundExceeded, "clique enumeration is capped at c <= " + std::to_string(opt.max_c));
  const ComplexGraph g(r);
  using Bits = ComplexGraph::Bits;
  std::vector<Face> out;
  std::vector<std::size_t> current;
  auto rec = [&](auto&& self, Bits P, Bits X) -> void {
    if (P.none()) {
      if (X.none()) {
        if (opt.budget && out.size() >= opt.budget)
          throw Error(Errc::BoundExceeded, "facet budget of " + std::to_string(opt.budget) + " exhausted");
        Face f;
        for (std::size_t v : current) f.push_back(g.vertex(v));
        out.push_back(canonical_face(std::move(f)));
      }
      return;
    }
    std::size_t pivot = 0, best = 0;
    const Bits PX = P | X;
    for (std::size_t u = PX._Find_first(); u < g.size(); u = PX._Find_next(u)) {
      const std::size_t k = (P & g.neighbors(u)).count();
      if (k >= best) {
        best = k;
        pivot = u;
      }
    }
    const Bits cand = P & ~g.neighbors(pivot);
    for (std::size_t v = cand._Find_first(); v < g.size(); v = cand._Find_next(v)) {
      current.push_back(v);
      self(self, P & g.neighbors(v), X & g.neighbors(v));
      current.pop_back();
      P.reset(v);
      X.set(v);
    }
  };
  Bits all;
  for (std::size_t i = 0; i < g.size(); ++i) all.set(i);
  if (g.size()) rec(rec, all, Bits{});
  std::sort(out.begin(), out.end());
  return out;
}

/// All sets satisfying the tree conditions over a coloring of the unitary
/// intervals (black[k] for the interval (k, k+1), k = 1..c-1): root (1,c),
/// binary, one-child steps drop a single white unit, two-child steps split,
/// and leaves are exactly the black units.
inline std::vector<Face> colored_trees(int c, const std::vector<bool>& black, std::size_t budget = 0) {
  if (static_cast<int>(black.size()) != c) throw Error(Errc::ConstraintViolated, "coloring needs c entries (index 0 unused)");
  std::map<std::pair<int, int>, std::vector<Face>> memo;
  std::size_t produced = 0;
  auto rec = [&](auto&& self, int a, int b) -> const std::vector<Face>& {
    auto it = memo.find({a, b});
    if (it != memo.end()) return it->second;
    std::vector<Face> res;
    if (b - a == 1) {
      if (black[static_cast<std::size_t>(a)]) res.push_back({{a, b}});
    } else {
      auto extend = [&](const std::vector<Face>& sub) {
        for (const Face& f : sub) {
          Face g = f;
          g.push_back({a, b});
          res.push_back(std::move(g));
        }
      };
      if (!black[static_cast<std::size_t>(a)]) extend(self(self, a + 1, b));
      if (!black[static_cast<std::size_t>(b - 1)]) extend(self(self, a, b - 1));
      for (int m = a + 1; m < b; ++m) {
        const auto& left = self(self, a, m);
        if (left.empty()) continue;
        const auto& right = self(self, m, b);
        for (const Face& l : left)
          for (const Face& rr : right) {
            Face g = l;
            g.insert(g.end(), rr.begin(), rr.end());
            g.push_back({a, b});
            res.push_back(std::move(g));
          }
      }
    }
    produced += res.size();
    if (budget && produced > budget) throw Error(Errc::BoundExceeded, "face budget exhausted");
    return memo.emplace(std::pair{a, b}, std::move(res)).first->second;
  };
  std::vector<Face> out;
  if (c < 2) return out;
  for (const Face& f : rec(rec, 1, c)) out.push_back(canonical_face(f));
  return out;
}

/// Coloring for facets whose leftmost unitary interval is (alpha, alpha+1).
inline std::vector<bool> facet_coloring(const ScrollRing& r, int alpha) {
  const int c = r.c(), d = r.d();
  const int ell = gamma_and_ell(r.spec(), r.matrix_m(), alpha).ell;
  std::vector<bool> black(static_cast<std::size_t>(c), false);
  for (int b = alpha; b <= alpha + ell; ++b) black[static_cast<std::size_t>(b)] = true;
  for (int b = c - d + ell - 1; b <= c - 1; ++b) black[static_cast<std::size_t>(b)] = true;
  return black;
}

inline std::vector<Face> facets_tree(const ScrollRing& r, const FacetOptions& opt = {}) {
  const int c = r.c();
  std::vector<Face> out;
  if (r.spec().grassmann()) {
    out = colored_trees(c, std::vector<bool>(static_cast<std::size_t>(std::max(c, 1)), true), opt.budget);
  } else {
    for (int alpha = 1; alpha <= c - r.d() - 2; ++alpha) {
      auto part = colored_trees(c, facet_coloring(r, alpha), opt.budget);
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline mpz_class catalan(long n) {
  if (n < 0) throw Error(Errc::IndexOutOfRange, "catalan of a negative index");
  return binomial(2 * n, n) - binomial(2 * n, n + 1);
}

/// Closed form; the band edge k = n+m-1 uses the middle clause.
inline mpz_class catalan_trapezoid(long m, long n, long k) {
  if (m < 1 || n < 0 || k < 0) throw Error(Errc::IndexOutOfRange, "trapezoid needs m >= 1 and n, k >= 0");
  if (k < m) return binomial(n + k, k);
  if (k <= n + m - 1) return binomial(n + k, k) - binomial(n + k, k - m);
  return 0;
}

inline mpz_class facet_count_formula(const ScrollSpec& s) {
  const long c = s.c(), d = s.d();
  if (s.grassmann()) return c >= 2 ? catalan(c - 2) : mpz_class(0);
  mpz_class total = 0;
  for (long a = 1; a <= c - d - 2; ++a) total += binomial(c + d - 1, a + d);
  total -= (c - d - 2) * binomial(c + d - 1, d);
  return total;
}

/// Coloring: a white, b1 black, g white, b2 black units, in that order.
inline std::vector<Face> sigma_enumerate(int a, int b1, int g, int b2, std::size_t budget = 0) {
  if (a < 0 || g < 0 || b2 < 0 || b1 <= 0)
    throw Error(Errc::ConstraintViolated, "signature needs b1 > 0 and nonnegative parts");
  if (g == 0 && b2 != 0) throw Error(Errc::ConstraintViolated, "b2 must vanish when g = 0");
  const int c = a + b1 + g + b2 + 1;
  std::vector<bool> black(static_cast<std::size_t>(c), false);
  int k = 1;
  for (int i = 0; i < a; ++i) black[static_cast<std::size_t>(k++)] = false;
  for (int i = 0; i < b1; ++i) black[static_cast<std::size_t>(k++)] = true;
  for (int i = 0; i < g; ++i) black[static_cast<std::size_t>(k++)] = false;
  for (int i = 0; i < b2; ++i) black[static_cast<std::size_t>(k++)] = true;
  auto out = colored_trees(c, black, budget);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t sigma_count(int a, int b1, int g, int b2) { return sigma_enumerate(a, b1, g, b2).size(); }

/// Closed form for the number of sets in sigma_enumerate(a, b1, g, b2).
inline mpz_class sigma_count_formula(int a, int b1, int g, int b2) {
  return catalan_trapezoid(a + 1, b1 + g + b2 - 1, a + b1 + b2 - 1);
}

}  // namespace rees
