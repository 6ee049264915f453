#pragma once

// Generator families L, M (bidegree (1,1)) and P, Q (bidegree (0,2)) in the
// M-presentation, their alternating extensions, and the translation to the
// X-presentation over Y variables.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rees/polynomial.hpp"

namespace rees {

enum class Family : std::uint8_t { L, M, P, Q };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::L: return "L";
    case Family::M: return "M";
    case Family::P: return "P";
    case Family::Q: return "Q";
  }
  return "?";
}

inline Family parse_family(const std::string& s) {
  if (s == "L") return Family::L;
  if (s == "M") return Family::M;
  if (s == "P") return Family::P;
  if (s == "Q") return Family::Q;
  throw Error(Errc::ParseError, "unknown family '" + s + "'");
}

/// T_{a,b} with T_{a,b} = -T_{b,a} and T_{a,a} = 0.
struct SignedT {
  int sign = 0;
  std::optional<VarRef> var;
  friend bool operator==(const SignedT&, const SignedT&) = default;
};

inline SignedT t_signed(int alpha, int beta, VarKind kind = VarKind::T) {
  if (alpha == beta) return {0, std::nullopt};
  const int a = std::min(alpha, beta), b = std::max(alpha, beta);
  return {alpha < beta ? 1 : -1, kind == VarKind::Y ? VarRef::y(a, b) : VarRef::t(a, b)};
}

template <CoefficientField C>
Polynomial<C> signed_t_poly(const UniversePtr& u, int alpha, int beta) {
  const VarKind kind = u->size() && u->vars().back().kind == VarKind::Y ? VarKind::Y : VarKind::T;
  const SignedT s = t_signed(alpha, beta, kind);
  if (s.sign == 0) return Polynomial<C>(u);
  Polynomial<C> p = Polynomial<C>::variable(u, *s.var);
  return s.sign > 0 ? p : -p;
}

namespace detail {

inline void require_increasing(const std::vector<int>& idx, int lo, int hi, const char* what) {
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] < lo || idx[k] > hi || (k && idx[k - 1] >= idx[k])) {
      std::string t;
      for (int v : idx) t += (t.empty() ? "" : ",") + std::to_string(v);
      throw Error(Errc::BadIndices, std::string(what) + " needs a strictly increasing tuple in [" + std::to_string(lo) + "," +
                                        std::to_string(hi) + "], got (" + t + ")");
    }
  }
}

/// r1 T_{b,c} - r2 T_{a,c} + r3 T_{a,b}
template <CoefficientField C>
Polynomial<C> linear_syzygy(const UniversePtr& u, XIndex r1, XIndex r2, XIndex r3, int a, int b, int c) {
  return x_poly<C>(u, r1) * signed_t_poly<C>(u, b, c) - x_poly<C>(u, r2) * signed_t_poly<C>(u, a, c) +
         x_poly<C>(u, r3) * signed_t_poly<C>(u, a, b);
}

template <CoefficientField C>
Polynomial<C> plucker(const UniversePtr& u, int a, int b, int c, int d) {
  auto T = [&](int x, int y) { return signed_t_poly<C>(u, x, y); };
  return T(a, b) * T(c, d) - T(a, c) * T(b, d) + T(a, d) * T(b, c);
}

/// The six-term relation with shifted partners a' = next(a).
template <CoefficientField C, class Next>
Polynomial<C> six_term(const UniversePtr& u, int a, int b, int c, int d, Next next) {
  auto T = [&](int x, int y) { return signed_t_poly<C>(u, x, y); };
  const int A = next(a), B = next(b), G = next(c), D = next(d);
  return T(a, b) * T(G, D) - T(a, c) * T(B, D) + T(a, d) * T(B, G) + T(b, c) * T(A, D) - T(b, d) * T(A, G) +
         T(c, d) * T(A, B);
}

}  // namespace detail

template <CoefficientField C = Rational>
Polynomial<C> gen_L(const ScrollRing& r, int a, int b, int c) {
  detail::require_increasing({a, b, c}, 1, r.c(), "L");
  return detail::linear_syzygy<C>(r.universe(), r.mu(1, a), r.mu(1, b), r.mu(1, c), a, b, c);
}

template <CoefficientField C = Rational>
Polynomial<C> gen_M(const ScrollRing& r, int a, int b, int c) {
  detail::require_increasing({a, b, c}, 1, r.c(), "M");
  return detail::linear_syzygy<C>(r.universe(), r.mu(2, a), r.mu(2, b), r.mu(2, c), a, b, c);
}

template <CoefficientField C = Rational>
Polynomial<C> gen_P(const ScrollRing& r, int a, int b, int c, int d) {
  detail::require_increasing({a, b, c, d}, 1, r.c(), "P");
  return detail::plucker<C>(r.universe(), a, b, c, d);
}

template <CoefficientField C = Rational>
Polynomial<C> gen_Q(const ScrollRing& r, int a, int b, int c, int d) {
  detail::require_increasing({a, b, c, d}, 1, r.c_minus_d(), "Q");
  return detail::six_term<C>(r.universe(), a, b, c, d, [&](int x) { return r.bar(x); });
}

/// Sign of the permutation sorting idx, or 0 if idx has a repeated entry.
inline int sort_sign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j + 1 < idx.size() - i; ++j) {
      if (idx[j] == idx[j + 1]) return 0;
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
    }
  for (std::size_t j = 0; j + 1 < idx.size(); ++j)
    if (idx[j] == idx[j + 1]) return 0;
  return sign;
}

/// Alternating extension to arbitrary index tuples.
template <CoefficientField C = Rational>
Polynomial<C> signed_generator(const ScrollRing& r, Family f, std::vector<int> idx) {
  const std::size_t want = (f == Family::L || f == Family::M) ? 3 : 4;
  if (idx.size() != want) throw Error(Errc::BadIndices, std::string(family_name(f)) + " takes " + std::to_string(want) + " indices");
  const int s = sort_sign(idx);
  if (s == 0) return Polynomial<C>(r.universe());
  Polynomial<C> p;
  switch (f) {
    case Family::L: p = gen_L<C>(r, idx[0], idx[1], idx[2]); break;
    case Family::M: p = gen_M<C>(r, idx[0], idx[1], idx[2]); break;
    case Family::P: p = gen_P<C>(r, idx[0], idx[1], idx[2], idx[3]); break;
    case Family::Q: p = gen_Q<C>(r, idx[0], idx[1], idx[2], idx[3]); break;
  }
  return s > 0 ? p : -p;
}

template <CoefficientField C = Rational>
struct Generator {
  Family family;
  std::vector<int> indices;
  Polynomial<C> poly;

  std::string label() const {
    std::string s = family_name(family);
    s += '[';
    for (std::size_t k = 0; k < indices.size(); ++k) s += (k ? "," : "") + std::to_string(indices[k]);
    return s + ']';
  }
};

enum class Target : std::uint8_t { Fiber, Rees };
enum class Presentation : std::uint8_t { M, X };

template <CoefficientField C = Rational>
struct GeneratorSet {
  Presentation presentation = Presentation::M;
  std::vector<Generator<C>> items;  // P, Q, L, M; each family in lex order of indices

  std::size_t count(Family f) const {
    return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [f](const auto& g) { return g.family == f; }));
  }
  std::vector<Polynomial<C>> polys() const {
    std::vector<Polynomial<C>> out;
    out.reserve(items.size());
    for (const auto& g : items) out.push_back(g.poly);
    return out;
  }
};

/// Strictly increasing k-subsets of [lo, hi] in lex order.
inline std::vector<std::vector<int>> subsets(int lo, int hi, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = from; v <= hi - (k - static_cast<int>(cur.size())) + 1; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  if (k >= 0 && hi - lo + 1 >= k) rec(rec, lo);
  return out;
}

template <CoefficientField C = Rational>
std::vector<Generator<C>> family(const ScrollRing& r, Family f) {
  std::vector<Generator<C>> out;
  const bool quad = f == Family::P || f == Family::Q;
  const int hi = f == Family::Q ? r.c_minus_d() : r.c();
  for (auto& t : subsets(1, hi, quad ? 4 : 3)) {
    Polynomial<C> p = signed_generator<C>(r, f, t);
    out.push_back({f, std::move(t), std::move(p)});
  }
  return out;
}

template <CoefficientField C = Rational>
GeneratorSet<C> generators(const ScrollRing& r, Target target) {
  GeneratorSet<C> g;
  std::vector<Family> fams{Family::P, Family::Q};
  if (target == Target::Rees) {
    fams.push_back(Family::L);
    fams.push_back(Family::M);
  }
  for (Family f : fams)
    for (auto& item : family<C>(r, f)) g.items.push_back(std::move(item));
  return g;
}

/// X-side families written directly from the matrix X over Y variables.
/// Q-type relations are indexed by X columns that are not block-terminal,
/// with partner column a+1.
template <CoefficientField C = Rational>
Polynomial<C> x_relation(const ScrollRing& r, Family f, const std::vector<int>& idx) {
  const UniversePtr& u = r.y_universe();
  switch (f) {
    case Family::L:
    case Family::M: {
      detail::require_increasing(idx, 1, r.c(), "linear relation");
      const int row = f == Family::L ? 1 : 2;
      return detail::linear_syzygy<C>(u, r.xi(row, idx[0]), r.xi(row, idx[1]), r.xi(row, idx[2]), idx[0], idx[1], idx[2]);
    }
    case Family::P:
      detail::require_increasing(idx, 1, r.c(), "Plucker relation");
      return detail::plucker<C>(u, idx[0], idx[1], idx[2], idx[3]);
    case Family::Q:
      detail::require_increasing(idx, 1, r.c(), "six-term relation");
      for (int a : idx)
        if (r.xi(1, a).row == r.spec().n(r.xi(1, a).block) - 1)
          throw Error(Errc::BadIndices, "column " + std::to_string(a) + " is block-terminal in X");
      return detail::six_term<C>(u, idx[0], idx[1], idx[2], idx[3], [](int a) { return a + 1; });
  }
  throw Error(Errc::BadIndices, "unknown family");
}

/// Theta^{-1}: T_{a,b} -> Y_{tau^-1 a, tau^-1 b} (signed), x fixed.
template <CoefficientField C>
Polynomial<C> theta_inverse(const ScrollRing& r, const Polynomial<C>& p) {
  const UniversePtr& yu = r.y_universe();
  Polynomial<C> out(yu);
  if (p.is_zero()) return out;
  const Universe& tu = *p.universe();
  for (const auto& [m, cf] : p.terms()) {
    Polynomial<C> acc = Polynomial<C>::constant(yu, cf);
    for (const Factor& f : m.factors()) {
      const VarRef& v = tu.var(f.var);
      Polynomial<C> img = v.kind == VarKind::X
                              ? Polynomial<C>::variable(yu, v)
                              : signed_t_poly<C>(yu, r.tau().inverse(v.a), r.tau().inverse(v.b));
      for (unsigned e = 0; e < f.exp; ++e) acc = acc * img;
    }
    out += acc;
  }
  return out;
}

/// Each generator is pulled back through Theta, relabeled by its X-column
/// indices (sorted) and re-signed so it coincides with the X-side relation.
template <CoefficientField C = Rational>
GeneratorSet<C> to_x_presentation(const ScrollRing& r, const GeneratorSet<C>& g) {
  if (g.presentation == Presentation::X) return g;
  GeneratorSet<C> out;
  out.presentation = Presentation::X;
  for (const auto& item : g.items) {
    std::vector<int> idx;
    for (int a : item.indices) idx.push_back(r.tau().inverse(a));
    const int s = sort_sign(idx);
    Polynomial<C> p = theta_inverse(r, item.poly);
    out.items.push_back({item.family, std::move(idx), s > 0 ? p : -p});
  }
  auto key = [](Family f) { return f == Family::P ? 0 : f == Family::Q ? 1 : f == Family::L ? 2 : 3; };
  std::sort(out.items.begin(), out.items.end(), [&](const auto& a, const auto& b) {
    if (a.family != b.family) return key(a.family) < key(b.family);
    return a.indices < b.indices;
  });
  return out;
}

}  // namespace rees
