#pragma once

// Reproducible checks: leading monomials, syzygies S1-S6, the 34-case
// Hilbert series harness, Groebner certification of both ideals, the initial
// complex and facet counts, kernel membership and minimality.

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rees/complex.hpp"
#include "rees/groebner.hpp"
#include "rees/hilbert.hpp"
#include "rees/relations.hpp"
#include "rees/term_order.hpp"

namespace rees {

enum class Status { Pass, Fail, Skip };

inline const char* status_name(Status s) { return s == Status::Pass ? "pass" : s == Status::Fail ? "fail" : "skip"; }

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;
  std::map<std::string, long long> counters;
  double seconds = 0;

  bool passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::Fail; });
  }
  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok ? Status::Pass : Status::Fail, std::move(detail)});
  }
  void skip(std::string name, std::string why) { checks.push_back({std::move(name), Status::Skip, std::move(why)}); }
  void merge(const VerificationReport& o) {
    for (const auto& c : o.checks) checks.push_back({o.suite + "/" + c.name, c.status, c.detail});
    for (const auto& [k, v] : o.counters) counters[k] += v;
    seconds += o.seconds;
  }
};

enum class Depth { Fast, Slow };

namespace detail {

class Stopwatch {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count(); }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

inline std::string tuple_text(const std::vector<int>& t) {
  std::string s = "(";
  for (std::size_t k = 0; k < t.size(); ++k) s += (k ? "," : "") + std::to_string(t[k]);
  return s + ")";
}

inline Monomial mono(const Universe& u, std::initializer_list<VarRef> vars) {
  Monomial m;
  for (const auto& v : vars) m = m * Monomial::variable(u, v);
  return m;
}

inline VarRef tvar(int a, int b) { return VarRef::t(std::min(a, b), std::max(a, b)); }

}  // namespace detail

/// Expected leading monomial of a generator, from the closed forms.
inline Monomial expected_leading_monomial(const ScrollRing& r, const OrderContext& ctx, const Generator<Rational>& g) {
  const Universe& u = *r.universe();
  const auto& i = g.indices;
  switch (g.family) {
    case Family::P: return detail::mono(u, {VarRef::t(i[0], i[2]), VarRef::t(i[1], i[3])});
    case Family::Q: return detail::mono(u, {VarRef::t(i[0], i[1]), detail::tvar(r.bar(i[2]), r.bar(i[3]))});
    case Family::M: return detail::mono(u, {VarRef::x(r.mu(2, i[1])), VarRef::t(i[0], i[2])});
    case Family::L: {
      // the x with lowest row index, then lowest block index
      int best = 0;
      for (int k = 1; k < 3; ++k) {
        const XIndex a = r.mu(1, i[static_cast<std::size_t>(k)]), b = r.mu(1, i[static_cast<std::size_t>(best)]);
        if (std::pair{a.row, a.block} < std::pair{b.row, b.block}) best = k;
      }
      std::vector<int> rest;
      for (int k = 0; k < 3; ++k)
        if (k != best) rest.push_back(i[static_cast<std::size_t>(k)]);
      return detail::mono(u, {VarRef::x(r.mu(1, i[static_cast<std::size_t>(best)])), VarRef::t(rest[0], rest[1])});
    }
  }
  (void)ctx;
  throw Error(Errc::BadIndices, "unknown family");
}

inline VerificationReport verify_lm_table(const ScrollRing& r) {
  detail::Stopwatch sw;
  VerificationReport rep;
  rep.suite = "lm";
  const OrderContext ctx(r);
  const auto gens = generators<Rational>(r, Target::Rees);
  std::size_t bad = 0, remark_bad = 0, shape_bad = 0;
  std::string first_bad;
  for (const auto& g : gens.items) {
    const Monomial lm = leading_monomial(ctx, g.poly);
    const Monomial want = expected_leading_monomial(r, ctx, g);
    if (!(lm == want)) {
      if (!bad++) first_bad = g.label() + ": got " + to_text(*r.universe(), lm) + ", expected " + to_text(*r.universe(), want);
    }
    if (!lm.squarefree() || lm.degree() != 2) ++shape_bad;
    if (g.family == Family::L) {
      const auto& i = g.indices;
      const Monomial first = detail::mono(*r.universe(), {VarRef::x(r.mu(1, i[0])), VarRef::t(i[1], i[2])});
      const Monomial last = detail::mono(*r.universe(), {VarRef::x(r.mu(1, i[2])), VarRef::t(i[0], i[1])});
      const bool ok = lm == first || (lm == last && i[2] > r.c_minus_d());
      if (!ok) ++remark_bad;
    }
  }
  rep.counters["generators"] = static_cast<long long>(gens.items.size());
  rep.add("closed-form leading monomials", bad == 0, bad ? std::to_string(bad) + " mismatches; first " + first_bad : "");
  rep.add("L leading monomial is mu1[a]T[b,c], or mu1[c]T[a,b] only past c-d", remark_bad == 0,
          remark_bad ? std::to_string(remark_bad) + " violations" : "");
  rep.add("leading monomials squarefree quadratic", shape_bad == 0);
  rep.seconds = sw.seconds();
  return rep;
}

enum class Syzygy { S1, S2, S3, S4, S5, S6 };

inline Syzygy parse_syzygy(const std::string& s) {
  static const std::map<std::string, Syzygy> names{{"S1", Syzygy::S1}, {"S2", Syzygy::S2}, {"S3", Syzygy::S3},
                                                   {"S4", Syzygy::S4}, {"S5", Syzygy::S5}, {"S6", Syzygy::S6}};
  auto it = names.find(s);
  if (it == names.end()) throw Error(Errc::ParseError, "unknown syzygy '" + s + "'");
  return it->second;
}

inline std::string syzygy_name(Syzygy s) { return "S" + std::to_string(static_cast<int>(s) + 1); }

namespace detail {

/// Calls f(perm, sign) for every permutation of 0..n-1 accepted by keep.
template <class Keep, class F>
void for_permutations(int n, Keep keep, F f) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    if (!keep(p)) continue;
    int inv = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (p[static_cast<std::size_t>(a)] > p[static_cast<std::size_t>(b)]) ++inv;
    f(p, inv % 2 ? -1 : 1);
  } while (std::next_permutation(p.begin(), p.end()));
}

/// keep(p) for increasing runs: each group lists positions that must increase.
inline auto increasing(std::vector<std::vector<int>> groups) {
  return [groups = std::move(groups)](const std::vector<int>& p) {
    for (const auto& g : groups)
      for (std::size_t k = 1; k < g.size(); ++k)
        if (p[static_cast<std::size_t>(g[k - 1])] > p[static_cast<std::size_t>(g[k])]) return false;
    return true;
  };
}

}  // namespace detail

/// Both sides of the identity as written.
inline std::pair<QPoly, QPoly> syzygy_sides(const ScrollRing& r, Syzygy id, const std::vector<int>& tuple, int eps = 0) {
  const bool five = id == Syzygy::S1 || id == Syzygy::S2;
  const bool with_eps = id == Syzygy::S3 || id == Syzygy::S4 || id == Syzygy::S5;
  const int hi = id == Syzygy::S6 ? r.c() : r.c_minus_d();
  if (tuple.size() != (five ? 5u : 4u)) throw Error(Errc::BadIndices, syzygy_name(id) + " takes " + (five ? "5" : "4") + " indices");
  detail::require_increasing(tuple, 1, hi, syzygy_name(id).c_str());
  if (with_eps && (eps < 1 || eps > r.c())) throw Error(Errc::BadIndices, "epsilon must lie in [1,c]");

  const UniversePtr& u = r.universe();
  auto a = [&](const std::vector<int>& p, int k) { return tuple[static_cast<std::size_t>(p[static_cast<std::size_t>(k)])]; };
  auto ab = [&](const std::vector<int>& p, int k) { return r.bar(a(p, k)); };
  auto T = [&](int x, int y) { return signed_t_poly<Rational>(u, x, y); };
  auto L = [&](int x, int y, int z) { return signed_generator<Rational>(r, Family::L, {x, y, z}); };
  auto M = [&](int x, int y, int z) { return signed_generator<Rational>(r, Family::M, {x, y, z}); };
  auto P = [&](int x, int y, int z, int w) { return signed_generator<Rational>(r, Family::P, {x, y, z, w}); };
  auto Q = [&](int x, int y, int z, int w) { return signed_generator<Rational>(r, Family::Q, {x, y, z, w}); };
  auto mu1 = [&](int col) { return mu_poly<Rational>(r, 1, col); };
  auto mu2 = [&](int col) { return mu_poly<Rational>(r, 2, col); };
  auto scale = [](QPoly p, int s) { return s > 0 ? p : -p; };

  QPoly lhs(u), rhs(u);
  using detail::for_permutations;
  using detail::increasing;
  switch (id) {
    case Syzygy::S1:
      for_permutations(5, increasing({{0, 1}, {2, 3, 4}}), [&](const auto& p, int s) {
        lhs += scale(T(ab(p, 0), ab(p, 1)) * M(a(p, 2), a(p, 3), a(p, 4)), s);
      });
      for_permutations(5, increasing({{1, 2, 3, 4}}), [&](const auto& p, int s) {
        rhs += scale(mu2(a(p, 0)) * Q(a(p, 1), a(p, 2), a(p, 3), a(p, 4)), s);
      });
      break;
    case Syzygy::S2:
      for_permutations(5, increasing({{0, 1}, {2, 3, 4}}), [&](const auto& p, int s) {
        lhs += scale(T(a(p, 0), a(p, 1)) * M(ab(p, 2), ab(p, 3), ab(p, 4)), s);
      });
      for_permutations(5, increasing({{1, 2, 3, 4}}), [&](const auto& p, int s) {
        rhs += scale(mu2(ab(p, 0)) * Q(a(p, 1), a(p, 2), a(p, 3), a(p, 4)), s);
      });
      break;
    case Syzygy::S3:
      for_permutations(4, increasing({{0, 1}, {2, 3}}), [&](const auto& p, int s) {
        lhs += scale(T(a(p, 0), a(p, 1)) * L(ab(p, 2), ab(p, 3), eps), s);
      });
      rhs += Q(tuple[0], tuple[1], tuple[2], tuple[3]) * mu1(eps);
      for_permutations(4, increasing({{0, 1, 2}}), [&](const auto& p, int s) {
        rhs += scale(M(a(p, 0), a(p, 1), a(p, 2)) * T(ab(p, 3), eps), s);
      });
      break;
    case Syzygy::S4:
      for_permutations(4, increasing({{0, 1}, {2, 3}}), [&](const auto& p, int s) {
        lhs += scale(T(ab(p, 0), ab(p, 1)) * M(a(p, 2), a(p, 3), eps), s);
      });
      rhs += Q(tuple[0], tuple[1], tuple[2], tuple[3]) * mu2(eps);
      for_permutations(4, increasing({{0, 1, 2}}), [&](const auto& p, int s) {
        rhs += scale(L(ab(p, 0), ab(p, 1), ab(p, 2)) * T(a(p, 3), eps), s);
      });
      break;
    case Syzygy::S5:
      for_permutations(4, increasing({{0, 1}, {2, 3}}), [&](const auto& p, int s) {
        lhs += scale(T(ab(p, 0), ab(p, 1)) * L(a(p, 2), a(p, 3), eps), s);
      });
      for_permutations(4, increasing({{0, 1}}), [&](const auto& p, int s) {
        lhs += scale(M(a(p, 0), a(p, 1), eps) * T(a(p, 2), ab(p, 3)), s);
      });
      for_permutations(4, increasing({{0, 1, 2}}), [&](const auto& p, int s) {
        lhs -= scale(P(a(p, 0), a(p, 1), a(p, 2), eps) * mu2(ab(p, 3)), s);
        lhs += scale(M(a(p, 0), a(p, 1), a(p, 2)) * T(ab(p, 3), eps), s);
      });
      rhs += mu1(eps) * Q(tuple[0], tuple[1], tuple[2], tuple[3]);
      for_permutations(4, increasing({{0, 1}}), [&](const auto& p, int s) {
        rhs += scale(L(ab(p, 0), ab(p, 1), a(p, 2)) * T(a(p, 3), eps), s);
        rhs += scale(T(a(p, 0), a(p, 1)) * M(a(p, 2), ab(p, 3), eps), s);
      });
      break;
    case Syzygy::S6:
      for_permutations(4, increasing({{0, 1, 2}}), [&](const auto& p, int s) {
        lhs += scale(L(a(p, 0), a(p, 1), a(p, 2)) * mu2(a(p, 3)), s);
        rhs -= scale(M(a(p, 0), a(p, 1), a(p, 2)) * mu1(a(p, 3)), s);
      });
      break;
  }
  return {std::move(lhs), std::move(rhs)};
}

/// Left side minus right side; zero iff the syzygy holds.
inline QPoly syzygy_defect(const ScrollRing& r, Syzygy id, const std::vector<int>& tuple, int eps = 0) {
  auto [lhs, rhs] = syzygy_sides(r, id, tuple, eps);
  return lhs - rhs;
}

inline bool verify_syzygy(const ScrollRing& r, Syzygy id, const std::vector<int>& tuple, int eps = 0) {
  return syzygy_defect(r, id, tuple, eps).is_zero();
}

struct SyzygyCase {
  std::vector<int> tuple;
  int eps = 0;
};

/// Every valid index choice for the identity, or a seeded sample of
/// `sample` cases when there are more than `exhaustive_limit`.
inline std::vector<SyzygyCase> syzygy_cases(const ScrollRing& r, Syzygy id, std::size_t exhaustive_limit = 10000,
                                            std::size_t sample = 500, unsigned seed = 20240601u) {
  std::vector<SyzygyCase> all;
  switch (id) {
    case Syzygy::S1:
    case Syzygy::S2:
      for (auto& t : subsets(1, r.c_minus_d(), 5)) all.push_back({t, 0});
      break;
    case Syzygy::S3:
    case Syzygy::S4:
    case Syzygy::S5:
      for (auto& t : subsets(1, r.c_minus_d(), 4))
        for (int e = 1; e <= r.c(); ++e) all.push_back({t, e});
      break;
    case Syzygy::S6:
      for (auto& t : subsets(1, r.c(), 4)) all.push_back({t, 0});
      break;
  }
  if (all.size() <= exhaustive_limit) return all;
  std::mt19937_64 rng(seed);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(sample);
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return std::tie(x.tuple, x.eps) < std::tie(y.tuple, y.eps); });
  return all;
}

inline VerificationReport verify_syzygies(const ScrollRing& r) {
  detail::Stopwatch sw;
  VerificationReport rep;
  rep.suite = "syzygies";
  for (Syzygy id : {Syzygy::S1, Syzygy::S2, Syzygy::S3, Syzygy::S4, Syzygy::S5, Syzygy::S6}) {
    const auto cases = syzygy_cases(r, id);
    std::size_t bad = 0;
    std::string first;
    for (const auto& k : cases)
      if (!verify_syzygy(r, id, k.tuple, k.eps) && !bad++)
        first = detail::tuple_text(k.tuple) + (k.eps ? " eps=" + std::to_string(k.eps) : "");
    rep.counters[syzygy_name(id) + " cases"] += static_cast<long long>(cases.size());
    if (cases.empty())
      rep.skip(syzygy_name(id), "no valid index tuples");
    else
      rep.add(syzygy_name(id), bad == 0, bad ? std::to_string(bad) + " failures; first " + first : "");
  }
  rep.seconds = sw.seconds();
  return rep;
}

// ---- 34-case Hilbert series harness ----

/// Total orders on x_1..x_m (largest first) such that x_b > x_g implies
/// x_a > x_b for all a < b < g.  Lex sorted.
inline std::vector<std::vector<int>> admissible_orders(int m) {
  if (m != 4 && m != 5) throw Error(Errc::UnsupportedM, "admissible orders are tabulated for m = 4, 5 only");
  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    std::vector<int> pos(static_cast<std::size_t>(m + 1));
    for (int k = 0; k < m; ++k) pos[static_cast<std::size_t>(p[static_cast<std::size_t>(k)])] = k;
    auto gt = [&](int x, int y) { return pos[static_cast<std::size_t>(x)] < pos[static_cast<std::size_t>(y)]; };
    bool ok = true;
    for (int a = 1; a <= m && ok; ++a)
      for (int b = a + 1; b <= m && ok; ++b)
        for (int g = b + 1; g <= m && ok; ++g)
          if (gt(b, g) && !gt(a, b)) ok = false;
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// A = K[x_1..x_m, T_{1,2}..T_{m-1,m}]; x_a is stored as x[a,0].
inline UniversePtr harness_universe(int m) {
  std::vector<VarRef> v;
  for (int a = 1; a <= m; ++a) v.push_back(VarRef::x(a, 0));
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b) v.push_back(VarRef::t(a, b));
  return std::make_shared<const Universe>(std::move(v));
}

inline std::vector<QPoly> harness_G(const UniversePtr& u, int m) {
  std::vector<QPoly> out;
  for (auto& t : subsets(1, m, 4)) out.push_back(detail::plucker<Rational>(u, t[0], t[1], t[2], t[3]));
  for (auto& t : subsets(1, m, 3))
    out.push_back(detail::linear_syzygy<Rational>(u, {t[0], 0}, {t[1], 0}, {t[2], 0}, t[0], t[1], t[2]));
  return out;
}

inline std::vector<Monomial> harness_M(const UniversePtr& u, int m) {
  std::vector<Monomial> out;
  for (auto& t : subsets(1, m, 4)) out.push_back(detail::mono(*u, {VarRef::t(t[0], t[2]), VarRef::t(t[1], t[3])}));
  for (auto& t : subsets(1, m, 3)) out.push_back(detail::mono(*u, {VarRef::x(t[1], 0), VarRef::t(t[0], t[2])}));
  return out;
}

/// `order` lists x indices largest first.
inline std::vector<Monomial> harness_L(const UniversePtr& u, int m, const std::vector<int>& order) {
  std::vector<Monomial> out;
  for (auto& t : subsets(1, m, 4)) out.push_back(detail::mono(*u, {VarRef::t(t[0], t[2]), VarRef::t(t[1], t[3])}));
  for (auto& t : subsets(1, m, 3)) {
    const int top = *std::find_if(order.begin(), order.end(), [&](int x) { return std::count(t.begin(), t.end(), x) > 0; });
    std::vector<int> rest;
    for (int x : t)
      if (x != top) rest.push_back(x);
    out.push_back(detail::mono(*u, {VarRef::x(top, 0), VarRef::t(rest[0], rest[1])}));
  }
  return out;
}

inline std::string order_text(const std::vector<int>& o) {
  std::string s;
  for (int x : o) s += std::to_string(x);
  return s;
}

inline VerificationReport run_prop48() {
  detail::Stopwatch sw;
  VerificationReport rep;
  rep.suite = "prop48";
  long long cases = 0;
  for (int m : {4, 5}) {
    const auto u = harness_universe(m);
    const int nv = static_cast<int>(u->size());
    const auto G = harness_G(u, m);
    const auto Mm = harness_M(u, m);
    const std::size_t want = m == 4 ? 5 : 15;
    rep.add("|G" + std::to_string(m) + "| = |M" + std::to_string(m) + "| = " + std::to_string(want),
            G.size() == want && detail::minimalize(Mm).size() == want);
    const HilbertSeries hg = hs_of_ideal(GradedLex{}, G, nv);
    const HilbertSeries hm = hs_monomial(Mm, nv);
    rep.add("HS(G" + std::to_string(m) + ") = HS(M" + std::to_string(m) + ")", hs_equal(hg, hm),
            hg.to_string() + " vs " + hm.to_string());
    ++cases;
    const auto orders = admissible_orders(m);
    rep.add("admissible orders for m=" + std::to_string(m), orders.size() == (m == 4 ? 8u : 16u),
            std::to_string(orders.size()) + " found");
    for (const auto& o : orders) {
      const auto Lm = harness_L(u, m, o);
      const HilbertSeries hl = hs_monomial(Lm, nv);
      rep.add("HS(G" + std::to_string(m) + ") = HS(L" + std::to_string(m) + ") order " + order_text(o),
              hs_equal(hg, hl) && detail::minimalize(Lm).size() == want, hl.to_string());
      ++cases;
    }
  }
  rep.counters["hilbert equalities"] = cases;
  rep.seconds = sw.seconds();
  return rep;
}

// ---- Groebner certification ----

inline std::vector<std::string> family_tags(const GeneratorSet<Rational>& g) {
  std::vector<std::string> tags;
  for (const auto& it : g.items) tags.emplace_back(family_name(it.family));
  return tags;
}

struct GbSuiteOptions {
  unsigned jobs = 1;
  std::size_t budget = 0;
};

inline VerificationReport verify_gb(const ScrollRing& r, Target target, const GbSuiteOptions& opt = {}) {
  detail::Stopwatch sw;
  VerificationReport rep;
  rep.suite = target == Target::Fiber ? "fiber-gb" : "rees-gb";
  const OrderContext ctx(r);
  const auto gens = generators<Rational>(r, target);
  if (gens.items.empty()) {
    rep.skip("buchberger criterion", "no generators");
    rep.seconds = sw.seconds();
    return rep;
  }
  GbOptions o;
  o.jobs = opt.jobs;
  o.budget = opt.budget;
  o.tags = family_tags(gens);
  const GbReport gb = is_groebner(ctx, gens.polys(), o);
  rep.counters["s-pairs reduced"] = static_cast<long long>(gb.spairs_checked);
  rep.counters["s-pairs skipped"] = static_cast<long long>(gb.spairs_skipped);
  std::string detail;
  if (!gb.failures.empty())
    detail = std::to_string(gb.failures.size()) + " failing pairs; first " + gens.items[gb.failures[0].i].label() + " x " +
             gens.items[gb.failures[0].j].label();
  rep.add("buchberger criterion", gb.is_gb, detail);
  if (target == Target::Rees) {
    for (const char* type : {"Q,M", "Q,L", "L,M"}) {
      auto it = gb.by_type.find(type);
      const std::size_t n = it == gb.by_type.end() ? 0 : it->second.first;
      const std::size_t failed = it == gb.by_type.end() ? 0 : it->second.second;
      rep.counters[std::string("S(") + type + ") reduced"] = static_cast<long long>(n);
      rep.add(std::string("S(") + type + ") pairs", failed == 0, std::to_string(failed) + " of " + std::to_string(n) + " fail");
    }
  }
  rep.seconds = sw.seconds();
  return rep;
}

/// Leading monomials of the fiber generators as a set of interval pairs.
inline std::set<IntervalPair> fiber_lm_pairs(const ScrollRing& r) {
  const OrderContext ctx(r);
  std::set<IntervalPair> out;
  for (const auto& g : generators<Rational>(r, Target::Fiber).items) {
    const Monomial lm = leading_monomial(ctx, g.poly);
    std::vector<Interval> iv;
    for (const Factor& f : lm.factors())
      for (unsigned e = 0; e < f.exp; ++e) {
        const VarRef& v = r.universe()->var(f.var);
        iv.push_back({v.a, v.b});
      }
    if (iv.size() != 2) throw Error(Errc::ConstraintViolated, "fiber leading monomial is not quadratic in T");
    out.insert(iv[0] < iv[1] ? IntervalPair{iv[0], iv[1]} : IntervalPair{iv[1], iv[0]});
  }
  return out;
}

inline bool verify_initial_complex(const ScrollRing& r, bool allow_slow = false, unsigned jobs = 1) {
  const int cap = allow_slow ? 8 : 7;
  if (r.c() > cap) throw Error(Errc::BoundExceeded, "initial complex certification is capped at c <= " + std::to_string(cap));
  const NonFaces nf = minimal_nonfaces(r);
  std::set<IntervalPair> want(nf.dagger.begin(), nf.dagger.end());
  want.insert(nf.ddagger.begin(), nf.ddagger.end());
  if (fiber_lm_pairs(r) != want) return false;
  GbSuiteOptions o;
  o.jobs = jobs;
  return verify_gb(r, Target::Fiber, o).passed();
}

// ---- complex ----

inline VerificationReport verify_complex(const ScrollRing& r, Depth depth = Depth::Fast) {
  detail::Stopwatch sw;
  VerificationReport rep;
  rep.suite = "complex";
  const int c = r.c();
  const std::size_t size = r.spec().grassmann() ? static_cast<std::size_t>(2 * c - 3) : static_cast<std::size_t>(c + r.d());
  const mpz_class formula = facet_count_formula(r.spec());
  if (c < 2) {
    rep.skip("facets", "c < 2");
    rep.seconds = sw.seconds();
    return rep;
  }
  const int clique_cap = depth == Depth::Slow ? 12 : 10;
  const auto tree = facets_tree(r);
  rep.counters["facets"] = static_cast<long long>(tree.size());
  rep.add("tree count = formula", mpz_class(static_cast<unsigned long>(tree.size())) == formula,
          std::to_string(tree.size()) + " vs " + formula.get_str());
  rep.add("purity", std::all_of(tree.begin(), tree.end(), [&](const Face& f) { return f.size() == size; }));
  if (c <= clique_cap) {
    const auto clique = facets_clique(r, {clique_cap, 0});
    rep.add("clique = tree", clique == tree, std::to_string(clique.size()) + " clique facets");
  } else {
    rep.skip("clique = tree", "c above clique cap");
  }
  if (c <= 7 || (depth == Depth::Slow && c <= 8)) {
    rep.add("initial complex = leading monomials", verify_initial_complex(r, depth == Depth::Slow));
  } else {
    rep.skip("initial complex = leading monomials", "c above certification cap");
  }
  if (r.c() >= r.d() + 3)
    for (int a = 1; a <= c - r.d() - 2; ++a) {
      const auto ge = gamma_and_ell(r.spec(), r.matrix_m(), a);
      std::set<int> got(ge.gamma.begin(), ge.gamma.end()), want;
      for (int g = a + 2; g <= a + ge.ell; ++g) want.insert(g);
      for (int g = c - r.d() + ge.ell; g <= c; ++g) want.insert(g);
      if (got != want || ge.ell < 2 || ge.ell > r.d() + 1) {
        rep.add("gamma runs", false, "alpha=" + std::to_string(a));
        break;
      }
    }
  rep.seconds = sw.seconds();
  return rep;
}

// ---- kernel membership and minimality ----

inline VerificationReport verify_kernel(const ScrollRing& r) {
  detail::Stopwatch sw;
  VerificationReport rep;
  rep.suite = "kernel";
  const auto gens = generators<Rational>(r, Target::Rees);
  std::size_t bad = 0, bideg = 0;
  for (const auto& g : gens.items) {
    if (!pi_substitute(r, g.poly).is_zero()) ++bad;
    const auto bd = g.poly.bidegrees();
    const std::pair<int, int> want = (g.family == Family::P || g.family == Family::Q) ? std::pair{0, 2} : std::pair{1, 1};
    if (bd.size() != 1 || bd[0] != want) ++bideg;
  }
  rep.add("M-presentation generators vanish", bad == 0, std::to_string(bad) + " nonzero images");
  rep.add("bidegrees", bideg == 0);
  const auto xs = to_x_presentation(r, gens);
  std::size_t xbad = 0, xmismatch = 0;
  for (const auto& g : xs.items) {
    if (!pi_substitute(r, g.poly).is_zero()) ++xbad;
    if (!(g.poly == x_relation<Rational>(r, g.family, g.indices))) ++xmismatch;
  }
  rep.add("X-presentation generators vanish", xbad == 0, std::to_string(xbad) + " nonzero images");
  rep.add("translation matches the X-side relations", xmismatch == 0, std::to_string(xmismatch) + " mismatches");
  rep.counters["generators"] = static_cast<long long>(gens.items.size());
  rep.seconds = sw.seconds();
  return rep;
}

/// Rank of the coefficient matrix (rows = polynomials) over Q.
inline std::size_t coefficient_rank(const std::vector<QPoly>& polys) {
  std::map<Monomial, std::size_t> col;
  for (const auto& p : polys)
    for (const auto& [m, c] : p.terms()) col.emplace(m, 0);
  std::size_t k = 0;
  for (auto& [m, idx] : col) idx = k++;
  std::vector<std::vector<Rational>> rows;
  for (const auto& p : polys) {
    std::vector<Rational> row(col.size());
    for (const auto& [m, c] : p.terms()) row[col[m]] = c;
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t j = 0; j < col.size() && rank < rows.size(); ++j) {
    std::size_t piv = rank;
    while (piv < rows.size() && sgn(rows[piv][j]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (sgn(rows[i][j]) == 0) continue;
      const Rational f = rows[i][j] / rows[rank][j];
      for (std::size_t t = j; t < col.size(); ++t) rows[i][t] -= f * rows[rank][t];
    }
    ++rank;
  }
  return rank;
}

/// All generators are quadrics, so no one of them lies in the ideal of the
/// others iff they are linearly independent.
inline bool verify_minimality(const ScrollRing& r, Target target) {
  const auto g = generators<Rational>(r, target).polys();
  return coefficient_rank(g) == g.size();
}

// ---- orchestration ----

struct VerifyOptions {
  Depth depth = Depth::Fast;
  unsigned jobs = 1;
  std::size_t budget = 0;
};

enum class Suite { Lm, Syzygies, Prop48, FiberGb, ReesGb, Complex, Kernel, All };

inline Suite parse_suite(const std::string& s) {
  static const std::map<std::string, Suite> names{{"lm", Suite::Lm},           {"syzygies", Suite::Syzygies},
                                                  {"prop48", Suite::Prop48},   {"fiber-gb", Suite::FiberGb},
                                                  {"rees-gb", Suite::ReesGb},  {"complex", Suite::Complex},
                                                  {"kernel", Suite::Kernel},   {"all", Suite::All}};
  auto it = names.find(s);
  if (it == names.end()) throw Error(Errc::ParseError, "unknown suite '" + s + "'");
  return it->second;
}

inline VerificationReport run_suite(Suite s, const std::vector<ScrollSpec>& specs, const VerifyOptions& opt = {}) {
  detail::Stopwatch sw;
  VerificationReport rep;
  rep.suite = s == Suite::All ? "all" : "";
  auto per_spec = [&](auto&& fn, const char* name) {
    for (const auto& spec : specs) {
      const ScrollRing r(spec);
      VerificationReport sub = fn(r);
      sub.suite = std::string(name) + "[" + spec.to_string() + "]";
      rep.merge(sub);
    }
  };
  const bool slow = opt.depth == Depth::Slow;
  const GbSuiteOptions gbo{opt.jobs, opt.budget};
  auto fiber = [&](const ScrollRing& r) {
    if (r.c() > (slow ? 8 : 7)) {
      VerificationReport v;
      v.skip("buchberger criterion", "c above cap for this depth");
      return v;
    }
    VerificationReport v = verify_gb(r, Target::Fiber, gbo);
    std::set<IntervalPair> want;
    const NonFaces nf = minimal_nonfaces(r);
    want.insert(nf.dagger.begin(), nf.dagger.end());
    want.insert(nf.ddagger.begin(), nf.ddagger.end());
    v.add("leading monomials = minimal non-faces", fiber_lm_pairs(r) == want);
    return v;
  };
  auto rees = [&](const ScrollRing& r) {
    if (r.c() > (slow ? 7 : 6)) {
      VerificationReport v;
      v.skip("buchberger criterion", "c above cap for this depth");
      return v;
    }
    VerificationReport v = verify_gb(r, Target::Rees, gbo);
    v.add("minimal generating set", verify_minimality(r, Target::Rees));
    return v;
  };
  if (s == Suite::Lm || s == Suite::All) per_spec(verify_lm_table, "lm");
  if (s == Suite::Kernel || s == Suite::All) per_spec(verify_kernel, "kernel");
  if (s == Suite::Syzygies || s == Suite::All) per_spec(verify_syzygies, "syzygies");
  if (s == Suite::FiberGb || s == Suite::All) per_spec(fiber, "fiber-gb");
  if (s == Suite::ReesGb || s == Suite::All) per_spec(rees, "rees-gb");
  if (s == Suite::Complex || s == Suite::All)
    per_spec([&](const ScrollRing& r) { return verify_complex(r, opt.depth); }, "complex");
  if (s == Suite::Prop48 || s == Suite::All) {
    VerificationReport p = run_prop48();
    rep.merge(p);
  }
  if (s != Suite::All) {
    static const char* names[] = {"lm", "syzygies", "prop48", "fiber-gb", "rees-gb", "complex", "kernel", "all"};
    rep.suite = names[static_cast<int>(s)];
  }
  rep.seconds = sw.seconds();
  return rep;
}

inline VerificationReport verify_all(const std::vector<ScrollSpec>& specs, Depth depth = Depth::Fast, unsigned jobs = 1) {
  VerifyOptions o;
  o.depth = depth;
  o.jobs = jobs;
  if (specs.empty()) {
    VerificationReport rep;
    rep.suite = "all";
    return rep;
  }
  return run_suite(Suite::All, specs, o);
}

}  // namespace rees
