#pragma once

// The scroll term order: multidegree first, then s-degree, then lex on the
// variable order.  Also two plain comparators (graded lex / graded revlex)
// for auxiliary computations.

#include <algorithm>
#include <compare>
#include <concepts>
#include <string>
#include <utility>
#include <vector>

#include "rees/polynomial.hpp"

namespace rees {

template <class O>
concept TermOrder = requires(const O& o, const Monomial& a, const Monomial& b) {
  { o.compare(a, b) } -> std::same_as<std::strong_ordering>;
};

class OrderContext {
 public:
  explicit OrderContext(const ScrollRing& ring) : ring_(&ring), uni_(ring.universe()) {
    const ScrollSpec& s = ring.spec();
    const int c = s.c(), d = s.d();
    const std::size_t n = uni_->size();
    rank_.assign(n, -1);
    mdeg_.assign(n, {-1, -1});
    sdeg_.assign(n, 0);

    // descending variable chain
    std::vector<VarRef> chain;
    std::vector<std::pair<int, int>> nonterminal;  // (j, i)
    for (int i = 1; i <= d; ++i)
      for (int j = 0; j < s.n(i); ++j) nonterminal.emplace_back(j, i);
    std::sort(nonterminal.begin(), nonterminal.end());
    for (auto [j, i] : nonterminal) chain.push_back(VarRef::x(i, j));
    for (int i = d; i >= 1; --i) chain.push_back(VarRef::x(i, s.n(i)));
    for (int a = 1; a <= c; ++a)
      for (int b = a + 1; b <= c; ++b) chain.push_back(VarRef::t(a, b));
    if (chain.size() != n) throw Error(Errc::SpecMismatch, "variable chain does not cover the ring");
    for (std::size_t k = 0; k < chain.size(); ++k) {
      const VarId v = uni_->id(chain[k]);
      rank_[v] = static_cast<int>(n - k);
      by_rank_.push_back(v);
    }

    // multidegree positions (0-based into N^{c+d})
    for (int i = 1; i <= d; ++i) mdeg_[uni_->id(VarRef::x(i, 0))].first = i - 1;
    for (int g = 1; g <= c; ++g) {
      auto& slot = mdeg_[uni_->id(VarRef::x(ring.mu(2, g)))].first;
      if (slot != -1) throw Error(Errc::SpecMismatch, "x variable occurs twice in the second row of M");
      slot = g + d - 1;
    }
    for (int a = 1; a <= c; ++a)
      for (int b = a + 1; b <= c; ++b) {
        const VarId v = uni_->id(VarRef::t(a, b));
        mdeg_[v] = {a + d - 1, b + d - 1};
        sdeg_[v] = c - a;
      }
    for (std::size_t v = 0; v < n; ++v)
      if (mdeg_[v].first < 0) throw Error(Errc::SpecMismatch, "variable without multidegree: " + uni_->var(static_cast<VarId>(v)).name());
    width_ = static_cast<std::size_t>(c + d);
  }

  const ScrollRing& ring() const noexcept { return *ring_; }
  const UniversePtr& universe() const noexcept { return uni_; }

  /// Larger rank means larger variable.  Ranks run 1..#vars.
  int variable_rank(VarId v) const { return rank_.at(v); }
  int variable_rank(const VarRef& v) const { return rank_.at(uni_->id(v)); }

  /// Variables from largest to smallest.
  const std::vector<VarId>& descending_variables() const noexcept { return by_rank_; }

  std::vector<int> mdeg(VarId v) const {
    std::vector<int> out(width_, 0);
    add_mdeg(out, v, 1);
    return out;
  }
  std::vector<int> mdeg(const Monomial& m) const {
    std::vector<int> out(width_, 0);
    for (const Factor& f : m.factors()) add_mdeg(out, f.var, f.exp);
    return out;
  }
  int sdeg(VarId v) const { return sdeg_.at(v); }
  int sdeg(const Monomial& m) const {
    int s = 0;
    for (const Factor& f : m.factors()) s += sdeg_[f.var] * f.exp;
    return s;
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (a == b) return std::strong_ordering::equal;
    {
      thread_local std::vector<int> diff;
      diff.assign(width_, 0);
      for (const Factor& f : a.factors()) add_mdeg(diff, f.var, f.exp);
      for (const Factor& f : b.factors()) add_mdeg(diff, f.var, -static_cast<int>(f.exp));
      for (int v : diff)
        if (v != 0) return v <=> 0;
    }
    if (auto r = sdeg(a) <=> sdeg(b); r != 0) return r;
    for (VarId v : by_rank_) {
      if (auto r = a.exponent(v) <=> b.exponent(v); r != 0) return r;
    }
    return std::strong_ordering::equal;
  }

 private:
  void add_mdeg(std::vector<int>& out, VarId v, int e) const {
    const auto [p, q] = mdeg_.at(v);
    out[static_cast<std::size_t>(p)] += e;
    if (q >= 0) out[static_cast<std::size_t>(q)] += e;
  }

  const ScrollRing* ring_;
  UniversePtr uni_;
  std::vector<int> rank_;
  std::vector<VarId> by_rank_;
  std::vector<std::pair<int, int>> mdeg_;
  std::vector<int> sdeg_;
  std::size_t width_ = 0;
};

/// Total degree, then lex.  Variable order: earlier in `descending` is larger;
/// by default universe id order.
class GradedLex {
 public:
  GradedLex() = default;
  explicit GradedLex(std::vector<VarId> descending) : desc_(std::move(descending)) {}

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (auto r = a.degree() <=> b.degree(); r != 0) return r;
    if (desc_.empty()) {
      // smaller id is larger: the first differing factor decides
      const auto& fa = a.factors();
      const auto& fb = b.factors();
      for (std::size_t k = 0; k < fa.size() && k < fb.size(); ++k) {
        if (fa[k].var != fb[k].var) return fa[k].var < fb[k].var ? std::strong_ordering::greater : std::strong_ordering::less;
        if (fa[k].exp != fb[k].exp) return fa[k].exp <=> fb[k].exp;
      }
      return fa.size() <=> fb.size();
    }
    for (VarId v : desc_)
      if (auto r = a.exponent(v) <=> b.exponent(v); r != 0) return r;
    return std::strong_ordering::equal;
  }

 private:
  std::vector<VarId> desc_;
};

/// Total degree, then reverse lex: the smallest variable with differing
/// exponent decides, smaller exponent wins.
class GradedRevLex {
 public:
  GradedRevLex() = default;
  explicit GradedRevLex(std::vector<VarId> descending) : desc_(std::move(descending)) {}

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (auto r = a.degree() <=> b.degree(); r != 0) return r;
    if (desc_.empty()) {
      const auto& fa = a.factors();
      const auto& fb = b.factors();
      auto i = fa.rbegin(), j = fb.rbegin();
      for (; i != fa.rend() && j != fb.rend(); ++i, ++j) {
        if (i->var != j->var) return i->var > j->var ? std::strong_ordering::less : std::strong_ordering::greater;
        if (i->exp != j->exp) return j->exp <=> i->exp;
      }
      return std::strong_ordering::equal;
    }
    for (auto it = desc_.rbegin(); it != desc_.rend(); ++it)
      if (auto r = b.exponent(*it) <=> a.exponent(*it); r != 0) return r;
    return std::strong_ordering::equal;
  }

 private:
  std::vector<VarId> desc_;
};

/// Terms of p from largest to smallest.
template <TermOrder O, CoefficientField C>
std::vector<std::pair<Monomial, C>> sorted_terms(const O& order, const Polynomial<C>& p) {
  std::vector<std::pair<Monomial, C>> t(p.terms().begin(), p.terms().end());
  std::sort(t.begin(), t.end(), [&](const auto& a, const auto& b) { return order.compare(a.first, b.first) > 0; });
  return t;
}

template <TermOrder O, CoefficientField C>
std::pair<Monomial, C> leading_term(const O& order, const Polynomial<C>& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "leading term of the zero polynomial");
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it)
    if (order.compare(it->first, best->first) > 0) best = it;
  return *best;
}

template <TermOrder O, CoefficientField C>
Monomial leading_monomial(const O& order, const Polynomial<C>& p) {
  return leading_term(order, p).first;
}

/// Text form with terms in decreasing order.
template <TermOrder O, CoefficientField C>
std::string to_text(const O& order, const Polynomial<C>& p) {
  if (p.is_zero()) return "0";
  return to_text<C>(*p.universe(), sorted_terms(order, p));
}

/// One variable per line, largest first.
inline std::string dump_variables(const OrderContext& ctx) {
  std::string s;
  for (VarId v : ctx.descending_variables()) s += ctx.universe()->var(v).name() + "\n";
  return s;
}

}  // namespace rees
