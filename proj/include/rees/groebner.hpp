#pragma once

// Division with remainder, S-polynomials, the Buchberger test for a given
// basis, and plain Buchberger completion for small auxiliary ideals.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <deque>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "rees/term_order.hpp"

namespace rees {

template <CoefficientField C>
struct ReductionTrace {
  Polynomial<C> input;
  std::vector<Polynomial<C>> quotients;  // one per basis element
  Polynomial<C> remainder;
};

namespace detail {

template <TermOrder O>
struct Descending {
  const O* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) > 0; }
};

template <TermOrder O, CoefficientField C>
struct Prepared {
  std::vector<Polynomial<C>> polys;
  std::vector<Monomial> lm;
  std::vector<C> lc;

  Prepared(const O& order, const std::vector<Polynomial<C>>& basis) : polys(basis) {
    for (const auto& g : polys) {
      if (g.is_zero()) throw Error(Errc::ZeroDivisor, "basis contains the zero polynomial");
      auto [m, c] = leading_term(order, g);
      lm.push_back(std::move(m));
      lc.push_back(std::move(c));
    }
  }

  std::size_t find_divisor(const Monomial& m) const {
    for (std::size_t k = 0; k < lm.size(); ++k)
      if (divides(lm[k], m)) return k;
    return lm.size();
  }
};

/// Core division loop.  When `quotients` is non-null the multipliers are
/// accumulated there.
template <TermOrder O, CoefficientField C>
Polynomial<C> divide(const O& order, const Polynomial<C>& f, const Prepared<O, C>& b,
                     std::vector<Polynomial<C>>* quotients) {
  using Work = std::map<Monomial, C, Descending<O>>;
  Work work(Descending<O>{&order});
  for (const auto& [m, c] : f.terms()) work.emplace(m, c);
  Polynomial<C> rem(f.universe());
  while (!work.empty()) {
    auto top = work.begin();
    const std::size_t k = b.find_divisor(top->first);
    if (k == b.lm.size()) {
      rem.add_term(top->first, top->second);
      work.erase(top);
      continue;
    }
    const Monomial q = top->first / b.lm[k];
    const C qc = top->second / b.lc[k];
    if (quotients) (*quotients)[k].add_term(q, qc);
    for (const auto& [m, c] : b.polys[k].terms()) {
      const Monomial mm = m * q;
      auto [it, fresh] = work.try_emplace(mm, -(c * qc));
      if (!fresh) {
        it->second -= c * qc;
        if (CoeffTraits<C>::is_zero(it->second)) work.erase(it);
      }
    }
  }
  return rem;
}

}  // namespace detail

/// Repeatedly cancels the largest monomial divisible by some leading monomial,
/// using the earliest such basis element.
template <TermOrder O, CoefficientField C>
ReductionTrace<C> reduce(const O& order, const Polynomial<C>& f, const std::vector<Polynomial<C>>& basis) {
  detail::Prepared<O, C> b(order, basis);
  ReductionTrace<C> t;
  t.input = f;
  t.quotients.assign(basis.size(), Polynomial<C>(f.universe()));
  t.remainder = detail::divide(order, f, b, &t.quotients);
#ifndef NDEBUG
  Polynomial<C> check = t.remainder;
  for (std::size_t k = 0; k < basis.size(); ++k) check += t.quotients[k] * basis[k];
  if (!(check == f)) throw Error(Errc::ConstraintViolated, "division identity failed");
#endif
  return t;
}

template <TermOrder O, CoefficientField C>
Polynomial<C> normal_form(const O& order, const Polynomial<C>& f, const std::vector<Polynomial<C>>& basis) {
  detail::Prepared<O, C> b(order, basis);
  return detail::divide(order, f, b, static_cast<std::vector<Polynomial<C>>*>(nullptr));
}

template <TermOrder O, CoefficientField C>
Polynomial<C> s_poly(const O& order, const Polynomial<C>& f, const Polynomial<C>& g) {
  if (f.is_zero() || g.is_zero()) throw Error(Errc::ZeroPolynomial, "S-polynomial of the zero polynomial");
  const auto [mf, cf] = leading_term(order, f);
  const auto [mg, cg] = leading_term(order, g);
  const Monomial l = lcm(mf, mg);
  const C one = CoeffTraits<C>::from_int(1);
  return f.times_term(l / mf, one / cf) - g.times_term(l / mg, one / cg);
}

struct PairFailure {
  std::size_t i = 0;
  std::size_t j = 0;
  std::string remainder;
  friend bool operator==(const PairFailure&, const PairFailure&) = default;
};

struct GbReport {
  bool is_gb = true;
  std::size_t spairs_checked = 0;  // pairs actually reduced
  std::size_t spairs_skipped = 0;  // coprime leading monomials
  std::vector<PairFailure> failures;
  /// "Q,M" -> {reduced, failed}, family tags in the order given.
  std::map<std::string, std::pair<std::size_t, std::size_t>> by_type;
};

struct GbOptions {
  unsigned jobs = 1;
  std::vector<std::string> tags;  // optional, one per basis element
  std::size_t budget = 0;         // 0 = unlimited; counts reduced pairs
};

/// Buchberger's criterion with the coprime skip only.  Failures are listed in
/// (i, j) order regardless of scheduling.
template <TermOrder O, CoefficientField C>
GbReport is_groebner(const O& order, const std::vector<Polynomial<C>>& basis, const GbOptions& opt = {}) {
  detail::Prepared<O, C> b(order, basis);
  const std::size_t n = basis.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  GbReport rep;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coprime(b.lm[i], b.lm[j])) {
        ++rep.spairs_skipped;
        continue;
      }
      pairs.emplace_back(i, j);
    }
  if (opt.budget && pairs.size() > opt.budget)
    throw Error(Errc::PairBudgetExceeded, std::to_string(pairs.size()) + " S-pairs exceed the budget of " + std::to_string(opt.budget));

  std::vector<char> failed(pairs.size(), 0);
  std::vector<std::string> rem_text(pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < pairs.size();) {
      const auto [i, j] = pairs[k];
      Polynomial<C> r = detail::divide(order, s_poly(order, basis[i], basis[j]), b,
                                       static_cast<std::vector<Polynomial<C>>*>(nullptr));
      if (!r.is_zero()) {
        failed[k] = 1;
        rem_text[k] = to_text(order, r);
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(pairs.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  rep.spairs_checked = pairs.size();
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [i, j] = pairs[k];
    if (!opt.tags.empty()) {
      auto& slot = rep.by_type[opt.tags.at(i) + "," + opt.tags.at(j)];
      ++slot.first;
      if (failed[k]) ++slot.second;
    }
    if (failed[k]) rep.failures.push_back({i, j, std::move(rem_text[k])});
  }
  rep.is_gb = rep.failures.empty();
  return rep;
}

/// Plain Buchberger with the coprime criterion.  The result contains the
/// input generators (made monic) followed by the added remainders.
template <TermOrder O, CoefficientField C>
std::vector<Polynomial<C>> buchberger_complete(const O& order, const std::vector<Polynomial<C>>& gens,
                                               std::size_t budget = 1000000) {
  std::vector<Polynomial<C>> g;
  std::vector<Monomial> lm;
  const C one = CoeffTraits<C>::from_int(1);
  auto push = [&](const Polynomial<C>& p) {
    auto [m, c] = leading_term(order, p);
    g.push_back(p.scaled(one / c));
    lm.push_back(std::move(m));
  };
  for (const auto& p : gens) {
    if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "zero generator");
    push(p);
  }
  std::deque<std::pair<std::size_t, std::size_t>> queue;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) queue.emplace_back(i, j);
  std::size_t used = 0;
  while (!queue.empty()) {
    const auto [i, j] = queue.front();
    queue.pop_front();
    if (coprime(lm[i], lm[j])) continue;
    if (++used > budget) throw Error(Errc::PairBudgetExceeded, "S-pair budget of " + std::to_string(budget) + " exhausted");
    Polynomial<C> r = normal_form(order, s_poly(order, g[i], g[j]), g);
    if (r.is_zero()) continue;
    push(r);
    const std::size_t k = g.size() - 1;
    for (std::size_t t = 0; t < k; ++t) queue.emplace_back(t, k);
  }
  return g;
}

/// Minimal generators of the monomial ideal spanned by the leading monomials.
template <TermOrder O, CoefficientField C>
std::vector<Monomial> leading_monomials(const O& order, const std::vector<Polynomial<C>>& basis) {
  std::vector<Monomial> out;
  for (const auto& p : basis) out.push_back(leading_monomial(order, p));
  return out;
}

}  // namespace rees
