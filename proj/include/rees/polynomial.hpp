#pragma once

// Sparse multivariate polynomials over the mixed variable set
// {x_{i,j}} U {T_{a,b}} (or {Y_{a,b}} for the X-side presentation), and the
// substitution homomorphism sending each pair variable to the matching 2x2
// minor.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rees/coeff.hpp"
#include "rees/errors.hpp"
#include "rees/scroll.hpp"

namespace rees {

enum class VarKind : std::uint8_t { X, T, Y };

/// x_{i,j} (a=i, b=j), T_{a,b} or Y_{a,b} with a < b.
struct VarRef {
  VarKind kind = VarKind::X;
  int a = 0;
  int b = 0;

  static VarRef x(int i, int j) { return {VarKind::X, i, j}; }
  static VarRef x(XIndex xi) { return {VarKind::X, xi.block, xi.row}; }
  static VarRef t(int alpha, int beta) { return pair(VarKind::T, alpha, beta); }
  static VarRef y(int alpha, int beta) { return pair(VarKind::Y, alpha, beta); }

  bool is_pair() const noexcept { return kind != VarKind::X; }

  std::string name() const {
    const char* head = kind == VarKind::X ? "x[" : kind == VarKind::T ? "T[" : "Y[";
    return head + std::to_string(a) + "," + std::to_string(b) + "]";
  }

  friend auto operator<=>(const VarRef&, const VarRef&) = default;

 private:
  static VarRef pair(VarKind k, int alpha, int beta) {
    if (alpha >= beta)
      throw Error(Errc::BadIndices, "pair variables are stored with a < b, got (" + std::to_string(alpha) + "," +
                                        std::to_string(beta) + ")");
    return {k, alpha, beta};
  }
};

/// "x[1,2]", "T[3,4]", "Y[1,5]".
inline VarRef parse_var(const std::string& s) {
  auto bad = [&] { return Error(Errc::ParseError, "bad variable name '" + s + "'"); };
  if (s.size() < 6 || s[1] != '[' || s.back() != ']') throw bad();
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw bad();
  int a = 0, b = 0;
  try {
    std::size_t u1 = 0, u2 = 0;
    a = std::stoi(s.substr(2, comma - 2), &u1);
    b = std::stoi(s.substr(comma + 1, s.size() - comma - 2), &u2);
    if (u1 != comma - 2 || u2 != s.size() - comma - 2) throw bad();
  } catch (const std::logic_error&) {
    throw bad();
  }
  switch (s[0]) {
    case 'x': return VarRef::x(a, b);
    case 'T': return VarRef::t(a, b);
    case 'Y': return VarRef::y(a, b);
    default: throw bad();
  }
}

using VarId = std::uint16_t;

/// Dense ids for a fixed variable set.  For scroll universes all x variables
/// come first (block by block, row by row), then the pair variables in
/// (a,b)-lex order.  Ids carry no term-order meaning.
class Universe {
 public:
  explicit Universe(std::vector<VarRef> vars) : vars_(std::move(vars)) {
    for (std::size_t k = 0; k < vars_.size(); ++k) {
      if (!index_.emplace(vars_[k], static_cast<VarId>(k)).second)
        throw Error(Errc::BadIndices, "duplicate variable " + vars_[k].name());
    }
    if (vars_.size() > 0xFFFF) throw Error(Errc::Overflow, "too many variables");
  }

  static std::shared_ptr<const Universe> scroll(const ScrollSpec& spec, VarKind pair_kind = VarKind::T) {
    std::vector<VarRef> v;
    for (int i = 1; i <= spec.d(); ++i)
      for (int j = 0; j <= spec.n(i); ++j) v.push_back(VarRef::x(i, j));
    for (int a = 1; a <= spec.c(); ++a)
      for (int b = a + 1; b <= spec.c(); ++b)
        v.push_back(pair_kind == VarKind::Y ? VarRef::y(a, b) : VarRef::t(a, b));
    return std::make_shared<const Universe>(std::move(v));
  }

  std::size_t size() const noexcept { return vars_.size(); }
  const VarRef& var(VarId id) const { return vars_.at(id); }
  const std::vector<VarRef>& vars() const noexcept { return vars_; }

  std::optional<VarId> find(const VarRef& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  VarId id(const VarRef& v) const {
    if (auto f = find(v)) return *f;
    throw Error(Errc::UnknownVariable, v.name() + " is not in this ring");
  }

  friend bool operator==(const Universe& a, const Universe& b) { return a.vars_ == b.vars_; }

 private:
  std::vector<VarRef> vars_;
  std::map<VarRef, VarId> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

struct Factor {
  VarId var = 0;
  std::uint16_t exp = 0;
  bool pair = false;
  friend bool operator==(const Factor& a, const Factor& b) { return a.var == b.var && a.exp == b.exp; }
};

/// Sparse exponent vector sorted by variable id; no zero exponents stored.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(const Universe& u, VarId v, std::uint16_t e = 1) {
    Monomial m;
    if (e == 0) return m;
    m.f_.push_back({v, e, u.var(v).is_pair()});
    (u.var(v).is_pair() ? m.deg_t_ : m.deg_x_) = e;
    return m;
  }
  static Monomial variable(const Universe& u, const VarRef& v, std::uint16_t e = 1) { return variable(u, u.id(v), e); }

  static Monomial from_factor(const Factor& f) {
    Monomial m;
    if (f.exp == 0) return m;
    m.f_.push_back(f);
    (f.pair ? m.deg_t_ : m.deg_x_) = f.exp;
    return m;
  }

  const std::vector<Factor>& factors() const noexcept { return f_; }
  bool is_one() const noexcept { return f_.empty(); }
  int degree() const noexcept { return deg_x_ + deg_t_; }
  int deg_x() const noexcept { return deg_x_; }
  int deg_t() const noexcept { return deg_t_; }
  std::pair<int, int> bidegree() const noexcept { return {deg_x_, deg_t_}; }

  std::uint16_t exponent(VarId v) const noexcept {
    auto it = std::lower_bound(f_.begin(), f_.end(), v, [](const Factor& f, VarId x) { return f.var < x; });
    return it != f_.end() && it->var == v ? it->exp : 0;
  }

  bool squarefree() const noexcept {
    return std::all_of(f_.begin(), f_.end(), [](const Factor& f) { return f.exp == 1; });
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.f_.reserve(a.f_.size() + b.f_.size());
    auto i = a.f_.begin(), j = b.f_.begin();
    while (i != a.f_.end() || j != b.f_.end()) {
      if (j == b.f_.end() || (i != a.f_.end() && i->var < j->var)) {
        r.f_.push_back(*i++);
      } else if (i == a.f_.end() || j->var < i->var) {
        r.f_.push_back(*j++);
      } else {
        const unsigned e = unsigned{i->exp} + j->exp;
        if (e > 0xFFFF) throw Error(Errc::Overflow, "exponent overflow");
        r.f_.push_back({i->var, static_cast<std::uint16_t>(e), i->pair});
        ++i;
        ++j;
      }
    }
    r.deg_x_ = a.deg_x_ + b.deg_x_;
    r.deg_t_ = a.deg_t_ + b.deg_t_;
    return r;
  }

  /// a | b
  friend bool divides(const Monomial& a, const Monomial& b) noexcept {
    if (a.deg_x_ > b.deg_x_ || a.deg_t_ > b.deg_t_) return false;
    auto j = b.f_.begin();
    for (const Factor& f : a.f_) {
      while (j != b.f_.end() && j->var < f.var) ++j;
      if (j == b.f_.end() || j->var != f.var || j->exp < f.exp) return false;
    }
    return true;
  }

  /// Exact quotient b / a; requires divides(a, b).
  friend Monomial operator/(const Monomial& b, const Monomial& a) {
    Monomial r;
    auto i = a.f_.begin();
    for (const Factor& f : b.f_) {
      while (i != a.f_.end() && i->var < f.var) ++i;
      std::uint16_t e = f.exp;
      if (i != a.f_.end() && i->var == f.var) {
        if (i->exp > e) throw Error(Errc::ZeroDivisor, "monomial quotient is not exact");
        e = static_cast<std::uint16_t>(e - i->exp);
      }
      if (e) {
        r.f_.push_back({f.var, e, f.pair});
        (f.pair ? r.deg_t_ : r.deg_x_) += e;
      }
    }
    if (r.degree() != b.degree() - a.degree()) throw Error(Errc::ZeroDivisor, "monomial quotient is not exact");
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) { return combine(a, b, true); }
  friend Monomial gcd(const Monomial& a, const Monomial& b) { return combine(a, b, false); }

  friend bool coprime(const Monomial& a, const Monomial& b) noexcept {
    auto j = b.f_.begin();
    for (const Factor& f : a.f_) {
      while (j != b.f_.end() && j->var < f.var) ++j;
      if (j == b.f_.end()) return true;
      if (j->var == f.var) return false;
    }
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.f_ == b.f_; }

  /// Canonical storage order only; unrelated to any term order.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    const std::size_t n = std::min(a.f_.size(), b.f_.size());
    for (std::size_t k = 0; k < n; ++k) {
      if (a.f_[k].var != b.f_[k].var) return a.f_[k].var <=> b.f_[k].var;
      if (a.f_[k].exp != b.f_[k].exp) return a.f_[k].exp <=> b.f_[k].exp;
    }
    return a.f_.size() <=> b.f_.size();
  }

 private:
  static Monomial combine(const Monomial& a, const Monomial& b, bool take_max) {
    Monomial r;
    auto i = a.f_.begin(), j = b.f_.begin();
    auto push = [&r](const Factor& f) {
      r.f_.push_back(f);
      (f.pair ? r.deg_t_ : r.deg_x_) += f.exp;
    };
    while (i != a.f_.end() || j != b.f_.end()) {
      if (j == b.f_.end() || (i != a.f_.end() && i->var < j->var)) {
        if (take_max) push(*i);
        ++i;
      } else if (i == a.f_.end() || j->var < i->var) {
        if (take_max) push(*j);
        ++j;
      } else {
        push(take_max ? (i->exp >= j->exp ? *i : *j) : (i->exp <= j->exp ? *i : *j));
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Factor> f_;
  int deg_x_ = 0;
  int deg_t_ = 0;
};

inline std::string to_text(const Universe& u, const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (const Factor& f : m.factors()) {
    if (!s.empty()) s += '*';
    s += u.var(f.var).name();
    if (f.exp > 1) s += "^" + std::to_string(f.exp);
  }
  return s;
}

template <CoefficientField C>
class Polynomial {
 public:
  using Coeff = C;
  using Traits = CoeffTraits<C>;
  using TermMap = std::map<Monomial, C>;

  /// The zero polynomial, compatible with every universe.
  Polynomial() = default;
  explicit Polynomial(UniversePtr u) : uni_(std::move(u)) {}

  static Polynomial term(UniversePtr u, const Monomial& m, const C& coeff) {
    Polynomial p(std::move(u));
    p.add_term(m, coeff);
    return p;
  }
  static Polynomial constant(UniversePtr u, const C& coeff) { return term(std::move(u), Monomial{}, coeff); }
  static Polynomial variable(UniversePtr u, const VarRef& v) {
    Monomial m = Monomial::variable(*u, v);
    return term(std::move(u), m, Traits::from_int(1));
  }

  const UniversePtr& universe() const noexcept { return uni_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  C coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C{} : it->second;
  }

  void add_term(const Monomial& m, const C& coeff) {
    if (Traits::is_zero(coeff)) return;
    auto [it, fresh] = terms_.try_emplace(m, coeff);
    if (!fresh) {
      it->second += coeff;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    adopt(o);
    for (const auto& [m, cf] : o.terms_) add_term(m, cf);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    adopt(o);
    for (const auto& [m, cf] : o.terms_) add_term(m, -cf);
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [m, cf] : r.terms_) cf = -cf;
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.uni_ ? a.uni_ : b.uni_);
    r.adopt(b);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  Polynomial scaled(const C& s) const {
    Polynomial r(uni_);
    if (Traits::is_zero(s)) return r;
    for (const auto& [m, cf] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, cf * s);
    return r;
  }

  /// coeff * m * this
  Polynomial times_term(const Monomial& m, const C& coeff) const {
    Polynomial r(uni_);
    if (Traits::is_zero(coeff)) return r;
    for (const auto& [mm, cf] : terms_) r.terms_.emplace(mm * m, cf * coeff);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    check_compatible(a.uni_, b.uni_);
    return a.terms_ == b.terms_;
  }

  /// All distinct bidegrees (x-degree, pair-degree) appearing in the support.
  std::vector<std::pair<int, int>> bidegrees() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [m, cf] : terms_) out.push_back(m.bidegree());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Rebinds a universe-less zero; nonzero polynomials must already agree.
  void adopt(const Polynomial& o) {
    check_compatible(uni_, o.uni_);
    if (!uni_) uni_ = o.uni_;
  }

  static void check_compatible(const UniversePtr& a, const UniversePtr& b) {
    if (a && b && a != b && !(*a == *b)) throw Error(Errc::SpecMismatch, "operands live in different rings");
  }

 private:
  UniversePtr uni_;
  TermMap terms_;
};

using QPoly = Polynomial<Rational>;

/// Text form with terms in the given order; coefficients of +-1 are elided.
template <CoefficientField C, class TermRange>
std::string to_text(const Universe& u, const TermRange& terms) {
  using Tr = CoeffTraits<C>;
  std::string s;
  bool first = true;
  for (const auto& [m, cf] : terms) {
    const bool neg = Tr::is_negative(cf);
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    const C mag = Tr::magnitude(cf);
    if (m.is_one()) {
      s += Tr::to_string(mag);
    } else {
      if (!Tr::is_one(mag)) s += Tr::to_string(mag) + "*";
      s += to_text(u, m);
    }
  }
  return first ? "0" : s;
}

/// Canonical (storage order) text form.
template <CoefficientField C>
std::string to_text(const Polynomial<C>& p) {
  if (p.is_zero()) return "0";
  return to_text<C>(*p.universe(), p.terms());
}

/// Spec, both matrices, tau, bar table and the two variable universes
/// (T-side and Y-side) of one scroll.  Immutable once built.
class ScrollRing {
 public:
  explicit ScrollRing(ScrollSpec spec)
      : spec_(std::move(spec)),
        m_(build_matrix_M(spec_)),
        x_(build_matrix_X(spec_)),
        tau_(rees::tau(spec_)),
        uni_(Universe::scroll(spec_, VarKind::T)),
        yuni_(Universe::scroll(spec_, VarKind::Y)) {
    for (int a = 1; a <= c_minus_d(); ++a) bar_.push_back(rees::bar(m_, c_minus_d(), a));
  }

  const ScrollSpec& spec() const noexcept { return spec_; }
  const MatrixM& matrix_m() const noexcept { return m_; }
  const MatrixX& matrix_x() const noexcept { return x_; }
  const Tau& tau() const noexcept { return tau_; }
  const UniversePtr& universe() const noexcept { return uni_; }
  const UniversePtr& y_universe() const noexcept { return yuni_; }
  int c() const noexcept { return spec_.c(); }
  int d() const noexcept { return spec_.d(); }
  int c_minus_d() const noexcept { return spec_.c() - spec_.d(); }

  int bar(int alpha) const {
    if (alpha < 1 || alpha > c_minus_d())
      throw Error(Errc::BarUndefined, "bar(" + std::to_string(alpha) + ") needs alpha <= c-d = " +
                                          std::to_string(c_minus_d()));
    return bar_[static_cast<std::size_t>(alpha - 1)];
  }

  /// mu_{row,col}: row 1 is the top entry, row 2 the bottom.
  XIndex mu(int row, int col) const {
    if (col < 1 || col > c()) throw Error(Errc::IndexOutOfRange, "column " + std::to_string(col));
    return row == 1 ? m_[col].top : m_[col].bottom;
  }
  /// xi_{row,col} on the X matrix.
  XIndex xi(int row, int col) const {
    if (col < 1 || col > c()) throw Error(Errc::IndexOutOfRange, "column " + std::to_string(col));
    return row == 1 ? x_[col].top : x_[col].bottom;
  }

 private:
  ScrollSpec spec_;
  MatrixM m_;
  MatrixX x_;
  Tau tau_;
  UniversePtr uni_;
  UniversePtr yuni_;
  std::vector<int> bar_;
};

template <CoefficientField C>
Polynomial<C> x_poly(const UniversePtr& u, XIndex xi) {
  return Polynomial<C>::variable(u, VarRef::x(xi));
}

template <CoefficientField C>
Polynomial<C> mu_poly(const ScrollRing& r, int row, int col) {
  return x_poly<C>(r.universe(), r.mu(row, col));
}

namespace detail {

template <CoefficientField C>
Polynomial<C> two_by_two(const UniversePtr& u, XIndex a1, XIndex b2, XIndex b1, XIndex a2) {
  return x_poly<C>(u, a1) * x_poly<C>(u, b2) - x_poly<C>(u, b1) * x_poly<C>(u, a2);
}

}  // namespace detail

/// g_{alpha,beta} = mu_{1,alpha} mu_{2,beta} - mu_{1,beta} mu_{2,alpha}.
template <CoefficientField C>
Polynomial<C> minor_g(const ScrollRing& r, int alpha, int beta, const UniversePtr& target = nullptr) {
  if (alpha >= beta || alpha < 1 || beta > r.c())
    throw Error(Errc::BadIndices, "minor needs 1 <= alpha < beta <= c, got (" + std::to_string(alpha) + "," +
                                      std::to_string(beta) + ")");
  const UniversePtr& u = target ? target : r.universe();
  return detail::two_by_two<C>(u, r.mu(1, alpha), r.mu(2, beta), r.mu(1, beta), r.mu(2, alpha));
}

/// f_{alpha,beta}, the same minor taken on X.
template <CoefficientField C>
Polynomial<C> minor_f(const ScrollRing& r, int alpha, int beta, const UniversePtr& target = nullptr) {
  if (alpha >= beta || alpha < 1 || beta > r.c())
    throw Error(Errc::BadIndices, "minor needs 1 <= alpha < beta <= c");
  const UniversePtr& u = target ? target : r.y_universe();
  return detail::two_by_two<C>(u, r.xi(1, alpha), r.xi(2, beta), r.xi(1, beta), r.xi(2, alpha));
}

/// T_{a,b} -> g_{a,b}, Y_{a,b} -> f_{a,b}, x fixed.  The Rees variable t is
/// not materialized; its exponent is the pair-degree of the input.
template <CoefficientField C>
Polynomial<C> pi_substitute(const ScrollRing& r, const Polynomial<C>& p) {
  if (p.is_zero()) return p;
  const UniversePtr& u = p.universe();
  std::vector<std::optional<Polynomial<C>>> image(u->size());
  auto image_of = [&](VarId v) -> const Polynomial<C>& {
    auto& slot = image[v];
    if (!slot) {
      const VarRef& ref = u->var(v);
      if (ref.kind == VarKind::X) {
        slot = Polynomial<C>::variable(u, ref);
      } else if (ref.kind == VarKind::T) {
        slot = minor_g<C>(r, ref.a, ref.b, u);
      } else {
        slot = minor_f<C>(r, ref.a, ref.b, u);
      }
    }
    return *slot;
  };
  Polynomial<C> out(u);
  for (const auto& [m, cf] : p.terms()) {
    Polynomial<C> acc = Polynomial<C>::constant(u, cf);
    for (const Factor& f : m.factors())
      for (unsigned e = 0; e < f.exp; ++e) acc = acc * image_of(f.var);
    out += acc;
  }
  return out;
}

}  // namespace rees
