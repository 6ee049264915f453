#pragma once

// JSON forms of polynomials, matrices, faces, reports and Hilbert series.
// Polynomials are arrays of {"coeff": "p/q", "mono": {"T[1,2]": 1, ...}}.

#include <json.hpp>

#include <set>
#include <string>
#include <vector>

#include "rees/verification.hpp"

namespace rees {

using nlohmann::json;

template <CoefficientField C>
json term_to_json(const Universe& u, const Monomial& m, const C& c) {
  json mono = json::object();
  for (const Factor& f : m.factors()) mono[u.var(f.var).name()] = f.exp;
  return {{"coeff", CoeffTraits<C>::to_string(c)}, {"mono", mono}};
}

/// Terms in canonical monomial order.
template <CoefficientField C>
json poly_to_json(const Polynomial<C>& p) {
  json out = json::array();
  if (p.is_zero()) return out;
  for (const auto& [m, c] : p.terms()) out.push_back(term_to_json(*p.universe(), m, c));
  return out;
}

/// Terms from largest to smallest under `order`.
template <TermOrder O, CoefficientField C>
json poly_to_json(const O& order, const Polynomial<C>& p) {
  json out = json::array();
  if (p.is_zero()) return out;
  for (const auto& [m, c] : sorted_terms(order, p)) out.push_back(term_to_json(*p.universe(), m, c));
  return out;
}

template <CoefficientField C = Rational>
Polynomial<C> poly_from_json(const UniversePtr& u, const json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "polynomial must be a JSON array of terms");
  Polynomial<C> p(u);
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("mono"))
      throw Error(Errc::ParseError, "term needs 'coeff' and 'mono'");
    const json& cj = t.at("coeff");
    const C c = cj.is_string() ? CoeffTraits<C>::parse(cj.template get<std::string>())
                               : cj.is_number_integer() ? CoeffTraits<C>::from_int(cj.template get<long>())
                                                        : throw Error(Errc::ParseError, "coeff must be a string or integer");
    Monomial m;
    for (const auto& [name, e] : t.at("mono").items()) {
      if (!e.is_number_unsigned() || e.template get<unsigned>() > 0xFFFF) throw Error(Errc::ParseError, "bad exponent for " + name);
      m = m * Monomial::variable(*u, u->id(parse_var(name)), static_cast<std::uint16_t>(e.template get<unsigned>()));
    }
    p.add_term(m, c);
  }
  return p;
}

/// Variables mentioned in a JSON polynomial list, in first-seen order.
inline std::vector<VarRef> json_variables(const json& polys) {
  std::vector<VarRef> out;
  std::set<VarRef> seen;
  for (const auto& p : polys) {
    if (!p.is_array()) throw Error(Errc::ParseError, "expected an array of polynomials");
    for (const auto& t : p) {
      if (!t.is_object() || !t.contains("mono")) throw Error(Errc::ParseError, "term needs 'mono'");
      for (const auto& [name, e] : t.at("mono").items()) {
        const VarRef v = parse_var(name);
        if (seen.insert(v).second) out.push_back(v);
      }
    }
  }
  return out;
}

template <class Matrix>
json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (const auto& col : m.cols)
    out.push_back({{"top", {col.top.block, col.top.row}}, {"bottom", {col.bottom.block, col.bottom.row}}});
  return out;
}

inline json face_to_json(const Face& f) {
  json out = json::array();
  for (const auto& iv : f) out.push_back({iv.a, iv.b});
  return out;
}

inline json faces_to_json(const std::vector<Face>& fs) {
  json out = json::array();
  for (const auto& f : fs) out.push_back(face_to_json(f));
  return out;
}

inline json hs_to_json(const HilbertSeries& h) { return {{"numerator", h.numerator}, {"nvars", h.nvars}}; }

inline json report_to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json cj{{"name", c.name}, {"status", status_name(c.status)}};
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  return {{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}, {"counters", r.counters}};
}

template <class Labels>
json gb_to_json(const GbReport& g, const Labels& label) {
  json failures = json::array();
  for (const auto& f : g.failures) failures.push_back({{"pair", {label(f.i), label(f.j)}}, {"remainder", f.remainder}});
  json by_type = json::object();
  for (const auto& [k, v] : g.by_type) by_type[k] = {{"reduced", v.first}, {"failed", v.second}};
  return {{"is_gb", g.is_gb},
          {"spairs_checked", g.spairs_checked},
          {"spairs_skipped", g.spairs_skipped},
          {"failures", failures},
          {"by_type", by_type}};
}

/// Per-variable rank, multidegree and s-degree, largest variable first.
inline json order_table_to_json(const OrderContext& ctx) {
  json out = json::array();
  for (VarId v : ctx.descending_variables())
    out.push_back({{"var", ctx.universe()->var(v).name()},
                   {"rank", ctx.variable_rank(v)},
                   {"mdeg", ctx.mdeg(v)},
                   {"sdeg", ctx.sdeg(v)}});
  return out;
}

template <CoefficientField C>
json generators_to_json(const OrderContext* ctx, const GeneratorSet<C>& g) {
  json out = json::array();
  for (const auto& it : g.items)
    out.push_back({{"family", family_name(it.family)},
                   {"indices", it.indices},
                   {"poly", ctx && g.presentation == Presentation::M ? poly_to_json(*ctx, it.poly) : poly_to_json(it.poly)}});
  return out;
}

}  // namespace rees
