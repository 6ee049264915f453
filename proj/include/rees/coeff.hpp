#pragma once

// Coefficient fields.  Rational (char 0) is the working field; the prime
// field exists only as a cross-check.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>

#include "rees/errors.hpp"

namespace rees {

using Rational = mpq_class;

template <std::uint32_t P>
class ModP {
 public:
  static constexpr std::uint32_t modulus = P;

  constexpr ModP() = default;
  constexpr ModP(long long v) : v_(reduce(v)) {}  // NOLINT: implicit like an integer literal

  constexpr std::uint32_t value() const noexcept { return v_; }

  friend constexpr ModP operator+(ModP a, ModP b) { return from_raw((a.v_ + std::uint64_t{b.v_}) % P); }
  friend constexpr ModP operator-(ModP a, ModP b) { return from_raw((a.v_ + std::uint64_t{P} - b.v_) % P); }
  friend constexpr ModP operator*(ModP a, ModP b) { return from_raw(std::uint64_t{a.v_} * b.v_ % P); }
  friend ModP operator/(ModP a, ModP b) {
    if (b.v_ == 0) throw Error(Errc::ZeroDivisor, "division by zero in GF(p)");
    return a * b.pow(P - 2);
  }
  constexpr ModP operator-() const { return from_raw((P - v_) % P); }
  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator-=(ModP o) { return *this = *this - o; }
  ModP& operator*=(ModP o) { return *this = *this * o; }
  ModP& operator/=(ModP o) { return *this = *this / o; }
  friend constexpr bool operator==(ModP, ModP) = default;

  constexpr ModP pow(std::uint64_t e) const {
    ModP r = 1, b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

 private:
  static constexpr std::uint32_t reduce(long long v) {
    long long r = v % static_cast<long long>(P);
    return static_cast<std::uint32_t>(r < 0 ? r + P : r);
  }
  static constexpr ModP from_raw(std::uint64_t v) {
    ModP m;
    m.v_ = static_cast<std::uint32_t>(v);
    return m;
  }
  std::uint32_t v_ = 0;
};

/// Largest prime below 2^31.
using Zp = ModP<2147483647u>;

template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Rational> {
  static Rational from_int(long v) { return Rational(v); }
  static bool is_zero(const Rational& c) { return sgn(c) == 0; }
  static bool is_negative(const Rational& c) { return sgn(c) < 0; }
  static bool is_one(const Rational& c) { return c == 1; }
  static Rational magnitude(const Rational& c) { return abs(c); }
  static std::string to_string(const Rational& c) { return c.get_str(); }
  static Rational parse(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw Error(Errc::ParseError, "bad rational '" + s + "'");
    if (r.get_den() == 0) throw Error(Errc::ParseError, "zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
  }
};

template <std::uint32_t P>
struct CoeffTraits<ModP<P>> {
  static ModP<P> from_int(long v) { return ModP<P>(v); }
  static bool is_zero(const ModP<P>& c) { return c.value() == 0; }
  static bool is_negative(const ModP<P>&) { return false; }
  static bool is_one(const ModP<P>& c) { return c.value() == 1; }
  static ModP<P> magnitude(const ModP<P>& c) { return c; }
  static std::string to_string(const ModP<P>& c) { return std::to_string(c.value()); }
  static ModP<P> parse(const std::string& s) {
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return ModP<P>(std::stoll(s));
      return ModP<P>(std::stoll(s.substr(0, slash))) / ModP<P>(std::stoll(s.substr(slash + 1)));
    } catch (const std::logic_error&) {
      throw Error(Errc::ParseError, "bad coefficient '" + s + "'");
    }
  }
};

template <class C>
concept CoefficientField = requires(C a, C b) {
  { a + b } -> std::convertible_to<C>;
  { a - b } -> std::convertible_to<C>;
  { a * b } -> std::convertible_to<C>;
  { a / b } -> std::convertible_to<C>;
  { -a } -> std::convertible_to<C>;
  { a == b } -> std::convertible_to<bool>;
  { CoeffTraits<C>::is_zero(a) } -> std::same_as<bool>;
  { CoeffTraits<C>::from_int(1L) } -> std::same_as<C>;
};

}  // namespace rees
