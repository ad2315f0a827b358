#pragma once

// Coefficient rings. Each ring is a small value type exposing the same
// arithmetic interface, so polynomial and matrix code is written once as a
// template over the ring. Rings with runtime parameters (the prime of a
// prime field) carry them in the ring object, never in the elements.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "torres/error.hpp"

namespace torres {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class RingKind { integers, rationals, prime_field };

class IntegerRing {
 public:
  using value_type = Integer;
  static constexpr RingKind kind = RingKind::integers;
  static constexpr bool is_field = false;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const { return v; }

  value_type from_fraction(const Integer& num, const Integer& den) const {
    if (den == 0 || num % den != 0) {
      throw InputError("coefficient " + num.str() + "/" + den.str() + " is not an integer");
    }
    return num / den;
  }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  bool is_zero(const value_type& a) const { return a == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  bool is_unit(const value_type& a) const { return a == 1 || a == -1; }

  value_type inverse(const value_type& a) const {
    if (!is_unit(a)) throw InputError("integer " + a.str() + " is not a unit");
    return a;
  }

  /// a / b when b divides a; nullopt-like failure is reported through `ok`.
  value_type divide(const value_type& a, const value_type& b, bool& ok) const {
    if (b == 0 || a % b != 0) {
      ok = false;
      return 0;
    }
    ok = true;
    return a / b;
  }

  /// Scalar removed by canonical forms: the content, signed like the leading coefficient.
  template <class Range>
  value_type normalizer(const Range& coeffs, const value_type& leading) const {
    Integer g = 0;
    for (const auto& c : coeffs) g = boost::multiprecision::gcd(g, c);
    if (g < 0) g = -g;
    return leading < 0 ? Integer(-g) : g;
  }

  /// True iff a = u*b for a unit u.
  bool associated(const value_type& a, const value_type& b) const { return abs(a) == abs(b); }

  bool negative(const value_type& a) const { return a < 0; }
  std::string to_string(const value_type& a) const { return a.str(); }
  std::string name() const { return "Z"; }

  friend bool operator==(const IntegerRing&, const IntegerRing&) { return true; }
};

class RationalRing {
 public:
  using value_type = Rational;
  static constexpr RingKind kind = RingKind::rationals;
  static constexpr bool is_field = true;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const { return v; }

  value_type from_fraction(const Integer& num, const Integer& den) const {
    if (den == 0) throw InputError("zero denominator in rational coefficient");
    return Rational(num, den);
  }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  bool is_zero(const value_type& a) const { return a == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  bool is_unit(const value_type& a) const { return a != 0; }

  value_type inverse(const value_type& a) const {
    if (a == 0) throw InputError("zero is not invertible");
    return 1 / a;
  }

  value_type divide(const value_type& a, const value_type& b, bool& ok) const {
    ok = b != 0;
    return ok ? value_type(a / b) : value_type(0);
  }

  template <class Range>
  value_type normalizer(const Range&, const value_type& leading) const {
    return leading;
  }

  bool associated(const value_type& a, const value_type& b) const { return (a == 0) == (b == 0); }

  bool negative(const value_type& a) const { return a < 0; }
  std::string to_string(const value_type& a) const { return a.str(); }
  std::string name() const { return "Q"; }

  friend bool operator==(const RationalRing&, const RationalRing&) { return true; }
};

/// Integers modulo a prime p < 2^31; elements are stored reduced in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;
  static constexpr RingKind kind = RingKind::prime_field;
  static constexpr bool is_field = true;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p) || p >= (1u << 31)) {
      throw InputError("F_p requires a prime p < 2^31, got " + std::to_string(p));
    }
  }

  std::uint32_t modulus() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }

  value_type from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
  }

  value_type from_integer(const Integer& v) const {
    Integer r = v % p_;
    if (r < 0) r += p_;
    return r.convert_to<value_type>();
  }

  value_type from_fraction(const Integer& num, const Integer& den) const {
    value_type d = from_integer(den);
    if (d == 0) throw InputError("denominator vanishes modulo " + std::to_string(p_));
    return mul(from_integer(num), inverse(d));
  }

  value_type add(value_type a, value_type b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (p_ - b); }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((std::uint64_t(a) * b) % p_);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }
  bool equal(value_type a, value_type b) const { return a == b; }
  bool is_unit(value_type a) const { return a != 0; }

  value_type inverse(value_type a) const {
    if (a == 0) throw InputError("zero is not invertible");
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a;
    for (std::uint32_t e = p_ - 2; e != 0; e >>= 1) {
      if (e & 1u) result = result * base % p_;
      base = base * base % p_;
    }
    return static_cast<value_type>(result);
  }

  value_type divide(value_type a, value_type b, bool& ok) const {
    ok = b != 0;
    return ok ? mul(a, inverse(b)) : 0;
  }

  template <class Range>
  value_type normalizer(const Range&, value_type leading) const {
    return leading;
  }

  bool associated(value_type a, value_type b) const { return (a == 0) == (b == 0); }

  bool negative(value_type) const { return false; }
  std::string to_string(value_type a) const { return std::to_string(a); }
  std::string name() const { return "F" + std::to_string(p_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

  static bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) return false;
    }
    return true;
  }

 private:
  std::uint32_t p_;
};

/// Runtime ring selector: "Z", "Q" or "F<p>".
struct RingSpec {
  RingKind kind = RingKind::rationals;
  std::uint32_t p = 0;

  static RingSpec parse(std::string_view text) {
    if (text == "Z") return {RingKind::integers, 0};
    if (text == "Q") return {RingKind::rationals, 0};
    if (text.size() >= 2 && (text[0] == 'F' || text[0] == 'f')) {
      std::uint64_t p = 0;
      for (char c : text.substr(1)) {
        if (c < '0' || c > '9') throw InputError("bad ring selector '" + std::string(text) + "'");
        p = p * 10 + static_cast<std::uint64_t>(c - '0');
        if (p >= (1ull << 31)) throw InputError("prime too large in '" + std::string(text) + "'");
      }
      PrimeField check(static_cast<std::uint32_t>(p));
      return {RingKind::prime_field, check.modulus()};
    }
    throw InputError("bad ring selector '" + std::string(text) + "' (expected Z, Q or F<p>)");
  }

  std::string name() const {
    switch (kind) {
      case RingKind::integers: return "Z";
      case RingKind::rationals: return "Q";
      case RingKind::prime_field: return "F" + std::to_string(p);
    }
    return "?";
  }

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// Calls f with the concrete ring object selected by spec.
template <class F>
decltype(auto) visit_ring(const RingSpec& spec, F&& f) {
  switch (spec.kind) {
    case RingKind::integers: return std::forward<F>(f)(IntegerRing{});
    case RingKind::rationals: return std::forward<F>(f)(RationalRing{});
    case RingKind::prime_field: return std::forward<F>(f)(PrimeField{spec.p});
  }
  throw InternalError("unknown ring kind");
}

template <class R>
RingSpec ring_spec(const R& ring) {
  if constexpr (R::kind == RingKind::prime_field) {
    return {R::kind, ring.modulus()};
  } else {
    return {R::kind, 0};
  }
}

}  // namespace torres
