#pragma once

// Multivariable Laurent polynomials R[t1^±1, ..., tk^±1].
//
// Terms are stored sorted by exponent vector in strictly decreasing
// lexicographic order (t1 compared first, then t2, ...). That order is used
// for iteration, for choosing the leading term of canonical forms, and for
// text rendering, e.g. `t1^2*t2 - t1 + 1`.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "torres/error.hpp"
#include "torres/ring.hpp"

namespace torres {

using Exponent = std::vector<std::int32_t>;

inline Exponent operator+(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Exponent operator-(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline bool is_zero_exponent(const Exponent& e) {
  return std::all_of(e.begin(), e.end(), [](std::int32_t v) { return v == 0; });
}

/// r * t^exponents.
template <class R>
struct Monomial {
  typename R::value_type coefficient;
  Exponent exponents;
};

template <class R>
class LaurentPoly {
 public:
  using Coeff = typename R::value_type;

  struct Term {
    Exponent exp;
    Coeff coeff;
  };

  LaurentPoly(R ring, std::size_t num_vars) : ring_(std::move(ring)), num_vars_(num_vars) {}

  static LaurentPoly constant(const R& ring, std::size_t num_vars, const Coeff& c) {
    LaurentPoly p(ring, num_vars);
    if (!ring.is_zero(c)) p.terms_.push_back({Exponent(num_vars, 0), c});
    return p;
  }

  static LaurentPoly one(const R& ring, std::size_t num_vars) {
    return constant(ring, num_vars, ring.one());
  }

  static LaurentPoly monomial(const R& ring, const Exponent& exp, const Coeff& c) {
    LaurentPoly p(ring, exp.size());
    if (!ring.is_zero(c)) p.terms_.push_back({exp, c});
    return p;
  }

  static LaurentPoly monomial(const R& ring, const Monomial<R>& m) {
    return monomial(ring, m.exponents, m.coefficient);
  }

  /// t_var^power.
  static LaurentPoly variable(const R& ring, std::size_t num_vars, std::size_t var,
                              std::int32_t power = 1) {
    if (var >= num_vars) throw InputError("variable index out of range");
    Exponent e(num_vars, 0);
    e[var] = power;
    return monomial(ring, e, ring.one());
  }

  /// Builds from arbitrary terms: sorts, merges equal exponents, drops zeros.
  static LaurentPoly from_terms(const R& ring, std::size_t num_vars, std::vector<Term> terms) {
    for (const auto& t : terms) {
      if (t.exp.size() != num_vars) throw InputError("exponent vector length mismatch");
    }
    LaurentPoly p(ring, num_vars);
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  const R& ring() const { return ring_; }
  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && is_zero_exponent(terms_[0].exp));
  }

  /// Lexicographically greatest term; requires a nonzero polynomial.
  const Term& leading() const {
    if (terms_.empty()) throw InputError("leading term of the zero polynomial");
    return terms_.front();
  }

  Coeff constant_coefficient() const {
    for (const auto& t : terms_) {
      if (is_zero_exponent(t.exp)) return t.coeff;
    }
    return ring_.zero();
  }

  Exponent min_exponents() const { return bound(true); }
  Exponent max_exponents() const { return bound(false); }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.coeff = ring_.neg(t.coeff);
    return r;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    return merge(a, b, a.ring_.one(), nullptr);
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    return merge(a, b, a.ring_.neg(a.ring_.one()), nullptr);
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    if (a.is_zero() || b.is_zero()) return LaurentPoly(a.ring_, a.num_vars_);
    if (b.terms_.size() == 1) return a.times_term(b.terms_[0].coeff, b.terms_[0].exp);
    if (a.terms_.size() == 1) return b.times_term(a.terms_[0].coeff, a.terms_[0].exp);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_) {
      for (const auto& y : b.terms_) out.push_back({x.exp + y.exp, a.ring_.mul(x.coeff, y.coeff)});
    }
    LaurentPoly r(a.ring_, a.num_vars_);
    r.terms_ = std::move(out);
    r.canonicalize();
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
  LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.num_vars_ != b.num_vars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].exp != b.terms_[i].exp) return false;
      if (!a.ring_.equal(a.terms_[i].coeff, b.terms_[i].coeff)) return false;
    }
    return true;
  }

  /// c * t^exp * this.
  LaurentPoly times_term(const Coeff& c, const Exponent& exp) const {
    LaurentPoly r(ring_, num_vars_);
    if (ring_.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      Coeff v = ring_.mul(t.coeff, c);
      if (!ring_.is_zero(v)) r.terms_.push_back({t.exp + exp, std::move(v)});
    }
    // Shifting preserves order, and the ring has no zero divisors.
    return r;
  }

  LaurentPoly scaled(const Coeff& c) const { return times_term(c, Exponent(num_vars_, 0)); }

  /// Substitutes t_var := 1 and removes that variable.
  LaurentPoly specialize_to_one(std::size_t var) const {
    if (var >= num_vars_) throw InputError("specialize: variable index out of range");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Exponent e;
      e.reserve(num_vars_ - 1);
      for (std::size_t i = 0; i < num_vars_; ++i) {
        if (i != var) e.push_back(t.exp[i]);
      }
      out.push_back({std::move(e), t.coeff});
    }
    return from_terms(ring_, num_vars_ - 1, std::move(out));
  }

  /// Exact quotient this / divisor in the Laurent ring, or nullopt if divisor does not divide.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const {
    check_compatible(divisor);
    if (divisor.is_zero()) throw InputError("division by the zero polynomial");
    LaurentPoly quotient(ring_, num_vars_);
    if (is_zero()) return quotient;
    // Any exact quotient has support inside this box.
    const Exponent lo = min_exponents() - divisor.max_exponents();
    const Exponent hi = max_exponents() - divisor.min_exponents();
    const Term& lead_d = divisor.leading();
    LaurentPoly rem = *this;
    std::vector<Term> q_terms;
    while (!rem.is_zero()) {
      const Term& lead_r = rem.leading();
      Exponent e = lead_r.exp - lead_d.exp;
      for (std::size_t i = 0; i < num_vars_; ++i) {
        if (e[i] < lo[i] || e[i] > hi[i]) return std::nullopt;
      }
      bool ok = false;
      Coeff c = ring_.divide(lead_r.coeff, lead_d.coeff, ok);
      if (!ok) return std::nullopt;
      rem = merge(rem, divisor, ring_.neg(c), &e);
      q_terms.push_back({std::move(e), std::move(c)});
    }
    // Quotient terms were produced in decreasing order.
    quotient.terms_ = std::move(q_terms);
    return quotient;
  }

  /// Highest and lowest power of t_var occurring; requires a nonzero polynomial.
  std::pair<std::int32_t, std::int32_t> degree_range(std::size_t var) const {
    if (is_zero()) throw InputError("degree of the zero polynomial");
    std::int32_t lo = terms_[0].exp[var], hi = lo;
    for (const auto& t : terms_) {
      lo = std::min(lo, t.exp[var]);
      hi = std::max(hi, t.exp[var]);
    }
    return {lo, hi};
  }

 private:
  void check_compatible(const LaurentPoly& b) const {
    if (num_vars_ != b.num_vars_) {
      throw InputError("variable-count mismatch: " + std::to_string(num_vars_) + " vs " +
                       std::to_string(b.num_vars_));
    }
    if (!(ring_ == b.ring_)) throw InputError("coefficient ring mismatch");
  }

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return x.exp > y.exp; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().exp == t.exp) {
        out.back().coeff = ring_.add(out.back().coeff, t.coeff);
      } else {
        if (!out.empty() && ring_.is_zero(out.back().coeff)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && ring_.is_zero(out.back().coeff)) out.pop_back();
    terms_ = std::move(out);
  }

  /// a + scale * t^shift * b, by a linear merge of the sorted term lists.
  static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, const Coeff& scale,
                           const Exponent* shift) {
    const R& ring = a.ring_;
    LaurentPoly r(ring, a.num_vars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    auto b_exp = [&](std::size_t k) { return shift ? b.terms_[k].exp + *shift : b.terms_[k].exp; };
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size()) {
        r.terms_.push_back(a.terms_[i++]);
        continue;
      }
      Exponent eb = b_exp(j);
      if (i == a.terms_.size() || eb > a.terms_[i].exp) {
        Coeff c = ring.mul(scale, b.terms_[j++].coeff);
        if (!ring.is_zero(c)) r.terms_.push_back({std::move(eb), std::move(c)});
      } else if (a.terms_[i].exp > eb) {
        r.terms_.push_back(a.terms_[i++]);
      } else {
        Coeff c = ring.add(a.terms_[i].coeff, ring.mul(scale, b.terms_[j].coeff));
        if (!ring.is_zero(c)) r.terms_.push_back({std::move(eb), std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  Exponent bound(bool lower) const {
    if (terms_.empty()) throw InputError("exponent bounds of the zero polynomial");
    Exponent e = terms_[0].exp;
    for (const auto& t : terms_) {
      for (std::size_t i = 0; i < num_vars_; ++i) {
        e[i] = lower ? std::min(e[i], t.exp[i]) : std::max(e[i], t.exp[i]);
      }
    }
    return e;
  }

  R ring_;
  std::size_t num_vars_;
  std::vector<Term> terms_;
};

/// Result of unit normalization: p == unit * canonical.
template <class R>
struct UnitNormalForm {
  LaurentPoly<R> canonical;
  Monomial<R> unit;
};

/// Shifts exponents so each variable has minimum 0, then divides by the
/// ring's normalizer of the lex-leading coefficient (1 over fields; over Z,
/// the content signed like the leading coefficient).
template <class R>
UnitNormalForm<R> unit_normalize(const LaurentPoly<R>& p) {
  if (p.is_zero()) throw InputError("unit_normalize of the zero polynomial");
  const R& ring = p.ring();
  Exponent shift = p.min_exponents();
  std::vector<typename R::value_type> coeffs;
  coeffs.reserve(p.size());
  for (const auto& t : p.terms()) coeffs.push_back(t.coeff);
  auto scalar = ring.normalizer(coeffs, p.leading().coeff);
  std::vector<typename LaurentPoly<R>::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    bool ok = false;
    auto c = ring.divide(t.coeff, scalar, ok);
    if (!ok) throw InternalError("normalizer does not divide a coefficient");
    out.push_back({t.exp - shift, std::move(c)});
  }
  return {LaurentPoly<R>::from_terms(ring, p.num_vars(), std::move(out)),
          Monomial<R>{scalar, shift}};
}

/// a == u * b for some unit u = r * t^k, r a unit of the coefficient ring.
template <class R>
bool eq_up_to_units(const LaurentPoly<R>& a, const LaurentPoly<R>& b) {
  if (a.num_vars() != b.num_vars()) throw InputError("variable-count mismatch");
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  auto na = unit_normalize(a);
  auto nb = unit_normalize(b);
  return na.canonical == nb.canonical &&
         a.ring().associated(na.unit.coefficient, nb.unit.coefficient);
}

// ---------------------------------------------------------------------------
// Text format

template <class R>
std::string to_string(const LaurentPoly<R>& p) {
  if (p.is_zero()) return "0";
  const R& ring = p.ring();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool neg = ring.negative(t.coeff);
    auto mag = neg ? ring.neg(t.coeff) : t.coeff;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string vars;
    for (std::size_t i = 0; i < t.exp.size(); ++i) {
      if (t.exp[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "t" + std::to_string(i + 1);
      if (t.exp[i] != 1) vars += "^" + std::to_string(t.exp[i]);
    }
    if (vars.empty()) {
      out += ring.to_string(mag);
    } else if (ring.is_one(mag)) {
      out += vars;
    } else {
      out += ring.to_string(mag) + "*" + vars;
    }
  }
  return out;
}

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::size_t pos() const { return pos_; }

  Integer number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a number", start);
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  std::int64_t small_int() {
    bool neg = accept('-');
    Integer v = number();
    if (v > 1000000) throw ParseError("exponent too large", pos_);
    auto r = v.convert_to<std::int64_t>();
    return neg ? -r : r;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the rendering produced by to_string, e.g. `3/2*t1^-2*t2 - t3 + 1`.
template <class R>
LaurentPoly<R> parse_poly(const R& ring, std::size_t num_vars, std::string_view text) {
  using Term = typename LaurentPoly<R>::Term;
  detail::PolyParser in(text);
  std::vector<Term> terms;
  if (in.at_end()) throw ParseError("empty polynomial", 0);
  bool first = true;
  while (!in.at_end()) {
    bool neg = false;
    if (in.accept('+')) {
    } else if (in.accept('-')) {
      neg = true;
    } else if (!first) {
      throw ParseError("expected '+' or '-'", in.pos());
    }
    first = false;
    Integer num = 1, den = 1;
    Exponent exp(num_vars, 0);
    bool any = false;
    do {
      char c = in.peek();
      if (c == 't') {
        in.accept('t');
        std::size_t at = in.pos();
        Integer idx = in.number();
        if (idx < 1 || idx > num_vars) throw ParseError("variable index out of range", at);
        std::int64_t power = 1;
        if (in.accept('^')) power = in.small_int();
        exp[idx.convert_to<std::size_t>() - 1] += static_cast<std::int32_t>(power);
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        num *= in.number();
        if (in.accept('/')) den *= in.number();
      } else {
        throw ParseError("expected a coefficient or variable", in.pos());
      }
      any = true;
    } while (in.accept('*'));
    if (!any) throw ParseError("empty term", in.pos());
    if (neg) num = -num;
    terms.push_back({std::move(exp), ring.from_fraction(num, den)});
  }
  return LaurentPoly<R>::from_terms(ring, num_vars, std::move(terms));
}

}  // namespace torres
