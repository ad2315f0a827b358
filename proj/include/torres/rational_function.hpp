#pragma once

#include <utility>

#include "torres/laurent.hpp"

namespace torres {

/// Unreduced quotient num/den of Laurent polynomials. Equality is only ever
/// tested by cross-multiplication up to units, so no gcd is needed.
template <class R>
class RationalFunction {
 public:
  RationalFunction(LaurentPoly<R> num, LaurentPoly<R> den)
      : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InputError("rational function with zero denominator");
    if (num_.num_vars() != den_.num_vars()) throw InputError("variable-count mismatch");
  }

  explicit RationalFunction(LaurentPoly<R> p)
      : RationalFunction(p, LaurentPoly<R>::one(p.ring(), p.num_vars())) {}

  static RationalFunction zero(const R& ring, std::size_t num_vars) {
    return RationalFunction(LaurentPoly<R>(ring, num_vars));
  }

  const LaurentPoly<R>& num() const { return num_; }
  const LaurentPoly<R>& den() const { return den_; }
  std::size_t num_vars() const { return num_.num_vars(); }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }

  friend RationalFunction operator*(const LaurentPoly<R>& a, const RationalFunction& b) {
    return RationalFunction(a * b.num_, b.den_);
  }

  /// t_var := 1 in numerator and denominator. The caller guarantees the
  /// denominator survives; a vanishing one is a broken invariant.
  RationalFunction specialize_to_one(std::size_t var) const {
    auto d = den_.specialize_to_one(var);
    if (d.is_zero()) throw InternalError("denominator vanishes under t" + std::to_string(var + 1) + " := 1");
    return RationalFunction(num_.specialize_to_one(var), std::move(d));
  }

  /// Cancels the denominator into the numerator (or vice versa) when one
  /// divides the other exactly; otherwise returns *this unchanged.
  RationalFunction reduced() const {
    const R& ring = num_.ring();
    if (num_.is_zero()) return zero(ring, num_vars());
    if (auto q = num_.divide_exact(den_)) return RationalFunction(std::move(*q));
    if (auto q = den_.divide_exact(num_)) {
      return RationalFunction(LaurentPoly<R>::one(ring, num_vars()), std::move(*q));
    }
    return *this;
  }

 private:
  LaurentPoly<R> num_;
  LaurentPoly<R> den_;
};

/// f.num * g.den == u * g.num * f.den for a unit u.
template <class R>
bool eq_up_to_units(const RationalFunction<R>& f, const RationalFunction<R>& g) {
  return eq_up_to_units(f.num() * g.den(), g.num() * f.den());
}

/// Numerator and denominator each replaced by their unit-normal form (the
/// zero numerator stays zero).
template <class R>
std::pair<LaurentPoly<R>, LaurentPoly<R>> canonical_pair(const RationalFunction<R>& f) {
  auto den = unit_normalize(f.den()).canonical;
  if (f.is_zero()) return {f.num(), std::move(den)};
  return {unit_normalize(f.num()).canonical, std::move(den)};
}

}  // namespace torres
