#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torres/fox.hpp"
#include "torres/rational_function.hpp"
#include "torres/reps.hpp"

namespace torres {

/// Wada's invariant together with the choices that produced it. A zero value
/// encodes a non-acyclic complex.
template <class R>
struct TorsionValue {
  RationalFunction<R> value;
  std::size_t num_vars = 0;
  std::optional<std::size_t> column;
  std::optional<std::size_t> column_component;
  std::optional<std::size_t> dropped_relator;

  bool is_zero() const { return value.is_zero(); }
};

struct WadaOptions {
  std::optional<std::size_t> column;
  std::optional<std::size_t> dropped_relator;
  /// Columns on this component are not considered.
  std::optional<std::size_t> avoid_component;
};

namespace detail {

template <class R>
LaurentPoly<R> column_denominator(const TensorEvaluator<R>& ev, std::size_t j) {
  const std::size_t nv = ev.num_vars();
  return det(ev.letter({j, 1}).to_poly() - PolyMatrix<R>::identity(ev.ring(), ev.n(), nv));
}

template <class R>
TorsionValue<R> wada_column(const WirtingerPresentation& pres, const TensorEvaluator<R>& ev,
                            const AlexanderMatrix<R>& alex, std::size_t j, LaurentPoly<R> denom,
                            std::optional<std::size_t> dropped) {
  const R& ring = ev.ring();
  const std::size_t nv = ev.num_vars();
  const std::size_t rows = pres.relators.empty() ? 0 : pres.relators.size() - 1;
  const std::size_t cols = pres.generator_count - 1;
  TorsionValue<R> out{RationalFunction<R>::zero(ring, nv), nv, j, pres.component_of.at(j), dropped};
  if (rows > cols) throw InputError("presentation has more relators than generators");
  if (rows < cols) return out;
  LaurentPoly<R> num = LaurentPoly<R>::one(ring, nv);
  if (rows > 0) num = det(alex.assemble(dropped, j, ring));
  out.value = RationalFunction<R>(std::move(num), std::move(denom));
  return out;
}

}  // namespace detail

/// det(Alexander matrix minus one relator row-block and one generator
/// column-block) / det(Phi(x_j) - I). Defaults: drop the last relator, use the
/// first admissible column.
template <class R>
TorsionValue<R> wada(const WirtingerPresentation& pres, const TensorEvaluator<R>& ev,
                     const WadaOptions& opts = {}) {
  if (pres.generator_count == 0) throw InputError("presentation without generators");
  std::optional<std::size_t> dropped;
  if (!pres.relators.empty()) {
    dropped = opts.dropped_relator.value_or(pres.relators.size() - 1);
    if (*dropped >= pres.relators.size()) throw InputError("dropped relator out of range");
  } else if (opts.dropped_relator) {
    throw InputError("presentation has no relators to drop");
  }
  std::vector<std::size_t> candidates;
  if (opts.column) {
    if (*opts.column >= pres.generator_count) throw InputError("column out of range");
    candidates.push_back(*opts.column);
  } else {
    for (std::size_t j = 0; j < pres.generator_count; ++j) {
      if (!opts.avoid_component || pres.component_of[j] != *opts.avoid_component) candidates.push_back(j);
    }
  }
  for (std::size_t j : candidates) {
    auto denom = detail::column_denominator(ev, j);
    if (denom.is_zero()) continue;
    return detail::wada_column(pres, ev, alexander_matrix(pres, ev), j, std::move(denom), dropped);
  }
  throw DegenerateError("no admissible column: det(Phi(x_j) - I) vanishes for every candidate generator");
}

/// Wada values for every admissible column with a fixed dropped relator.
template <class R>
std::vector<TorsionValue<R>> wada_all_columns(const WirtingerPresentation& pres, const TensorEvaluator<R>& ev,
                                              std::optional<std::size_t> dropped_relator = {}) {
  std::optional<std::size_t> dropped;
  if (!pres.relators.empty()) dropped = dropped_relator.value_or(pres.relators.size() - 1);
  auto alex = alexander_matrix(pres, ev);
  std::vector<TorsionValue<R>> out;
  for (std::size_t j = 0; j < pres.generator_count; ++j) {
    auto denom = detail::column_denominator(ev, j);
    if (denom.is_zero()) continue;
    out.push_back(detail::wada_column(pres, ev, alex, j, std::move(denom), dropped));
  }
  return out;
}

/// t_var := 1, removing the variable.
template <class R>
TorsionValue<R> specialize_last(const TorsionValue<R>& t, std::size_t var) {
  if (t.column_component && *t.column_component == var) {
    throw InternalError("torsion was computed with a column on the specialized component");
  }
  TorsionValue<R> out = t;
  out.value = t.value.specialize_to_one(var);
  out.num_vars = t.num_vars - 1;
  return out;
}

/// det(T * rho'([K_comp]) - I).
template <class R>
LaurentPoly<R> rhs_factor(const LinkDiagram& d, std::size_t comp, const InducedPair<R>& pair) {
  return char_factor(monomial_T(pair.rho_L.ring, d, comp), longitude_image(pair, d, comp));
}

enum class TorresCase { case1_det_zero, case2a_sublink_zero, case2b_generic };

inline std::string to_string(TorresCase c) {
  switch (c) {
    case TorresCase::case1_det_zero: return "case1_det_zero";
    case TorresCase::case2a_sublink_zero: return "case2a_sublink_zero";
    case TorresCase::case2b_generic: return "case2b_generic";
  }
  return "unknown";
}

template <class R>
struct TorresReport {
  std::size_t component = 0;
  std::size_t n = 1;
  Exponent T;
  TorsionValue<R> lhs;
  LaurentPoly<R> rhs_factor;
  TorsionValue<R> rhs_torsion;
  TorresCase kind = TorresCase::case2b_generic;
  bool pass = false;
  // Unit-normalized text forms.
  std::string lhs_num, lhs_den, rhs_factor_text, rhs_num, rhs_den;
};

/// tau_L(..., t_comp = 1) against det(T rho'([K_comp]) - I) * tau_L'.
template <class R>
TorresReport<R> torres_check(const LinkDiagram& d, std::size_t comp, const Representation<R>& rho_Lp) {
  if (d.component_count() < 2) throw InputError("the Torres formula needs at least two components");
  if (comp >= d.component_count()) throw InputError("component index out of range");
  const auto pres = wirtinger(d);
  auto deletion = delete_component(d, comp);
  const auto pres_Lp = wirtinger(deletion.sub_diagram);
  auto pair = induce(pres, deletion, rho_Lp);

  auto tau_L = wada(pres, make_evaluator(pair.rho_L, pres), WadaOptions{{}, {}, comp});
  auto lhs = specialize_last(tau_L, comp);
  auto tau_Lp = wada(pres_Lp, make_evaluator(rho_Lp, pres_Lp));
  auto factor = rhs_factor(d, comp, pair);

  TorresReport<R> rep{comp, rho_Lp.n, linking_exponents(d, comp), lhs, factor, tau_Lp};
  if (factor.is_zero()) {
    rep.kind = TorresCase::case1_det_zero;
    rep.pass = lhs.is_zero();
  } else if (tau_Lp.is_zero()) {
    rep.kind = TorresCase::case2a_sublink_zero;
    rep.pass = lhs.is_zero();
  } else {
    rep.kind = TorresCase::case2b_generic;
    rep.pass = eq_up_to_units(lhs.value, factor * tau_Lp.value);
  }
  auto [ln, ld] = canonical_pair(lhs.value.reduced());
  auto [rn, rd] = canonical_pair(tau_Lp.value.reduced());
  rep.lhs_num = to_string(ln);
  rep.lhs_den = to_string(ld);
  rep.rhs_num = to_string(rn);
  rep.rhs_den = to_string(rd);
  rep.rhs_factor_text = to_string(factor.is_zero() ? factor : unit_normalize(factor).canonical);
  return rep;
}

/// Coefficients of p as a polynomial in the monomial t^T, keyed by power, or
/// nullopt when some term is not a power of t^T.
template <class R>
std::optional<std::map<int, typename R::value_type>> in_powers_of(const LaurentPoly<R>& p, const Exponent& T) {
  if (is_zero_exponent(T)) throw InputError("T = 1 has no powers to rewrite in");
  std::size_t pivot = 0;
  while (T[pivot] == 0) ++pivot;
  std::map<int, typename R::value_type> out;
  for (const auto& term : p.terms()) {
    if (term.exp[pivot] % T[pivot] != 0) return std::nullopt;
    int k = term.exp[pivot] / T[pivot];
    for (std::size_t i = 0; i < T.size(); ++i) {
      if (term.exp[i] != k * T[i]) return std::nullopt;
    }
    out.emplace(k, term.coeff);
  }
  return out;
}

/// For a special-linear rho': the factor is T^n + ... + (-1)^n. With T = 1 the
/// factor must merely be a constant.
template <class R>
bool corollary_check(const LaurentPoly<R>& factor, const Exponent& T, std::size_t n) {
  if (is_zero_exponent(T)) return factor.is_constant();
  auto coeffs = in_powers_of(factor, T);
  if (!coeffs) throw InternalError("determinant factor is not a polynomial in T");
  if (coeffs->empty()) return false;
  const R& ring = factor.ring();
  auto top = coeffs->rbegin();
  auto bottom = coeffs->begin();
  if (top->first != static_cast<int>(n) || !ring.is_one(top->second)) return false;
  if (bottom->first != 0) return false;
  auto expected = n % 2 == 0 ? ring.one() : ring.neg(ring.one());
  return ring.equal(bottom->second, expected);
}

template <class R>
bool corollary_check(const TorresReport<R>& report) {
  return corollary_check(report.rhs_factor, report.T, report.n);
}

}  // namespace torres
