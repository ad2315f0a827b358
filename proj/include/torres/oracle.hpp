#pragma once

// Brute-force reference implementations used to cross-check the fast paths,
// and the oracle suites run by the test binaries and the CLI.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "torres/corpus.hpp"
#include "torres/fox.hpp"
#include "torres/reps.hpp"

namespace torres {

/// Sum over all permutations.
template <class R>
LaurentPoly<R> det_leibniz(const PolyMatrix<R>& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  const R& ring = m.ring();
  LaurentPoly<R> total(ring, m.num_vars());
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    LaurentPoly<R> term = LaurentPoly<R>::one(ring, m.num_vars());
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term * m(i, perm[i]);
    if (inversions % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Signed count of crossings where component i passes over component j.
/// Equals lk(K_i, K_j) on its own, without halving.
inline int linking_over_sum(const LinkDiagram& d, std::size_t i, std::size_t j) {
  int sum = 0;
  for (const auto& x : d.crossings()) {
    if (d.component_of(x.over) == i && d.component_of(x.in) == j) sum += x.sign;
  }
  return sum;
}

/// Free-group-ring element as a list of (word, ±1) terms.
using SymbolicFox = std::vector<std::pair<GroupWord, int>>;

/// d w / d x_j by the rules d(uv) = du + u dv, dx_j = 1, d(x_j^-1) = -x_j^-1,
/// recursing on halves of the word.
inline SymbolicFox fox_by_rules(const GroupWord& w, std::size_t j) {
  if (w.empty()) return {};
  if (w.size() == 1) {
    const auto& l = w.letters[0];
    if (l.gen != j) return {};
    if (l.exp > 0) return {{GroupWord{}, 1}};
    return {{w, -1}};
  }
  const std::size_t mid = w.size() / 2;
  GroupWord u{{w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(mid)}};
  GroupWord v{{w.letters.begin() + static_cast<std::ptrdiff_t>(mid), w.letters.end()}};
  SymbolicFox out = fox_by_rules(u, j);
  for (auto& [word, c] : fox_by_rules(v, j)) out.push_back({u * word, c});
  return out;
}

/// Evaluates a symbolic element letter by letter with plain matrix products.
template <class R>
PolyMatrix<R> evaluate_symbolic(const SymbolicFox& x, const std::vector<Matrix<R>>& images,
                                const std::vector<std::size_t>& variable_of, std::size_t num_vars) {
  const R& ring = images.at(0).ring();
  const std::size_t n = images[0].rows();
  PolyMatrix<R> total(ring, n, n, num_vars);
  for (const auto& [w, c] : x) {
    Matrix<R> m = Matrix<R>::identity(ring, n);
    Exponent e(num_vars, 0);
    for (const auto& l : w.letters) {
      m = m * (l.exp > 0 ? images[l.gen] : images[l.gen].inverse());
      e[variable_of[l.gen]] += l.exp;
    }
    auto p = PolyMatrix<R>::from_constant(m, e);
    total = c > 0 ? total + p : total - p;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Random inputs

template <class R>
LaurentPoly<R> random_poly(const R& ring, std::size_t nv, std::mt19937_64& rng, int max_terms = 3,
                           int coeff_bound = 3, int exp_bound = 2) {
  std::uniform_int_distribution<int> nterms(0, max_terms), coeff(-coeff_bound, coeff_bound),
      ex(-exp_bound, exp_bound);
  std::vector<typename LaurentPoly<R>::Term> terms;
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    Exponent e(nv);
    for (auto& v : e) v = ex(rng);
    terms.push_back({std::move(e), ring.from_int(coeff(rng))});
  }
  return LaurentPoly<R>::from_terms(ring, nv, std::move(terms));
}

template <class R>
PolyMatrix<R> random_poly_matrix(const R& ring, std::size_t n, std::size_t nv, std::mt19937_64& rng,
                                 int coeff_bound = 3) {
  PolyMatrix<R> m(ring, n, n, nv);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_poly(ring, nv, rng, 3, coeff_bound);
  }
  return m;
}

/// +-t^k times a unit of the ring.
template <class R>
LaurentPoly<R> random_unit(const R& ring, std::size_t nv, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> ex(-3, 3), coin(0, 1), small(1, 4);
  Exponent e(nv);
  for (auto& v : e) v = ex(rng);
  typename R::value_type c = ring.one();
  if constexpr (R::is_field) c = ring.from_int(small(rng));
  if (coin(rng)) c = ring.neg(c);
  return LaurentPoly<R>::monomial(ring, e, c);
}

inline GroupWord random_word(std::size_t generators, std::size_t max_len, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), gen(0, generators - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  GroupWord w;
  const std::size_t k = len(rng);
  for (std::size_t i = 0; i < k; ++i) w.letters.push_back({gen(rng), coin(rng) ? 1 : -1});
  return w;
}

inline Matrix<PrimeField> random_invertible(const PrimeField& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> entry(0, f.modulus() - 1);
  while (true) {
    Matrix<PrimeField> m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
    }
    if (!f.is_zero(m.determinant())) return m;
  }
}

// ---------------------------------------------------------------------------
// Suites

struct OracleReport {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && failures.size() < 20) failures.push_back(what);
  }
};

/// Bareiss and Leibniz against cofactor expansion on random polynomial matrices.
inline OracleReport det_suite(std::size_t count = 200, std::uint64_t seed = 1) {
  OracleReport r{"det"};
  IntegerRing Z;
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = 2 + k % 4;
    auto m = random_poly_matrix(Z, n, 2, rng);
    auto cof = det_cofactor(m);
    r.expect(det_bareiss(m) == cof, "bareiss != cofactor, matrix #" + std::to_string(k));
    r.expect(det_leibniz(m) == cof, "leibniz != cofactor, matrix #" + std::to_string(k));
  }
  return r;
}

template <class R>
void normalize_checks(OracleReport& r, const R& ring, std::size_t count, std::mt19937_64& rng) {
  for (std::size_t k = 0; k < count; ++k) {
    auto p = random_poly(ring, 2, rng, 4);
    if (p.is_zero()) continue;
    auto nf = unit_normalize(p);
    auto again = unit_normalize(nf.canonical);
    const std::string tag = ring.name() + " #" + std::to_string(k) + " " + to_string(p);
    r.expect(again.canonical == nf.canonical, "unit_normalize not idempotent: " + tag);
    r.expect(nf.canonical * LaurentPoly<R>::monomial(ring, nf.unit) == p, "canonical * unit != p: " + tag);
    auto u = random_unit(ring, 2, rng);
    r.expect(unit_normalize(u * p).canonical == nf.canonical, "canonical form not unit invariant: " + tag);
  }
}

/// Idempotence and unit invariance of unit_normalize.
inline OracleReport normalize_suite(std::size_t count = 1000, std::uint64_t seed = 2) {
  OracleReport r{"normalize"};
  std::mt19937_64 rng(seed);
  normalize_checks(r, IntegerRing{}, count, rng);
  normalize_checks(r, RationalRing{}, count / 2, rng);
  normalize_checks(r, PrimeField(5), count / 2, rng);
  return r;
}

/// Reflexivity, symmetry and transitivity of eq_up_to_units on random triples,
/// half of them built as unit multiples of each other.
inline OracleReport units_suite(std::size_t count = 500, std::uint64_t seed = 3) {
  OracleReport r{"units"};
  IntegerRing Z;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coin(0, 1);
  for (std::size_t k = 0; k < count; ++k) {
    auto a = random_poly(Z, 2, rng, 3);
    auto b = coin(rng) ? random_unit(Z, 2, rng) * a : random_poly(Z, 2, rng, 3);
    auto c = coin(rng) ? random_unit(Z, 2, rng) * b : random_poly(Z, 2, rng, 3);
    const std::string tag = " #" + std::to_string(k);
    r.expect(eq_up_to_units(a, a), "not reflexive" + tag);
    r.expect(eq_up_to_units(a, b) == eq_up_to_units(b, a), "not symmetric" + tag);
    if (eq_up_to_units(a, b) && eq_up_to_units(b, c)) r.expect(eq_up_to_units(a, c), "not transitive" + tag);
    if (!a.is_zero()) r.expect(!eq_up_to_units(a.scaled(2), a), "2a ~ a over Z" + tag);
  }
  return r;
}

/// Linking numbers three ways: half the mixed sign sum, each one-sided over
/// sum, and the tabulated value.
inline OracleReport lk_suite() {
  OracleReport r{"lk"};
  for (const auto& f : fixtures()) {
    for (const auto& src : f.diagrams) {
      auto d = src.diagram();
      r.expect(d.component_count() == f.components, f.name + ": component count");
      if (d.component_count() != f.components) continue;
      std::size_t idx = 0;
      for (std::size_t i = 0; i < f.components; ++i) {
        for (std::size_t j = i + 1; j < f.components; ++j, ++idx) {
          const int expected = f.linking.at(idx);
          const std::string tag = f.name + " [" + src.pd_text() + "] lk(" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + ")";
          r.expect(linking_number(d, i, j) == expected, tag + " sign sum");
          r.expect(linking_over_sum(d, i, j) == expected, tag + " over sum");
          r.expect(linking_over_sum(d, j, i) == expected, tag + " under sum");
        }
      }
    }
  }
  return r;
}

template <class R>
void fox_checks(OracleReport& r, const std::string& tag, const WirtingerPresentation& pres,
                const Representation<R>& rep) {
  auto ev = make_evaluator(rep, pres);
  const auto& ring = rep.ring;
  const std::size_t nv = pres.component_count;
  for (std::size_t i = 0; i < pres.relators.size(); ++i) {
    const auto& rel = pres.relators[i];
    PolyMatrix<R> sum(ring, rep.n, rep.n, nv);
    for (std::size_t j = 0; j < pres.generator_count; ++j) {
      auto dj = ev.fox_derivative(rel, j);
      r.expect(dj == evaluate_symbolic(fox_by_rules(rel, j), rep.images, pres.component_of, nv),
               tag + ": fold and rule recursion differ on relator " + std::to_string(i + 1));
      sum = sum + dj * (ev.letter({j, 1}).to_poly() - PolyMatrix<R>::identity(ring, rep.n, nv));
    }
    r.expect(sum.is_zero(), tag + ": fundamental identity fails on relator " + std::to_string(i + 1));
  }
}

/// Fundamental identity and rule recursion on every fixture diagram with the
/// trivial rep and searched GL(2,F5) reps, plus the product rule on random
/// word pairs in a free group.
inline OracleReport fox_suite(std::size_t word_pairs = 1000, std::uint64_t seed = 4) {
  OracleReport r{"fox"};
  const PrimeField F5(5);
  for (const auto& f : fixtures()) {
    for (const auto& src : f.diagrams) {
      auto d = src.diagram();
      auto pres = wirtinger(d);
      const std::string tag = f.name + " [" + src.pd_text() + "]";
      fox_checks(r, tag + " trivial/Z", pres, trivial_rep(pres, IntegerRing{}));
      SearchConstraints sc;
      sc.nonabelian = true;
      auto reps = search_reps(pres, 2, F5, sc, 1);
      if (reps.empty()) reps = search_reps(pres, 2, F5, {}, 1);
      for (const auto& rep : reps) fox_checks(r, tag + " GL2F5", pres, rep);
    }
  }

  std::mt19937_64 rng(seed);
  const std::size_t gens = 3, nv = 2;
  std::vector<Matrix<PrimeField>> images;
  for (std::size_t g = 0; g < gens; ++g) images.push_back(random_invertible(PrimeField(7), 2, rng));
  TensorEvaluator<PrimeField> ev(images, {0, 1, 1}, nv);
  for (std::size_t k = 0; k < word_pairs; ++k) {
    auto u = random_word(gens, 8, rng);
    auto v = random_word(gens, 8, rng);
    for (std::size_t j = 0; j < gens; ++j) {
      auto lhs = ev.fox_derivative(u * v, j);
      auto rhs = ev.fox_derivative(u, j) + ev.evaluate_word(u) * ev.fox_derivative(v, j);
      r.expect(lhs == rhs, "product rule fails on pair #" + std::to_string(k) + " for x" + std::to_string(j + 1));
    }
  }
  return r;
}

}  // namespace torres
