#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "torres/diagram.hpp"
#include "torres/fox.hpp"
#include "torres/matrix.hpp"

namespace torres {

/// Generator -> invertible n x n matrix over R.
template <class R>
struct Representation {
  R ring;
  std::size_t n = 1;
  std::vector<Matrix<R>> images;

  std::size_t generator_count() const { return images.size(); }
};

template <class R>
struct ValidationReport {
  std::vector<std::size_t> violated_relators;
  std::vector<std::size_t> singular_generators;

  bool ok() const { return violated_relators.empty() && singular_generators.empty(); }
};

/// Image of a word under the constant representation (no t-variables).
template <class R>
Matrix<R> evaluate_constant(const Representation<R>& rep, const GroupWord& w) {
  Matrix<R> acc = Matrix<R>::identity(rep.ring, rep.n);
  for (const auto& l : w.letters) {
    if (l.gen >= rep.images.size()) throw InputError("generator index out of range");
    acc = acc * (l.exp > 0 ? rep.images[l.gen] : rep.images[l.gen].inverse());
  }
  return acc;
}

template <class R>
ValidationReport<R> validate(const Representation<R>& rep, const WirtingerPresentation& pres) {
  if (rep.images.size() != pres.generator_count) {
    throw InputError("representation has " + std::to_string(rep.images.size()) +
                     " images, presentation has " + std::to_string(pres.generator_count) +
                     " generators");
  }
  ValidationReport<R> report;
  std::vector<bool> singular(rep.images.size(), false);
  for (std::size_t g = 0; g < rep.images.size(); ++g) {
    const auto& m = rep.images[g];
    if (m.rows() != rep.n || m.cols() != rep.n) throw InputError("image has the wrong size");
    if (!rep.ring.is_unit(m.determinant())) {
      singular[g] = true;
      report.singular_generators.push_back(g);
    }
  }
  for (std::size_t i = 0; i < pres.relators.size(); ++i) {
    const auto& r = pres.relators[i];
    bool blocked = false;
    for (const auto& l : r.letters) blocked |= singular.at(l.gen);
    if (blocked || !evaluate_constant(rep, r).is_identity()) report.violated_relators.push_back(i);
  }
  return report;
}

template <class R>
Representation<R> trivial_rep(const WirtingerPresentation& pres, const R& ring) {
  return {ring, 1, std::vector<Matrix<R>>(pres.generator_count, Matrix<R>::identity(ring, 1))};
}

template <class R>
TensorEvaluator<R> make_evaluator(const Representation<R>& rep, const WirtingerPresentation& pres) {
  if (rep.images.size() != pres.generator_count) throw InputError("representation/presentation size mismatch");
  return TensorEvaluator<R>(rep.images, pres.component_of, pres.component_count);
}

/// rho on pi_1(X_L) obtained from rho' on pi_1(X_L') through the deletion map.
template <class R>
struct InducedPair {
  Representation<R> rho_L;
  Representation<R> rho_Lp;
  DeletionResult deletion;
};

template <class R>
InducedPair<R> induce(const WirtingerPresentation& pres_L, const DeletionResult& deletion,
                      const Representation<R>& rho_Lp) {
  auto pres_Lp = wirtinger(deletion.sub_diagram);
  if (!validate(rho_Lp, pres_Lp).ok()) {
    throw InputError("representation does not satisfy the sublink relations");
  }
  Representation<R> rho_L{rho_Lp.ring, rho_Lp.n, {}};
  rho_L.images.reserve(pres_L.generator_count);
  for (std::size_t g = 0; g < pres_L.generator_count; ++g) {
    const auto& target = deletion.arc_map.at(g);
    rho_L.images.push_back(target ? rho_Lp.images.at(*target) : Matrix<R>::identity(rho_Lp.ring, rho_Lp.n));
  }
  if (!validate(rho_L, pres_L).ok()) {
    throw InternalError("induced representation violates the link relations");
  }
  return {std::move(rho_L), rho_Lp, deletion};
}

/// Inverse of induce: a representation of L that is trivial on the deleted
/// component, read as a representation of L'.
template <class R>
Representation<R> restrict_to_sublink(const Representation<R>& rho_L, const DeletionResult& deletion) {
  const std::size_t arcs = deletion.sub_diagram.arc_count();
  std::vector<std::optional<Matrix<R>>> images(arcs);
  for (std::size_t g = 0; g < rho_L.images.size(); ++g) {
    const auto& target = deletion.arc_map.at(g);
    const auto& m = rho_L.images[g];
    if (!target) {
      if (!m.is_identity()) throw InputError("representation does not kill the deleted component");
      continue;
    }
    if (images[*target] && !(*images[*target] == m)) {
      throw InputError("representation differs on arcs merged by the deletion");
    }
    images[*target] = m;
  }
  Representation<R> out{rho_L.ring, rho_L.n, {}};
  for (auto& m : images) {
    if (!m) throw InternalError("sublink arc without a preimage");
    out.images.push_back(std::move(*m));
  }
  return out;
}

/// rho'([K_comp]): the longitude of the deleted component evaluated through rho_L.
template <class R>
Matrix<R> longitude_image(const InducedPair<R>& pair, const LinkDiagram& d, std::size_t comp,
                          bool framing_corrected = false, std::optional<std::size_t> start = {}) {
  if (pair.deletion.deleted != comp) throw InputError("pair was induced for a different component");
  return evaluate_constant(pair.rho_L, longitude_word(d, comp, framing_corrected, start));
}

/// True iff all images commute pairwise.
template <class R>
bool is_abelian(const Representation<R>& rep) {
  for (std::size_t i = 0; i < rep.images.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.images.size(); ++j) {
      if (!(rep.images[i] * rep.images[j] == rep.images[j] * rep.images[i])) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Representation search over prime fields

struct SearchConstraints {
  std::optional<std::size_t> kill_component;
  bool nonabelian = false;
  bool special_linear = false;
};

namespace detail {

/// Fixed-capacity n x n matrix over F_p, n <= 3.
struct SmallMat {
  std::array<std::uint32_t, 9> a{};
  friend bool operator==(const SmallMat&, const SmallMat&) = default;
};

class SmallOps {
 public:
  SmallOps(std::size_t n, std::uint32_t p) : n_(n), p_(p) {}

  SmallMat identity() const {
    SmallMat m;
    for (std::size_t i = 0; i < n_; ++i) m.a[i * 3 + i] = 1;
    return m;
  }

  SmallMat mul(const SmallMat& x, const SmallMat& y) const {
    SmallMat m;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        std::uint64_t s = 0;
        for (std::size_t k = 0; k < n_; ++k) s += std::uint64_t(x.a[i * 3 + k]) * y.a[k * 3 + j];
        m.a[i * 3 + j] = static_cast<std::uint32_t>(s % p_);
      }
    }
    return m;
  }

  std::uint32_t det(const SmallMat& m) const {
    const auto& a = m.a;
    std::int64_t p = p_;
    auto md = [p](std::int64_t v) { return ((v % p) + p) % p; };
    if (n_ == 1) return a[0];
    if (n_ == 2) return static_cast<std::uint32_t>(md(std::int64_t(a[0]) * a[4] - std::int64_t(a[1]) * a[3]));
    std::int64_t d = md(std::int64_t(a[0]) * md(std::int64_t(a[4]) * a[8] - std::int64_t(a[5]) * a[7]));
    d -= md(std::int64_t(a[1]) * md(std::int64_t(a[3]) * a[8] - std::int64_t(a[5]) * a[6]));
    d += md(std::int64_t(a[2]) * md(std::int64_t(a[3]) * a[7] - std::int64_t(a[4]) * a[6]));
    return static_cast<std::uint32_t>(md(d));
  }

  SmallMat inverse(const SmallMat& m) const {
    PrimeField f(p_);
    Matrix<PrimeField> big(f, n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) big(i, j) = m.a[i * 3 + j];
    }
    auto inv = big.inverse();
    SmallMat r;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) r.a[i * 3 + j] = inv(i, j);
    }
    return r;
  }

  /// All invertible matrices (determinant 1 when special), entries in lexicographic order.
  std::vector<SmallMat> enumerate(bool special) const {
    std::vector<SmallMat> out;
    const std::size_t cells = n_ * n_;
    std::vector<std::uint32_t> digits(cells, 0);
    while (true) {
      SmallMat m;
      for (std::size_t k = 0; k < cells; ++k) m.a[(k / n_) * 3 + k % n_] = digits[k];
      std::uint32_t d = det(m);
      if (special ? d == 1 : d != 0) out.push_back(m);
      std::size_t k = cells;
      while (k > 0 && ++digits[k - 1] == p_) digits[--k] = 0;
      if (k == 0) break;
    }
    return out;
  }

  Matrix<PrimeField> to_matrix(const SmallMat& m) const {
    Matrix<PrimeField> r(PrimeField(p_), n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) r(i, j) = m.a[i * 3 + j];
    }
    return r;
  }

 private:
  std::size_t n_;
  std::uint32_t p_;
};

struct ConjugationRelation {
  std::size_t out, over, in;
  int sign;
};

class RepSearch {
 public:
  RepSearch(const WirtingerPresentation& pres, std::size_t n, const PrimeField& field,
            const SearchConstraints& constraints, std::size_t limit)
      : pres_(pres), n_(n), field_(field), constraints_(constraints), limit_(limit),
        ops_(n, field.modulus()) {
    if (n < 1 || n > 3) throw InputError("representation search supports n in {1,2,3}");
    if (constraints.kill_component && *constraints.kill_component >= pres.component_count) {
      throw InputError("kill_component out of range");
    }
    for (const auto& r : pres.relators) {
      const auto& l = r.letters;
      if (l.size() != 4 || l[0].exp != 1 || l[2].exp != -1 || l[1].gen != l[3].gen ||
          l[1].exp != -l[3].exp) {
        throw InputError("search needs Wirtinger relators of conjugation shape");
      }
      relations_.push_back({l[0].gen, l[1].gen, l[2].gen, l[1].exp});
    }
    candidates_ = ops_.enumerate(constraints.special_linear);
  }

  std::vector<Representation<PrimeField>> run() {
    State s(pres_.generator_count);
    if (constraints_.kill_component) {
      for (std::size_t g = 0; g < pres_.generator_count; ++g) {
        if (pres_.component_of[g] == *constraints_.kill_component) s[g] = Entry{ops_.identity(), ops_.identity()};
      }
      if (!propagate(s)) return {};
    }
    dfs(std::move(s), 0);
    return std::move(results_);
  }

 private:
  struct Entry {
    SmallMat m, inv;
  };
  using State = std::vector<std::optional<Entry>>;

  bool done() const { return limit_ != 0 && results_.size() >= limit_; }

  bool assign(State& s, std::size_t g, const SmallMat& m) const {
    if (s[g]) return s[g]->m == m;
    s[g] = Entry{m, ops_.inverse(m)};
    return true;
  }

  /// Closes the partial assignment under the crossing relations out = over^s in over^-s.
  bool propagate(State& s) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& r : relations_) {
        if (!s[r.over]) continue;
        const SmallMat& o = r.sign > 0 ? s[r.over]->m : s[r.over]->inv;
        const SmallMat& oi = r.sign > 0 ? s[r.over]->inv : s[r.over]->m;
        if (s[r.in]) {
          SmallMat out = ops_.mul(ops_.mul(o, s[r.in]->m), oi);
          if (s[r.out]) {
            if (!(s[r.out]->m == out)) return false;
          } else {
            s[r.out] = Entry{out, ops_.inverse(out)};
            changed = true;
          }
        } else if (s[r.out]) {
          SmallMat in = ops_.mul(ops_.mul(oi, s[r.out]->m), o);
          s[r.in] = Entry{in, ops_.inverse(in)};
          changed = true;
        }
      }
    }
    return true;
  }

  void dfs(State s, std::size_t comp) {
    if (done()) return;
    // Seed one arc per component; skip seeds already forced by propagation.
    while (comp < pres_.component_count && s[pres_.meridian_of[comp]]) ++comp;
    std::optional<std::size_t> branch;
    if (comp < pres_.component_count) {
      branch = pres_.meridian_of[comp];
    } else {
      for (std::size_t g = 0; g < s.size(); ++g) {
        if (!s[g]) {
          branch = g;
          break;
        }
      }
    }
    if (!branch) {
      emit(s);
      return;
    }
    for (const auto& c : candidates_) {
      State next = s;
      if (assign(next, *branch, c) && propagate(next)) dfs(std::move(next), comp);
      if (done()) return;
    }
  }

  void emit(const State& s) {
    Representation<PrimeField> rep{field_, n_, {}};
    for (const auto& e : s) rep.images.push_back(ops_.to_matrix(e->m));
    if (constraints_.nonabelian && is_abelian(rep)) return;
    results_.push_back(std::move(rep));
  }

  const WirtingerPresentation& pres_;
  std::size_t n_;
  PrimeField field_;
  SearchConstraints constraints_;
  std::size_t limit_;
  SmallOps ops_;
  std::vector<ConjugationRelation> relations_;
  std::vector<SmallMat> candidates_;
  std::vector<Representation<PrimeField>> results_;
};

}  // namespace detail

/// Deterministic backtracking enumeration of representations into GL(n, F_p)
/// (SL(n, F_p) when special_linear). One seed arc per component is chosen,
/// and crossing relations force the remaining arcs. limit == 0 means no limit.
inline std::vector<Representation<PrimeField>> search_reps(const WirtingerPresentation& pres,
                                                           std::size_t n, const PrimeField& field,
                                                           const SearchConstraints& constraints,
                                                           std::size_t limit = 0) {
  return detail::RepSearch(pres, n, field, constraints, limit).run();
}

}  // namespace torres
