#pragma once

// Fox free differential calculus, evaluated directly through a tensor
// representation g -> rho(g) * t^{gamma(g)}. Free-group-ring elements are
// never formed symbolically.

#include <optional>
#include <utility>
#include <vector>

#include "torres/diagram.hpp"
#include "torres/matrix.hpp"

namespace torres {

/// A constant matrix times a monomial: the image of a group element.
template <class R>
struct MonoMatrix {
  Matrix<R> mat;
  Exponent exp;

  friend MonoMatrix operator*(const MonoMatrix& a, const MonoMatrix& b) {
    return {a.mat * b.mat, a.exp + b.exp};
  }

  bool is_identity() const { return is_zero_exponent(exp) && mat.is_identity(); }

  PolyMatrix<R> to_poly() const { return PolyMatrix<R>::from_constant(mat, exp); }
};

template <class R>
class TensorEvaluator {
 public:
  /// images[g] = rho(x_g); variable_of[g] = index of t_{gamma(x_g)}.
  TensorEvaluator(std::vector<Matrix<R>> images, std::vector<std::size_t> variable_of,
                  std::size_t num_vars)
      : images_(std::move(images)), variable_of_(std::move(variable_of)), num_vars_(num_vars) {
    if (images_.empty()) throw InputError("evaluator needs at least one generator");
    if (images_.size() != variable_of_.size()) throw InputError("evaluator size mismatch");
    n_ = images_[0].rows();
    for (std::size_t g = 0; g < images_.size(); ++g) {
      if (images_[g].rows() != n_ || images_[g].cols() != n_) {
        throw InputError("representation images have inconsistent sizes");
      }
      if (variable_of_[g] >= num_vars_) throw InputError("variable index out of range");
      inverses_.push_back(images_[g].inverse());
    }
  }

  const R& ring() const { return images_[0].ring(); }
  std::size_t n() const { return n_; }
  std::size_t num_vars() const { return num_vars_; }
  std::size_t generator_count() const { return images_.size(); }
  std::size_t variable_of(std::size_t g) const { return variable_of_.at(g); }
  const Matrix<R>& image(std::size_t g) const { return images_.at(g); }

  MonoMatrix<R> identity() const {
    return {Matrix<R>::identity(ring(), n_), Exponent(num_vars_, 0)};
  }

  MonoMatrix<R> letter(const Letter& l) const {
    check(l.gen);
    Exponent e(num_vars_, 0);
    e[variable_of_[l.gen]] = l.exp;
    return {l.exp > 0 ? images_[l.gen] : inverses_[l.gen], std::move(e)};
  }

  MonoMatrix<R> evaluate(const GroupWord& w) const {
    MonoMatrix<R> acc = identity();
    for (const auto& l : w.letters) acc = acc * letter(l);
    return acc;
  }

  PolyMatrix<R> evaluate_word(const GroupWord& w) const { return evaluate(w).to_poly(); }

  /// d w / d x_j evaluated through the representation. Left-to-right fold:
  /// a letter x_j contributes +Phi(prefix), a letter x_j^-1 contributes
  /// -Phi(prefix) * Phi(x_j)^-1.
  PolyMatrix<R> fox_derivative(const GroupWord& w, std::size_t j) const {
    check(j);
    using Term = typename LaurentPoly<R>::Term;
    const R& r = ring();
    std::vector<std::vector<Term>> acc(n_ * n_);
    MonoMatrix<R> prefix = identity();
    for (const auto& l : w.letters) {
      MonoMatrix<R> step = letter(l);
      if (l.gen == j) {
        MonoMatrix<R> contrib = l.exp > 0 ? prefix : prefix * step;
        for (std::size_t a = 0; a < n_; ++a) {
          for (std::size_t b = 0; b < n_; ++b) {
            const auto& v = contrib.mat(a, b);
            if (r.is_zero(v)) continue;
            acc[a * n_ + b].push_back({contrib.exp, l.exp > 0 ? v : r.neg(v)});
          }
        }
      }
      prefix = prefix * step;
    }
    PolyMatrix<R> out(r, n_, n_, num_vars_);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        out(a, b) = LaurentPoly<R>::from_terms(r, num_vars_, std::move(acc[a * n_ + b]));
      }
    }
    return out;
  }

 private:
  void check(std::size_t g) const {
    if (g >= images_.size()) throw InputError("generator index out of range");
  }

  std::vector<Matrix<R>> images_;
  std::vector<Matrix<R>> inverses_;
  std::vector<std::size_t> variable_of_;
  std::size_t num_vars_;
  std::size_t n_ = 0;
};

/// Block matrix of Fox derivatives: block (i, j) = d r_i / d x_j.
template <class R>
struct AlexanderMatrix {
  std::size_t relator_count = 0;
  std::size_t generator_count = 0;
  std::size_t block_size = 0;
  std::size_t num_vars = 0;
  std::vector<PolyMatrix<R>> blocks;  // row-major

  const PolyMatrix<R>& block(std::size_t i, std::size_t j) const {
    return blocks.at(i * generator_count + j);
  }

  /// Scalar matrix with one relator row-block and one generator column-block removed.
  PolyMatrix<R> assemble(std::optional<std::size_t> skip_relator,
                         std::optional<std::size_t> skip_generator, const R& ring) const {
    std::size_t rows = relator_count - (skip_relator ? 1 : 0);
    std::size_t cols = generator_count - (skip_generator ? 1 : 0);
    const std::size_t n = block_size;
    PolyMatrix<R> m(ring, rows * n, cols * n, num_vars);
    for (std::size_t i = 0, bi = 0; i < relator_count; ++i) {
      if (skip_relator && *skip_relator == i) continue;
      for (std::size_t j = 0, bj = 0; j < generator_count; ++j) {
        if (skip_generator && *skip_generator == j) continue;
        const auto& blk = block(i, j);
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) m(bi * n + a, bj * n + b) = blk(a, b);
        }
        ++bj;
      }
      ++bi;
    }
    return m;
  }
};

template <class R>
AlexanderMatrix<R> alexander_matrix(const WirtingerPresentation& pres, const TensorEvaluator<R>& ev) {
  if (pres.generator_count != ev.generator_count()) {
    throw InputError("evaluator has " + std::to_string(ev.generator_count()) +
                     " generators, presentation has " + std::to_string(pres.generator_count));
  }
  AlexanderMatrix<R> m;
  m.relator_count = pres.relators.size();
  m.generator_count = pres.generator_count;
  m.block_size = ev.n();
  m.num_vars = ev.num_vars();
  m.blocks.reserve(m.relator_count * m.generator_count);
  for (const auto& r : pres.relators) {
    for (std::size_t j = 0; j < pres.generator_count; ++j) m.blocks.push_back(ev.fox_derivative(r, j));
  }
  return m;
}

}  // namespace torres
