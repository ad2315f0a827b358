#include <catch_amalgamated.hpp>

#include <random>

#include "torres/oracle.hpp"
#include "torres/torres.hpp"

using namespace torres;

namespace {

const IntegerRing Z;

LaurentPoly<IntegerRing> Pz(std::size_t nv, const char* text) { return parse_poly(Z, nv, text); }

/// Trivial n=1 evaluator with the given generator -> variable map.
TensorEvaluator<IntegerRing> trivial_evaluator(std::vector<std::size_t> variable_of, std::size_t nv) {
  std::vector<Matrix<IntegerRing>> images(variable_of.size(), Matrix<IntegerRing>::identity(Z, 1));
  return TensorEvaluator<IntegerRing>(images, std::move(variable_of), nv);
}

GroupWord word(std::initializer_list<std::pair<std::size_t, int>> letters) {
  GroupWord w;
  for (auto [g, e] : letters) w.letters.push_back({g, e});
  return w;
}

}  // namespace

TEST_CASE("evaluate_word") {
  auto ev = trivial_evaluator({0, 1}, 2);
  CHECK(ev.evaluate_word(GroupWord{}) == PolyMatrix<IntegerRing>::identity(Z, 1, 2));
  CHECK(ev.evaluate_word(word({{0, 1}, {1, 1}}))(0, 0) == Pz(2, "t1*t2"));
  CHECK(ev.evaluate_word(word({{0, -1}, {1, 1}, {1, 1}}))(0, 0) == Pz(2, "t1^-1*t2^2"));
  CHECK_THROWS_AS(ev.evaluate_word(word({{2, 1}})), InputError);

  std::mt19937_64 rng(31);
  PrimeField f(5);
  std::vector<Matrix<PrimeField>> images;
  for (int g = 0; g < 3; ++g) images.push_back(random_invertible(f, 2, rng));
  TensorEvaluator<PrimeField> ev5(images, {0, 0, 1}, 2);
  for (int k = 0; k < 100; ++k) {
    auto w = random_word(3, 10, rng);
    CHECK(ev5.evaluate(w * w.inverse()).is_identity());
  }
}

TEST_CASE("fox derivative rules") {
  auto ev = trivial_evaluator({0}, 1);
  CHECK(ev.fox_derivative(word({{0, 1}, {0, 1}}), 0)(0, 0) == Pz(1, "1 + t1"));
  CHECK(ev.fox_derivative(word({{0, -1}}), 0)(0, 0) == Pz(1, "-t1^-1"));
  CHECK(ev.fox_derivative(GroupWord{}, 0).is_zero());
  CHECK_THROWS_AS(ev.fox_derivative(GroupWord{}, 1), InputError);

  // Trefoil relator x y x y^-1 x^-1 y^-1 with x, y on the same component.
  auto tre = trivial_evaluator({0, 0}, 1);
  auto r = word({{0, 1}, {1, 1}, {0, 1}, {1, -1}, {0, -1}, {1, -1}});
  std::vector<Matrix<IntegerRing>> ones(2, Matrix<IntegerRing>::identity(Z, 1));
  auto rule = evaluate_symbolic<IntegerRing>(fox_by_rules(r, 0), ones, {0, 0}, 1);
  CHECK(rule(0, 0) == Pz(1, "t1^2 - t1 + 1"));
  CHECK(tre.fox_derivative(r, 0)(0, 0) == Pz(1, "t1^2 - t1 + 1"));
  CHECK(tre.fox_derivative(r, 1)(0, 0) == Pz(1, "t1 - t1^2 - 1"));
}

TEST_CASE("product rule and inverse law on random words") {
  std::mt19937_64 rng(32);
  PrimeField f(7);
  std::vector<Matrix<PrimeField>> images;
  for (int g = 0; g < 4; ++g) images.push_back(random_invertible(f, 2, rng));
  TensorEvaluator<PrimeField> ev(images, {0, 1, 1, 2}, 3);
  for (int k = 0; k < 300; ++k) {
    auto u = random_word(4, 9, rng);
    auto v = random_word(4, 9, rng);
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(ev.fox_derivative(u * v, j) == ev.fox_derivative(u, j) + ev.evaluate_word(u) * ev.fox_derivative(v, j));
      CHECK(ev.fox_derivative(u * u.inverse(), j).is_zero());
      CHECK(ev.fox_derivative(u, j) == evaluate_symbolic<PrimeField>(fox_by_rules(u, j), images, {0, 1, 1, 2}, 3));
    }
  }
}

TEST_CASE("alexander matrices") {
  auto unknot = wirtinger(diagram_from_pd(""));
  auto a0 = alexander_matrix(unknot, make_evaluator(trivial_rep(unknot, Z), unknot));
  CHECK(a0.relator_count == 0);
  CHECK(a0.generator_count == 1);
  CHECK(a0.blocks.empty());

  // Hopf: each relator is a commutator of the two meridians, so its row is
  // (1 - t2, t1 - 1) or (t2 - 1, 1 - t1).
  auto hopf = wirtinger(diagram_from_pd("X[1,3,2,4] X[3,1,4,2]"));
  auto a = alexander_matrix(hopf, make_evaluator(trivial_rep(hopf, Z), hopf));
  REQUIRE(a.relator_count == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    auto r0 = a.block(i, 0)(0, 0), r1 = a.block(i, 1)(0, 0);
    bool first = r0 == Pz(2, "1 - t2") && r1 == Pz(2, "t1 - 1");
    bool second = r0 == Pz(2, "t2 - 1") && r1 == Pz(2, "1 - t1");
    CHECK((first || second));
  }

  auto trefoil = wirtinger(diagram_from_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]"));
  auto rep = trivial_rep(trefoil, Z);
  auto at = alexander_matrix(trefoil, make_evaluator(rep, trefoil));
  CHECK(at.relator_count == 3);
  CHECK(at.generator_count == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(at.block(i, j) ==
            evaluate_symbolic(fox_by_rules(trefoil.relators[i], j), rep.images, trefoil.component_of, 1));
    }
  }
  auto minor = at.assemble(2, 0, Z);
  CHECK(minor.rows() == 2);
  CHECK(minor.cols() == 2);

  auto wrong = trivial_evaluator({0, 0, 0, 0}, 1);
  CHECK_THROWS_AS(alexander_matrix(trefoil, wrong), InputError);
}

TEST_CASE("evaluator construction errors") {
  std::vector<Matrix<IntegerRing>> images{Matrix<IntegerRing>::identity(Z, 1), Matrix<IntegerRing>::identity(Z, 2)};
  CHECK_THROWS_AS(TensorEvaluator<IntegerRing>(images, {0, 0}, 1), InputError);
  CHECK_THROWS_AS(TensorEvaluator<IntegerRing>({Matrix<IntegerRing>::identity(Z, 1)}, {1}, 1), InputError);
  CHECK_THROWS_AS(TensorEvaluator<IntegerRing>({Matrix<IntegerRing>::from_rows(Z, {{2}})}, {0}, 1), InputError);
}

TEST_CASE("fundamental identity on every fixture") {
  auto r = fox_suite(200, 33);
  for (const auto& f : r.failures) UNSCOPED_INFO(f);
  CHECK(r.ok());
  CHECK(r.checks > 1000);
}
