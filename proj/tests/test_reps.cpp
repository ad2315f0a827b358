#include <catch_amalgamated.hpp>

#include "torres/corpus.hpp"
#include "torres/torres.hpp"

using namespace torres;

namespace {

const PrimeField F5(5);
const char* kTrefoil = "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]";

Matrix<PrimeField> M5(std::vector<std::vector<std::uint32_t>> rows) { return Matrix<PrimeField>::from_rows(F5, rows); }

std::uint32_t trace(const Matrix<PrimeField>& m) {
  std::uint32_t t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t = m.ring().add(t, m(i, i));
  return t;
}

}  // namespace

TEST_CASE("trivial representations validate") {
  for (const auto& f : fixtures()) {
    auto pres = wirtinger(f.diagrams[0].diagram());
    CHECK(validate(trivial_rep(pres, IntegerRing{}), pres).ok());
    CHECK(validate(trivial_rep(pres, PrimeField(2)), pres).ok());
  }
}

TEST_CASE("parabolic trefoil representation") {
  auto pres = wirtinger(diagram_from_pd(kTrefoil));
  const auto a = M5({{1, 1}, {0, 1}});
  const auto b = M5({{1, 0}, {4, 1}});
  // The third arc is forced by the relators; try both conjugates.
  bool found = false;
  for (const auto& c : {a * b * a.inverse(), b * a * b.inverse(), a.inverse() * b * a, b.inverse() * a * b}) {
    Representation<PrimeField> rep{F5, 2, {a, b, c}};
    found |= validate(rep, pres).ok();
  }
  CHECK(found);

  Representation<PrimeField> broken{F5, 2, {a, M5({{2, 2}, {0, 2}}), a}};
  auto report = validate(broken, pres);
  CHECK_FALSE(report.ok());
  CHECK_FALSE(report.violated_relators.empty());

  Representation<PrimeField> singular{F5, 2, {a, M5({{1, 1}, {1, 1}}), a}};
  CHECK(validate(singular, pres).singular_generators == std::vector<std::size_t>{1});

  CHECK_THROWS_AS(validate(Representation<PrimeField>{F5, 2, {a, b}}, pres), InputError);
}

TEST_CASE("search finds nonabelian special-linear trefoil representations") {
  auto pres = wirtinger(diagram_from_pd(kTrefoil));
  SearchConstraints sc;
  sc.nonabelian = true;
  sc.special_linear = true;
  auto reps = search_reps(pres, 2, F5, sc);
  REQUIRE_FALSE(reps.empty());
  bool parabolic = false;
  for (const auto& r : reps) {
    CHECK(validate(r, pres).ok());
    CHECK_FALSE(is_abelian(r));
    for (const auto& m : r.images) CHECK(m.determinant() == 1);
    parabolic |= trace(r.images[0]) == 2 && !r.images[0].is_identity();
  }
  CHECK(parabolic);
}

TEST_CASE("search counts on the unknot") {
  auto pres = wirtinger(diagram_from_pd(""));
  auto gl = search_reps(pres, 2, PrimeField(3), {});
  CHECK(gl.size() == 48);
  CHECK(gl.front().images[0] == Matrix<PrimeField>::from_rows(PrimeField(3), {{0, 1}, {1, 0}}));
  SearchConstraints sl;
  sl.special_linear = true;
  CHECK(search_reps(pres, 2, PrimeField(3), sl).size() == 24);
  CHECK(search_reps(pres, 1, F5, {}).size() == 4);
  CHECK(search_reps(pres, 3, PrimeField(2), {}).size() == 168);
  CHECK(search_reps(pres, 2, PrimeField(3), {}, 5).size() == 5);
}

TEST_CASE("search is deterministic and its results validate") {
  for (const char* name : {"hopf", "whitehead", "trefoil_split_unknot"}) {
    auto pres = wirtinger(fixture(name).diagrams[0].diagram());
    auto first = search_reps(pres, 2, F5, {}, 25);
    auto second = search_reps(pres, 2, F5, {}, 25);
    REQUIRE(first.size() == second.size());
    for (std::size_t k = 0; k < first.size(); ++k) {
      CHECK(first[k].images == second[k].images);
      CHECK(validate(first[k], pres).ok());
    }
  }
}

TEST_CASE("killing every component leaves only the trivial assignment") {
  auto pres = wirtinger(diagram_from_pd(kTrefoil));
  SearchConstraints sc;
  sc.kill_component = 0;
  auto reps = search_reps(pres, 2, F5, sc);
  REQUIRE(reps.size() == 1);
  for (const auto& m : reps[0].images) CHECK(m.is_identity());
}

TEST_CASE("search parameter errors") {
  auto pres = wirtinger(diagram_from_pd(kTrefoil));
  CHECK_THROWS_AS(search_reps(pres, 4, F5, {}), InputError);
  CHECK_THROWS_AS(search_reps(pres, 0, F5, {}), InputError);
  SearchConstraints sc;
  sc.kill_component = 1;
  CHECK_THROWS_AS(search_reps(pres, 2, F5, sc), InputError);
}

TEST_CASE("induce and restrict") {
  auto hopf = diagram_from_pd("X[1,3,2,4] X[3,1,4,2]");
  auto del = delete_component(hopf, 1);
  auto pair = induce(wirtinger(hopf), del, trivial_rep(wirtinger(del.sub_diagram), IntegerRing{}));
  CHECK(pair.rho_L.images.size() == 2);
  CHECK(pair.rho_L.images[1].is_identity());
  CHECK(longitude_image(pair, hopf, 1).is_identity());

  // Whitehead: the sublink is an unknot, any invertible image works.
  auto wh = fixture("whitehead").diagrams[0].diagram();
  auto wdel = delete_component(wh, 1);
  auto wpres = wirtinger(wdel.sub_diagram);
  const auto a = M5({{1, 1}, {0, 1}});
  Representation<PrimeField> unknot_rep{F5, 2, std::vector<Matrix<PrimeField>>(wpres.generator_count, a)};
  REQUIRE(validate(unknot_rep, wpres).ok());
  auto wpair = induce(wirtinger(wh), wdel, unknot_rep);
  CHECK(validate(wpair.rho_L, wirtinger(wh)).ok());

  // Split trefoil: the circle contributes an identity image and nothing else.
  auto split = diagram_from_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2] O[7]");
  auto sdel = delete_component(split, 1);
  SearchConstraints sc;
  sc.nonabelian = true;
  auto treps = search_reps(wirtinger(sdel.sub_diagram), 2, F5, sc, 1);
  REQUIRE(treps.size() == 1);
  auto spair = induce(wirtinger(split), sdel, treps[0]);
  for (std::size_t g = 0; g < 3; ++g) CHECK(spair.rho_L.images[g] == treps[0].images[g]);
  CHECK(spair.rho_L.images[3].is_identity());
  CHECK(restrict_to_sublink(spair.rho_L, sdel).images == treps[0].images);

  Representation<PrimeField> bad{F5, 2, {a, a, M5({{2, 0}, {0, 1}})}};
  CHECK_THROWS_AS(induce(wirtinger(split), sdel, bad), InputError);
  Representation<PrimeField> not_killed = spair.rho_L;
  not_killed.images[3] = a;
  CHECK_THROWS_AS(restrict_to_sublink(not_killed, sdel), InputError);
}

TEST_CASE("representations of the sublink satisfy the link relators") {
  for (const auto& f : fixtures()) {
    if (f.components < 2) continue;
    for (const auto& src : f.diagrams) {
      auto d = src.diagram();
      auto pres = wirtinger(d);
      for (std::size_t mu = 0; mu < d.component_count(); ++mu) {
        auto del = delete_component(d, mu);
        auto sub = wirtinger(del.sub_diagram);
        for (const auto& rep : search_reps(sub, 2, F5, {}, 6)) {
          auto pair = induce(pres, del, rep);
          CHECK(validate(pair.rho_L, pres).ok());
          CHECK(restrict_to_sublink(pair.rho_L, del).images == rep.images);
        }
      }
    }
  }
}

TEST_CASE("searching L with a killed component agrees with searching L'") {
  for (const char* name : {"hopf", "whitehead", "borromean", "chain_3"}) {
    auto d = fixture(name).diagrams[0].diagram();
    const std::size_t mu = d.component_count() - 1;
    auto del = delete_component(d, mu);
    SearchConstraints sc;
    sc.kill_component = mu;
    auto on_L = search_reps(wirtinger(d), 2, PrimeField(3), sc);
    auto on_Lp = search_reps(wirtinger(del.sub_diagram), 2, PrimeField(3), {});
    CHECK(on_L.size() == on_Lp.size());
    for (const auto& r : on_L) CHECK(validate(restrict_to_sublink(r, del), wirtinger(del.sub_diagram)).ok());
  }
}

TEST_CASE("longitudes commute with their meridian") {
  for (const auto& f : fixtures()) {
    for (const auto& src : f.diagrams) {
      auto d = src.diagram();
      auto pres = wirtinger(d);
      SearchConstraints sc;
      sc.nonabelian = true;
      for (const auto& rep : search_reps(pres, 2, F5, sc, 4)) {
        for (std::size_t c = 0; c < d.component_count(); ++c) {
          for (auto start : d.arcs_of(c)) {
            auto l = evaluate_constant(rep, longitude_word(d, c, false, start));
            const auto& m = rep.images[start];
            CHECK(l * m == m * l);
          }
        }
      }
    }
  }
}

TEST_CASE("longitude image does not depend on framing or start arc") {
  // Moving the start arc conjugates the image by meridians of the other
  // components, so only the determinant factor is compared across starts.
  for (const auto& f : fixtures()) {
    if (f.components < 2) continue;
    for (const auto& src : f.diagrams) {
      auto d = src.diagram();
      auto pres = wirtinger(d);
      const std::size_t mu = d.component_count() - 1;
      auto del = delete_component(d, mu);
      const Monomial<PrimeField> T{1, linking_exponents(d, mu)};
      for (const auto& rep : search_reps(wirtinger(del.sub_diagram), 2, F5, {}, 4)) {
        auto pair = induce(pres, del, rep);
        auto factor = char_factor(T, longitude_image(pair, d, mu));
        for (auto start : d.arcs_of(mu)) {
          auto plain = longitude_image(pair, d, mu, false, start);
          CHECK(longitude_image(pair, d, mu, true, start) == plain);
          CHECK(char_factor(T, plain) == factor);
        }
      }
    }
  }
}

TEST_CASE("Borromean longitude under a nonabelian sublink representation") {
  auto d = fixture("borromean").diagrams[0].diagram();
  auto del = delete_component(d, 2);
  SearchConstraints sc;
  sc.nonabelian = true;
  sc.special_linear = true;
  auto reps = search_reps(wirtinger(del.sub_diagram), 2, F5, sc, 1);
  REQUIRE(reps.size() == 1);
  auto pair = induce(wirtinger(d), del, reps[0]);
  auto l = longitude_image(pair, d, 2);
  // The longitude of K3 is a commutator of meridians of K1 and K2.
  const auto& x = reps[0].images[0];
  const auto& y = reps[0].images[1];
  auto comm = x * y * x.inverse() * y.inverse();
  auto comm_inv = y * x * y.inverse() * x.inverse();
  CHECK(l.determinant() == 1);
  CHECK_FALSE(l.is_identity());
  CHECK(trace(l) == trace(comm));
  CHECK(trace(l) == trace(comm_inv));
  CHECK(l == M5({{2, 1}, {1, 1}}));
}
