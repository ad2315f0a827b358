#include <catch_amalgamated.hpp>

#include "torres/corpus.hpp"
#include "torres/torres.hpp"

using namespace torres;

namespace {

const char* kHopf = "X[1,3,2,4] X[3,1,4,2]";
const char* kTrefoil = "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]";
const char* kWhitehead = "X[6,1,7,2] X[10,7,5,8] X[4,5,1,6] X[2,10,3,9] X[8,4,9,3]";

}  // namespace

TEST_CASE("parse_pd") {
  auto hopf = parse_pd(kHopf);
  REQUIRE(hopf.crossings.size() == 2);
  CHECK(hopf.crossings[1] == std::array<std::int64_t, 4>{3, 1, 4, 2});
  CHECK(parse_pd("").crossings.empty());
  CHECK(parse_pd("PD[X[1,3,2,4], X[3,1,4,2]]") == hopf);
  CHECK(parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2] O[7]").circles == std::vector<std::int64_t>{7});
  CHECK(to_string(parse_pd(kTrefoil)) == kTrefoil);
}

TEST_CASE("parse_pd rejects malformed input") {
  CHECK_THROWS_AS(parse_pd("X[1,3,2,4] X[3,1,4,1]"), InputError);
  CHECK_THROWS_AS(parse_pd("X[1,3,2]"), ParseError);
  CHECK_THROWS_AS(parse_pd("X[1,3,2,4] Y[3,1,4,2]"), ParseError);
  CHECK_THROWS_AS(parse_pd("X[0,3,2,4] X[3,0,4,2]"), ParseError);
  CHECK_THROWS_AS(parse_pd("X[1,3,2,4] O[3]"), InputError);
  // Labels along a component must be consecutive.
  CHECK_THROWS_AS(parse_pd("X[1,2,3,4] X[2,1,4,3]"), InputError);
  try {
    parse_pd("X[1,3,2,4] X[3,1,4,?]");
    FAIL("no exception");
  } catch (const ParseError& e) {
    CHECK(e.position() == 19);
  }
}

TEST_CASE("orient_and_sign") {
  auto hopf = diagram_from_pd(kHopf);
  CHECK(hopf.component_count() == 2);
  CHECK(hopf.arc_count() == 2);
  for (const auto& x : hopf.crossings()) CHECK(x.sign == 1);

  auto trefoil = diagram_from_pd(kTrefoil);
  CHECK(trefoil.component_count() == 1);
  CHECK(trefoil.arc_count() == 3);
  const int s = trefoil.crossings()[0].sign;
  for (const auto& x : trefoil.crossings()) CHECK(x.sign == s);

  auto unknot = diagram_from_pd("");
  CHECK(unknot.component_count() == 1);
  CHECK(unknot.arc_count() == 1);
  CHECK(unknot.crossings().empty());

  for (const auto& x : diagram_from_pd(kWhitehead).crossings()) {
    CHECK(x.in != x.out);
  }
}

TEST_CASE("braid_to_pd") {
  auto trefoil = diagram_from_pd(to_string(braid_to_pd({1, 1, 1}, 2)));
  CHECK(trefoil.component_count() == 1);
  CHECK(trefoil.crossings().size() == 3);
  CHECK(writhe(trefoil, 0) == 3);

  auto hopf = diagram_from_pd(to_string(braid_to_pd({1, 1}, 2)));
  CHECK(hopf.component_count() == 2);
  CHECK(linking_number(hopf, 0, 1) == 1);

  auto unknot = diagram_from_pd(to_string(braid_to_pd({1}, 2)));
  CHECK(unknot.component_count() == 1);

  auto unlink = diagram_from_pd(to_string(braid_to_pd({}, 2)));
  CHECK(unlink.component_count() == 2);
  CHECK(unlink.crossings().empty());

  CHECK_THROWS_AS(braid_to_pd({1}, 0), InputError);
  CHECK_THROWS_AS(braid_to_pd({2}, 2), InputError);
  CHECK_THROWS_AS(braid_to_pd({0}, 2), InputError);
}

TEST_CASE("linking numbers") {
  CHECK(linking_number(diagram_from_pd(kHopf), 0, 1) == 1);
  CHECK(linking_number(diagram_from_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2] O[7]"), 0, 1) == 0);
  CHECK(linking_number(diagram_from_pd(kWhitehead), 0, 1) == 0);
  CHECK_THROWS_AS(linking_number(diagram_from_pd(kHopf), 1, 1), InputError);
  for (const auto& f : fixtures()) {
    for (const auto& src : f.diagrams) {
      auto d = src.diagram();
      for (std::size_t i = 0; i < d.component_count(); ++i) {
        for (std::size_t j = 0; j < d.component_count(); ++j) {
          if (i != j) CHECK(linking_number(d, i, j) == linking_number(d, j, i));
        }
      }
    }
  }
}

TEST_CASE("wirtinger presentations") {
  auto trefoil = wirtinger(diagram_from_pd(kTrefoil));
  CHECK(trefoil.generator_count == 3);
  REQUIRE(trefoil.relators.size() == 3);
  for (const auto& r : trefoil.relators) CHECK(r.size() == 4);

  auto unknot = wirtinger(diagram_from_pd(""));
  CHECK(unknot.generator_count == 1);
  CHECK(unknot.relators.empty());

  auto hopf = wirtinger(diagram_from_pd(kHopf));
  CHECK(hopf.generator_count == 2);
  CHECK(hopf.relators.size() == 2);
  CHECK(hopf.meridian_of == std::vector<std::size_t>{0, 1});
}

TEST_CASE("relators abelianize to zero and have conjugation shape") {
  for (const auto& f : fixtures()) {
    for (const auto& src : f.diagrams) {
      auto d = src.diagram();
      auto pres = wirtinger(d);
      CHECK(pres.component_count == f.components);
      for (const auto& r : pres.relators) {
        CHECK(is_zero_exponent(abelianize(r, pres.component_of, pres.component_count)));
        REQUIRE(r.size() == 4);
        CHECK(r.letters[0].exp == 1);
        CHECK(r.letters[2].exp == -1);
        CHECK(r.letters[1].gen == r.letters[3].gen);
        CHECK(r.letters[1].exp == -r.letters[3].exp);
        CHECK(pres.component_of[r.letters[0].gen] == pres.component_of[r.letters[2].gen]);
      }
      for (std::size_t c = 0; c < pres.component_count; ++c) {
        CHECK(pres.component_of[pres.meridian_of[c]] == c);
      }
    }
  }
}

TEST_CASE("longitude words") {
  auto hopf = diagram_from_pd(kHopf);
  auto w = longitude_word(hopf, 1, false);
  REQUIRE(w.size() == 1);
  CHECK(hopf.component_of(w.letters[0].gen) == 0);
  CHECK(w.letters[0].exp == 1);
  CHECK(abelianize(w, hopf.arc_components(), 2) == Exponent{1, 0});

  CHECK(longitude_word(diagram_from_pd(""), 0, false).empty());
  CHECK(longitude_word(diagram_from_pd(""), 0, true).empty());

  auto trefoil = diagram_from_pd(kTrefoil);
  auto lt = longitude_word(trefoil, 0, false);
  CHECK(lt.size() == 3);
  CHECK(std::abs(writhe(trefoil, 0)) == 3);
  CHECK(abelianize(lt, trefoil.arc_components(), 1) == Exponent{writhe(trefoil, 0)});
  CHECK(abelianize(longitude_word(trefoil, 0, true), trefoil.arc_components(), 1) == Exponent{0});
}

TEST_CASE("longitude abelianization on every fixture, component and start") {
  for (const auto& f : fixtures()) {
    for (const auto& src : f.diagrams) {
      auto d = src.diagram();
      const std::size_t mu = d.component_count();
      for (std::size_t c = 0; c < mu; ++c) {
        Exponent expected(mu, 0);
        for (std::size_t i = 0; i < mu; ++i) {
          if (i != c) expected[i] = linking_number(d, i, c);
        }
        expected[c] = writhe(d, c);
        for (auto start : d.arcs_of(c)) {
          CHECK(abelianize(longitude_word(d, c, false, start), d.arc_components(), mu) == expected);
          auto corrected = abelianize(longitude_word(d, c, true, start), d.arc_components(), mu);
          CHECK(corrected[c] == 0);
        }
      }
    }
  }
}

TEST_CASE("delete_component") {
  auto hopf = delete_component(diagram_from_pd(kHopf), 1);
  CHECK(hopf.sub_diagram.component_count() == 1);
  CHECK(hopf.sub_diagram.arc_count() == 1);
  CHECK(hopf.sub_diagram.crossings().empty());
  CHECK(hopf.arc_map[0] == std::optional<std::size_t>{0});
  CHECK_FALSE(hopf.arc_map[1]);

  auto wd = diagram_from_pd(kWhitehead);
  auto wh = delete_component(wd, 1);
  CHECK(wh.sub_diagram.component_count() == 1);
  for (const auto& x : wh.sub_diagram.crossings()) CHECK(wh.sub_diagram.component_of(x.over) == 0);
  // The remaining component is an unknot: its torsion is 1/(t1 - 1).
  auto pres = wirtinger(wh.sub_diagram);
  auto tau = wada(pres, make_evaluator(trivial_rep(pres, IntegerRing{}), pres));
  CHECK(eq_up_to_units(tau.value, RationalFunction<IntegerRing>(parse_poly(IntegerRing{}, 1, "1"),
                                                                   parse_poly(IntegerRing{}, 1, "t1 - 1"))));

  auto split = diagram_from_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2] O[7]");
  auto sd = delete_component(split, 1);
  CHECK(sd.sub_diagram == diagram_from_pd(kTrefoil));
  for (std::size_t a = 0; a < 3; ++a) CHECK(sd.arc_map[a] == std::optional<std::size_t>{a});

  CHECK_THROWS_AS(delete_component(diagram_from_pd(kTrefoil), 0), InputError);
  CHECK_THROWS_AS(delete_component(diagram_from_pd(kHopf), 2), InputError);
}

TEST_CASE("deletion invariants on every fixture") {
  for (const auto& f : fixtures()) {
    for (const auto& src : f.diagrams) {
      auto d = src.diagram();
      if (d.component_count() < 2) continue;
      for (std::size_t mu = 0; mu < d.component_count(); ++mu) {
        auto del = delete_component(d, mu);
        CHECK(del.sub_diagram.component_count() == d.component_count() - 1);
        std::vector<bool> hit(del.sub_diagram.arc_count(), false);
        for (std::size_t a = 0; a < d.arc_count(); ++a) {
          CHECK(del.arc_map[a].has_value() == (d.component_of(a) != mu));
          if (!del.arc_map[a]) continue;
          hit[*del.arc_map[a]] = true;
          std::size_t c = d.component_of(a);
          CHECK(del.sub_diagram.component_of(*del.arc_map[a]) == (c > mu ? c - 1 : c));
        }
        for (bool h : hit) CHECK(h);
      }
    }
  }
}

TEST_CASE("monomial_T") {
  IntegerRing Z;
  CHECK(monomial_T(Z, diagram_from_pd(kHopf), 1).exponents == Exponent{1});
  CHECK(monomial_T(Z, diagram_from_pd(kWhitehead), 1).exponents == Exponent{0});
  CHECK(monomial_T(Z, fixture("borromean").diagrams[0].diagram(), 2).exponents == Exponent{0, 0});
  CHECK(monomial_T(Z, fixture("chain_3").diagrams[0].diagram(), 2).exponents == Exponent{0, 1});
  CHECK_THROWS_AS(monomial_T(Z, diagram_from_pd(kTrefoil), 0), InputError);
}
