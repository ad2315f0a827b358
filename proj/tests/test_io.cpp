#include <catch_amalgamated.hpp>

#include "torres/corpus.hpp"
#include "torres/io.hpp"

using namespace torres;

TEST_CASE("representation files round-trip") {
  PrimeField f5(5);
  auto pres = wirtinger(diagram_from_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]"));
  SearchConstraints sc;
  sc.nonabelian = true;
  for (const auto& rep : search_reps(pres, 2, f5, sc, 5)) {
    auto j = to_json(rep);
    CHECK(j["ring"] == "Fp");
    CHECK(j["p"] == 5);
    CHECK(j["images"].contains("x3"));
    auto back = representation_from_json(f5, Json::parse(j.dump()));
    CHECK(back.images == rep.images);
  }

  RationalRing q;
  Representation<RationalRing> rq{q, 1, {Matrix<RationalRing>::from_rows(q, {{Rational(3, 2)}}),
                                         Matrix<RationalRing>::from_rows(q, {{Rational(-4)}})}};
  auto jq = to_json(rq);
  CHECK(jq["images"]["x1"] == Json::parse("[[[3, 2]]]"));
  CHECK(jq["images"]["x2"] == Json::parse("[[-4]]"));
  CHECK(representation_from_json(q, jq).images == rq.images);

  IntegerRing z;
  Representation<IntegerRing> big{z, 1, {Matrix<IntegerRing>::from_rows(z, {{Integer("-123456789012345678901234567890")}})}};
  auto jb = to_json(big);
  CHECK(jb["images"]["x1"][0][0] == "-123456789012345678901234567890");
  CHECK(representation_from_json(z, jb).images == big.images);
}

TEST_CASE("representation file parsing") {
  PrimeField f5(5);
  auto rep = representation_from_json(f5, Json::parse(R"({"ring": "Fp", "p": 5, "n": 2,
      "images": {"x1": [[1, 1], [0, 1]], "x2": [[1, 0], [-1, 1]]}})"));
  CHECK(rep.images[1] == Matrix<PrimeField>::from_rows(f5, {{1, 0}, {4, 1}}));
  CHECK(representation_ring(Json::parse(R"({"ring": "Q"})")) == RingSpec::parse("Q"));
  CHECK(representation_ring(Json::parse(R"({"ring": "Fp", "p": 7})")) == RingSpec::parse("F7"));

  const char* bad[] = {
      R"({"n": 1, "images": {"x1": [[1]]}})",
      R"({"ring": "Fp", "n": 1, "images": {"x1": [[1]]}})",
      R"({"ring": "Fp", "p": 6, "n": 1, "images": {"x1": [[1]]}})",
      R"({"ring": "Fp", "p": 7, "n": 1, "images": {"x1": [[1]]}})",
      R"({"ring": "Fp", "p": 5, "n": 2, "images": {"x1": [[1, 0]]}})",
      R"({"ring": "Fp", "p": 5, "n": 2, "images": {"x1": [[1, 0], [0]]}})",
      R"({"ring": "Fp", "p": 5, "n": 1, "images": {"x2": [[1]]}})",
      R"({"ring": "Fp", "p": 5, "n": 1, "images": {"x1": [["a"]]}})",
      R"({"ring": "Fp", "p": 5, "n": 0, "images": {}})",
      R"({"ring": "Fp", "p": 5, "images": {"x1": [[1]]}})",
      R"({"ring": "Fp", "p": 5, "n": 1, "images": [[1]]})",
      R"([1, 2])",
  };
  for (const char* text : bad) {
    INFO(text);
    CHECK_THROWS_AS(representation_from_json(f5, Json::parse(text)), InputError);
  }

  IntegerRing z;
  CHECK_THROWS_AS(representation_from_json(z, Json::parse(R"({"ring": "Z", "n": 1, "images": {"x1": [[[1, 2]]]}})")),
                  InputError);
  RationalRing q;
  CHECK_THROWS_AS(representation_from_json(q, Json::parse(R"({"ring": "Q", "n": 1, "images": {"x1": [[[1, 0]]]}})")),
                  InputError);
}

TEST_CASE("report records") {
  auto d = fixture("torus_2_4").diagrams[0].diagram();
  auto sub = wirtinger(delete_component(d, 1).sub_diagram);
  auto report = torres_check(d, 1, trivial_rep(sub, RationalRing{}));
  auto j = to_json(report, "torus_2_4");
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"link", "component", "ring", "n", "case", "pass", "lhs_num", "lhs_den",
                                         "rhs_factor", "rhs_num", "rhs_den"});
  CHECK(j["component"] == 2);
  CHECK(j["ring"] == "Q");
  CHECK(j["case"] == "case2b_generic");
  CHECK(j["pass"] == true);
  CHECK(j["rhs_factor"] == "t1^2 - 1");
  CHECK(j["rhs_num"] == "1");
  CHECK(j["rhs_den"] == "t1 - 1");
  CHECK(j["lhs_num"] == "t1 + 1");
  CHECK(j["lhs_den"] == "1");
  CHECK(to_json(report, "torus_2_4").dump() == j.dump());
}

TEST_CASE("link tables") {
  auto t = parse_table(Json::parse(R"([{"name": "hopf", "pd": "X[1,3,2,4] X[3,1,4,2]", "components": 2},
                                      {"name": "trefoil", "pd": "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]"}])"));
  REQUIRE(t.size() == 2);
  CHECK(t[0].components == std::optional<std::size_t>{2});
  CHECK(t[1].name == "trefoil");
  CHECK_FALSE(t[1].components);
  CHECK(parse_table(Json::array()).empty());
  CHECK_THROWS_AS(parse_table(Json::parse(R"({"name": "x"})")), InputError);
  CHECK_THROWS_AS(parse_table(Json::parse(R"([{"name": "x"}])")), InputError);
  CHECK_THROWS_AS(parse_table(Json::parse(R"([{"name": "x", "pd": 3}])")), InputError);
  CHECK_THROWS_AS(parse_table(Json::parse(R"([{"name": "x", "pd": "", "components": -1}])")), InputError);
}
