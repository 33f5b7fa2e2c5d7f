#include <doctest.h>

#include "fixtures.hpp"
#include "natree/json_io.hpp"

using namespace natree;

TEST_CASE("documents round trip") {
  std::vector<TreeDocument> docs;
  for (const auto& b : enumerate_binary_trees(4)) docs.emplace_back(b);
  docs.emplace_back(BinaryTree::empty_right());
  for (const auto& o : enumerate_ordered_trees(3)) docs.emplace_back(o);
  for (const auto& m : enumerate_dk_trees(3, 2, 3)) docs.emplace_back(m);
  docs.emplace_back(DKTree::empty(3, 2, Direction(3, {1, 3})));
  for (const auto& t : enumerate_nats_by_size(3, 3)) docs.emplace_back(t);
  for (const auto& t : enumerate_dknats_of_shape(enumerate_dk_trees(3, 1, 3).back())) docs.emplace_back(t);
  for (const auto& d : docs) {
    const Json j = document_to_json(d);
    CHECK(document_to_json(document_from_json(Json::parse(j.dump()))) == j);
  }
}

TEST_CASE("figure files load") {
  CHECK(fixtures::figure_nat("fig_nat.json").size() == 22);
  CHECK(fixtures::figure_tree("ex_hook.json").size() == 8);
}

TEST_CASE("polynomials round trip with exact coefficients") {
  const ParamPoly p = ParamPoly::var(Param::alpha, 2) * ParamPoly::var(Param::beta) * Rational(3, 4) +
                      ParamPoly(Rational(-5, 2)) + ParamPoly::var(Param::qL);
  const Json j = to_json(p);
  CHECK(poly_from_json(j) == p);
  CHECK(j.front()["monomial"].is_string());
  CHECK(j.front()["coeff"].is_string());
  CHECK(poly_from_json(Json::parse(R"([{"monomial":"1","coeff":"7/3"}])")) == ParamPoly(Rational(7, 3)));
}

TEST_CASE("malformed documents are input errors") {
  for (const char* text :
       {R"({"kind":"binary"})", R"({"kind":"tree","shape":{}})", R"({"kind":"binary","shape":{"middle":null}})",
        R"({"kind":"nat","shape":{"left":{},"right":null},"labels":{}})",
        R"({"kind":"nat","shape":{"left":{},"right":null},"labels":{"R":1}})",
        R"({"kind":"dk","d":3,"k":1,"shape":{"children":{"1,2":{"children":{}}}}})",
        R"({"kind":"dknat","d":3,"k":1,"shape":{"children":{"1":{"children":{}}}},"labels":{"1":[1,null]}})",
        R"({"kind":"ordered","shape":{"children":3}})"})
    CHECK_THROWS_AS(document_from_json(Json::parse(text)), InputError);
  CHECK_THROWS_AS(read_document("/nonexistent/file.json"), InputError);
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"([{"monomial":"w","coeff":"1"}])")), InputError);
}

TEST_CASE("series tables list exponents by degree") {
  const Json j = to_json(solve_N(2));
  REQUIRE(j.size() == 6);
  CHECK(j.front()["exponent"] == Json::array({0, 0}));
  CHECK(j.back()["coeff"].front()["coeff"] == "1/2");
}
