#include <doctest.h>

#include "ywall/error.hpp"
#include "ywall/serialize.hpp"

using namespace ywall;

TEST_CASE("round trips") {
  const Weight w{2, -1, 3};
  CHECK(weight_from_json(to_json(w)) == w);
  CHECK(pair_from_json(to_json(Pair{3, 1})) == Pair{3, 1});
  CHECK(lambda_from_json(to_json(Lambda::finite(4, 1))) == Lambda::finite(4, 1));
  CHECK(lambda_from_json(to_json(Lambda::infinity())) == Lambda::infinity());
  CHECK(column_from_json(to_json(Column{7, 5, 6})) == Column{7, 5, 6});

  const Wall y{Lambda::finite(4, 1), {{7, 5, 6}, {3, 7, 8}}};
  CHECK(wall_from_json(to_json(y)) == y);
  CHECK(wall_from_json(parse_json(to_json(y).dump())) == y);

  const auto p = wall_to_path(y);
  CHECK(path_from_json(to_json(p)) == p);

  ComponentOptions o;
  o.depth = 3;
  const auto g = reduced_wall_component(Lambda::finite(4, 1), o);
  const auto back = graph_from_json(to_json(g));
  CHECK(back.edges() == g.edges());
  CHECK(back.root() == g.root());
  CHECK(graph_equal(g, back).equal);
}

TEST_CASE("field names") {
  CHECK(to_json(Weight{1, 2, 3}).dump() == R"({"L0":1,"L1":2,"half_delta":3})");
  CHECK(to_json(AffineElem{{1, 2}, -7}).dump() == R"({"x":1,"y":2,"m":-7})");
  CHECK(to_json(Lambda::infinity()).dump() == R"("infinity")");
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(parse_json("{"), ParseError);
  CHECK_THROWS_AS(weight_from_json(parse_json(R"({"L0":1,"L1":2})")), ParseError);
  CHECK_THROWS_AS(pair_from_json(parse_json(R"({"x":"1","y":2})")), ParseError);
  CHECK_THROWS_AS(lambda_from_json(parse_json(R"({"l":4,"a":3})")), ParseError);
  CHECK_THROWS_AS(lambda_from_json(parse_json(R"("zero")")), ParseError);
  CHECK_THROWS_AS(wall_from_json(parse_json(R"({"columns":[]})")), ParseError);
  CHECK_THROWS_AS(
      wall_from_json(parse_json(R"({"lambda":{"l":4,"a":1},"columns":[{"s":1,"sbar":1,"tbar":3}]})")),
      ParseError);
  CHECK_THROWS_AS(graph_from_json(parse_json(R"({"nodes":[],"edges":[[0,0]],"root":0})")), ParseError);
  CHECK_THROWS_AS(
      graph_from_json(parse_json(
          R"({"nodes":[{"id":0,"label":"a","weight":{"L0":0,"L1":0,"half_delta":0}}],"edges":[[0,0,3]],"root":0})")),
      ParseError);
}

TEST_CASE("multiplicity text") {
  const std::map<Weight, std::size_t> table{{dominant(4, 1), 1}, {dominant(4, 1) - kAlpha0, 2}};
  CHECK(multiplicity_text(table) == "2\t2L1-d/2\n1\t2L0+L1\n");
}
