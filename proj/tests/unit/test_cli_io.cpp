#include <doctest.h>

#include <stdexcept>

#include "io.hpp"

using namespace cofmat;
using namespace cofmat::io;

TEST_CASE("graph text form") {
  const Graph g = parse_graph("4 3\n0 1\n1 2\n3 2\n");
  CHECK(g.n() == 4);
  CHECK(g.edges() == EdgeSet{{0, 1}, {1, 2}, {2, 3}});
  CHECK(parse_graph("  3 0 ").n() == 3);
  CHECK_THROWS_AS(parse_graph(""), InputError);
  CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), InputError);
  CHECK_THROWS_AS(parse_graph("3 1\n0 1\n1 2\n"), InputError);
  CHECK_THROWS_AS(parse_graph("3 1\n0 3\n"), InputError);
  CHECK_THROWS_AS(parse_graph("3 2\n0 1\n1 0\n"), InputError);
  CHECK_THROWS_AS(parse_graph("3 1\n1 1\n"), InputError);
  CHECK_THROWS_AS(parse_graph("-1 0"), InputError);
}

TEST_CASE("graph JSON form") {
  const Graph g = parse_graph(R"({"n": 5, "edges": [[0, 4], [2, 1]]})");
  CHECK(g.edges() == EdgeSet{{0, 4}, {1, 2}});
  CHECK(parse_graph(to_json(complete_graph(5)).dump()) == complete_graph(5));
  CHECK_THROWS_AS(parse_graph(R"({"n": 5})"), InputError);
  CHECK_THROWS_AS(parse_graph(R"({"n": -2, "edges": []})"), InputError);
  CHECK_THROWS_AS(parse_graph(R"({"n": 2, "edges": [[0]]})"), InputError);
  CHECK_THROWS_AS(parse_graph("{not json"), InputError);
}

TEST_CASE("frameworks, matrices, motions") {
  const Framework f = parse_framework(R"({"n": 3, "edges": [[0, 1]], "coords": [["1/2", "0"], [2, "-3/6"], ["0", "1"]]})");
  CHECK(f.at(0) == Point{Rational(1, 2), 0});
  CHECK(f.at(1) == Point{2, Rational(-1, 2)});
  CHECK(parse_framework(to_json(f).dump()) == f);
  CHECK_THROWS_AS(parse_framework(R"({"n": 2, "edges": [], "coords": [["0", "0"]]})"), InputError);
  CHECK_THROWS_AS(parse_framework(R"({"n": 1, "edges": [], "coords": [["1/0", "0"]]})"), InputError);
  CHECK_THROWS_AS(parse_framework(R"({"n": 1, "edges": []})"), InputError);

  CHECK(parse_mat3(R"([["1","0","0"],["0","1","0"],["0","0","1"]])") == identity3());
  CHECK_THROWS_AS(parse_mat3(R"([["1","0"],["0","1"]])"), InputError);

  const Motion q{Vec3{1, Rational(-2, 3), 0}, Vec3{0, 0, 5}};
  CHECK(parse_motion(json{{"motion", to_json(q)}}.dump()) == q);
  CHECK(parse_motion(to_json(q).dump()) == q);
  CHECK_THROWS_AS(parse_motion(R"({"q": []})"), InputError);
  CHECK_THROWS_AS(parse_motion(R"([["1","2"]])"), InputError);

  const auto quad = parse_quad(R"([["0","0"],["1","0"],["1","1"],["0","1"]])");
  CHECK(quad[2] == Point{1, 1});
  CHECK_THROWS_AS(parse_quad(R"([["0","0"]])"), InputError);
}

TEST_CASE("edge lists and pins") {
  CHECK(parse_edge_list("").empty());
  CHECK(parse_edge_list("3-1,0-2") == EdgeSet{{1, 3}, {0, 2}});
  CHECK_THROWS_AS(parse_edge_list("1-1"), InputError);
  CHECK_THROWS_AS(parse_edge_list("12"), InputError);
  CHECK_THROWS_AS(parse_edge_list("a-b"), InputError);
  CHECK_THROWS_AS(parse_edge_list("-1-2"), InputError);

  const PinTriple p = parse_pins("0,2,5");
  CHECK(p.a == 0);
  CHECK(p.b == 2);
  CHECK(p.c == 5);
  CHECK_THROWS_AS(parse_pins("0,1"), InputError);
  CHECK_THROWS_AS(parse_pins("0,1,2,3"), InputError);
  CHECK_THROWS_AS(parse_pins("0,,2"), InputError);
}

TEST_CASE("canonical output strings") {
  CHECK(to_json(Rational(6, -4)) == "-3/2");
  CHECK(to_json(Rational(0)) == "0");
  CHECK(to_json(Rational(8, 4)) == "2");
  CHECK(to_json(Point{Rational(1, 3), -1}).dump() == R"(["1/3","-1"])");
  CHECK(to_json(EdgeSet{{0, 1}, {1, 2}}).dump() == "[[0,1],[1,2]]");
  CHECK(to_json(Graph(2)).dump() == R"({"edges":[],"n":2})");
}

TEST_CASE("reading missing files") {
  CHECK_THROWS_AS(read_file("/nonexistent/cofmat/input.json"), InputError);
}
