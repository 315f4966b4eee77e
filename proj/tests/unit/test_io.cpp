#include "doctest.h"

#include <random>

#include "pmod/errors.hpp"
#include "pmod/io.hpp"
#include "random_graphs.hpp"

using namespace pmod;

TEST_CASE("json example") {
  const Graph g = parse_graph(
      R"({"directed": false, "vertices": ["s", "t"],
          "edges": [{"tail": "s", "head": "t", "sigma": 5}]})",
      GraphFormat::json);
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.sigma(0) == 5.0);
  CHECK_FALSE(g.directed());
}

TEST_CASE("edge-list example builds the parallel-path graph") {
  const Graph g = parse_graph("undirected\ns a\na t\ns b\nb t\ns c\nc t\n", GraphFormat::edgelist);
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 6);
  CHECK(g.sigma_total() == 6.0);
  CHECK(g.label(1) == "a");
  const Graph h = parse_graph("# comment\n\ndirected\ns t 2.5  # trailing\n", GraphFormat::edgelist);
  CHECK(h.directed());
  CHECK(h.sigma(0) == 2.5);
}

TEST_CASE("parse errors carry a location") {
  CHECK_THROWS_WITH_AS(parse_graph("undirected\ns t\nt u 0\n", GraphFormat::edgelist),
                       doctest::Contains("line 3: nonpositive weight"), InputError);
  CHECK_THROWS_WITH_AS(parse_graph("undirected\ns t\nt s\n", GraphFormat::edgelist),
                       doctest::Contains("line 3: duplicate edge"), InputError);
  CHECK_NOTHROW(parse_graph("directed\ns t\nt s\n", GraphFormat::edgelist));
  CHECK_THROWS_WITH_AS(parse_graph("undirected\ns t 1x\n", GraphFormat::edgelist),
                       doctest::Contains("line 2: malformed number"), InputError);
  CHECK_THROWS_WITH_AS(parse_graph("undirected\ns s\n", GraphFormat::edgelist),
                       doctest::Contains("line 2: self-loop"), InputError);
  CHECK_THROWS_AS(parse_graph("s t\n", GraphFormat::edgelist), InputError);
  CHECK_THROWS_AS(parse_graph("undirected\n", GraphFormat::edgelist), InputError);

  CHECK_THROWS_WITH_AS(
      parse_graph(R"({"vertices": ["s"], "edges": [{"tail": "s", "head": "x"}]})",
                  GraphFormat::json),
      doctest::Contains("unknown vertex"), InputError);
  CHECK_THROWS_WITH_AS(
      parse_graph(R"({"vertices": ["s", "t"], "edges": [{"tail": "s", "head": "t", "sigma": -1}]})",
                  GraphFormat::json),
      doctest::Contains("nonpositive weight"), InputError);
  CHECK_THROWS_WITH_AS(parse_graph(R"({"vertices": ["s", "t"], "edges": [
                           {"tail": "s", "head": "t"}, {"tail": "t", "head": "s"}]})",
                                   GraphFormat::json),
                       doctest::Contains("duplicate edge"), InputError);
  CHECK_THROWS_WITH_AS(parse_graph("{not json", GraphFormat::json),
                       doctest::Contains("parse error"), InputError);
  CHECK(parse_format("json") == GraphFormat::json);
  CHECK_THROWS_AS(parse_format("xml"), InputError);
}

TEST_CASE("serialization round-trips exactly") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 30; ++trial) {
    pmod::testing::RandomGraphSpec spec;
    spec.n = 2 + trial % 9;
    spec.directed = trial % 2 == 0;
    spec.sigma_lo = 0.1;
    spec.sigma_hi = 10.0;
    const Graph g = pmod::testing::random_connected_graph(rng, spec);
    for (auto fmt : {GraphFormat::json, GraphFormat::edgelist}) {
      std::string text;
      try {
        text = serialize_graph(g, fmt);
      } catch (const InputError&) {
        // Edge lists cannot express every vertex order.
        CHECK(fmt == GraphFormat::edgelist);
        continue;
      }
      const Graph back = parse_graph(text, fmt);
      CHECK(back == g);
      CHECK(serialize_graph(back, fmt) == text);
    }
  }
  const Graph isolated(false, {"s", "t", "x"}, {{0, 1}}, {1.0});
  CHECK_THROWS_AS(serialize_graph(isolated, GraphFormat::edgelist), InputError);
  CHECK(parse_graph(serialize_graph(isolated, GraphFormat::json), GraphFormat::json) == isolated);
}
