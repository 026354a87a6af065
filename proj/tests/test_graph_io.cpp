#include <doctest.h>

#include <random>
#include <sstream>

#include "coronae/errors.hpp"
#include "coronae/graph_io.hpp"
#include "coronae/graph_spec.hpp"
#include "oracle.hpp"

using namespace coronae;

namespace {

Graph petersen() {
  GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return std::move(b).build();
}

std::size_t parse_offset(std::string_view text) {
  try {
    parse_graph6(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  FAIL("expected a ParseError for '" << std::string(text) << "'");
  return 0;
}

}  // namespace

// Reference strings produced by networkx.to_graph6_bytes.
TEST_CASE("graph6 matches reference encodings") {
  CHECK(emit_graph6(path(5)) == "DhC");
  CHECK(emit_graph6(cycle(4)) == "Cl");
  CHECK(emit_graph6(complete(5)) == "D~{");
  CHECK(emit_graph6(petersen()) == "IheA@GUAo");
  CHECK(emit_graph6(Graph(1)) == "@");
  CHECK(emit_graph6(Graph()) == "?");
  CHECK(emit_graph6(star(5)) == "Ds_");
  CHECK(emit_graph6(complete_bipartite(3, 3)) == "EFz_");

  CHECK(parse_graph6("IheA@GUAo") == petersen());
  CHECK(parse_graph6("Cl") == cycle(4));
  CHECK(parse_graph6("?") == Graph());
}

TEST_CASE("graph6 header and newline are accepted") {
  CHECK(parse_graph6(">>graph6<<Cl") == cycle(4));
  CHECK(parse_graph6("Cl\n") == cycle(4));
  CHECK(parse_graph6(">>graph6<<Cl\n") == cycle(4));
}

TEST_CASE("graph6 rejects malformed input with byte offsets") {
  CHECK(parse_offset("") == 0);
  CHECK(parse_offset("C") == 1);      // truncated: 4 vertices need one data byte
  CHECK(parse_offset("Cll") == 2);    // trailing byte
  CHECK(parse_offset("C ") == 1);     // byte outside 63..126
  CHECK(parse_offset("B~") == 1);     // three vertices use 3 of 6 bits; '~' sets the padding
  CHECK(parse_offset(">>graph6<<C") == 11);
  CHECK(parse_offset("~?") == 2);     // truncated 4-byte length
}

TEST_CASE("graph6 round trips exhaustively for small orders") {
  for (std::size_t n = 0; n <= 5; ++n) {
    const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    for (std::size_t mask = 0; mask < (std::size_t{1} << pairs); ++mask) {
      GraphBuilder b(n);
      std::size_t bit = 0;
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v, ++bit)
          if (mask >> bit & 1) b.add_edge(u, v);
      const Graph g = std::move(b).build();
      CHECK(parse_graph6(emit_graph6(g)) == g);
    }
  }
}

TEST_CASE("graph6 round trips random graphs up to the long headers") {
  std::mt19937 rng(3);
  for (std::size_t n : {6u, 7u, 30u, 62u, 63u, 64u, 70u, 200u}) {
    const Graph g = oracle::random_graph(rng, n, 0.2);
    const std::string s = emit_graph6(g);
    CHECK(parse_graph6(s) == g);
    if (n >= 63) CHECK(s.front() == '~');
  }
  // networkx: gnp(70, 0.1, seed=1) begins "~?@E"
  const std::string big = emit_graph6(Graph(70));
  CHECK(big.substr(0, 4) == "~?@E");
}

TEST_CASE("graph6 streams") {
  std::istringstream in(">>graph6<<Cl\n\nDhC\n@\n");
  const auto gs = read_graph6_stream(in);
  REQUIRE(gs.size() == 3);
  CHECK(gs[0] == cycle(4));
  CHECK(gs[1] == path(5));
  CHECK(gs[2] == Graph(1));
}

TEST_CASE("edge lists") {
  const Graph g = parse_edge_list("# comment\n4 3\n0 1\n\n1 2\n2 3\n");
  CHECK(g == path(4));
  CHECK(parse_edge_list(emit_edge_list(petersen())) == petersen());
  CHECK(parse_edge_list("3 0\n") == Graph(3));

  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return 0;
  };
  CHECK(line_of("3 2\n0 1\n1 0\n") == 3);   // repeated edge
  CHECK(line_of("3 1\n1 1\n") == 2);        // loop
  CHECK(line_of("3 1\n0 3\n") == 2);        // out of range
  CHECK(line_of("3 2\n0 1\n") == 3);        // missing edges
  CHECK(line_of("3 1\n0 1 2\n") == 2);      // trailing data
  CHECK(line_of("x\n") == 1);
  CHECK(line_of("") == 1);
}

TEST_CASE("format detection and family expressions") {
  CHECK(parse_graph_text("4 3\n0 1\n1 2\n2 3\n") == path(4));
  CHECK(parse_graph_text("Cl\n") == cycle(4));

  CHECK(parse_family("P4").value() == path(4));
  CHECK(parse_family("C5").value() == cycle(5));
  CHECK(parse_family("K1").value() == Graph(1));
  CHECK(parse_family("S5").value() == star(5));
  CHECK(parse_family("E3").value() == Graph(3));
  CHECK(parse_family("K2,3").value() == complete_bipartite(2, 3));
  CHECK(parse_family("C4+K1").value() == disjoint_union(cycle(4), Graph(1)));
  CHECK_FALSE(parse_family("Cl").has_value());
  CHECK_FALSE(parse_family("DhC").has_value());
}
